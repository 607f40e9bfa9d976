"""Truncated simplicial sets, nerves, edge-path groups, and homology."""

import pytest

from kderiv import fincat
from kderiv.simplicial import (GroupPresentation, SimplicialMap, abelianize,
                               check_simplicial_homotopy, circle, edge_path,
                               homology, homotopy_from_map, monotone_maps,
                               nerve, verify, verify_simplicial_map)


def test_nerve_ordinal_counts():
    S = nerve(fincat.ordinal(1), 2)
    assert verify(S) == []
    assert len(S.levels[0]) == 2
    assert len(S.levels[1]) == 3   # two degenerate edges and 0=>1
    assert len(S.nondegenerate(1)) == 1


def test_nerve_arrow_cat_identities():
    S = nerve(fincat.arrow_cat(2), 2)
    assert verify(S) == []
    assert len(S.levels[0]) == 6


def test_circle_fixture():
    S = circle()
    assert verify(S) == []
    assert S.nondegenerate(1) == ["e"]
    assert S.nondegenerate(2) == []


def test_monotone_maps_counts():
    assert len(monotone_maps(1, 1)) == 3
    assert len(monotone_maps(2, 1)) == 4
    assert len(monotone_maps(1, 2)) == 6


def test_edge_path_trivial():
    S = nerve(fincat.ordinal(1), 2)
    inv = abelianize(edge_path(S, ("0",)))
    assert inv.is_trivial()


def test_edge_path_circle():
    inv = abelianize(edge_path(circle(), "v"))
    assert inv.factors == [] and inv.free_rank == 1
    # the loop generates
    tors, free = inv.certificate["e"]
    assert free == (1,)


def test_edge_path_cyclic_group():
    S = nerve(fincat.cyclic_group_cat(2), 2)
    inv = abelianize(edge_path(S, ("*",)))
    assert inv.factors == [2] and inv.free_rank == 0


def test_edge_path_parallel_pair():
    # two parallel arrows realize a circle: pi_1 = Z
    C = fincat.free_category("pair", ["a", "b"],
                             [("u", "a", "b"), ("v", "a", "b")])
    inv = abelianize(edge_path(nerve(C, 2), ("a",)))
    assert inv.factors == [] and inv.free_rank == 1


def test_abelianize_matches_homology():
    for S, bp in [(nerve(fincat.ordinal(1), 2), ("0",)),
                  (circle(), "v"),
                  (nerve(fincat.cyclic_group_cat(2), 2), ("*",)),
                  (nerve(fincat.cyclic_group_cat(3), 2), ("*",))]:
        inv = abelianize(edge_path(S, bp))
        h1 = homology(S, 1)
        assert inv.factors == h1.factors
        assert inv.free_rank == h1.free_rank


def test_homology_degree_zero():
    h0 = homology(circle(), 0)
    assert h0.factors == [] and h0.free_rank == 1


def test_abelianize_known_presentation():
    # <x, y | x^2, y^3> abelianized is Z/6
    P = GroupPresentation(["x", "y"],
                          [[("x", 1), ("x", 1)],
                           [("y", 1), ("y", 1), ("y", 1)]])
    inv = abelianize(P)
    assert inv.factors == [6] and inv.free_rank == 0


def test_presentation_rejects_unknown_generator():
    with pytest.raises(ValueError):
        GroupPresentation(["x"], [[("y", 1)]])


def test_simplicial_map_identity():
    S = circle()
    f = SimplicialMap(S, S, {k: {x: x for x in S.levels[k]}
                             for k in range(S.N + 1)})
    assert verify_simplicial_map(f) == []
    bad = SimplicialMap(S, S, {0: {"v": "v"}, 1: {"e": "sv", "sv": "sv"},
                               2: {x: "ssv" for x in S.levels[2]}})
    assert verify_simplicial_map(bad) != []


def test_constant_homotopy():
    S = nerve(fincat.ordinal(1), 2)
    f = SimplicialMap(S, S, {k: {x: x for x in S.levels[k]}
                             for k in range(S.N + 1)})
    H = homotopy_from_map(f)
    assert check_simplicial_homotopy(H, f, f)


def test_verify_flags_broken_face():
    S = circle()
    S.faces[(1, 0)]["e"] = "missing"
    assert verify(S) != []
