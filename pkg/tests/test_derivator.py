"""Diagram categories, Kan extensions, and the derivator axiom checks."""

import pytest

from kderiv import fincat
from kderiv.basecat import PtSetIso, VectIso
from kderiv.derivator import (check_cocontinuous, check_der1, check_der2,
                              coproduct_inclusions,
                              check_der3_der4, check_der5, check_strictness,
                              constant_diagram, doubling_functor,
                              constant_functor, enumerate_diagram_morphisms,
                              enumerate_diagrams, enumerate_squares,
                              identity_diagram_morphism, is_cocartesian,
                              is_cocartesian_kan, is_cocartesian_pushout,
                              kan_counit, kan_unit, left_kan, make_diagram,
                              mate, opposite, postcompose, represent, shift,
                              validate_diagram, validate_diagram_morphism)
from kderiv.linalg import MatFq


BASE = VectIso(2)
D = represent(BASE)


def test_enumerate_diagrams_counts():
    I1 = fincat.ordinal(1)
    # diagrams [1] -> Vect with dims <= 1: (0,0),(0,1),(1,0) unique maps,
    # (1,1) has two maps
    assert len(enumerate_diagrams(BASE, I1, 1)) == 5
    e = fincat.terminal_cat()
    assert len(enumerate_diagrams(BASE, e, 2)) == 3


def test_make_diagram_validates():
    I1 = fincat.ordinal(1)
    with pytest.raises(ValueError):
        make_diagram(BASE, I1, {"0": 1, "1": 1},
                     {"0=>1": MatFq(2, 2, 1, [[1], [0]])})


def test_diagram_restrict():
    sq = fincat.square_cat()
    F = constant_diagram(BASE, sq, 1)
    inc = fincat.inclusion_ulcorner()
    G = F.restrict(inc)
    assert G.shape is inc.src
    assert validate_diagram(BASE, G) == []


def test_diagram_morphisms():
    I1 = fincat.ordinal(1)
    F = constant_diagram(BASE, I1, 1)
    assert len(enumerate_diagram_morphisms(BASE, F, F)) == 2
    idF = identity_diagram_morphism(BASE, F)
    assert validate_diagram_morphism(BASE, idF) == []


def test_left_kan_along_collapse_is_colimit():
    # f_! along [1] -> e computes the pushout-free colimit of an arrow,
    # which for an iso-base diagram is the target
    I1 = fincat.ordinal(1)
    f = fincat.collapse_functor(I1)
    F = make_diagram(BASE, I1, {"0": 1, "1": 1},
                     {"0=>1": MatFq.identity(2, 1)})
    G, kd = left_kan(BASE, f, F)
    assert G.objs["*"] == 1
    eta, _ = kan_unit(BASE, f, F)
    assert validate_diagram_morphism(BASE, eta) == []
    H = constant_diagram(BASE, fincat.terminal_cat(), 1)
    eps, _ = kan_counit(BASE, f, H)
    assert validate_diagram_morphism(BASE, eps) == []
    assert BASE.is_iso(eps.at("*"))


def test_mate_invertible_on_arrow():
    I1 = fincat.ordinal(1)
    f = fincat.collapse_functor(I1)
    F = make_diagram(BASE, I1, {"0": 0, "1": 1},
                     {"0=>1": MatFq(2, 1, 0, [[]])})
    w = mate(BASE, f, "*", F)
    assert w.invertible


def test_axiom_battery_vect():
    assert check_der1(D, fincat.ordinal(0), fincat.ordinal(0), 1)["pass"]
    I1 = fincat.ordinal(1)
    samples = []
    for F in D.objects(I1, 1):
        samples.extend(enumerate_diagram_morphisms(BASE, F, F))
    assert check_der2(D, I1, samples)["pass"]
    assert check_der3_der4(D, fincat.collapse_functor(I1), "*",
                           D.objects(I1, 1))["pass"]
    ul = fincat.ulcorner_cat()
    assert check_der3_der4(D, fincat.inclusion_ulcorner(), "(1,1)",
                           D.objects(ul, 1))["pass"]
    I = fincat.free_category("F(a->b)", ["a", "b"], [("u", "a", "b")])
    assert check_der5(D, I, 1, [("u", "a", "b")])["pass"]


def test_axiom_battery_ptset():
    P = represent(PtSetIso())
    assert check_der1(P, fincat.ordinal(0), fincat.ordinal(0), 1)["pass"]
    I1 = fincat.ordinal(1)
    assert check_der3_der4(P, fincat.collapse_functor(I1), "*",
                           P.objects(I1, 1))["pass"]


def test_cocartesian_tests_agree_at_bound_1():
    for F in enumerate_squares(BASE, 1):
        assert is_cocartesian_kan(BASE, F) == is_cocartesian_pushout(BASE, F)


def test_is_cocartesian_dispatch():
    sq = fincat.square_cat()
    F = constant_diagram(BASE, sq, 0)
    assert is_cocartesian(D, F)
    I1 = fincat.ordinal(1)
    with pytest.raises(ValueError):
        is_cocartesian(D, constant_diagram(BASE, I1, 0))


def test_shift_and_opposite():
    I1 = fincat.ordinal(1)
    e = fincat.terminal_cat()
    DY = shift(D, I1)
    assert DY.eval_shape(e).name == fincat.product(I1, e).name
    assert len(DY.objects(e, 1)) == len(D.objects(I1, 1))
    Dop = opposite(D)
    assert opposite(Dop) is D
    assert len(Dop.objects(I1, 1)) == len(D.objects(I1, 1))


def test_strict_morphism_postcompose():
    dbl = doubling_functor(BASE)
    phi = postcompose(D, dbl)
    I1 = fincat.ordinal(1)
    F = D.objects(I1, 1)[-1]
    out = phi.apply(I1, F)
    assert out.objs == {o: 2 * v for o, v in F.objs.items()}
    # strictness: commutes with restriction along 0 |-> 0
    pt = fincat.point_functor(I1, "0")
    assert check_strictness(phi, pt, F)


def test_cocontinuity():
    dbl = postcompose(D, doubling_functor(BASE))
    I1 = fincat.ordinal(1)
    f = fincat.collapse_functor(I1)
    assert check_cocontinuous(dbl, f, D.objects(I1, 1))
    # a constant functor does not preserve binary coproducts
    S, _, _ = coproduct_inclusions(fincat.ordinal(0), fincat.ordinal(0))
    g = fincat.collapse_functor(S)
    const = postcompose(D, constant_functor(BASE, 1))
    assert not check_cocontinuous(const, g, D.objects(S, 1))
