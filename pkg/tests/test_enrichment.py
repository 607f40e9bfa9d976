"""The simplicial enrichment: mapping simplices, path objects, strong
equivalences from initial objects, and the iso_n construction."""

import pytest

from kderiv import enrichment as en
from kderiv import fincat
from kderiv.basecat import VectIso
from kderiv.derivator import (BaseNat, identity_base_functor, represent)


BASE = VectIso(2)
D = represent(BASE)
E = fincat.terminal_cat()
I1 = fincat.ordinal(1)


def battery(bound=1):
    return [(E, D.objects(E, bound)), (I1, D.objects(I1, bound))]


def identity_one_simplex():
    nat = BaseNat("one", identity_base_functor(BASE),
                  identity_base_functor(BASE), BASE.identity)
    return en.alpha_star(D, D, nat.src, nat.tgt, nat)


def test_identity_simplex_acts_trivially():
    idD = en.identity_simplex(D)
    for X, samples in battery():
        for F in samples:
            G = idD.apply(X, F)
            assert en._strip_level(G, X) == F


def test_face_degeneracy_of_one_simplex():
    a1 = identity_one_simplex()
    v0 = en.simplicial_operator(a1, [0])
    v1 = en.simplicial_operator(a1, [1])
    assert en.simplices_agree(v0, v1, battery())
    s = en.degeneracy(v0, 0)
    assert s.n == 1
    assert en.simplices_agree(en.face(s, 0), v0, battery())


def test_boundaries_of_alpha_star():
    a1 = identity_one_simplex()
    b0 = en.boundary(a1, 0)
    b1 = en.boundary(a1, 1)
    assert en.simplices_agree(b0, b1, battery())


def test_compose_simplices_associative():
    a1 = identity_one_simplex()
    s0, _ = en.path_object(D)
    lhs = en.compose_simplices(en.compose_simplices(a1, s0), a1)
    rhs = en.compose_simplices(a1, en.compose_simplices(s0, a1))
    assert en.simplices_agree(lhs, rhs, battery())


def test_compose_simplices_level_mismatch():
    a1 = identity_one_simplex()
    with pytest.raises(ValueError):
        en.compose_simplices(a1, en.identity_simplex(D))


def test_path_object_factors_diagonal():
    s0, (d1, d0) = en.path_object(D)
    assert s0.eq
    for X, samples in battery():
        for F in samples:
            G = s0.apply(X, F)
            assert d1(X, G) == F
            assert d0(X, G) == F


def test_homotopy_boundaries_invertible():
    a1 = identity_one_simplex()
    phi0, phi1, tr = en.homotopy_boundaries(BASE, a1, battery())
    assert en.simplices_agree(phi0, phi1, battery())
    for X, samples in battery():
        for F in samples:
            t = tr(X, F)
            assert all(BASE.is_weq(c) for c in t.components.values())


def test_strong_equivalence_from_initial():
    _, _, Psi, rep = en.strong_equivalence_from_initial(
        D, I1, "0", battery=[(E, 1)])
    assert Psi.eq
    assert rep["pass"]
    assert rep["identity_composite"] and all(rep["identity_composite"])


def test_strong_equivalence_needs_initial():
    C = fincat.cyclic_group_cat(2)
    with pytest.raises(ValueError):
        en.strong_equivalence_from_initial(D, C, "*")


def test_eq_membership():
    Dx = en.eq_shift(D, I1)
    all_shifted = D.objects(fincat.product(I1, E), 1)
    eq_ones = Dx.objects(E, 1)
    assert set(eq_ones) <= set(all_shifted)
    # eq requires invertible transitions: strictly fewer diagrams
    assert len(eq_ones) < len(all_shifted)
    for F in eq_ones:
        assert en.eq_membership(BASE, I1, E, F)


def test_iso_prederivator():
    J = en.iso_prederivator(D, 1)
    assert en.iso_prederivator(D, 0) is D
    objs = J.objects(E, 1)
    # [1]-transitions must be isos: only 0->0 and the two automorphism
    # markings of the line survive... over F_2 just the identity
    idm = E.identities["*"]
    assert all(BASE.is_iso(F.mors[f"(0=>1,{idm})"]) for F in objs)
    F = D.objects(E, 1)[-1]
    G = en.degeneracy_to_iso(D, 1, E, F)
    assert J.accepts(E, G)


def test_rho_on_eq_simplex():
    a1 = identity_one_simplex()
    verts, transforms = en.rho(BASE, a1, battery())
    assert len(verts) == 2 and len(transforms) == 1
