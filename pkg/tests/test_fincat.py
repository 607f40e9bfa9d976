"""Finite categories, functors, and the shape constructors."""

import pytest

from kderiv import fincat


def test_ordinal_counts():
    for n in range(4):
        C = fincat.ordinal(n)
        assert fincat.validate(C) == []
        assert len(C.objects) == n + 1
        # one morphism i=>j per pair i <= j
        assert len(C.morphisms) == (n + 1) * (n + 2) // 2


def test_ordinal_negative_raises():
    with pytest.raises(ValueError):
        fincat.ordinal(-1)


def test_terminal_cat():
    e = fincat.terminal_cat()
    assert fincat.validate(e) == []
    assert e.objects == ["*"]
    assert len(e.morphisms) == 1


def test_arrow_cat():
    A = fincat.arrow_cat(2)
    assert fincat.validate(A) == []
    assert sorted(A.objects) == ["(0,0)", "(0,1)", "(0,2)",
                                 "(1,1)", "(1,2)", "(2,2)"]
    # componentwise order: (0,1) <= (1,2) but not (1,1) <= (0,2)
    assert A.hom("(0,1)", "(1,2)")
    assert not A.hom("(1,1)", "(0,2)")


def test_square_and_corner_shapes():
    sq = fincat.square_cat()
    ul = fincat.ulcorner_cat()
    assert fincat.validate(sq) == []
    assert fincat.validate(ul) == []
    assert len(sq.objects) == 4
    assert sorted(ul.objects) == ["(0,0)", "(0,1)", "(1,0)"]
    inc = fincat.inclusion_ulcorner()
    assert fincat.validate_functor(inc) == []


def test_product_coproduct_opposite():
    C = fincat.ordinal(1)
    D = fincat.ordinal(2)
    P = fincat.product(C, D)
    assert fincat.validate(P) == []
    assert len(P.objects) == len(C.objects) * len(D.objects)
    assert len(P.morphisms) == len(C.morphisms) * len(D.morphisms)
    S = fincat.coproduct(C, D)
    assert fincat.validate(S) == []
    assert len(S.objects) == len(C.objects) + len(D.objects)
    Op = fincat.opposite(D)
    assert fincat.validate(Op) == []
    assert len(Op.morphisms) == len(D.morphisms)
    # opposite twice gives the same hom counts
    assert len(Op.hom(Op.objects[0], Op.objects[-1])) == \
        len(D.hom(D.objects[-1], D.objects[0]))


def test_is_finite_direct():
    assert fincat.is_finite_direct(fincat.ordinal(2))
    assert fincat.is_finite_direct(fincat.arrow_cat(2))
    # a group has a non-identity endomorphism, hence is not direct
    assert not fincat.is_finite_direct(fincat.cyclic_group_cat(2))


def test_cyclic_group_cat():
    G = fincat.cyclic_group_cat(3)
    assert fincat.validate(G) == []
    assert len(G.morphisms) == 3
    assert G.compose[("g1", "g2")] == "g0"
    assert G.compose[("g2", "g2")] == "g1"
    with pytest.raises(ValueError):
        fincat.cyclic_group_cat(0)


def test_free_category_parallel_pair():
    F = fincat.free_category("pair", ["a", "b"],
                             [("u", "a", "b"), ("v", "a", "b")])
    assert fincat.validate(F) == []
    assert sorted(F.hom("a", "b")) == ["u", "v"]
    assert F.hom("b", "a") == []


def test_free_category_composition():
    F = fincat.free_category("path", ["a", "b", "c"],
                             [("u", "a", "b"), ("v", "b", "c")])
    assert fincat.validate(F) == []
    assert F.compose[("u", "v")] == "u*v"
    assert F.hom("a", "c") == ["u*v"]


def test_functor_helpers():
    C = fincat.ordinal(2)
    idC = fincat.identity_functor(C)
    assert fincat.validate_functor(idC) == []
    col = fincat.collapse_functor(C)
    assert fincat.validate_functor(col) == []
    assert col.tgt.objects == ["*"]
    pt = fincat.point_functor(C, "1")
    assert fincat.validate_functor(pt) == []
    assert pt.obj("*") == "1"
    comp = fincat.compose_functors(pt, idC)
    assert fincat.validate_functor(comp) == []


def test_embed_and_project():
    X = fincat.ordinal(1)
    Y = fincat.ordinal(2)
    emb = fincat.embed_at(Y, "1", X, on_left=True)
    assert fincat.validate_functor(emb) == []
    assert emb.obj("0") == "(1,0)"
    proj = fincat.projection_functor(Y, X, on_left=True)
    assert fincat.validate_functor(proj) == []
    assert proj.obj("(1,0)") == "0"
    # projecting after embedding is the identity on objects
    for o in X.objects:
        assert proj.obj(emb.obj(o)) == o


def test_comma_category():
    # (f | y) for f = id on [1] and y = 1: objects are arrows into 1
    X = fincat.ordinal(1)
    cd = fincat.comma(fincat.identity_functor(X), "1")
    assert fincat.validate(cd.comma) == []
    assert len(cd.comma.objects) == 2
    assert fincat.validate_functor(cd.j) == []
    assert fincat.validate_nat(cd.alpha) == []


def test_ordinal_map_functors():
    # the face map d_1 : [1] -> [2] skips vertex 1
    d1 = fincat.simplicial_face(2, 1)
    assert fincat.validate_functor(d1) == []
    assert [d1.obj(str(i)) for i in range(2)] == ["0", "2"]
    s0 = fincat.simplicial_degeneracy(1, 0)
    assert fincat.validate_functor(s0) == []
    assert [s0.obj(str(i)) for i in range(3)] == ["0", "0", "1"]


def test_validate_catches_broken_composition():
    C = fincat.ordinal(1)
    bad = fincat.FinCat("bad", list(C.objects), dict(C.morphisms),
                        dict(C.compose), dict(C.identities))
    bad.compose[("0=>0", "0=>1")] = "0=>0"
    assert fincat.validate(bad) != []


def test_dumps_deterministic():
    a = fincat.dumps(fincat.ordinal(2))
    b = fincat.dumps(fincat.ordinal(2))
    assert a == b and a.startswith("{")
