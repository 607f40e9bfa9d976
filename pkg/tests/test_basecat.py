"""The homotopical bases: F_q vector spaces, pointed sets, chain complexes."""

import pytest

from kderiv.basecat import (ChainMor, ChainObj, ChainQis, PtMap, PtSetIso,
                            VectIso, WaldhausenStructure, make_base)
from kderiv.linalg import MatFq


# ---------------------------------------------------------------------------
# vector spaces

def test_vect_enumeration():
    base = VectIso(2)
    assert base.enumerate_objects(2) == [0, 1, 2]
    # all 2x2 matrices over F_2
    assert len(base.enumerate_morphisms(2, 2)) == 16
    assert len(base.enumerate_isos(2, 2)) == 6  # |GL_2(F_2)|
    assert len(base.enumerate_morphisms(0, 3)) == 1


def test_vect_structure():
    base = VectIso(3)
    assert base.zero() == 0
    f = MatFq(3, 2, 1, [[1], [2]])
    assert base.mor_src(f) == 1 and base.mor_tgt(f) == 2
    assert base.is_mono(f)
    assert not base.is_weq(f)
    g = MatFq(3, 1, 2, [[1, 0]])
    assert base.compose(f, g) == g @ f


def test_vect_pushout():
    base = VectIso(2)
    # pushout of 1 <- 0 -> 1 is the direct sum
    f = MatFq(2, 1, 0, [[]])
    corner, qb, qc, _ = base.pushout(0, f, f)
    assert corner == 2
    assert base.is_mono(qb) and base.is_mono(qc)


def test_vect_ho_cocartesian():
    base = VectIso(2)
    inc0 = MatFq(2, 2, 1, [[1], [0]])
    inc1 = MatFq(2, 2, 1, [[0], [1]])
    none = MatFq(2, 1, 0, [[]])
    objs = {"(0,0)": 0, "(1,0)": 1, "(0,1)": 1, "(1,1)": 2}
    mors = {"(0=>1,0=>0)": none, "(0=>0,0=>1)": none,
            "(1=>1,0=>1)": inc0, "(0=>1,1=>1)": inc1}
    assert base.ho_cocartesian(objs, mors)
    # collapsing both legs to the same line is not a pushout
    objs2 = {"(0,0)": 0, "(1,0)": 1, "(0,1)": 1, "(1,1)": 1}
    eye = MatFq.identity(2, 1)
    mors2 = {"(0=>1,0=>0)": none, "(0=>0,0=>1)": none,
             "(1=>1,0=>1)": eye, "(0=>1,1=>1)": eye}
    assert not base.ho_cocartesian(objs2, mors2)


# ---------------------------------------------------------------------------
# pointed sets

def test_ptmap_validation():
    with pytest.raises(ValueError):
        PtMap(1, 1, [1, 0])  # does not fix the basepoint
    with pytest.raises(ValueError):
        PtMap(1, 1, [0, 2])  # image out of range


def test_ptset_structure():
    base = PtSetIso()
    f = PtMap(2, 1, [0, 1, 1])
    g = PtMap(1, 2, [0, 2])
    assert base.compose(f, g).table == (0, 2, 2)
    assert base.is_weq(PtMap(2, 2, [0, 2, 1]))
    assert not base.is_weq(f)
    assert base.is_mono(g)
    assert not base.is_mono(f)


def test_ptset_pushout_is_wedge():
    base = PtSetIso()
    f = PtMap(0, 2, [0])
    corner, qb, qc, _ = base.pushout(0, f, f)
    assert corner == 4  # 2 v 2 has four non-base elements
    assert base.is_mono(qb) and base.is_mono(qc)


def test_ptset_enumeration():
    base = PtSetIso()
    assert base.enumerate_objects(2) == [0, 1, 2]
    # pointed maps 2+ -> 2+: 3^2 tables fixing the basepoint
    assert len(base.enumerate_morphisms(2, 2)) == 9


# ---------------------------------------------------------------------------
# chain complexes

def _interval(q=2):
    """The acyclic complex F_q --id--> F_q in degrees [0,1]."""
    return ChainObj(q, 0, [1, 1], {1: MatFq.identity(q, 1)})


def test_chainobj_normalization():
    c = ChainObj(2, -1, [0, 1, 0], {})
    assert c.lo == 0 and c.dims == (1,)
    z = ChainObj(2, 3, [0, 0], {})
    assert z.dims == () and z.lo == 0
    with pytest.raises(ValueError):
        ChainObj(2, 0, [1, 1], {1: MatFq(2, 2, 1, [[1], [0]])})


def test_chainobj_rejects_bad_differential():
    d = MatFq.identity(2, 1)
    with pytest.raises(ValueError):
        ChainObj(2, 0, [1, 1, 1], {1: d, 2: d})  # d.d = id != 0


def test_chain_homology():
    base = ChainQis(2, 0, 1)
    s0 = ChainObj(2, 0, [1], {})      # F_2 in degree 0
    assert base.homology_dims(s0) == {0: 1}
    assert base.homology_dims(_interval()) == {}
    assert base.is_ho_zero(_interval())
    assert not base.is_ho_zero(s0)


def test_chain_weq():
    base = ChainQis(2, 0, 1)
    s0 = ChainObj(2, 0, [1], {})
    assert base.is_weq(base.identity(_interval()))
    # collapsing an acyclic summand is a qis but not an iso
    c = ChainObj(2, 0, [2, 1], {1: MatFq(2, 2, 1, [[1], [0]])})
    p = ChainMor(c, s0, {0: MatFq(2, 1, 2, [[0, 1]])})
    assert base.is_weq(p)
    assert not base.is_iso(p)
    z = ChainMor(s0, s0, {})
    assert not base.is_weq(z)


def test_chain_mapping_cylinder():
    base = ChainQis(2, 0, 1)
    s0 = ChainObj(2, 0, [1], {})
    m = ChainMor(s0, s0, {0: MatFq.identity(2, 1)})
    cyl, inc, proj = base.mapping_cylinder(m)
    assert base.is_mono(inc)
    assert base.is_weq(proj)
    assert base.compose(inc, proj) == m


def test_chain_double_mapping_cylinder_is_memoized():
    base = ChainQis(2, 0, 1)
    s0 = ChainObj(2, 0, [1], {})
    f = ChainMor(s0, s0, {})
    a = base.double_mapping_cylinder(f, f)
    b = base.double_mapping_cylinder(f, f)
    assert a is b


def test_chain_enumeration_bound():
    base = ChainQis(2, 0, 1)
    # total dim <= 1: zero, a point in each degree
    assert len(base.enumerate_objects(1)) == 3
    assert all(o.total_dim() <= 2 for o in base.enumerate_objects(2))


def test_is_zero_composite_agrees_with_default():
    base = VectIso(2)
    f = MatFq(2, 1, 1, [[1]])
    g = MatFq(2, 1, 1, [[0]])
    assert base.is_zero_composite(f, g)
    assert not base.is_zero_composite(f, f)


# ---------------------------------------------------------------------------
# Waldhausen structures

def test_waldhausen_cofibrations():
    base = VectIso(2)
    W = WaldhausenStructure(base, "monos")
    mono = MatFq(2, 2, 1, [[1], [0]])
    epi = MatFq(2, 1, 2, [[1, 0]])
    assert W.is_cofibration(mono)
    assert not W.is_cofibration(epi)
    assert WaldhausenStructure(base, "all-maps").is_cofibration(epi)
    with pytest.raises(ValueError):
        WaldhausenStructure(base, "fibrations")


def test_waldhausen_factorization():
    base = ChainQis(2, 0, 1)
    W = WaldhausenStructure(base, "monos")
    s0 = ChainObj(2, 0, [1], {})
    m = ChainMor(s0, s0, {})  # the zero map, not a mono
    cof, weq = W.factorization(m)
    assert W.is_cofibration(cof)
    assert base.is_weq(weq)
    assert base.compose(cof, weq) == m
    assert W.is_derivable_on([m, base.identity(s0)])


def test_make_base():
    assert make_base("vect-iso", 3).q == 3
    assert isinstance(make_base("ptset-iso"), PtSetIso)
    assert make_base("chain-qis", 2, 0, 2).hi == 2
    assert isinstance(make_base("trivial"), VectIso)
    with pytest.raises(ValueError):
        make_base("sets")
