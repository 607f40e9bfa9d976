"""The S-construction in its three truncated models: the simplicial set
s_n of Ar[n]-diagrams with zero diagonal and cocartesian squares, the
bisimplicial refinement S_{n,m} of chains of weak equivalences, and the
nerve-of-isomorphisms model N_k iso S_k.  Also the classical Waldhausen
bisimplicial set N_m w S_n C, and the three simplicial action formulas:
the enriched action phi_*, the homotopy of the s-construction lemma, and
the grid-diagonal action of modification chains.
"""

from __future__ import annotations

import json
import os
from functools import lru_cache

from . import fincat
from .derivator import (DiagramObject, compose_diagram_morphisms,
                        enumerate_diagram_morphisms,
                        identity_diagram_morphism, is_cocartesian,
                        is_cocartesian_pushout, make_diagram)
from .enrichment import _diag_nest, _strip_level, eq_membership
from .simplicial import TruncBiSSet, TruncSSet


class CapabilityError(ValueError):
    """Raised when a construction is requested outside the capabilities of
    the underlying base (e.g. localized hom-sets for chain complexes)."""


class CapExceeded(RuntimeError):
    """Raised when an enumeration exceeds the configured cap."""

    def __init__(self, message, level=None):
        super().__init__(message)
        self.level = level


DEFAULT_CAP = 200000


def enumeration_cap(cap=None):
    if cap is not None:
        return cap
    env = os.environ.get("KDERIV_CAP")
    return int(env) if env else DEFAULT_CAP


# ---------------------------------------------------------------------------
# shapes and helper functors

@lru_cache(maxsize=None)
def sn_shape(n):
    return fincat.arrow_cat(n)


@lru_cache(maxsize=None)
def snm_shape(n, m):
    return fincat.product(fincat.ordinal(m), fincat.arrow_cat(n))


def _poset_functor(name, src, tgt, obj_map):
    """A functor between poset categories from its object assignment."""
    mor_map = {mid: f"{obj_map[s]}=>{obj_map[t]}"
               for mid, (s, t) in src.morphisms.items()}
    return fincat.FinFunctor(name, src, tgt, obj_map, mor_map)


def ijk_square(n, i, j, k):
    """The inclusion of the (i<=j<=k) square into Ar[n]:
    (0,0) -> (i,j), (1,0) -> (i,k), (0,1) -> (j,j), (1,1) -> (j,k)."""
    if not 0 <= i <= j <= k <= n:
        raise ValueError("indices must satisfy 0 <= i <= j <= k <= n")
    return _poset_functor(f"sq[{i},{j},{k}]", fincat.square_cat(),
                          fincat.arrow_cat(n),
                          {"(0,0)": f"({i},{j})", "(1,0)": f"({i},{k})",
                           "(0,1)": f"({j},{j})", "(1,1)": f"({j},{k})"})


def p_functor():
    """p: Ar[1] -> [1] with p(0,0) = 0 and p(0,1) = p(1,1) = 1."""
    return _poset_functor("p", fincat.arrow_cat(1), fincat.ordinal(1),
                          {"(0,0)": "0", "(0,1)": "1", "(1,1)": "1"})


def _pairing(F, G):
    """<F, G>: the functor into the product, for F, G with a common source."""
    tgt = fincat.product(F.tgt, G.tgt)
    obj_map = {o: f"({F.obj_map[o]},{G.obj_map[o]})" for o in F.src.objects}
    mor_map = {m: f"({F.mor_map[m]},{G.mor_map[m]})" for m in F.src.morphisms}
    return fincat.FinFunctor(f"<{F.name},{G.name}>", F.src, tgt,
                             obj_map, mor_map)


# ---------------------------------------------------------------------------
# membership predicates

class SnElement:
    """An element of S_n D: an Ar[n]-diagram with ho-zero diagonal and
    cocartesian (i,j,k)-squares."""

    def __init__(self, n, F):
        self.n = n
        self.F = F


class SnmElement:
    """An element of S_{n,m} D: a diagram on [m] x Ar[n] whose
    [m]-transitions are weak equivalences and whose columns lie in S_n."""

    def __init__(self, n, m, F):
        self.n = n
        self.m = m
        self.F = F


class WaldSnElement:
    """An element of S_n C for a Waldhausen structure: literal zero
    diagonal, cofibration horizontals, literal pushout squares."""

    def __init__(self, n, F):
        self.n = n
        self.F = F


def is_sn(D, n, F):
    """Conditions (i) and (ii) on an Ar[n]-diagram."""
    shape = sn_shape(n)
    if F.shape != shape:
        raise ValueError("diagram is not Ar[n]-shaped")
    base = D.base
    for i in range(n + 1):
        if not base.is_ho_zero(F.objs[f"({i},{i})"]):
            return False
    for i in range(n + 1):
        for j in range(i, n + 1):
            for k in range(j, n + 1):
                sq = F.restrict(ijk_square(n, i, j, k))
                if not is_cocartesian(D, sq):
                    return False
    return True


def is_snm(D, n, m, F):
    """The eq condition over [m] plus the column condition (*)."""
    shape = snm_shape(n, m)
    if F.shape != shape:
        raise ValueError("diagram is not [m] x Ar[n]-shaped")
    Y, X = fincat.ordinal(m), fincat.arrow_cat(n)
    if not eq_membership(D.base, Y, X, F):
        return False
    for j in range(m + 1):
        col = F.restrict(fincat.embed_at(Y, str(j), X, on_left=True))
        if not is_sn(D, n, col):
            return False
    return True


def is_wald_sn(W, n, F):
    """Literal zero diagonal, cofibration horizontals, pushout squares."""
    shape = sn_shape(n)
    if F.shape != shape:
        raise ValueError("diagram is not Ar[n]-shaped")
    base = W.base
    for i in range(n + 1):
        if not base.is_ho_zero(F.objs[f"({i},{i})"]):
            return False
    for i in range(n + 1):
        for j in range(i, n + 1):
            for k in range(j + 1, n + 1):
                if not W.is_cofibration(F.mors[f"({i},{j})=>({i},{k})"]):
                    return False
    for i in range(n + 1):
        for j in range(i, n + 1):
            for k in range(j, n + 1):
                sq = F.restrict(ijk_square(n, i, j, k))
                if not is_cocartesian_pushout(base, sq):
                    return False
    return True


def faces_degeneracies(D, element, direction, index, kind="face"):
    """Apply a face or degeneracy operator to an element, in the stated
    direction, and assert that membership is preserved."""
    if kind not in ("face", "degeneracy"):
        raise ValueError(f"unknown operator kind {kind!r}")

    def ar_op(n):
        if kind == "face":
            if not 0 <= index <= n:
                raise IndexError(f"face index {index} out of range")
            vals = [v if v < index else v + 1 for v in range(n)]
            return fincat.arrow_map_functor(vals, n - 1, n), n - 1
        if not 0 <= index <= n:
            raise IndexError(f"degeneracy index {index} out of range")
        vals = [v if v <= index else v - 1 for v in range(n + 2)]
        return fincat.arrow_map_functor(vals, n + 1, n), n + 1

    def ord_op(m):
        if kind == "face":
            if not 0 <= index <= m:
                raise IndexError(f"face index {index} out of range")
            vals = [v if v < index else v + 1 for v in range(m)]
            return fincat.ordinal_map_functor(vals, m - 1, m), m - 1
        if not 0 <= index <= m:
            raise IndexError(f"degeneracy index {index} out of range")
        vals = [v if v <= index else v - 1 for v in range(m + 2)]
        return fincat.ordinal_map_functor(vals, m + 1, m), m + 1

    if isinstance(element, SnElement):
        if direction != "n":
            raise ValueError("s-construction elements only have n-operators")
        op, n2 = ar_op(element.n)
        out = SnElement(n2, element.F.restrict(op))
        assert is_sn(D, n2, out.F), "operator left the s-construction"
        return out
    if isinstance(element, WaldSnElement):
        if direction != "n":
            raise ValueError("Waldhausen elements only have n-operators")
        op, n2 = ar_op(element.n)
        out = WaldSnElement(n2, element.F.restrict(op))
        assert is_wald_sn(D, n2, out.F), "operator left the S-construction"
        return out
    if isinstance(element, SnmElement):
        n, m = element.n, element.m
        if direction == "n":
            op, n2 = ar_op(n)
            full = fincat.product_functor(
                fincat.identity_functor(fincat.ordinal(m)), op)
            out = SnmElement(n2, m, element.F.restrict(full))
            assert is_snm(D, n2, m, out.F)
            return out
        if direction == "m":
            op, m2 = ord_op(m)
            full = fincat.product_functor(
                op, fincat.identity_functor(fincat.arrow_cat(n)))
            out = SnmElement(n, m2, element.F.restrict(full))
            assert is_snm(D, n, m2, out.F)
            return out
        raise ValueError(f"unknown direction {direction!r}")
    raise TypeError(f"unsupported element {element!r}")


# ---------------------------------------------------------------------------
# serialization keys

def diagram_key(base, F):
    """A deterministic string id for a diagram over a base."""
    return json.dumps(
        {"objs": {o: base.obj_json(v) for o, v in sorted(F.objs.items())},
         "mors": {m: base.mor_json(v) for m, v in sorted(F.mors.items())}},
        sort_keys=True, separators=(",", ":"))


def chain_key(base, diags, mors):
    """A deterministic string id for a chain of diagram morphisms."""
    return json.dumps(
        {"objects": [diagram_key(base, F) for F in diags],
         "maps": [{o: base.mor_json(c) for o, c in sorted(t.components.items())}
                  for t in mors]},
        sort_keys=True, separators=(",", ":"))


# ---------------------------------------------------------------------------
# enumeration of the level sets

def _unique_mor(base, a, b):
    out = base.enumerate_morphisms(a, b)
    assert len(out) == 1, "expected a unique morphism through the zero object"
    return out[0]


def sn_level(D, n, bound, cap=None):
    """Deterministic enumeration of s_n D within the bound, with canonical
    zero objects on the diagonal (n <= 2)."""
    base = D.base
    cap = enumeration_cap(cap)
    z = base.zero()
    shape = sn_shape(n)
    if n == 0:
        return [make_diagram(base, shape, {"(0,0)": z}, {})]
    if n == 1:
        out = []
        for V in base.enumerate_objects(bound):
            objs = {"(0,0)": z, "(0,1)": V, "(1,1)": z}
            nonid = {"(0,0)=>(0,1)": _unique_mor(base, z, V),
                     "(0,1)=>(1,1)": _unique_mor(base, V, z),
                     "(0,0)=>(1,1)": _unique_mor(base, z, z)}
            out.append(make_diagram(base, shape, objs, nonid))
            if len(out) > cap:
                raise CapExceeded("s_1 enumeration cap exceeded", level=1)
        return out
    if n != 2:
        raise CapabilityError("s_n enumeration implemented for n <= 2")
    out = []
    pool = base.enumerate_objects(bound)
    zz = _unique_mor(base, z, z)
    to_z = [_unique_mor(base, o, z) for o in pool]
    from_z = [_unique_mor(base, z, o) for o in pool]
    homs = {}
    for ib, b in enumerate(pool):
        for ic, c in enumerate(pool):
            homs[(ib, ic)] = base.enumerate_morphisms(b, c)
    for ia, a in enumerate(pool):
        for ib, b in enumerate(pool):
            for f in homs[(ia, ib)]:
                for ic, c in enumerate(pool):
                    zero_ac = base.compose(to_z[ia], from_z[ic])
                    for g in homs[(ib, ic)]:
                        if not base.is_zero_composite(f, g):
                            continue
                        sq = {"(0,0)": a, "(1,0)": b, "(0,1)": z, "(1,1)": c}
                        sqm = {"(0=>1,0=>0)": f,
                               "(0=>0,0=>1)": to_z[ia],
                               "(1=>1,0=>1)": g,
                               "(0=>1,1=>1)": from_z[ic]}
                        if not base.ho_cocartesian(sq, sqm):
                            continue
                        objs = {"(0,0)": z, "(1,1)": z, "(2,2)": z,
                                "(0,1)": a, "(0,2)": b, "(1,2)": c}
                        nonid = {"(0,1)=>(0,2)": f, "(0,2)=>(1,2)": g,
                                 "(0,1)=>(1,2)": zero_ac,
                                 "(0,0)=>(0,1)": from_z[ia],
                                 "(0,0)=>(0,2)": from_z[ib],
                                 "(0,0)=>(1,2)": from_z[ic],
                                 "(0,0)=>(1,1)": zz, "(0,0)=>(2,2)": zz,
                                 "(1,1)=>(2,2)": zz,
                                 "(1,1)=>(1,2)": from_z[ic],
                                 "(0,1)=>(1,1)": to_z[ia],
                                 "(0,1)=>(2,2)": to_z[ia],
                                 "(0,2)=>(2,2)": to_z[ib],
                                 "(1,2)=>(2,2)": to_z[ic]}
                        out.append(make_diagram(base, shape, objs, nonid))
                        if len(out) > cap:
                            raise CapExceeded(
                                "s_2 enumeration cap exceeded", level=2)
    return out


def wald_sn_level(W, n, bound, cap=None):
    """Waldhausen S_n within the bound: the sublist of the generic level
    with cofibration horizontals and literal pushout squares."""
    return [F for F in sn_level(W, n, bound, cap) if is_wald_sn(W, n, F)]


def build_s(D, N, bound, cap=None):
    """The N-truncated simplicial set s_bullet D; elements are diagram ids
    and the diagrams themselves are attached as S.elements[(k, id)]."""
    base = D.base
    levels, elements = {}, {}
    for k in range(N + 1):
        lv = sn_level(D, k, bound, cap)
        keyed = sorted((diagram_key(base, F), F) for F in lv)
        levels[k] = [kf for kf, _ in keyed]
        for kf, F in keyed:
            elements[(k, kf)] = F
    faces, degs = {}, {}
    for k in range(1, N + 1):
        for i in range(k + 1):
            vals = [v if v < i else v + 1 for v in range(k)]
            op = fincat.arrow_map_functor(vals, k - 1, k)
            faces[(k, i)] = {
                x: diagram_key(base, elements[(k, x)].restrict(op))
                for x in levels[k]}
    for k in range(N):
        for i in range(k + 1):
            vals = [v if v <= i else v - 1 for v in range(k + 2)]
            op = fincat.arrow_map_functor(vals, k + 1, k)
            degs[(k, i)] = {
                x: diagram_key(base, elements[(k, x)].restrict(op))
                for x in levels[k]}
    S = TruncSSet(N, levels, faces, degs)
    S.elements = elements
    return S


def _weq_transformations(base, F, G):
    out = []
    for t in enumerate_diagram_morphisms(base, F, G):
        if all(base.is_weq(c) for c in t.components.values()):
            out.append(t)
    return out


def _chains(base, diags, m, weqs, cap, level):
    """All m-chains of weak equivalences among the given diagrams."""
    if m == 0:
        return [((F,), ()) for F in diags]
    shorter = _chains(base, diags, m - 1, weqs, cap, level)
    out = []
    for ds, ts in shorter:
        for G in diags:
            for t in weqs[(ds[-1], G)]:
                out.append((ds + (G,), ts + (t,)))
                if len(out) > cap:
                    raise CapExceeded(
                        f"chain enumeration cap exceeded at {level}",
                        level=level)
    return out


def _chain_to_diagram(base, n, m, diags, mors):
    """Assemble an m-chain of Ar[n]-diagram morphisms into a single
    diagram on [m] x Ar[n]."""
    shape = snm_shape(n, m)
    X = sn_shape(n)
    comp = {}
    for i in range(m + 1):
        comp[(i, i)] = {x: base.identity(diags[i].objs[x]) for x in X.objects}
        for j in range(i + 1, m + 1):
            prev = comp[(i, j - 1)]
            comp[(i, j)] = {x: base.compose(prev[x],
                                            mors[j - 1].components[x])
                            for x in X.objects}
    objs = {f"({i},{x})": diags[i].objs[x]
            for i in range(m + 1) for x in X.objects}
    mors_out = {}
    for i in range(m + 1):
        for j in range(i, m + 1):
            for u, (s, t) in X.morphisms.items():
                if i == j:
                    mors_out[f"({i}=>{j},{u})"] = diags[i].mors[u]
                else:
                    mors_out[f"({i}=>{j},{u})"] = base.compose(
                        diags[i].mors[u], comp[(i, j)][t])
    # functoriality holds by the naturality of the chain maps
    return DiagramObject(shape, objs, mors_out)


def snm_level(D, n, m, bound, cap=None):
    """S_{n,m} D within the bound, as diagrams on [m] x Ar[n]."""
    base = D.base
    cap = enumeration_cap(cap)
    diags = sn_level(D, n, bound, cap)
    weqs = {(F, G): _weq_transformations(base, F, G)
            for F in diags for G in diags}
    return [_chain_to_diagram(base, n, m, ds, ts)
            for ds, ts in _chains(base, diags, m, weqs, cap, (n, m))]


def build_Sbis(D, N, M, bound, cap=None):
    """The (N, M)-truncated bisimplicial set S_{n,m} D."""
    base = D.base
    levels, elements = {}, {}
    for n in range(N + 1):
        for m in range(M + 1):
            lv = snm_level(D, n, m, bound, cap)
            keyed = sorted((diagram_key(base, F), F) for F in lv)
            levels[(n, m)] = [kf for kf, _ in keyed]
            for kf, F in keyed:
                elements[((n, m), kf)] = F
    h_faces, v_faces, h_degs, v_degs = {}, {}, {}, {}
    for n in range(N + 1):
        for m in range(M + 1):
            idm = fincat.identity_functor(fincat.ordinal(m))
            idn = fincat.identity_functor(fincat.arrow_cat(n))
            if n >= 1:
                for i in range(n + 1):
                    vals = [v if v < i else v + 1 for v in range(n)]
                    op = fincat.product_functor(
                        idm, fincat.arrow_map_functor(vals, n - 1, n))
                    h_faces[(n, m, i)] = {
                        x: diagram_key(base,
                                       elements[((n, m), x)].restrict(op))
                        for x in levels[(n, m)]}
            if n < N:
                for i in range(n + 1):
                    vals = [v if v <= i else v - 1 for v in range(n + 2)]
                    op = fincat.product_functor(
                        idm, fincat.arrow_map_functor(vals, n + 1, n))
                    h_degs[(n, m, i)] = {
                        x: diagram_key(base,
                                       elements[((n, m), x)].restrict(op))
                        for x in levels[(n, m)]}
            if m >= 1:
                for i in range(m + 1):
                    vals = [v if v < i else v + 1 for v in range(m)]
                    op = fincat.product_functor(
                        fincat.ordinal_map_functor(vals, m - 1, m), idn)
                    v_faces[(n, m, i)] = {
                        x: diagram_key(base,
                                       elements[((n, m), x)].restrict(op))
                        for x in levels[(n, m)]}
            if m < M:
                for i in range(m + 1):
                    vals = [v if v <= i else v - 1 for v in range(m + 2)]
                    op = fincat.product_functor(
                        fincat.ordinal_map_functor(vals, m + 1, m), idn)
                    v_degs[(n, m, i)] = {
                        x: diagram_key(base,
                                       elements[((n, m), x)].restrict(op))
                        for x in levels[(n, m)]}
    B = TruncBiSSet(N, M, levels, h_faces, v_faces, h_degs, v_degs)
    B.elements = elements
    return B


def build_NisoS(D, N, bound, cap=None):
    """The diagonal of the nerve-of-isomorphisms model: level k consists
    of k-chains of isomorphisms in S_k D, stored as chain tuples."""
    if not D.exact_ho:
        raise CapabilityError(
            "the nerve-of-isomorphisms model needs enumerable hom-sets")
    base = D.base
    capv = enumeration_cap(cap)
    levels, elements = {}, {}
    isos_by_k = {}
    for k in range(N + 1):
        diags = sn_level(D, k, bound, cap)
        isos = {(F, G): [t for t in enumerate_diagram_morphisms(base, F, G)
                         if all(base.is_iso(c)
                                for c in t.components.values())]
                for F in diags for G in diags}
        isos_by_k[k] = isos
        chains = _chains(base, diags, k, isos, capv, k)
        keyed = sorted((chain_key(base, ds, ts), (ds, ts))
                       for ds, ts in chains)
        levels[k] = [kf for kf, _ in keyed]
        for kf, ch in keyed:
            elements[(k, kf)] = ch
    faces, degs = {}, {}
    for k in range(1, N + 1):
        for i in range(k + 1):
            vals = [v if v < i else v + 1 for v in range(k)]
            op = fincat.arrow_map_functor(vals, k - 1, k)
            table = {}
            for x in levels[k]:
                ds, ts = elements[(k, x)]
                rds = tuple(F.restrict(op) for F in ds)
                rts = tuple(t.restrict(op) for t in ts)
                table[x] = chain_key(base, *_merge_chain(base, rds, rts, i))
            faces[(k, i)] = table
    for k in range(N):
        for i in range(k + 1):
            vals = [v if v <= i else v - 1 for v in range(k + 2)]
            op = fincat.arrow_map_functor(vals, k + 1, k)
            table = {}
            for x in levels[k]:
                ds, ts = elements[(k, x)]
                rds = tuple(F.restrict(op) for F in ds)
                rts = tuple(t.restrict(op) for t in ts)
                nds = rds[:i + 1] + rds[i:]
                nts = (rts[:i]
                       + (identity_diagram_morphism(base, rds[i]),)
                       + rts[i:])
                table[x] = chain_key(base, nds, nts)
            degs[(k, i)] = table
    S = TruncSSet(N, levels, faces, degs)
    S.elements = elements
    return S


def _merge_chain(base, diags, mors, i):
    """The i-th nerve face of a chain: drop an end or compose at i."""
    k = len(mors)
    if i == 0:
        return diags[1:], mors[1:]
    if i == k:
        return diags[:-1], mors[:-1]
    merged = compose_diagram_morphisms(base, mors[i - 1], mors[i])
    return (diags[:i] + diags[i + 1:],
            mors[:i - 1] + (merged,) + mors[i + 1:])


def build_wald(W, N, M, bound, cap=None):
    """The bisimplicial set N_m w S_n C of a Waldhausen structure."""
    base = W.base
    capv = enumeration_cap(cap)
    levels, elements = {}, {}
    for n in range(N + 1):
        diags = wald_sn_level(W, n, bound, cap)
        weqs = {(F, G): _weq_transformations(base, F, G)
                for F in diags for G in diags}
        for m in range(M + 1):
            lv = [_chain_to_diagram(base, n, m, ds, ts)
                  for ds, ts in _chains(base, diags, m, weqs, capv, (n, m))]
            keyed = sorted((diagram_key(base, F), F) for F in lv)
            levels[(n, m)] = [kf for kf, _ in keyed]
            for kf, F in keyed:
                elements[((n, m), kf)] = F
    h_faces, v_faces, h_degs, v_degs = {}, {}, {}, {}
    for n in range(N + 1):
        for m in range(M + 1):
            idm = fincat.identity_functor(fincat.ordinal(m))
            idn = fincat.identity_functor(fincat.arrow_cat(n))
            if n >= 1:
                for i in range(n + 1):
                    vals = [v if v < i else v + 1 for v in range(n)]
                    op = fincat.product_functor(
                        idm, fincat.arrow_map_functor(vals, n - 1, n))
                    h_faces[(n, m, i)] = {
                        x: diagram_key(base,
                                       elements[((n, m), x)].restrict(op))
                        for x in levels[(n, m)]}
            if n < N:
                for i in range(n + 1):
                    vals = [v if v <= i else v - 1 for v in range(n + 2)]
                    op = fincat.product_functor(
                        idm, fincat.arrow_map_functor(vals, n + 1, n))
                    h_degs[(n, m, i)] = {
                        x: diagram_key(base,
                                       elements[((n, m), x)].restrict(op))
                        for x in levels[(n, m)]}
            if m >= 1:
                for i in range(m + 1):
                    vals = [v if v < i else v + 1 for v in range(m)]
                    op = fincat.product_functor(
                        fincat.ordinal_map_functor(vals, m - 1, m), idn)
                    v_faces[(n, m, i)] = {
                        x: diagram_key(base,
                                       elements[((n, m), x)].restrict(op))
                        for x in levels[(n, m)]}
            if m < M:
                for i in range(m + 1):
                    vals = [v if v <= i else v - 1 for v in range(m + 2)]
                    op = fincat.product_functor(
                        fincat.ordinal_map_functor(vals, m + 1, m), idn)
                    v_degs[(n, m, i)] = {
                        x: diagram_key(base,
                                       elements[((n, m), x)].restrict(op))
                        for x in levels[(n, m)]}
    B = TruncBiSSet(N, M, levels, h_faces, v_faces, h_degs, v_degs)
    B.elements = elements
    return B


# ---------------------------------------------------------------------------
# the three simplicial action formulas

def phi_star(Dp, phi, values):
    """The action of a level-n eq simplex phi on S_{k,k} for sigma: [k]->[n]:
    apply phi([k] x Ar[k]), restrict along sigma x id, then along the
    diagonal nesting.  Returns a map of diagrams with membership asserted."""
    k = len(values) - 1
    n = phi.n
    X = snm_shape(k, k)
    tau = fincat.ordinal_map_functor(list(values), k, n)
    sig_op = fincat.product_functor(tau, fincat.identity_functor(X))
    nest = _diag_nest(k, fincat.arrow_cat(k))

    def act(F):
        A = phi.apply(X, F)
        B = A.restrict(sig_op)
        C = B.restrict(nest)
        if not is_snm(Dp, k, k, C):
            raise ValueError(
                "phi_star output violates membership (phi not admissible)")
        return C

    return act


def lemma_homotopy(Dp, Psi, values):
    """The sigma-component of the homotopy of the s-construction lemma:
    (Ar(sigma), id)* . (p x Ar[k])* . Psi(Ar[k]) for sigma: [k] -> [1]."""
    k = len(values) - 1
    X = fincat.arrow_cat(k)
    p_op = fincat.product_functor(p_functor(), fincat.identity_functor(X))
    pair = _pairing(fincat.arrow_map_functor(list(values), k, 1),
                    fincat.identity_functor(X))

    def act(F):
        A = Psi.apply(X, F)
        B = A.restrict(p_op)
        C = B.restrict(pair)
        if not is_sn(Dp, k, C):
            raise ValueError("lemma homotopy output violates membership")
        return C

    return act


def lemma_homotopy_data(D, Dp, Psi, S, T):
    """Assemble the lemma's homotopy over the built truncations S of
    s_bullet D and T of s_bullet D': a dict (k, sigma) -> {id -> id}
    accepted by simplicial.check_simplicial_homotopy."""
    from .simplicial import monotone_maps
    base = Dp.base
    H = {}
    for k in range(S.N + 1):
        for sigma in monotone_maps(k, 1):
            act = lemma_homotopy(Dp, Psi, list(sigma))
            H[(k, sigma)] = {x: diagram_key(base, act(S.elements[(k, x)]))
                             for x in S.levels[k]}
    return H


def s_bullet_map(Dp, phi, S, T):
    """The levelwise map of s-constructions induced by a 0-simplex phi."""
    from .simplicial import SimplicialMap
    base = Dp.base
    tables = {}
    for k in range(S.N + 1):
        X = fincat.arrow_cat(k)
        table = {}
        for x in S.levels[k]:
            G = _strip_level(phi.apply(X, S.elements[(k, x)]), X)
            if not is_sn(Dp, k, G):
                raise ValueError("morphism leaves the s-construction")
            table[x] = diagram_key(base, G)
        tables[k] = table
    return SimplicialMap(S, T, tables)


class ModificationChain:
    """A chain of invertible modifications between cocontinuous strict
    morphisms: morphisms[r] and components modifications[r] as callables
    (X, F) -> DiagramMorphism from morphisms[r](F) to morphisms[r+1](F)."""

    def __init__(self, morphisms, modifications):
        if len(morphisms) != len(modifications) + 1:
            raise ValueError("chain length mismatch")
        self.morphisms = list(morphisms)
        self.modifications = list(modifications)

    @property
    def n(self):
        return len(self.modifications)


def grid_diagonal(D, Dp, chain, values, simplex):
    """The grid-diagonal action of a modification chain on a k-chain of
    isomorphisms in S_k D: the r-th output is the diagonal
    beta_r(X_r) . psi_{r-1}(f_r) = psi_r(f_r) . beta_r(X_{r-1}),
    with both composites computed and asserted equal."""
    if not (D.exact_ho and Dp.exact_ho):
        raise CapabilityError("grid_diagonal needs enumerable hom-sets")
    base = Dp.base
    diags, mors = simplex
    k = len(values) - 1
    if len(mors) != k:
        raise ValueError("simplex length does not match sigma")
    X = fincat.arrow_cat(k)
    psis = [chain.morphisms[values[r]] for r in range(k + 1)]

    def beta(r, F):
        """The composite modification from psi_{r-1} to psi_r at F."""
        lo, hi = values[r - 1], values[r]
        t = identity_diagram_morphism(base, chain.morphisms[lo].apply(X, F))
        for j in range(lo, hi):
            t = compose_diagram_morphisms(base, t,
                                          chain.modifications[j](X, F))
        return t

    out_diags = [psis[r].apply(X, diags[r]) for r in range(k + 1)]
    out_mors = []
    for r in range(1, k + 1):
        left = compose_diagram_morphisms(
            base, psis[r - 1].apply_mor(X, mors[r - 1]), beta(r, diags[r]))
        right = compose_diagram_morphisms(
            base, beta(r, diags[r - 1]), psis[r].apply_mor(X, mors[r - 1]))
        assert left == right, "grid square does not commute"
        out_mors.append(left)
    return tuple(out_diags), tuple(out_mors)
