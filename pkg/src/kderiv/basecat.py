"""Concrete homotopical base categories with computable finite colimits.

Three bases are provided:

* ``VectIso(q)``   -- finite dimensional F_q-vector spaces, weak
  equivalences = isomorphisms.  Objects are dimensions (skeletal).
* ``PtSetIso()``   -- finite pointed sets, weak equivalences =
  isomorphisms.  Objects are non-basepoint counts.
* ``ChainQis(q, lo, hi)`` -- bounded chain complexes of F_q-vector
  spaces supported in degrees [lo, hi], weak equivalences =
  quasi-isomorphisms.

All three have a zero object and all finite colimits; the first two have
the ``exact_ho`` capability (the homotopy category of a diagram category
is the diagram category itself).
"""

from __future__ import annotations

import itertools

from .linalg import (MatFq, cokernel, hstack, is_invertible, kernel_basis,
                     rank, solve)


class ColimitResult:
    """A colimit together with its cocone and enough data to compute
    mediating morphisms (the projection from the direct sum and a chosen
    section of it)."""

    def __init__(self, obj, cocone, data):
        self.obj = obj
        self.cocone = cocone   # shape object id -> morphism into obj
        self.data = data


class HomotopicalBase:
    tag = None
    exact_ho = False

    # --- structural interface -------------------------------------------
    def zero(self):
        raise NotImplementedError

    def mor_src(self, m):
        raise NotImplementedError

    def mor_tgt(self, m):
        raise NotImplementedError

    def identity(self, o):
        raise NotImplementedError

    def compose(self, f, g):
        """g after f."""
        raise NotImplementedError

    def is_weq(self, m):
        raise NotImplementedError

    def is_iso(self, m):
        raise NotImplementedError

    def is_mono(self, m):
        raise NotImplementedError

    def is_ho_zero(self, o):
        raise NotImplementedError

    def colimit(self, shape, obj_assign, mor_assign):
        raise NotImplementedError

    def mediating(self, colim, cocone, tgt):
        raise NotImplementedError

    def enumerate_objects(self, bound):
        raise NotImplementedError

    def enumerate_morphisms(self, a, b):
        raise NotImplementedError

    def enumerate_isos(self, a, b):
        return [m for m in self.enumerate_morphisms(a, b) if self.is_iso(m)]

    def obj_json(self, o):
        raise NotImplementedError

    def mor_json(self, m):
        raise NotImplementedError

    # --- derived ----------------------------------------------------------
    def pushout(self, a, f, g):
        """Complete the span  b <-f- a -g-> c  to a square.

        Returns (corner, b_to_corner, c_to_corner, colim_result).
        """
        from . import fincat
        ul = fincat.ulcorner_cat()
        objs = {"(0,0)": a, "(1,0)": self.mor_tgt(f), "(0,1)": self.mor_tgt(g)}
        mors = {}
        for m, (s, t) in ul.morphisms.items():
            if ul.is_identity(m):
                mors[m] = self.identity(objs[s])
            elif (s, t) == ("(0,0)", "(1,0)"):
                mors[m] = f
            elif (s, t) == ("(0,0)", "(0,1)"):
                mors[m] = g
        col = self.colimit(ul, objs, mors)
        return col.obj, col.cocone["(1,0)"], col.cocone["(0,1)"], col

    def ho_cocartesian(self, obj_assign, mor_assign):
        """Is the commuting square (assignments indexed by [1]x[1] ids) a
        homotopy pushout?"""
        f = mor_assign["(0=>1,0=>0)"]   # (0,0) -> (1,0)
        g = mor_assign["(0=>0,0=>1)"]   # (0,0) -> (0,1)
        u = mor_assign["(1=>1,0=>1)"]   # (1,0) -> (1,1)
        v = mor_assign["(0=>1,1=>1)"]   # (0,1) -> (1,1)
        if self.compose(f, u) != self.compose(g, v):
            raise ValueError("square does not commute")
        return self._ho_cocartesian_span(f, g, u, v, obj_assign["(1,1)"])

    def _ho_cocartesian_span(self, f, g, u, v, corner):
        _, qb, qc, col = self.pushout(self.mor_src(f), f, g)
        med = self.mediating(col, {"(0,0)": self.compose(f, u),
                                   "(1,0)": u, "(0,1)": v}, corner)
        return self.is_iso(med)

    def is_zero_composite(self, f, g):
        """Does g . f equal the composite through the zero object?"""
        z = self.zero()
        to_z = self.enumerate_morphisms(self.mor_src(f), z)[0]
        from_z = self.enumerate_morphisms(z, self.mor_tgt(g))[0]
        return self.compose(f, g) == self.compose(to_z, from_z)


# ---------------------------------------------------------------------------
# F_q vector spaces, W = isomorphisms

class VectIso(HomotopicalBase):
    tag = "vect-iso"
    exact_ho = True

    def __init__(self, q):
        MatFq(q, 0, 0, [])  # primality check
        self.q = q

    def zero(self):
        return 0

    def mor_src(self, m):
        return m.cols

    def mor_tgt(self, m):
        return m.rows

    def identity(self, o):
        return MatFq.identity(self.q, o)

    def compose(self, f, g):
        return g @ f

    def is_zero_composite(self, f, g):
        return (g @ f).is_zero()

    def is_weq(self, m):
        return is_invertible(m)

    is_iso = is_weq

    def is_mono(self, m):
        return rank(m) == m.cols

    def is_ho_zero(self, o):
        return o == 0

    def colimit(self, shape, obj_assign, mor_assign):
        order = list(shape.objects)
        offsets, total = {}, 0
        for o in order:
            offsets[o] = total
            total += obj_assign[o]
        cols = []
        for m in shape.non_identity_morphisms():
            s, t = shape.morphisms[m]
            M = mor_assign[m]
            for j in range(obj_assign[s]):
                col = [0] * total
                for i in range(M.rows):
                    col[offsets[t] + i] = M.entries[i][j]
                col[offsets[s] + j] = (col[offsets[s] + j] - 1) % self.q
                cols.append(col)
        R = MatFq(self.q, total, len(cols),
                  [[c[i] for c in cols] for i in range(total)])
        dim, P = cokernel(R)
        section = solve(P, MatFq.identity(self.q, dim))
        cocone = {}
        for o in order:
            off, d = offsets[o], obj_assign[o]
            cocone[o] = MatFq(self.q, dim, d,
                              [[P.entries[i][off + j] for j in range(d)]
                               for i in range(dim)])
        return ColimitResult(dim, cocone,
                             {"P": P, "S": section, "offsets": offsets,
                              "order": order, "obj_assign": dict(obj_assign),
                              "total": total})

    def mediating(self, colim, cocone, tgt):
        d = colim.data
        blocks = [cocone[o] if d["obj_assign"][o] else MatFq(self.q, tgt, 0, [[]] * tgt)
                  for o in d["order"]]
        U = hstack(blocks, self.q, tgt)
        med = U @ d["S"]
        if med @ d["P"] != U:
            raise ValueError("cocone does not commute with the diagram")
        return med

    def enumerate_objects(self, bound):
        return list(range(bound + 1))

    def enumerate_morphisms(self, a, b):
        return [MatFq(self.q, b, a, rows)
                for rows in itertools.product(
                    itertools.product(range(self.q), repeat=a), repeat=b)]

    def obj_json(self, o):
        return {"dim": o}

    def mor_json(self, m):
        return m.to_json()


# ---------------------------------------------------------------------------
# finite pointed sets, W = isomorphisms

class PtMap:
    """A pointed map; table[e] is the image of element e, table[0] = 0."""

    __slots__ = ("src", "tgt", "table")

    def __init__(self, src, tgt, table):
        self.src = src
        self.tgt = tgt
        self.table = tuple(table)
        if len(self.table) != src + 1 or self.table[0] != 0:
            raise ValueError("not a pointed map table")
        if any(not (0 <= x <= tgt) for x in self.table):
            raise ValueError("image out of range")

    def __eq__(self, other):
        return (isinstance(other, PtMap) and self.src == other.src
                and self.tgt == other.tgt and self.table == other.table)

    def __hash__(self):
        return hash((self.src, self.tgt, self.table))

    def __repr__(self):
        return f"PtMap({self.src}->{self.tgt}, {list(self.table)})"


class PtSetIso(HomotopicalBase):
    tag = "ptset-iso"
    exact_ho = True

    def zero(self):
        return 0

    def mor_src(self, m):
        return m.src

    def mor_tgt(self, m):
        return m.tgt

    def identity(self, o):
        return PtMap(o, o, range(o + 1))

    def compose(self, f, g):
        if f.tgt != g.src:
            raise ValueError("not composable")
        return PtMap(f.src, g.tgt, [g.table[x] for x in f.table])

    def is_weq(self, m):
        return m.src == m.tgt and sorted(m.table) == list(range(m.src + 1))

    is_iso = is_weq

    def is_mono(self, m):
        return len(set(m.table)) == m.src + 1

    def is_ho_zero(self, o):
        return o == 0

    def colimit(self, shape, obj_assign, mor_assign):
        order = list(shape.objects)
        keys = [("*base*", 0)]
        for o in order:
            keys.extend((o, e) for e in range(1, obj_assign[o] + 1))
        parent = {k: k for k in keys}

        def find(k):
            while parent[k] != k:
                parent[k] = parent[parent[k]]
                k = parent[k]
            return k

        def union(a, b):
            ra, rb = find(a), find(b)
            if ra != rb:
                parent[max(ra, rb, key=keys.index)] = min(ra, rb, key=keys.index)

        def key_of(o, e):
            return ("*base*", 0) if e == 0 else (o, e)

        for m in shape.non_identity_morphisms():
            s, t = shape.morphisms[m]
            f = mor_assign[m]
            for e in range(obj_assign[s] + 1):
                union(key_of(s, e), key_of(t, f.table[e]))
        classes = sorted({find(k) for k in keys}, key=keys.index)
        base_cls = find(("*base*", 0))
        nonbase = [c for c in classes if c != base_cls]
        index = {c: i + 1 for i, c in enumerate(nonbase)}
        index[base_cls] = 0
        cocone = {o: PtMap(obj_assign[o], len(nonbase),
                           [index[find(key_of(o, e))]
                            for e in range(obj_assign[o] + 1)])
                  for o in order}
        reps = {0: ("*base*", 0)}
        for c, i in index.items():
            reps[i] = c
        return ColimitResult(len(nonbase), cocone, {"reps": reps, "order": order})

    def mediating(self, colim, cocone, tgt):
        table = []
        for i in range(colim.obj + 1):
            o, e = colim.data["reps"][i]
            table.append(0 if o == "*base*" else cocone[o].table[e])
        med = PtMap(colim.obj, tgt, table)
        for o in colim.data["order"]:
            if self.compose(colim.cocone[o], med) != cocone[o]:
                raise ValueError("cocone does not commute with the diagram")
        return med

    def enumerate_objects(self, bound):
        return list(range(bound + 1))

    def enumerate_morphisms(self, a, b):
        return [PtMap(a, b, (0,) + t)
                for t in itertools.product(range(b + 1), repeat=a)]

    def obj_json(self, o):
        return {"size": o}

    def mor_json(self, m):
        return {"src": m.src, "tgt": m.tgt, "table": list(m.table)}


# ---------------------------------------------------------------------------
# bounded chain complexes over F_q, W = quasi-isomorphisms

class ChainObj:
    """A bounded chain complex; dims[k - lo] is the dimension in degree k
    and diffs[k] : C_k -> C_{k-1}.  Trailing/leading zero degrees are
    trimmed so equal complexes have equal presentations."""

    __slots__ = ("q", "lo", "dims", "diffs")

    def __init__(self, q, lo, dims, diffs):
        dims = list(dims)
        diffs = dict(diffs)
        while dims and dims[0] == 0:
            dims.pop(0)
            lo += 1
            diffs.pop(lo, None)
        while dims and dims[-1] == 0:
            hi = lo + len(dims) - 1
            dims.pop()
            diffs.pop(hi, None)
        if not dims:
            lo = 0
        self.q = q
        self.lo = lo
        self.dims = tuple(dims)
        self.diffs = {k: m for k, m in diffs.items()
                      if lo < k <= lo + len(dims) - 1 and m.rows * m.cols > 0}
        for k, m in self.diffs.items():
            if (m.rows, m.cols) != (self.dim(k - 1), self.dim(k)):
                raise ValueError(f"differential shape mismatch in degree {k}")
        for k in list(self.diffs):
            if k - 1 in self.diffs and not (self.diffs[k - 1] @ self.diffs[k]).is_zero():
                raise ValueError("d . d != 0")

    @property
    def hi(self):
        return self.lo + len(self.dims) - 1 if self.dims else self.lo - 1

    def dim(self, k):
        if self.dims and self.lo <= k <= self.hi:
            return self.dims[k - self.lo]
        return 0

    def diff(self, k):
        return self.diffs.get(k, MatFq(self.q, self.dim(k - 1), self.dim(k),
                                       [[0] * self.dim(k)] * self.dim(k - 1)))

    def total_dim(self):
        return sum(self.dims)

    def degrees(self):
        return range(self.lo, self.hi + 1)

    def __eq__(self, other):
        return (isinstance(other, ChainObj) and self.q == other.q
                and self.lo == other.lo and self.dims == other.dims
                and self.diffs == other.diffs)

    def __hash__(self):
        return hash((self.q, self.lo, self.dims,
                     tuple(sorted(self.diffs.items(), key=lambda kv: kv[0]))))

    def __repr__(self):
        return f"ChainObj(q={self.q}, lo={self.lo}, dims={list(self.dims)})"


class ChainMor:
    __slots__ = ("src", "tgt", "mats")

    def __init__(self, src, tgt, mats):
        self.src = src
        self.tgt = tgt
        self.mats = {k: m for k, m in mats.items()
                     if src.dim(k) and tgt.dim(k) and not m.is_zero()}
        for k, m in self.mats.items():
            if (m.rows, m.cols) != (tgt.dim(k), src.dim(k)):
                raise ValueError(f"component shape mismatch in degree {k}")
        # d.m = m.d can only fail in degrees where one side is nonzero
        checks = ({k for k in self.mats if k in tgt.diffs}
                  | {k + 1 for k in self.mats if k + 1 in src.diffs})
        for k in checks:
            if tgt.diff(k) @ self.mat(k) != self.mat(k - 1) @ src.diff(k):
                raise ValueError(f"not a chain map in degree {k}")

    def mat(self, k):
        if k in self.mats:
            return self.mats[k]
        return MatFq(self.src.q, self.tgt.dim(k), self.src.dim(k),
                     [[0] * self.src.dim(k)] * self.tgt.dim(k))

    def __eq__(self, other):
        return (isinstance(other, ChainMor) and self.src == other.src
                and self.tgt == other.tgt and self.mats == other.mats)

    def __hash__(self):
        return hash((self.src, self.tgt,
                     tuple(sorted(self.mats.items(), key=lambda kv: kv[0]))))

    def __repr__(self):
        return f"ChainMor({self.src!r} -> {self.tgt!r})"


class ChainQis(HomotopicalBase):
    tag = "chain-qis"
    exact_ho = False

    def __init__(self, q, lo, hi):
        MatFq(q, 0, 0, [])
        if lo > hi:
            raise ValueError("empty degree window")
        self.q = q
        self.lo = lo
        self.hi = hi
        self._cylinders = {}

    def zero(self):
        return ChainObj(self.q, 0, (), {})

    def mor_src(self, m):
        return m.src

    def mor_tgt(self, m):
        return m.tgt

    def identity(self, o):
        return ChainMor(o, o, {k: MatFq.identity(self.q, o.dim(k))
                               for k in o.degrees() if o.dim(k)})

    def compose(self, f, g):
        if f.tgt != g.src:
            raise ValueError("not composable")
        mats = {}
        for k in range(min(f.src.lo, g.tgt.lo), max(f.src.hi, g.tgt.hi) + 1):
            if f.src.dim(k) and g.tgt.dim(k):
                mats[k] = g.mat(k) @ f.mat(k)
        return ChainMor(f.src, g.tgt, mats)

    # --- homology ----------------------------------------------------------
    def homology_data(self, o, k):
        """(Z, Qc, Sc): kernel basis of d_k, the projection onto homology
        coordinates, and a section of it."""
        Z = kernel_basis(o.diff(k)) if o.dim(k) else MatFq(self.q, 0, 0, [])
        B = o.diff(k + 1)
        if Z.cols == 0:
            return Z, MatFq(self.q, 0, 0, []), MatFq(self.q, 0, 0, [])
        C = solve(Z, B) if B.cols else MatFq(self.q, Z.cols, 0, [[]] * Z.cols)
        if C is None:
            raise ValueError("image not contained in kernel")
        h, Qc = cokernel(C)
        Sc = solve(Qc, MatFq.identity(self.q, h)) if h else MatFq(self.q, Z.cols, 0, [[]] * Z.cols)
        return Z, Qc, Sc

    def homology_dims(self, o):
        if not o.dims:
            return {}
        out = {}
        for k in o.degrees():
            Z, Qc, _ = self.homology_data(o, k)
            if Qc.rows:
                out[k] = Qc.rows
        return out

    def is_ho_zero(self, o):
        return not self.homology_dims(o)

    def is_weq(self, m):
        hs, ht = self.homology_dims(m.src), self.homology_dims(m.tgt)
        if hs != ht:
            return False
        for k in hs:
            Zs, Qs, Ss = self.homology_data(m.src, k)
            Zt, Qt, _ = self.homology_data(m.tgt, k)
            img = m.mat(k) @ Zs
            Fk = solve(Zt, img)
            if Fk is None:
                return False
            M = (Qt @ Fk) @ Ss
            if not is_invertible(M):
                return False
        return True

    def is_iso(self, m):
        if m.src.dims != m.tgt.dims or m.src.lo != m.tgt.lo:
            return False
        return all(is_invertible(m.mat(k)) for k in m.src.degrees() if m.src.dim(k))

    def is_mono(self, m):
        return all(rank(m.mat(k)) == m.src.dim(k)
                   for k in m.src.degrees() if m.src.dim(k))

    # --- colimits -----------------------------------------------------------
    def colimit(self, shape, obj_assign, mor_assign):
        order = list(shape.objects)
        lo = min([o.lo for o in obj_assign.values() if o.dims], default=0)
        hi = max([o.hi for o in obj_assign.values() if o.dims], default=-1)
        if hi >= 0 and (lo < self.lo or hi > self.hi):
            raise ValueError("colimit input exceeds the degree window")
        per_deg = {}
        vect = VectIso(self.q)
        for k in range(lo, hi + 1):
            objs = {o: obj_assign[o].dim(k) for o in order}
            mors = {}
            for m, (s, t) in shape.morphisms.items():
                if shape.is_identity(m):
                    mors[m] = MatFq.identity(self.q, objs[s])
                else:
                    mors[m] = mor_assign[m].mat(k)
            per_deg[k] = vect.colimit(shape, objs, mors)
        dims = {k: per_deg[k].obj for k in per_deg}
        diffs = {}
        for k in per_deg:
            if k - 1 not in per_deg or not dims[k] or not dims[k - 1]:
                continue
            # induced differential: dbar . P_k = P_{k-1} . blockdiag(d_k)
            Pk, Sk = per_deg[k].data["P"], per_deg[k].data["S"]
            offs = per_deg[k].data["offsets"]
            total = per_deg[k].data["total"]
            D = [[0] * total for _ in range(per_deg[k - 1].data["total"])]
            offs1 = per_deg[k - 1].data["offsets"]
            for o in order:
                d = obj_assign[o].diff(k)
                for i in range(d.rows):
                    for j in range(d.cols):
                        D[offs1[o] + i][offs[o] + j] = d.entries[i][j]
            Dm = MatFq(self.q, per_deg[k - 1].data["total"], total, D)
            diffs[k] = (per_deg[k - 1].data["P"] @ Dm) @ Sk
        obj = ChainObj(self.q, lo, [dims.get(k, 0) for k in range(lo, hi + 1)], diffs)
        cocone = {}
        for o in order:
            mats = {k: per_deg[k].cocone[o] for k in per_deg
                    if obj_assign[o].dim(k) and dims[k]}
            cocone[o] = ChainMor(obj_assign[o], obj, mats)
        return ColimitResult(obj, cocone, {"per_deg": per_deg, "order": order})

    def mediating(self, colim, cocone, tgt):
        vect = VectIso(self.q)
        mats = {}
        for k, cdeg in colim.data["per_deg"].items():
            if not cdeg.obj or not tgt.dim(k):
                continue
            deg_cocone = {o: cocone[o].mat(k) for o in colim.data["order"]}
            mats[k] = vect.mediating(cdeg, deg_cocone, tgt.dim(k))
        med = ChainMor(colim.obj, tgt, mats)
        for o in colim.data["order"]:
            if self.compose(colim.cocone[o], med) != cocone[o]:
                raise ValueError("cocone does not commute with the diagram")
        return med

    # --- homotopy pushouts ---------------------------------------------------
    def is_zero_composite(self, f, g):
        if f.tgt != g.src:
            raise ValueError("not composable")
        for k, mf in f.mats.items():
            mg = g.mats.get(k)
            if mg is not None and not (mg @ mf).is_zero():
                return False
        return True

    def double_mapping_cylinder(self, f, g):
        """The homotopy pushout  B + C + A[1]  of  B <-f- A -g-> C,
        with its two cocone legs (memoized: enumerations revisit spans)."""
        hit = self._cylinders.get((f, g))
        if hit is None:
            hit = self._double_mapping_cylinder(f, g)
            self._cylinders[(f, g)] = hit
        return hit

    def _double_mapping_cylinder(self, f, g):
        A, B, C = f.src, f.tgt, g.tgt
        lo = min([o.lo for o in (A, B, C) if o.dims], default=0)
        hi = max([o.hi for o in (A, B, C) if o.dims] + [A.hi + 1 if A.dims else -1],
                 default=-1)
        dims, diffs = [], {}
        for k in range(lo, hi + 1):
            dims.append(B.dim(k) + C.dim(k) + A.dim(k - 1))
        for k in range(lo + 1, hi + 1):
            rows = B.dim(k - 1) + C.dim(k - 1) + A.dim(k - 2)
            cols = B.dim(k) + C.dim(k) + A.dim(k - 1)
            if not rows or not cols:
                continue
            M = [[0] * cols for _ in range(rows)]

            def put(blk, r0, c0):
                for i in range(blk.rows):
                    for j in range(blk.cols):
                        M[r0 + i][c0 + j] = blk.entries[i][j]

            put(B.diff(k), 0, 0)
            put(C.diff(k), B.dim(k - 1), B.dim(k))
            put(f.mat(k - 1), 0, B.dim(k) + C.dim(k))
            neg_g = MatFq(self.q, C.dim(k - 1), A.dim(k - 1),
                          [[(-x) % self.q for x in row]
                           for row in g.mat(k - 1).entries])
            put(neg_g, B.dim(k - 1), B.dim(k) + C.dim(k))
            neg_d = MatFq(self.q, A.dim(k - 2), A.dim(k - 1),
                          [[(-x) % self.q for x in row]
                           for row in A.diff(k - 1).entries])
            put(neg_d, B.dim(k - 1) + C.dim(k - 1), B.dim(k) + C.dim(k))
            diffs[k] = MatFq(self.q, rows, cols, M)
        P = ChainObj(self.q, lo, dims, diffs)

        def leg(X, offset):
            mats = {}
            for k in X.degrees():
                if not X.dim(k) or not P.dim(k):
                    continue
                M = [[0] * X.dim(k) for _ in range(P.dim(k))]
                off = 0 if offset == "B" else B.dim(k)
                for i in range(X.dim(k)):
                    M[off + i][i] = 1
                mats[k] = MatFq(self.q, P.dim(k), X.dim(k), M)
            return ChainMor(X, P, mats)

        return P, leg(B, "B"), leg(C, "C")

    def _ho_cocartesian_span(self, f, g, u, v, corner):
        P, iB, iC = self.double_mapping_cylinder(f, g)
        A, B, C = f.src, f.tgt, g.tgt
        mats = {}
        for k in P.degrees():
            if not P.dim(k) or not corner.dim(k):
                continue
            cols = []
            U, V = u.mat(k), v.mat(k)
            M = [[0] * P.dim(k) for _ in range(corner.dim(k))]
            for i in range(corner.dim(k)):
                for j in range(B.dim(k)):
                    M[i][j] = U.entries[i][j]
                for j in range(C.dim(k)):
                    M[i][B.dim(k) + j] = V.entries[i][j]
            mats[k] = MatFq(self.q, corner.dim(k), P.dim(k), M)
        w = ChainMor(P, corner, mats)
        return self.is_weq(w)

    def mapping_cylinder(self, m):
        """Factor m: A -> B as a degreewise-split mono followed by a
        quasi-isomorphism through the cylinder A + A[1] + B."""
        A, B = m.src, m.tgt
        lo = min([o.lo for o in (A, B) if o.dims], default=0)
        hi = max([o.hi for o in (A, B) if o.dims] + [A.hi + 1 if A.dims else -1],
                 default=-1)
        dims, diffs = [], {}
        for k in range(lo, hi + 1):
            dims.append(A.dim(k) + A.dim(k - 1) + B.dim(k))
        for k in range(lo + 1, hi + 1):
            rows = A.dim(k - 1) + A.dim(k - 2) + B.dim(k - 1)
            cols = A.dim(k) + A.dim(k - 1) + B.dim(k)
            if not rows or not cols:
                continue
            M = [[0] * cols for _ in range(rows)]

            def put(blk, r0, c0, sign=1):
                for i in range(blk.rows):
                    for j in range(blk.cols):
                        M[r0 + i][c0 + j] = (sign * blk.entries[i][j]) % self.q

            put(A.diff(k), 0, 0)
            put(MatFq.identity(self.q, A.dim(k - 1)), 0, A.dim(k), -1)
            put(A.diff(k - 1), A.dim(k - 1), A.dim(k), -1)
            put(B.diff(k), A.dim(k - 1) + A.dim(k - 2), A.dim(k) + A.dim(k - 1))
            put(m.mat(k - 1), A.dim(k - 1) + A.dim(k - 2), A.dim(k))
            diffs[k] = MatFq(self.q, rows, cols, M)
        Cyl = ChainObj(self.q, lo, dims, diffs)
        inc_mats, proj_mats = {}, {}
        for k in Cyl.degrees():
            if A.dim(k) and Cyl.dim(k):
                M = [[0] * A.dim(k) for _ in range(Cyl.dim(k))]
                for i in range(A.dim(k)):
                    M[i][i] = 1
                inc_mats[k] = MatFq(self.q, Cyl.dim(k), A.dim(k), M)
            if Cyl.dim(k) and B.dim(k):
                M = [[0] * Cyl.dim(k) for _ in range(B.dim(k))]
                mm = m.mat(k)
                for i in range(B.dim(k)):
                    for j in range(A.dim(k)):
                        M[i][j] = mm.entries[i][j]
                    for j in range(B.dim(k)):
                        M[i][A.dim(k) + A.dim(k - 1) + j] = 1 if i == j else 0
                proj_mats[k] = MatFq(self.q, B.dim(k), Cyl.dim(k), M)
        inc = ChainMor(A, Cyl, inc_mats)
        proj = ChainMor(Cyl, B, proj_mats)
        return Cyl, inc, proj

    # --- enumeration ----------------------------------------------------------
    def enumerate_objects(self, bound):
        out = []
        width = self.hi - self.lo + 1
        for dims in itertools.product(range(bound + 1), repeat=width):
            if sum(dims) > bound:
                continue
            diff_choices = []
            degs = []
            for k in range(self.lo + 1, self.hi + 1):
                r, c = dims[k - 1 - self.lo], dims[k - self.lo]
                degs.append(k)
                diff_choices.append(all_matrices(self.q, r, c))
            for combo in itertools.product(*diff_choices):
                try:
                    out.append(ChainObj(self.q, self.lo, dims, dict(zip(degs, combo))))
                except ValueError:
                    continue
        seen, uniq = set(), []
        for o in out:
            if o not in seen:
                seen.add(o)
                uniq.append(o)
        return uniq

    def enumerate_morphisms(self, a, b):
        degs = [k for k in range(min(a.lo, b.lo), max(a.hi, b.hi) + 1)
                if a.dim(k) and b.dim(k)]
        out = []
        for combo in itertools.product(*[all_matrices(self.q, b.dim(k), a.dim(k))
                                         for k in degs]):
            try:
                out.append(ChainMor(a, b, dict(zip(degs, combo))))
            except ValueError:
                continue
        return out

    def obj_json(self, o):
        return {"lo": o.lo, "dims": list(o.dims),
                "diffs": {str(k): m.to_json() for k, m in sorted(o.diffs.items())}}

    def mor_json(self, m):
        return {"src": self.obj_json(m.src), "tgt": self.obj_json(m.tgt),
                "mats": {str(k): v.to_json() for k, v in sorted(m.mats.items())}}


def all_matrices(q, rows, cols):
    if rows * cols == 0:
        return [MatFq(q, rows, cols, [[0] * cols] * rows)]
    return [MatFq(q, rows, cols,
                  [vals[i * cols:(i + 1) * cols] for i in range(rows)])
            for vals in itertools.product(range(q), repeat=rows * cols)]


# ---------------------------------------------------------------------------
# Waldhausen structures

COFIBRATION_CLASSES = ("monos", "all-maps", "split-monos")


class WaldhausenStructure:
    """A homotopical base with a chosen class of cofibrations."""

    def __init__(self, base, cofibrations):
        if cofibrations not in COFIBRATION_CLASSES:
            raise ValueError(f"unknown cofibration class {cofibrations!r}")
        self.base = base
        self.cofibrations = cofibrations

    def is_cofibration(self, m):
        if self.cofibrations == "all-maps":
            return True
        return self.base.is_mono(m)   # over a field every mono is split

    def is_weq(self, m):
        return self.base.is_weq(m)

    def factorization(self, m):
        """A cofibration-then-weak-equivalence factorization of m, or None."""
        if self.cofibrations == "all-maps":
            return m, self.base.identity(self.base.mor_tgt(m))
        if isinstance(self.base, ChainQis):
            cyl, inc, proj = self.base.mapping_cylinder(m)
            return inc, proj
        # for W = isomorphisms a mono-then-iso factorization exists iff m
        # is already a cofibration
        if self.is_cofibration(m):
            return m, self.base.identity(self.base.mor_tgt(m))
        return None

    def is_derivable_on(self, morphisms):
        """Spot-check derivability: every sampled morphism factors."""
        return all(self.factorization(m) is not None for m in morphisms)


def make_base(tag, q=2, lo=0, hi=1):
    if tag == "vect-iso":
        return VectIso(q)
    if tag == "ptset-iso":
        return PtSetIso()
    if tag == "chain-qis":
        return ChainQis(q, lo, hi)
    if tag == "trivial":
        return VectIso(q)   # used with enumeration bound 0
    raise ValueError(f"unknown base tag {tag!r}")
