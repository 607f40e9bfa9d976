"""Truncated simplicial and bisimplicial sets with exhaustively checkable
identities, nerves of finite categories, diagonals, simplicial maps and
homotopies, edge-path group presentations, and integral homology.

Simplices are arbitrary hashable ids; all operators are stored as finite
tables, so every simplicial identity can be checked by direct lookup.
"""

from __future__ import annotations

import json

from .linalg import MatZ, smith_normal_form


class TruncSSet:
    """An N-truncated simplicial set.

    levels[k]   -- list of k-simplices (0 <= k <= N)
    faces[(k,i)]        -- dict: level-k simplex -> level-(k-1) simplex
    degeneracies[(k,i)] -- dict: level-k simplex -> level-(k+1) simplex
    degenerate  -- set of (k, simplex) pairs flagged degenerate
    """

    def __init__(self, N, levels, faces, degeneracies, degenerate=None):
        self.N = N
        self.levels = {k: list(levels[k]) for k in range(N + 1)}
        self.faces = {key: dict(val) for key, val in faces.items()}
        self.degeneracies = {key: dict(val) for key, val in degeneracies.items()}
        self.degenerate = set(degenerate or ())
        for (k, i), table in self.degeneracies.items():
            for x, y in table.items():
                self.degenerate.add((k + 1, y))

    def face(self, k, i, x):
        return self.faces[(k, i)][x]

    def degeneracy(self, k, i, x):
        return self.degeneracies[(k, i)][x]

    def is_degenerate(self, k, x):
        return (k, x) in self.degenerate

    def nondegenerate(self, k):
        return [x for x in self.levels[k] if not self.is_degenerate(k, x)]

    def to_json(self):
        return {
            "N": self.N,
            "levels": [[{"id": _sid(x), "degenerate": self.is_degenerate(k, x)}
                        for x in self.levels[k]] for k in range(self.N + 1)],
            "faces": [[k, i, _sid(x), _sid(y)]
                      for (k, i), t in sorted(self.faces.items())
                      for x, y in sorted(t.items(), key=lambda kv: _sid(kv[0]))],
            "degeneracies": [[k, i, _sid(x), _sid(y)]
                             for (k, i), t in sorted(self.degeneracies.items())
                             for x, y in sorted(t.items(),
                                                key=lambda kv: _sid(kv[0]))],
        }


def _sid(x):
    return x if isinstance(x, str) else json.dumps(_plain(x), sort_keys=True)


def _plain(x):
    if isinstance(x, tuple):
        return [_plain(v) for v in x]
    if hasattr(x, "to_json"):
        return x.to_json()
    return x


class TruncBiSSet:
    """An (N, M)-truncated bisimplicial set.

    levels[(n,m)]; h_faces[(n,m,i)] go to (n-1,m); v_faces[(n,m,i)] to
    (n,m-1); similarly h_degs / v_degs.
    """

    def __init__(self, N, M, levels, h_faces, v_faces, h_degs, v_degs):
        self.N = N
        self.M = M
        self.levels = {key: list(val) for key, val in levels.items()}
        self.h_faces = {key: dict(val) for key, val in h_faces.items()}
        self.v_faces = {key: dict(val) for key, val in v_faces.items()}
        self.h_degs = {key: dict(val) for key, val in h_degs.items()}
        self.v_degs = {key: dict(val) for key, val in v_degs.items()}

    def to_json(self):
        return {
            "N": self.N, "M": self.M,
            "levels": {f"{n},{m}": [_sid(x) for x in v]
                       for (n, m), v in sorted(self.levels.items())},
        }


# ---------------------------------------------------------------------------
# verification

def _check_tables(S, out):
    for (k, i), table in S.faces.items():
        if not (1 <= k <= S.N and 0 <= i <= k):
            out.append(f"face index ({k},{i}) out of range")
            continue
        for x in S.levels[k]:
            if x not in table:
                out.append(f"face d_{i} undefined on a level-{k} simplex")
            elif table[x] not in S.levels[k - 1]:
                out.append(f"face d_{i} leaves level {k - 1}")
    for (k, i), table in S.degeneracies.items():
        if not (0 <= k < S.N and 0 <= i <= k):
            out.append(f"degeneracy index ({k},{i}) out of range")
            continue
        for x in S.levels[k]:
            if x not in table:
                out.append(f"degeneracy s_{i} undefined on a level-{k} simplex")
            elif table[x] not in S.levels[k + 1]:
                out.append(f"degeneracy s_{i} leaves level {k + 1}")


def verify(S):
    """Diagnostics for all defined (bi)simplicial identities; empty iff OK."""
    if isinstance(S, TruncBiSSet):
        return _verify_bis(S)
    out = []
    _check_tables(S, out)
    if out:
        return out
    for k in range(2, S.N + 1):
        for j in range(k + 1):
            for i in range(j):
                for x in S.levels[k]:
                    if S.face(k - 1, i, S.face(k, j, x)) != \
                            S.face(k - 1, j - 1, S.face(k, i, x)):
                        out.append(f"d_{i} d_{j} != d_{j-1} d_{i} at level {k}")
    for k in range(S.N - 1):
        for j in range(k + 1):
            for i in range(j + 1):
                for x in S.levels[k]:
                    if S.degeneracy(k + 1, i, S.degeneracy(k, j, x)) != \
                            S.degeneracy(k + 1, j + 1, S.degeneracy(k, i, x)):
                        out.append(f"s_{i} s_{j} != s_{j+1} s_{i} at level {k}")
    for k in range(S.N):
        for j in range(k + 1):
            for i in range(k + 2):
                for x in S.levels[k]:
                    y = S.degeneracy(k, j, x)
                    got = S.face(k + 1, i, y)
                    if i == j or i == j + 1:
                        want = x
                    elif i < j:
                        want = S.degeneracy(k - 1, j - 1, S.face(k, i, x))
                    else:
                        want = S.degeneracy(k - 1, j, S.face(k, i - 1, x))
                    if got != want:
                        out.append(f"d_{i} s_{j} identity fails at level {k}")
    return sorted(set(out))


def _row(B, m):
    """The m-th row of a bisimplicial set as a TruncSSet (n-direction)."""
    levels = {n: B.levels[(n, m)] for n in range(B.N + 1)}
    faces = {(n, i): B.h_faces[(n, m, i)]
             for (n, mm, i) in B.h_faces if mm == m}
    degs = {(n, i): B.h_degs[(n, m, i)]
            for (n, mm, i) in B.h_degs if mm == m}
    return TruncSSet(B.N, levels, faces, degs)


def _col(B, n):
    levels = {m: B.levels[(n, m)] for m in range(B.M + 1)}
    faces = {(m, i): B.v_faces[(n, m, i)]
             for (nn, m, i) in B.v_faces if nn == n}
    degs = {(m, i): B.v_degs[(n, m, i)]
            for (nn, m, i) in B.v_degs if nn == n}
    return TruncSSet(B.M, levels, faces, degs)


def _verify_bis(B):
    out = []
    for m in range(B.M + 1):
        for msg in verify(_row(B, m)):
            out.append(f"row {m}: {msg}")
    for n in range(B.N + 1):
        for msg in verify(_col(B, n)):
            out.append(f"column {n}: {msg}")
    # horizontal and vertical operators commute
    for (n, m), simplices in B.levels.items():
        for x in simplices:
            for i in range(n + 1):
                if n == 0:
                    break
                for j in range(m + 1):
                    if m == 0:
                        break
                    a = B.v_faces[(n - 1, m, j)][B.h_faces[(n, m, i)][x]]
                    b = B.h_faces[(n, m - 1, i)][B.v_faces[(n, m, j)][x]]
                    if a != b:
                        out.append(f"h/v faces do not commute at {(n, m)}")
            for i in range(n + 1):
                if n == B.N:
                    break
                for j in range(m + 1):
                    if m == B.M:
                        break
                    a = B.v_degs[(n + 1, m, j)][B.h_degs[(n, m, i)][x]]
                    b = B.h_degs[(n, m + 1, i)][B.v_degs[(n, m, j)][x]]
                    if a != b:
                        out.append(f"h/v degeneracies do not commute at {(n, m)}")
    return sorted(set(out))


# ---------------------------------------------------------------------------
# nerve and diagonal

def nerve(C, N):
    """The N-truncated nerve: k-simplices are composable k-chains."""
    levels = {0: [(o,) for o in C.objects]}
    for k in range(1, N + 1):
        chains = []
        if k == 1:
            chains = [(m,) for m in sorted(C.morphisms)]
        else:
            for prev in levels[k - 1]:
                last_tgt = C.tgt(prev[-1])
                for m in sorted(C.morphisms):
                    if C.src(m) == last_tgt:
                        chains.append(prev + (m,))
        levels[k] = chains
    faces, degs = {}, {}
    for k in range(1, N + 1):
        for i in range(k + 1):
            table = {}
            for x in levels[k]:
                if k == 1:
                    table[x] = (C.tgt(x[0]),) if i == 0 else (C.src(x[0]),)
                elif i == 0:
                    table[x] = x[1:]
                elif i == k:
                    table[x] = x[:-1]
                else:
                    merged = C.compose[(x[i - 1], x[i])]
                    table[x] = x[:i - 1] + (merged,) + x[i + 1:]
            faces[(k, i)] = table
    for k in range(N):
        for i in range(k + 1):
            table = {}
            for x in levels[k]:
                if k == 0:
                    table[x] = (C.identities[x[0]],)
                else:
                    obj = C.src(x[i]) if i < k else C.tgt(x[-1])
                    table[x] = x[:i] + (C.identities[obj],) + x[i:]
            degs[(k, i)] = table
    return TruncSSet(N, levels, faces, degs)


def circle():
    """The minimal 2-truncated circle: one vertex and one nondegenerate
    loop (pi_1 = Z, H_1 = Z)."""
    v, e = "v", "e"
    sv, s0e, s1e, ssv = "s0(v)", "s0(e)", "s1(e)", "s0s0(v)"
    levels = {0: [v], 1: [e, sv], 2: [s0e, s1e, ssv]}
    faces = {(1, 0): {e: v, sv: v}, (1, 1): {e: v, sv: v},
             (2, 0): {s0e: e, s1e: sv, ssv: sv},
             (2, 1): {s0e: e, s1e: e, ssv: sv},
             (2, 2): {s0e: sv, s1e: e, ssv: sv}}
    degs = {(0, 0): {v: sv}, (1, 0): {e: s0e, sv: ssv},
            (1, 1): {e: s1e, sv: ssv}}
    return TruncSSet(2, levels, faces, degs)


def diagonal(B):
    """diag of a bisimplicial set: level k = S_{k,k}, operators composed."""
    if B.N != B.M:
        raise ValueError("diagonal needs N = M")
    N = B.N
    levels = {k: B.levels[(k, k)] for k in range(N + 1)}
    faces, degs = {}, {}
    for k in range(1, N + 1):
        for i in range(k + 1):
            faces[(k, i)] = {x: B.v_faces[(k - 1, k, i)][B.h_faces[(k, k, i)][x]]
                             for x in levels[k]}
    for k in range(N):
        for i in range(k + 1):
            degs[(k, i)] = {x: B.v_degs[(k + 1, k, i)][B.h_degs[(k, k, i)][x]]
                            for x in levels[k]}
    return TruncSSet(N, levels, faces, degs)


# ---------------------------------------------------------------------------
# simplicial maps and homotopies

class SimplicialMap:
    """A levelwise map of truncated simplicial sets."""

    def __init__(self, src, tgt, tables):
        self.src = src
        self.tgt = tgt
        self.tables = {k: dict(t) for k, t in tables.items()}

    def at(self, k, x):
        return self.tables[k][x]


def verify_simplicial_map(f):
    out = []
    S, T = f.src, f.tgt
    for k in range(S.N + 1):
        for x in S.levels[k]:
            if x not in f.tables.get(k, {}):
                out.append(f"map undefined on a level-{k} simplex")
            elif f.tables[k][x] not in T.levels[k]:
                out.append(f"map leaves level {k}")
    if out:
        return out
    for (k, i) in S.faces:
        for x in S.levels[k]:
            if f.at(k - 1, S.face(k, i, x)) != T.face(k, i, f.at(k, x)):
                out.append(f"map does not commute with d_{i} at level {k}")
    for (k, i) in S.degeneracies:
        for x in S.levels[k]:
            if f.at(k + 1, S.degeneracy(k, i, x)) != \
                    T.degeneracy(k, i, f.at(k, x)):
                out.append(f"map does not commute with s_{i} at level {k}")
    return sorted(set(out))


def monotone_maps(k, n):
    """All monotone maps [k] -> [n], as value tuples."""
    out = []

    def rec(prefix, lo):
        if len(prefix) == k + 1:
            out.append(tuple(prefix))
            return
        for v in range(lo, n + 1):
            rec(prefix + [v], v)

    rec([], 0)
    return out


def _compose_monotone(sigma, tau):
    """sigma . tau for value tuples (tau applied first)."""
    return tuple(sigma[v] for v in tau)


def _delta(k, i):
    """The face map [k-1] -> [k] skipping i, as a value tuple."""
    return tuple(v if v < i else v + 1 for v in range(k))


def _sigma_op(k, i):
    """The degeneracy [k+1] -> [k] repeating i."""
    return tuple(v if v <= i else v - 1 for v in range(k + 2))


def homotopy_diagnostics(H, f, g):
    """H: dict (k, sigma) -> {x -> y} for sigma: [k] -> [1]; checks that H
    is a simplicial homotopy from f (sigma constant 0) to g (constant 1)."""
    X, Y = f.src, f.tgt
    out = []
    for k in range(X.N + 1):
        for sigma in monotone_maps(k, 1):
            table = H.get((k, sigma))
            if table is None:
                out.append(f"missing component at level {k}, {sigma}")
                continue
            zeros = (0,) * (k + 1)
            ones = (1,) * (k + 1)
            for x in X.levels[k]:
                if x not in table:
                    out.append(f"component {sigma} undefined at level {k}")
                    continue
                if sigma == zeros and table[x] != f.at(k, x):
                    out.append(f"0-end differs from f at level {k}")
                if sigma == ones and table[x] != g.at(k, x):
                    out.append(f"1-end differs from g at level {k}")
                for i in range(k + 1):
                    if k == 0:
                        break
                    want = H[(k - 1, _compose_monotone(sigma, _delta(k, i)))][
                        X.face(k, i, x)]
                    if Y.face(k, i, table[x]) != want:
                        out.append(f"homotopy breaks d_{i} at level {k}")
                for i in range(k + 1):
                    if k == X.N:
                        break
                    want = H[(k + 1, _compose_monotone(sigma, _sigma_op(k, i)))][
                        X.degeneracy(k, i, x)]
                    if Y.degeneracy(k, i, table[x]) != want:
                        out.append(f"homotopy breaks s_{i} at level {k}")
    return sorted(set(out))


def check_simplicial_homotopy(H, f, g):
    return not homotopy_diagnostics(H, f, g)


def homotopy_from_map(f):
    """The constant homotopy s0(f) from f to f."""
    X = f.src
    H = {}
    for k in range(X.N + 1):
        for sigma in monotone_maps(k, 1):
            H[(k, sigma)] = {x: f.at(k, x) for x in X.levels[k]}
    return H


# ---------------------------------------------------------------------------
# edge-path group

class GroupPresentation:
    """Generators and relator words; a word is a list of (generator, +-1)."""

    def __init__(self, generators, relators):
        self.generators = list(generators)
        self.relators = [list(w) for w in relators]
        gens = set(self.generators)
        for w in self.relators:
            for g, e in w:
                if g not in gens or e not in (1, -1):
                    raise ValueError("relator uses an undeclared generator")

    def to_json(self):
        return {"generators": [_sid(g) for g in self.generators],
                "relators": [[[_sid(g), e] for g, e in w]
                             for w in self.relators]}


class AbelianInvariants:
    """Invariant factors, free rank, and a generator certificate mapping
    each generator to (torsion residues, free coordinates)."""

    def __init__(self, factors, free_rank, certificate):
        self.factors = list(factors)
        self.free_rank = free_rank
        self.certificate = dict(certificate)
        for a, b in zip(self.factors, self.factors[1:]):
            assert b % a == 0

    def is_trivial(self):
        return not self.factors and self.free_rank == 0

    def __eq__(self, other):
        return (isinstance(other, AbelianInvariants)
                and self.factors == other.factors
                and self.free_rank == other.free_rank)

    def __repr__(self):
        return f"AbelianInvariants({self.factors}, Z^{self.free_rank})"

    def to_json(self):
        return {"invariant_factors": self.factors, "free_rank": self.free_rank,
                "certificate": {_sid(g): {"torsion": list(t), "free": list(f)}
                                for g, (t, f) in sorted(
                                    self.certificate.items(),
                                    key=lambda kv: _sid(kv[0]))}}


def edge_path(S, basepoint):
    """Edge-path presentation of pi_1 of the 2-truncated S at a basepoint.

    Restricts to the basepoint's path component; a deterministic BFS
    spanning tree (lexicographic tie-break on simplex ids) and all
    degenerate edges are trivialized; each 2-simplex sigma contributes
    the relation d_1(sigma) = d_2(sigma) . d_0(sigma).
    """
    if S.N < 2:
        raise ValueError("edge_path needs a 2-truncated simplicial set")
    if basepoint not in S.levels[0]:
        raise ValueError("basepoint is not a vertex")
    # undirected adjacency from 1-simplices
    adj = {v: [] for v in S.levels[0]}
    for e in S.levels[1]:
        a, b = S.face(1, 1, e), S.face(1, 0, e)  # d1 = source, d0 = target
        adj[a].append((_sid(e), e, b))
        adj[b].append((_sid(e), e, a))
    for v in adj:
        adj[v].sort(key=lambda t: (t[0], _sid(t[2])))
    component = {basepoint}
    tree_edges = set()
    queue = [basepoint]
    while queue:
        v = queue.pop(0)
        for _, e, w in adj[v]:
            if w not in component:
                component.add(w)
                tree_edges.add(e)
                queue.append(w)
    gens = [e for e in S.nondegenerate(1)
            if S.face(1, 0, e) in component and S.face(1, 1, e) in component]
    genset = set(gens)

    def letter(e):
        """A 1-simplex as a word (empty when trivialized)."""
        if S.is_degenerate(1, e) or e not in genset:
            return []
        return [(e, 1)]

    relators = [[(e, 1)] for e in gens if e in tree_edges]
    for t in S.levels[2]:
        verts = {S.face(1, i, S.face(2, j, t))
                 for j in range(3) for i in range(2)}
        if not verts <= component:
            continue
        w = (letter(S.face(2, 2, t)) + letter(S.face(2, 0, t))
             + [(g, -e) for g, e in reversed(letter(S.face(2, 1, t)))])
        if w:
            relators.append(w)
    return GroupPresentation(gens, relators)


def abelianize(P):
    """Invariant factors of the abelianization, with a certificate sending
    each generator to its class in the torsion + free decomposition."""
    g = len(P.generators)
    index = {gen: i for i, gen in enumerate(P.generators)}
    cols = []
    for w in P.relators:
        col = [0] * g
        for gen, e in w:
            col[index[gen]] += e
        cols.append(col)
    M = MatZ(g, max(len(cols), 0),
             [[c[i] for c in cols] for i in range(g)] if g else [])
    factors, rank, free_rank, U = smith_normal_form(M)
    # rows of U beyond the pivot block read off free coordinates; normalize
    # each free row's sign by its first nonzero entry
    urows = [list(r) for r in U.entries]
    for r in range(rank, g):
        lead = next((x for x in urows[r] if x), 0)
        if lead < 0:
            urows[r] = [-x for x in urows[r]]
    torsion_idx = [i for i in range(rank) if factors[i] != 1]
    cert = {}
    for gen, i in index.items():
        tors = tuple(urows[r][i] % factors[r] for r in torsion_idx)
        free = tuple(urows[r][i] for r in range(rank, g))
        cert[gen] = (tors, free)
    return AbelianInvariants([factors[i] for i in torsion_idx], free_rank, cert)


# ---------------------------------------------------------------------------
# homology

def _boundary_matrix(S, k):
    """Normalized boundary C_k -> C_{k-1} over Z (degenerate = 0)."""
    rows = S.nondegenerate(k - 1)
    cols = S.nondegenerate(k)
    rindex = {x: i for i, x in enumerate(rows)}
    ent = [[0] * len(cols) for _ in rows]
    for j, x in enumerate(cols):
        for i in range(k + 1):
            y = S.face(k, i, x)
            if y in rindex:
                ent[rindex[y]][j] += (-1) ** i
    return MatZ(len(rows), len(cols), ent)


def homology(S, k):
    """H_k of the truncation via normalized chains and integer SNF."""
    if k + 1 > S.N or k < 0:
        raise ValueError("homology degree out of range for this truncation")
    nk = len(S.nondegenerate(k))
    if k == 0:
        rank_dk = 0
    else:
        _, rank_dk, _, _ = smith_normal_form(_boundary_matrix(S, k))
    factors, rank_dk1, _, _ = smith_normal_form(_boundary_matrix(S, k + 1))
    torsion = [d for d in factors if d > 1]
    free = nk - rank_dk - rank_dk1
    return AbelianInvariants(torsion, free, {})
