"""Exact linear algebra over prime fields F_q and over the integers.

Matrices are tuples of row tuples.  An r x c matrix represents a linear
map F^c -> F^r acting on column vectors.  Everything is plain integer
arithmetic; matrices in this toolkit stay tiny.
"""

from __future__ import annotations


def _is_prime(q):
    if q < 2:
        return False
    d = 2
    while d * d <= q:
        if q % d == 0:
            return False
        d += 1
    return True


class MatFq:
    """A matrix over the prime field F_q."""

    __slots__ = ("q", "rows", "cols", "entries")

    def __init__(self, q, rows, cols, entries):
        if not _is_prime(q):
            raise ValueError(f"{q} is not prime")
        self.q = q
        self.rows = rows
        self.cols = cols
        self.entries = tuple(tuple(x % q for x in row) for row in entries)
        if len(self.entries) != rows or any(len(r) != cols for r in self.entries):
            raise ValueError("entry shape mismatch")

    @classmethod
    def zero(cls, q, rows, cols):
        return cls(q, rows, cols, [[0] * cols for _ in range(rows)])

    @classmethod
    def identity(cls, q, n):
        return cls(q, n, n, [[1 if i == j else 0 for j in range(n)] for i in range(n)])

    def __eq__(self, other):
        return (isinstance(other, MatFq) and self.q == other.q
                and self.rows == other.rows and self.cols == other.cols
                and self.entries == other.entries)

    def __hash__(self):
        return hash((self.q, self.rows, self.cols, self.entries))

    def __repr__(self):
        return f"MatFq(q={self.q}, {self.rows}x{self.cols}, {list(map(list, self.entries))})"

    def __matmul__(self, other):
        """self . other (apply other first)."""
        if self.cols != other.rows or self.q != other.q:
            raise ValueError("shape mismatch")
        q = self.q
        ent = [[sum(self.entries[i][k] * other.entries[k][j] for k in range(self.cols)) % q
                for j in range(other.cols)] for i in range(self.rows)]
        return MatFq(q, self.rows, other.cols, ent)

    def __add__(self, other):
        if (self.rows, self.cols, self.q) != (other.rows, other.cols, other.q):
            raise ValueError("shape mismatch")
        return MatFq(self.q, self.rows, self.cols,
                     [[a + b for a, b in zip(r1, r2)]
                      for r1, r2 in zip(self.entries, other.entries)])

    def __neg__(self):
        return MatFq(self.q, self.rows, self.cols,
                     [[-a for a in r] for r in self.entries])

    def transpose(self):
        return MatFq(self.q, self.cols, self.rows,
                     [[self.entries[i][j] for i in range(self.rows)]
                      for j in range(self.cols)])

    def is_zero(self):
        return all(all(x == 0 for x in r) for r in self.entries)

    def column(self, j):
        return tuple(self.entries[i][j] for i in range(self.rows))

    def to_json(self):
        return {"q": self.q, "rows": self.rows, "cols": self.cols,
                "entries": [list(r) for r in self.entries]}


def hstack(mats, q, rows):
    cols = sum(m.cols for m in mats)
    ent = [[] for _ in range(rows)]
    for m in mats:
        assert m.rows == rows
        for i in range(rows):
            ent[i].extend(m.entries[i])
    return MatFq(q, rows, cols, ent)


def _rref(entries, rows, cols, q):
    """Row-reduce a mutable list of rows; returns (rref rows, pivot cols)."""
    A = [list(r) for r in entries]
    pivots = []
    r = 0
    for c in range(cols):
        pr = None
        for i in range(r, rows):
            if A[i][c] % q:
                pr = i
                break
        if pr is None:
            continue
        A[r], A[pr] = A[pr], A[r]
        inv = pow(A[r][c], q - 2, q) if q > 2 else A[r][c]
        A[r] = [(x * inv) % q for x in A[r]]
        for i in range(rows):
            if i != r and A[i][c] % q:
                f = A[i][c]
                A[i] = [(x - f * y) % q for x, y in zip(A[i], A[r])]
        pivots.append(c)
        r += 1
        if r == rows:
            break
    return A, pivots


def rank(M):
    _, pivots = _rref(M.entries, M.rows, M.cols, M.q)
    return len(pivots)


def kernel_basis(M):
    """A matrix whose columns span ker(M)."""
    A, pivots = _rref(M.entries, M.rows, M.cols, M.q)
    free = [c for c in range(M.cols) if c not in pivots]
    cols = []
    for fc in free:
        v = [0] * M.cols
        v[fc] = 1
        for r, pc in enumerate(pivots):
            v[pc] = (-A[r][fc]) % M.q
        cols.append(v)
    return MatFq(M.q, M.cols, len(cols),
                 [[cols[j][i] for j in range(len(cols))] for i in range(M.cols)])


def cokernel(M):
    """(dimension, projection P) with P surjective and ker(P) = colspan(M).

    P is a (dim x rows) matrix; P @ M = 0 and P has full row rank.
    """
    # row space of M^T = column space of M
    T = M.transpose()
    A, pivots = _rref(T.entries, T.rows, T.cols, M.q)
    basis = A[:len(pivots)]          # rref basis of colspan(M), as row vectors
    free = [c for c in range(M.rows) if c not in pivots]
    q = M.q
    proj_rows = []
    for fc in free:
        # functional reading off coordinate fc after eliminating pivot coords
        row = [0] * M.rows
        row[fc] = 1
        for r, pc in enumerate(pivots):
            row[pc] = (-basis[r][fc]) % q
        proj_rows.append(row)
    return len(free), MatFq(q, len(free), M.rows, proj_rows)


def solve(M, B):
    """Solve M @ X = B for X (any solution), or None if inconsistent."""
    if M.rows != B.rows or M.q != B.q:
        raise ValueError("shape mismatch")
    q = M.q
    aug = [list(M.entries[i]) + list(B.entries[i]) for i in range(M.rows)]
    A, pivots = _rref(aug, M.rows, M.cols + B.cols, q)
    for r in range(len(pivots)):
        if pivots[r] >= M.cols:
            return None
    X = [[0] * B.cols for _ in range(M.cols)]
    for r, pc in enumerate(pivots):
        for j in range(B.cols):
            X[pc][j] = A[r][M.cols + j]
    return MatFq(q, M.cols, B.cols, X)


def is_invertible(M):
    return M.rows == M.cols and rank(M) == M.rows


def inverse(M):
    if not is_invertible(M):
        raise ValueError("matrix is not invertible")
    return solve(M, MatFq.identity(M.q, M.rows))


class MatZ:
    """An integer matrix."""

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, rows, cols, entries):
        self.rows = rows
        self.cols = cols
        self.entries = tuple(tuple(int(x) for x in row) for row in entries)
        if len(self.entries) != rows or any(len(r) != cols for r in self.entries):
            raise ValueError("entry shape mismatch")

    def __eq__(self, other):
        return (isinstance(other, MatZ) and self.entries == other.entries
                and self.rows == other.rows and self.cols == other.cols)

    def __hash__(self):
        return hash((self.rows, self.cols, self.entries))

    def __repr__(self):
        return f"MatZ({self.rows}x{self.cols}, {list(map(list, self.entries))})"

    def to_json(self):
        return {"rows": self.rows, "cols": self.cols,
                "entries": [list(r) for r in self.entries]}


def smith_normal_form(M):
    """Smith normal form of an integer matrix.

    Returns (invariant_factors, rank, coker_free_rank, U) where U is the
    unimodular row transform: U @ M @ V = diag(invariant_factors).  The
    cokernel of M is  Z/d_1 + ... + Z/d_r + Z^free,  and the class of a
    vector v is read off from U @ v.
    """
    A = [list(r) for r in M.entries]
    n, m = M.rows, M.cols
    U = [[1 if i == j else 0 for j in range(n)] for i in range(n)]

    def row_op(i, j, k):  # row_i -= k * row_j
        A[i] = [a - k * b for a, b in zip(A[i], A[j])]
        U[i] = [a - k * b for a, b in zip(U[i], U[j])]

    def col_op(i, j, k):  # col_i -= k * col_j
        for r in A:
            r[i] -= k * r[j]

    def swap_rows(i, j):
        A[i], A[j] = A[j], A[i]
        U[i], U[j] = U[j], U[i]

    def swap_cols(i, j):
        for r in A:
            r[i], r[j] = r[j], r[i]

    t = 0
    while t < n and t < m:
        # find a nonzero pivot
        piv = None
        for i in range(t, n):
            for j in range(t, m):
                if A[i][j]:
                    if piv is None or abs(A[i][j]) < abs(A[piv[0]][piv[1]]):
                        piv = (i, j)
        if piv is None:
            break
        swap_rows(t, piv[0])
        swap_cols(t, piv[1])
        while True:
            done = True
            for i in range(t + 1, n):
                if A[i][t]:
                    k = A[i][t] // A[t][t]
                    row_op(i, t, k)
                    if A[i][t]:
                        swap_rows(t, i)
                        done = False
            for j in range(t + 1, m):
                if A[t][j]:
                    k = A[t][j] // A[t][t]
                    col_op(j, t, k)
                    if A[t][j]:
                        swap_cols(t, j)
                        done = False
            if done:
                break
        # divisibility fix-up: pivot must divide all remaining entries
        bad = None
        for i in range(t + 1, n):
            for j in range(t + 1, m):
                if A[i][j] % A[t][t]:
                    bad = i
                    break
            if bad is not None:
                break
        if bad is not None:
            row_op(t, bad, -1)   # add bad row to pivot row
            continue
        if A[t][t] < 0:
            A[t] = [-x for x in A[t]]
            U[t] = [-x for x in U[t]]
        t += 1
    factors = [A[i][i] for i in range(t)]
    return factors, t, n - t, MatZ(n, n, U)
