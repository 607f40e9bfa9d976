"""Exact linear algebra over F_q and integer Smith normal form."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from kderiv.linalg import (MatFq, MatZ, cokernel, hstack, inverse,
                           is_invertible, kernel_basis, rank,
                           smith_normal_form, solve)


def M2(rows):
    return MatFq(2, len(rows), len(rows[0]) if rows else 0, rows)


def test_matfq_arithmetic():
    a = M2([[1, 0], [1, 1]])
    b = M2([[0, 1], [1, 0]])
    assert (a @ b).entries == ((0, 1), (1, 1))
    assert (a + a).is_zero()
    assert (-a) == a  # characteristic 2
    assert a.transpose().entries == ((1, 1), (0, 1))
    assert MatFq.identity(2, 3) @ MatFq.identity(2, 3) == MatFq.identity(2, 3)


def test_matfq_rejects_composite_modulus():
    with pytest.raises(ValueError):
        MatFq(4, 1, 1, [[1]])


def test_rank_kernel_cokernel():
    m = MatFq(3, 2, 3, [[1, 2, 0], [2, 4, 0]])  # rank 1 over F_3
    assert rank(m) == 1
    K = kernel_basis(m)
    assert K.cols == 2
    assert (m @ K).is_zero()
    dim, P = cokernel(m)
    assert dim == 1
    assert (P @ m).is_zero()
    assert rank(P) == dim


def test_solve_and_inverse():
    m = MatFq(5, 2, 2, [[1, 2], [3, 4]])
    assert is_invertible(m)
    inv = inverse(m)
    assert m @ inv == MatFq.identity(5, 2)
    b = MatFq(5, 2, 1, [[1], [0]])
    x = solve(m, b)
    assert m @ x == b
    singular = MatFq(5, 2, 2, [[1, 2], [2, 4]])
    assert not is_invertible(singular)
    assert solve(singular, MatFq(5, 2, 1, [[0], [1]])) is None


def test_hstack():
    a = M2([[1], [0]])
    b = M2([[0, 1], [1, 1]])
    h = hstack([a, b], 2, 2)
    assert h.cols == 3
    assert h.entries == ((1, 0, 1), (0, 1, 1))


def test_smith_normal_form_known():
    m = MatZ(2, 2, [[2, 4], [6, 8]])
    factors, r, free, U = smith_normal_form(m)
    assert factors == [2, 4]
    assert r == 2 and free == 0
    m = MatZ(3, 2, [[1, 0], [0, 2], [0, 0]])
    factors, r, free, U = smith_normal_form(m)
    assert factors == [1, 2]
    assert free == 1


def _det(rows):
    rows = [list(r) for r in rows]
    n = len(rows)
    if n == 0:
        return 1
    if n == 1:
        return rows[0][0]
    return sum((-1) ** j * rows[0][j]
               * _det([r[:j] + r[j + 1:] for r in rows[1:]])
               for j in range(n))


matz = st.integers(1, 4).flatmap(
    lambda n: st.integers(1, 4).flatmap(
        lambda m: st.lists(
            st.lists(st.integers(-9, 9), min_size=m, max_size=m),
            min_size=n, max_size=n)))


@settings(max_examples=60, deadline=None)
@given(matz)
def test_snf_properties(rows):
    M = MatZ(len(rows), len(rows[0]), rows)
    factors, r, free, U = smith_normal_form(M)
    # divisibility chain, positive factors, ranks add up
    assert all(d > 0 for d in factors)
    assert all(b % a == 0 for a, b in zip(factors, factors[1:]))
    assert r == len(factors)
    assert r + free == M.rows
    # U is unimodular
    assert abs(_det(U.entries)) == 1
    # invariant factors are a transpose invariant
    ft, *_ = smith_normal_form(MatZ(M.cols, M.rows,
                                    list(zip(*M.entries))))
    assert ft == factors


@settings(max_examples=40, deadline=None)
@given(st.integers(2, 5).flatmap(
    lambda n: st.lists(
        st.lists(st.integers(0, 1), min_size=n, max_size=n),
        min_size=n, max_size=n)))
def test_rank_agrees_with_kernel(rows):
    m = M2(rows)
    assert rank(m) + kernel_basis(m).cols == m.cols
    assert rank(m) == rank(m.transpose())
