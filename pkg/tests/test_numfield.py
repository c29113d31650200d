from fractions import Fraction

import pytest
import sympy as sp
from hypothesis import assume, given
from hypothesis import strategies as st

from holospin.numfield import (I, ONE, SQRT2, ZERO, FieldMatrix, FieldScalar,
                               kernel_basis, rank, row_space_basis, rref, span_equal)
from holospin.reference import g2_list

from oracles import mat_to_sym, to_sym

small_q = st.fractions(min_value=-6, max_value=6, max_denominator=7)
scalars = st.builds(FieldScalar.from_parts, small_q, small_q, small_q, small_q)
nonzero = scalars.filter(bool)
gauss_int = st.builds(FieldScalar.gaussian, st.integers(-2, 2), st.integers(-2, 2))
entries = st.one_of(gauss_int, gauss_int.map(lambda x: x * SQRT2), st.just(ZERO), st.just(ZERO))


@st.composite
def matrices(draw, max_rows=5, max_cols=5):
    r = draw(st.integers(1, max_rows))
    c = draw(st.integers(1, max_cols))
    return FieldMatrix.from_rows([[draw(entries) for _ in range(c)] for _ in range(r)])


# -- scalar arithmetic ----------------------------------------------------------


def test_spec_examples():
    assert ONE * SQRT2 == SQRT2
    assert SQRT2 * SQRT2 == FieldScalar(2)
    assert ONE / (ONE + I) == FieldScalar.gaussian(Fraction(1, 2), Fraction(-1, 2))


def test_division_by_zero():
    with pytest.raises(ZeroDivisionError):
        ONE / ZERO
    with pytest.raises(ZeroDivisionError):
        ZERO.inverse()


def test_canonical_form():
    x = FieldScalar.from_parts(Fraction(2, 4), Fraction(-3, 6), 0, Fraction(10, 20))
    assert x.parts() == (Fraction(1, 2), Fraction(-1, 2), 0, Fraction(1, 2))
    assert x == FieldScalar.from_parts(Fraction(1, 2), Fraction(-1, 2), 0, Fraction(1, 2))
    assert hash(x) == hash(FieldScalar.from_parts(Fraction(1, 2), Fraction(-1, 2), 0, Fraction(1, 2)))


def test_predicates():
    assert FieldScalar(3).is_rational()
    assert FieldScalar.gaussian(1, 2).is_gaussian() and not FieldScalar.gaussian(1, 2).is_real()
    assert SQRT2.is_real() and not SQRT2.is_gaussian()
    assert (SQRT2 - SQRT2).is_zero()


@given(scalars, scalars, scalars)
def test_ring_axioms(x, y, z):
    assert (x * y) * z == x * (y * z)
    assert (x + y) + z == x + (y + z)
    assert x * (y + z) == x * y + x * z
    assert x * y == y * x and x + y == y + x
    assert x - x == ZERO and x + ZERO == x and x * ONE == x


@given(nonzero)
def test_inverse(x):
    assert x * x.inverse() == ONE
    assert ONE / x == x.inverse()


@given(scalars, scalars)
def test_conjugations_are_automorphisms(x, y):
    for conj in (FieldScalar.conj_i, FieldScalar.conj_sqrt2):
        assert conj(x * y) == conj(x) * conj(y)
        assert conj(x + y) == conj(x) + conj(y)
        assert conj(conj(x)) == x
    assert I.conj_i() == -I and SQRT2.conj_i() == SQRT2
    assert SQRT2.conj_sqrt2() == -SQRT2 and I.conj_sqrt2() == I


@given(scalars)
def test_zero_iff_both_parts_zero(x):
    assert x.is_zero() == (x.parts() == (0, 0, 0, 0))


@given(scalars, scalars)
def test_product_matches_sympy(x, y):
    assert sp.expand(to_sym(x * y) - to_sym(x) * to_sym(y)) == 0
    assert sp.expand(to_sym(x - y) - (to_sym(x) - to_sym(y))) == 0


@given(scalars, st.integers(0, 5))
def test_power(x, k):
    want = ONE
    for _ in range(k):
        want = want * x
    assert x ** k == want


# -- matrices -------------------------------------------------------------------


def test_kernel_examples():
    assert kernel_basis(FieldMatrix.zeros(2)) == [(ONE, ZERO), (ZERO, ONE)]
    assert kernel_basis(FieldMatrix.identity(3)) == []
    (v,) = kernel_basis(FieldMatrix.from_rows([[1, I], [-I, 1]]))
    assert span_equal([v], [(-I, ONE)])


def test_span_equal_examples():
    assert span_equal([(1, 0)], [(2, 0)])
    assert not span_equal([(1, 0)], [(0, 1)])
    with pytest.raises(ValueError):
        span_equal([(1, 0)], [(1, 0, 0)])


def test_g2_list_rank():
    assert rank([X.flatten() for X in g2_list()]) == 14


@given(matrices())
def test_rank_nullity(M):
    K = kernel_basis(M)
    assert len(K) + rank(M) == M.cols
    for v in K:
        assert not any(M @ v)
    if K:
        assert rank(K) == len(K)


@given(matrices())
def test_rank_matches_sympy(M):
    assert rank(M) == mat_to_sym(M).rank(simplify=True)


@given(matrices())
def test_rref_is_idempotent(M):
    rows, pivots = rref(M)
    again, pivots2 = rref(FieldMatrix.from_rows(rows)) if rows else ([], [])
    assert rows == again and pivots == pivots2
    for r, p in zip(rows, pivots):
        assert r[p] == ONE and not any(r[:p])


@given(matrices(4, 4), st.lists(st.tuples(st.integers(-3, 3), st.integers(-3, 3)), min_size=4, max_size=4))
def test_span_equal_under_recombination(M, coeffs):
    rows = [M.row(i) for i in range(M.rows)]
    mixed = [tuple(sum((r[j] * FieldScalar.gaussian(a, b) for r, (a, b) in zip(rows, cs)), ZERO)
                   for j in range(M.cols))
             for cs in (coeffs[k:] + coeffs[:k] for k in range(M.rows))]
    assume(rank(mixed) == rank(rows))
    assert span_equal(rows, mixed)
    assert span_equal(rows, row_space_basis(rows))


@given(matrices(3, 3), matrices(3, 3))
def test_adjoint_reverses_products(A, B):
    assume(A.cols == B.rows)
    assert (A @ B).adjoint() == B.adjoint() @ A.adjoint()


def test_kron_layout():
    A = FieldMatrix.from_rows([[1, 2], [3, 4]])
    B = FieldMatrix.from_rows([[0, 5], [6, 7]])
    K = A.kron(B)
    # rightmost factor varies fastest
    assert K[0, 1] == FieldScalar(5) and K[1, 0] == FieldScalar(6) and K[2, 3] == FieldScalar(20)
    assert K.shape == (4, 4)


def test_matrix_is_immutable_value():
    M = FieldMatrix.from_rows([[1, 0], [0, 1]])
    assert M == FieldMatrix.identity(2) and hash(M) == hash(FieldMatrix.identity(2))
    assert M.transpose().transpose() == M
