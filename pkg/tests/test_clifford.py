from fractions import Fraction

import pytest
import sympy as sp
from hypothesis import given
from hypothesis import strategies as st

from holospin.clifford import (MAT_T, MAT_U, MAT_V, NotMetricSkewError, Signature, _definite_generators,
                               build_rep, clifford_mult, e_matrix, is_metric_skew, lift,
                               so_coordinates, so_from_coordinates, vector_image)
from holospin.numfield import I, ONE, ZERO, FieldMatrix, FieldScalar
from holospin.verify import equivariance_suite, standard_signatures

import oracles

signatures_8 = st.integers(2, 8).flatmap(lambda n: st.integers(0, n).map(lambda r: Signature.standard(r, n - r)))


def test_signature_constructors():
    s = Signature.standard(2, 3)
    assert s.kappa == (-1, -1, 1, 1, 1) and (s.r, s.s, s.n, s.m) == (2, 3, 5, 2)
    assert Signature.interleaved(3).kappa == (-1, 1, -1, 1, -1, 1)
    assert s.timelike() == [1, 2] and s.spacelike() == [3, 4, 5]
    with pytest.raises(ValueError):
        Signature(())
    with pytest.raises(ValueError):
        Signature((1, 0))


def test_build_rep_examples():
    rep = build_rep(Signature.standard(0, 2))
    assert rep.gamma(1) == MAT_U and rep.gamma(2) == MAT_V
    rep = build_rep(Signature.standard(1, 1))
    assert rep.gamma(1) == MAT_U.scale(I) and rep.gamma(2) == MAT_V
    rep = build_rep(Signature.standard(0, 3))
    assert rep.gamma(3) == MAT_T.scale(I)
    assert rep.tau == (ONE, ONE, ONE)
    assert build_rep(Signature.standard(2, 1)).tau == (I, I, ONE)


def test_generators_match_sympy_construction():
    for sig in standard_signatures(6) + [Signature.interleaved(3)]:
        rep = build_rep(sig)
        sym = oracles.gammas(sig.kappa)
        for k in range(sig.n):
            assert oracles.mat_to_sym(rep.gamma(k + 1)) == sym[k], (sig, k)


def test_sympy_generators_satisfy_relations():
    for sig in standard_signatures(6):
        g = oracles.gammas(sig.kappa)
        d = g[0].shape[0]
        for i in range(sig.n):
            for j in range(sig.n):
                want = -2 * sig.kappa[j] * sp.eye(d) if i == j else sp.zeros(d, d)
                assert sp.expand(g[i] * g[j] + g[j] * g[i]) == want


@pytest.mark.parametrize("n", range(1, 17))
def test_clifford_relations_exhaustive(n):
    for r in range(n + 1):
        sig = Signature.standard(r, n - r)
        rep = build_rep(sig)
        eye = FieldMatrix.identity(rep.dim)
        zero = FieldMatrix.zeros(rep.dim)
        for i in range(1, n + 1):
            assert rep.pair(i, i) == eye.scale(-sig.kappa[i - 1])
            for j in range(i + 1, n + 1):
                assert rep.pair(i, j) + rep.pair(j, i) == zero


@pytest.mark.parametrize("p", range(1, 9))
def test_clifford_relations_interleaved(p):
    sig = Signature.interleaved(p)
    rep = build_rep(sig)
    for i in range(1, sig.n + 1):
        assert rep.pair(i, i) == FieldMatrix.identity(rep.dim).scale(-sig.kappa[i - 1])
        for j in range(i + 1, sig.n + 1):
            assert (rep.pair(i, j) + rep.pair(j, i)).is_zero()


@pytest.mark.parametrize("n", range(1, 17))
def test_factorization_through_definite(n):
    base = _definite_generators(n)
    for r in range(n + 1):
        sig = Signature.standard(r, n - r)
        rep = build_rep(sig)
        for k in range(1, n + 1):
            assert rep.gamma(k) == base[k - 1].scale(sig.tau(k))
            assert all(x in (ONE, -ONE, I, -I) for _, x in rep.gamma(k).entries())


def test_e_matrix_examples():
    assert e_matrix(Signature.standard(0, 2), 1, 2) == FieldMatrix.from_rows([[0, -1], [1, 0]])
    assert e_matrix(Signature.standard(1, 1), 1, 2) == FieldMatrix.from_rows([[0, -1], [-1, 0]])
    sig = Signature.standard(2, 3)
    for k in range(1, 6):
        for l in range(k + 1, 6):
            assert is_metric_skew(e_matrix(sig, k, l), sig)
    with pytest.raises(IndexError):
        e_matrix(sig, 2, 2)
    with pytest.raises(IndexError):
        e_matrix(sig, 1, 6)


def test_lift_examples():
    sig = Signature.standard(0, 4)
    rep = build_rep(sig)
    half = FieldScalar(Fraction(1, 2))
    assert lift(rep, e_matrix(sig, 1, 2)) == rep.pair(1, 2).scale(half)
    assert lift(rep, FieldMatrix.zeros(4)).is_zero()
    X = e_matrix(sig, 1, 2)
    L = lift(rep, X)
    for w in range(rep.dim):
        v = tuple(ONE if i == w else ZERO for i in range(rep.dim))
        lhs = tuple(a - b for a, b in zip(L @ (rep.gamma(1) @ v), rep.gamma(1) @ (L @ v)))
        assert lhs == vector_image(rep, X.column(0)) @ v


def test_lift_rejects_non_skew():
    sig = Signature.standard(1, 2)
    with pytest.raises(NotMetricSkewError):
        lift(build_rep(sig), FieldMatrix.identity(3))
    with pytest.raises(NotMetricSkewError):
        so_coordinates(FieldMatrix.from_rows([[0, 1, 0], [1, 0, 0], [0, 0, 0]]), Signature.standard(0, 3))


def test_lift_matches_sympy():
    sig = Signature.standard(2, 3)
    rep = build_rep(sig)
    X = so_from_coordinates({(1, 2): 3, (1, 4): -1, (2, 5): Fraction(1, 2), (3, 4): 2}, sig)
    assert oracles.mat_to_sym(lift(rep, X)) == sp.expand(oracles.lift(sig.kappa, oracles.mat_to_sym(X)))


@given(signatures_8, st.data())
def test_so_coordinates_round_trip(sig, data):
    pairs = [(k, l) for k in range(1, sig.n + 1) for l in range(k + 1, sig.n + 1)]
    coords = {p: FieldScalar(data.draw(st.integers(-4, 4))) for p in pairs}
    X = so_from_coordinates(coords, sig)
    assert is_metric_skew(X, sig)
    assert so_coordinates(X, sig) == {p: c for p, c in coords.items() if c}


@given(signatures_8, st.data())
def test_lift_linear_and_traceless(sig, data):
    rep = build_rep(sig)
    pairs = [(k, l) for k in range(1, sig.n + 1) for l in range(k + 1, sig.n + 1)]
    draw = lambda: {p: data.draw(st.integers(-3, 3)) for p in pairs}  # noqa: E731
    X, Y = so_from_coordinates(draw(), sig), so_from_coordinates(draw(), sig)
    a = FieldScalar(Fraction(data.draw(st.integers(-5, 5)), data.draw(st.integers(1, 5))))
    b = FieldScalar(Fraction(data.draw(st.integers(-5, 5)), data.draw(st.integers(1, 5))))
    assert lift(rep, X.scale(a) + Y.scale(b)) == lift(rep, X).scale(a) + lift(rep, Y).scale(b)
    assert lift(rep, X).trace() == ZERO


@given(signatures_8, st.data())
def test_bracket_compatibility_sampled(sig, data):
    rep = build_rep(sig)
    pairs = [(k, l) for k in range(1, sig.n + 1) for l in range(k + 1, sig.n + 1)]
    p, q = data.draw(st.sampled_from(pairs)), data.draw(st.sampled_from(pairs))
    X, Y = e_matrix(sig, *p), e_matrix(sig, *q)
    assert lift(rep, X.commutator(Y)) == lift(rep, X).commutator(lift(rep, Y))


def test_equivariance_suite_exhaustive():
    results = equivariance_suite(8)
    assert all(r.passed for r in results), [r for r in results if not r.passed]


def test_clifford_mult_examples():
    rep = build_rep(Signature.standard(0, 2))
    assert clifford_mult(rep, 1, (ONE, ZERO)) == (I, ZERO)
    for sig in standard_signatures(6):
        rep = build_rep(sig)
        for k in range(1, sig.n + 1):
            for w in range(rep.dim):
                v = tuple(ONE if i == w else ZERO for i in range(rep.dim))
                assert clifford_mult(rep, k, clifford_mult(rep, k, v)) == tuple(x * -sig.kappa[k - 1] for x in v)
