import pytest
from hypothesis import given
from hypothesis import strategies as st

from holospin.catalog import (FAMILIES, Q_I, Q_J, Q_K, Q_ONE, ConstraintError, HolonomyId, Quaternion,
                              algebra, complexify_quaternion, expected_dim, quaternion_matrix, realify)
from holospin.clifford import Signature, is_metric_skew
from holospin.numfield import I, FieldMatrix, FieldScalar, rank, span_equal
from holospin.reference import complex_list, g2_list, sp_list, spin7_list, su_list

gauss = st.builds(FieldScalar.gaussian, st.integers(-3, 3), st.integers(-3, 3))
quats = st.builds(Quaternion, gauss, gauss)

MINIMAL = [
    HolonomyId("SO0", 1, 1), HolonomyId("SO0", 1, 2), HolonomyId("U", 1, 1), HolonomyId("SU", 1, 1),
    HolonomyId("SU", 2, 1), HolonomyId("Sp", 1, 1), HolonomyId("SpSp1", 1, 1), HolonomyId("SpR_SL2R", 2),
    HolonomyId("SpC_SL2C", 2), HolonomyId("SOC", 2), HolonomyId("SOC", 3),
] + [HolonomyId(f) for f in ("G2", "G2star", "G2C", "Spin7", "Spin43", "Spin7C")]


def _flat(ms):
    return [X.flatten() for X in ms]


@st.composite
def complex_matrices(draw, n=2):
    return FieldMatrix.from_rows([[draw(gauss) for _ in range(n)] for _ in range(n)])


def test_realify_examples():
    J = FieldMatrix.from_rows([[0, -1], [1, 0]])
    assert realify(FieldMatrix.from_rows([[I]])) == J
    assert complexify_quaternion(quaternion_matrix(1, {(0, 0): Q_J})) == J


@given(complex_matrices(), complex_matrices())
def test_realify_is_an_algebra_map(A, B):
    J = realify(FieldMatrix.identity(2).scale(I))
    assert realify(A) @ J == J @ realify(A)
    assert realify(A @ B) == realify(A) @ realify(B)
    assert realify(A + B) == realify(A) + realify(B)


def test_quaternion_units():
    assert Q_I * Q_J == Q_K and Q_J * Q_I == -Q_K
    assert Q_J * Q_J == -Q_ONE and Q_K * Q_K == -Q_ONE and Q_I * Q_I == -Q_ONE


@given(quats, quats, quats)
def test_quaternion_embedding_multiplicative(a, b, c):
    assert (a * b) * c == a * (b * c)
    A = complexify_quaternion(quaternion_matrix(1, {(0, 0): a}))
    B = complexify_quaternion(quaternion_matrix(1, {(0, 0): b}))
    assert complexify_quaternion(quaternion_matrix(1, {(0, 0): a * b})) == A @ B


@pytest.mark.parametrize("hid", MINIMAL, ids=str)
def test_minimal_algebras(hid):
    pres = algebra(hid)
    assert pres.rank() == expected_dim(hid) == pres.expected_dim
    for X in pres.generators:
        assert is_metric_skew(X, pres.signature)


def test_expected_dims():
    assert [expected_dim(h) for h in MINIMAL] == [1, 3, 4, 3, 8, 10, 13, 13, 26, 2, 6, 14, 14, 28, 21, 21, 42]


def test_su11_presentation():
    pres = algebra(HolonomyId("SU", 1, 1))
    assert len(pres.generators) == 3 and pres.signature == Signature.standard(2, 2)


def test_exceptional_lists():
    assert span_equal(_flat(algebra(HolonomyId("G2")).generators), _flat(g2_list()))
    assert rank(_flat(spin7_list())) == 21
    assert span_equal(_flat(algebra(HolonomyId("Spin7")).generators), _flat(spin7_list()))
    assert span_equal(_flat(algebra(HolonomyId("G2C")).generators), _flat(complex_list("G2C")))
    assert span_equal(_flat(algebra(HolonomyId("Spin7C")).generators), _flat(complex_list("Spin7C")))


@pytest.mark.parametrize("N", [2, 3, 4])
def test_compact_unitary_lists(N):
    assert span_equal(_flat(algebra(HolonomyId("SU", 0, N)).generators), _flat(su_list(2 * N)))


@pytest.mark.parametrize("N", [2, 3])
def test_compact_symplectic_lists(N):
    assert span_equal(_flat(algebra(HolonomyId("Sp", 0, N)).generators), _flat(sp_list(4 * N)))


@pytest.mark.parametrize("family", ["G2", "G2star", "Spin7", "Spin43", "G2C", "Spin7C"])
def test_exceptional_closure(family):
    gens = algebra(HolonomyId(family)).generators
    span = _flat(gens)
    r = len(span)
    for i, X in enumerate(gens):
        for Y in gens[i + 1:]:
            assert rank(span + [X.commutator(Y).flatten()]) == r


@pytest.mark.parametrize("p,q", [(1, 1), (2, 0), (0, 2)])
def test_sp1_factor_commutes(p, q):
    sp_gens = algebra(HolonomyId("Sp", p, q)).generators
    extra = [X for X in algebra(HolonomyId("SpSp1", p, q)).generators
             if rank(_flat(sp_gens) + [X.flatten()]) > len(sp_gens)]
    assert len(extra) == 3
    for X in extra:
        for Y in sp_gens:
            assert X.commutator(Y).is_zero()


def test_unitary_signature_and_dimension():
    pres = algebra(HolonomyId("U", 2, 1))
    assert pres.signature == Signature.standard(4, 2)
    assert pres.rank() == 9


@pytest.mark.parametrize("args", [
    ("Sp", 1, 0), ("SU", 1, 0), ("U", 0, 1), ("SpSp1", 0, 1), ("SpR_SL2R", 1), ("SpC_SL2C", 1),
    ("SOC", 1), ("SO0", 1, 0), ("G2", 1), ("SpR_SL2R", 2, 1), ("SU", -1, 3),
])
def test_constraints(args):
    with pytest.raises(ConstraintError):
        HolonomyId(*args)


def test_unknown_family():
    with pytest.raises(ConstraintError, match="unknown holonomy family"):
        HolonomyId("E8")


def test_aliases_and_labels():
    assert HolonomyId.parse("su", 1, 1) == HolonomyId("SU", 1, 1)
    assert HolonomyId.parse("g2star").label() == "G2star"
    assert HolonomyId.parse("spc", 2).label() == "SpC_SL2C(2)"
    assert set(FAMILIES) >= {h.family for h in MINIMAL}


def test_interleaved_signatures():
    assert HolonomyId("SOC", 3).signature == Signature.interleaved(3)
    assert HolonomyId("G2C").signature == Signature.interleaved(7)
    assert HolonomyId("Spin7C").signature == Signature.interleaved(8)
    assert HolonomyId("G2star").signature == Signature.standard(4, 3)
    assert HolonomyId("SpR_SL2R", 2).signature == Signature.standard(4, 4)
    assert HolonomyId("SpC_SL2C", 2).signature == Signature.standard(8, 8)
