"""Exterior forms, the infinitesimal pullback action, and form stabilizers."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Mapping

from .clifford import Signature, e_matrix, is_metric_skew, so_from_coordinates
from .numfield import ZERO, FieldMatrix, FieldScalar, as_scalar, kernel_basis

__all__ = ["ExteriorForm", "nice_form", "form_action", "stabilizer_algebra", "NICE_FORMS"]


def _sort_sign(idx: tuple[int, ...]) -> tuple[int, tuple[int, ...]]:
    """Sign of the sorting permutation and the sorted tuple (sign 0 on repeats)."""
    if len(set(idx)) < len(idx):
        return 0, idx
    arr = list(idx)
    sign = 1
    for i in range(len(arr)):
        for j in range(len(arr) - 1 - i):
            if arr[j] > arr[j + 1]:
                arr[j], arr[j + 1] = arr[j + 1], arr[j]
                sign = -sign
    return sign, tuple(arr)


@dataclass(frozen=True)
class ExteriorForm:
    """A k-form on an n-dimensional space, ``sum c_I w^I`` over increasing ``I``.

    Index tuples are 1-based.
    """

    degree: int
    dim: int
    coeffs: Mapping[tuple[int, ...], FieldScalar]

    def __post_init__(self):
        clean = {}
        for idx, c in self.coeffs.items():
            idx = tuple(int(i) for i in idx)
            if len(idx) != self.degree:
                raise ValueError(f"index {idx} has wrong degree")
            if any(not 1 <= i <= self.dim for i in idx):
                raise ValueError(f"index {idx} out of range 1..{self.dim}")
            if list(idx) != sorted(set(idx)):
                raise ValueError(f"index {idx} is not strictly increasing")
            c = as_scalar(c)
            if c:
                clean[idx] = c
        object.__setattr__(self, "coeffs", dict(sorted(clean.items())))

    @classmethod
    def from_terms(cls, degree: int, dim: int, terms) -> "ExteriorForm":
        """Accumulate ``(coef, index_tuple)`` terms; unsorted tuples are reordered with sign."""
        acc: dict = {}
        for c, idx in terms:
            sign, key = _sort_sign(tuple(idx))
            if sign:
                acc[key] = acc.get(key, ZERO) + as_scalar(c) * sign
        return cls(degree, dim, acc)

    def __call__(self, *idx: int) -> FieldScalar:
        """Evaluate on basis vectors ``e_idx`` (antisymmetric in the arguments)."""
        sign, key = _sort_sign(tuple(idx))
        if not sign:
            return ZERO
        c = self.coeffs.get(key)
        return ZERO if c is None else c * sign

    def nonzero_count(self) -> int:
        return len(self.coeffs)

    def is_zero(self) -> bool:
        return not self.coeffs

    def basis_tuples(self):
        return list(combinations(range(1, self.dim + 1), self.degree))

    def vector(self) -> tuple[FieldScalar, ...]:
        return tuple(self.coeffs.get(t, ZERO) for t in self.basis_tuples())

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for idx, c in self.coeffs.items():
            s = "".join(str(i) for i in idx)
            parts.append(f"{'+' if c == 1 else '-' if c == -1 else str(c) + '*'}w^{s}")
        return " ".join(parts)


def _parse(degree, dim, text: str) -> ExteriorForm:
    terms = []
    for tok in text.split():
        sign = -1 if tok[0] == "-" else 1
        digits = tok.lstrip("+-")
        terms.append((sign, tuple(int(ch) for ch in digits)))
    return ExteriorForm.from_terms(degree, dim, terms)


NICE_FORMS = {
    "w0": (3, 7, "+127 +135 -146 -236 -245 +347 +567"),
    "w1": (3, 7, "-127 -135 +146 +236 +245 -347 +567"),
    "sigma0": (4, 8, "+1234 +1256 -1278 +1357 +1368 +1458 -1467 "
                     "-2358 +2367 +2457 +2468 -3456 +3478 +5678"),
    "sigma1": (4, 8, "+1234 -1256 +1278 -1357 -1368 -1458 +1467 "
                     "+2358 -2367 -2457 -2468 +3456 -3478 +5678"),
}


def nice_form(name: str) -> ExteriorForm:
    """The 3-forms ``w0``, ``w1`` on R^7 and 4-forms ``sigma0``, ``sigma1`` on R^8."""
    try:
        degree, dim, text = NICE_FORMS[name]
    except KeyError:
        raise ValueError(f"unknown form {name!r}; choose from {sorted(NICE_FORMS)}") from None
    return _parse(degree, dim, text)


def form_action(X: FieldMatrix, omega: ExteriorForm) -> ExteriorForm:
    """Infinitesimal pullback: ``(X.w)(v1..vk) = -sum_i w(v1, .., X v_i, .., vk)``."""
    n = omega.dim
    if X.shape != (n, n):
        raise ValueError(f"matrix shape {X.shape} does not match form dimension {n}")
    # column j of X: X e_j = sum_m X[m, j] e_m
    cols = {j: [] for j in range(n)}
    for (m, j), x in X.entries():
        cols[j].append((m + 1, x))
    out = {}
    for idx in combinations(range(1, n + 1), omega.degree):
        total = ZERO
        for pos, i in enumerate(idx):
            for m, x in cols[i - 1]:
                val = omega(*idx[:pos], m, *idx[pos + 1:])
                if val:
                    total = total - x * val
        if total:
            out[idx] = total
    return ExteriorForm(omega.degree, n, out)


def stabilizer_algebra(omega: ExteriorForm, sig: Signature, scalars: str = "real") -> list[FieldMatrix]:
    """Basis of ``{X in so(sig) : X.omega = 0}``.

    The map ``X -> X.omega`` is assembled on the ``E_kl`` coordinates
    (``k < l`` in lexicographic order) and its kernel taken exactly.  For
    ``scalars="complex"`` the same basis spans the complex stabilizer, since
    the form has rational coefficients; it is returned unchanged and is meant
    to be read with complex coefficients.
    """
    if omega.degree not in (3, 4):
        raise ValueError("only 3- and 4-forms are supported")
    if scalars not in ("real", "complex"):
        raise ValueError("scalars must be 'real' or 'complex'")
    n = sig.n
    if omega.dim != n:
        raise ValueError("form dimension does not match signature")
    pairs = list(combinations(range(1, n + 1), 2))
    columns = [form_action(e_matrix(sig, k, l), omega).vector() for k, l in pairs]
    A = FieldMatrix.from_columns(columns)
    basis = []
    for coeffs in kernel_basis(A):
        X = so_from_coordinates({pair: c for pair, c in zip(pairs, coeffs) if c}, sig)
        assert is_metric_skew(X, sig)
        basis.append(X)
    return basis
