"""Spinor bases, chirality, and the indefinite spinor scalar product.

Two coordinate systems are used for spinors:

``"standard"``
    coordinates on which the Clifford matrices act directly;
``"u"``
    coordinates with respect to the orthonormal tensor basis
    ``u(eps_m) x ... x u(eps_1)``, ``u(eps) = (1, -eps*i) / sqrt2``.

An epsilon tuple is written most significant first, ``(eps_m, ..., eps_1)``;
its coordinate index is ``sum_j b_j 2**(j-1)`` with ``b_j = (1 - eps_j) / 2``,
so ``u(+1, ..., +1)`` is coordinate 0.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from typing import Iterable, Sequence

from .clifford import CliffordRep, Signature, build_rep
from .numfield import (I, ONE, SQRT2, ZERO, FieldMatrix, FieldScalar,
                       as_scalar, vector)

__all__ = [
    "STANDARD",
    "UBASIS",
    "Spinor",
    "Chirality",
    "Causal",
    "GramReport",
    "eps_to_index",
    "index_to_eps",
    "u_basis_matrix",
    "u_spinor",
    "spinor_from_terms",
    "chirality",
    "chirality_of_coords",
    "hermitian",
    "inner",
    "inner_matrix",
    "inner_closed_standard",
    "inner_closed_interleaved",
    "causal_type",
    "gram_report",
]

STANDARD = "standard"
UBASIS = "u"


class Chirality(str, Enum):
    PLUS = "plus"
    MINUS = "minus"
    MIXED = "mixed"


class Causal(str, Enum):
    SPACELIKE = "spacelike"
    TIMELIKE = "timelike"
    ISOTROPIC = "isotropic"
    NON_REAL = "non-real-norm"


def eps_to_index(eps: Sequence[int]) -> int:
    m = len(eps)
    idx = 0
    for pos, e in enumerate(eps):
        if e not in (1, -1):
            raise ValueError(f"epsilon entries must be +-1, got {eps}")
        j = m - pos  # eps[pos] is eps_j
        if e == -1:
            idx |= 1 << (j - 1)
    return idx


def index_to_eps(index: int, m: int) -> tuple[int, ...]:
    if not 0 <= index < 2 ** m:
        raise IndexError(index)
    return tuple(-1 if (index >> (j - 1)) & 1 else 1 for j in range(m, 0, -1))


def _eps_sign(index: int) -> int:
    """Product of all eps_j for a coordinate index."""
    return -1 if bin(index).count("1") % 2 else 1


@lru_cache(maxsize=None)
def u_basis_matrix(m: int) -> FieldMatrix:
    """Columns are ``u(eps)`` in standard coordinates, ordered by index."""
    h = SQRT2.inverse()
    single = FieldMatrix.from_columns([(h, -I * h), (h, I * h)])
    out = FieldMatrix.identity(1)
    for _ in range(m):
        out = out.kron(single)
    return out


@dataclass(frozen=True)
class Spinor:
    """Coordinates of a spinor, tagged with the basis they refer to."""

    coords: tuple[FieldScalar, ...]
    basis: str = UBASIS

    def __post_init__(self):
        if self.basis not in (STANDARD, UBASIS):
            raise ValueError(f"unknown basis tag {self.basis!r}")
        object.__setattr__(self, "coords", vector(self.coords))
        d = len(self.coords)
        if d & (d - 1) or d == 0:
            raise ValueError("spinor dimension must be a power of two")

    @property
    def dim(self) -> int:
        return len(self.coords)

    @property
    def m(self) -> int:
        return self.dim.bit_length() - 1

    def to(self, basis: str) -> "Spinor":
        if basis == self.basis:
            return self
        B = u_basis_matrix(self.m)
        if basis == STANDARD:
            return Spinor(B @ self.coords, STANDARD)
        if basis == UBASIS:
            return Spinor(B.adjoint() @ self.coords, UBASIS)
        raise ValueError(f"unknown basis tag {basis!r}")

    def standard(self) -> tuple[FieldScalar, ...]:
        return self.to(STANDARD).coords

    def ucoords(self) -> tuple[FieldScalar, ...]:
        return self.to(UBASIS).coords

    def _check(self, other: "Spinor"):
        if not isinstance(other, Spinor):
            raise TypeError("expected a Spinor")
        if other.basis != self.basis:
            raise ValueError(f"cannot combine spinors in bases {self.basis!r} and {other.basis!r}")
        if other.dim != self.dim:
            raise ValueError("spinor dimension mismatch")

    def __add__(self, other: "Spinor") -> "Spinor":
        self._check(other)
        return Spinor(tuple(a + b for a, b in zip(self.coords, other.coords)), self.basis)

    def __sub__(self, other: "Spinor") -> "Spinor":
        self._check(other)
        return Spinor(tuple(a - b for a, b in zip(self.coords, other.coords)), self.basis)

    def __neg__(self):
        return Spinor(tuple(-a for a in self.coords), self.basis)

    def __mul__(self, c):
        c = as_scalar(c)
        return Spinor(tuple(c * a for a in self.coords), self.basis)

    __rmul__ = __mul__

    def is_zero(self) -> bool:
        return not any(self.coords)

    def terms(self) -> list[tuple[FieldScalar, tuple[int, ...]]]:
        """Nonzero ``(coefficient, eps)`` pairs in the u-basis."""
        c = self.ucoords()
        return [(x, index_to_eps(i, self.m)) for i, x in enumerate(c) if x]

    def __str__(self):
        out = ""
        for coef, eps in self.terms():
            u = f"u({','.join(str(e) for e in eps)})"
            c = str(coef)
            neg = c.startswith("-") and (coef == -1 or "+" not in c[1:] and "-" not in c[1:])
            if neg:
                c = c[1:]
            if c == "1":
                mag = u
            elif ("+" in c or "-" in c) and not c.startswith("("):
                mag = f"({c})*{u}"
            else:
                mag = f"{c}*{u}"
            if not out:
                out = ("-" if neg else "") + mag
            else:
                out += (" - " if neg else " + ") + mag
        return out or "0"


def u_spinor(*eps: int) -> Spinor:
    """The basis spinor ``u(eps_m, ..., eps_1)`` in u-coordinates."""
    m = len(eps)
    coords = [ZERO] * (2 ** m)
    coords[eps_to_index(eps)] = ONE
    return Spinor(tuple(coords), UBASIS)


def spinor_from_terms(terms: Iterable[tuple[object, Sequence[int]]], m: int | None = None) -> Spinor:
    """Linear combination ``sum c * u(eps)`` from ``(c, eps)`` pairs."""
    terms = list(terms)
    if m is None:
        m = len(terms[0][1])
    coords = [ZERO] * (2 ** m)
    for c, eps in terms:
        if len(eps) != m:
            raise ValueError("epsilon tuples of different lengths")
        i = eps_to_index(eps)
        coords[i] = coords[i] + as_scalar(c)
    return Spinor(tuple(coords), UBASIS)


def _require_even(sig_or_n) -> int:
    n = sig_or_n.n if isinstance(sig_or_n, Signature) else int(sig_or_n)
    if n % 2:
        raise ValueError(f"chirality is undefined in odd dimension n={n}")
    return n


def chirality_of_coords(ucoords: Sequence[FieldScalar]) -> Chirality:
    signs = {_eps_sign(i) for i, x in enumerate(ucoords) if x}
    if signs == {1}:
        return Chirality.PLUS
    if signs == {-1}:
        return Chirality.MINUS
    return Chirality.MIXED


def chirality(v: Spinor, sig: Signature | int) -> Chirality:
    """Half-spinor type of ``v`` (even dimension only).

    ``sig`` is the signature (or just the dimension ``n``) of the module;
    the spinor coordinates alone cannot tell even from odd ``n``.
    A zero spinor is reported as mixed.
    """
    _require_even(sig)
    return chirality_of_coords(v.ucoords())


def hermitian(x: Sequence[FieldScalar], y: Sequence[FieldScalar]) -> FieldScalar:
    """Definite product ``sum x_j conj(y_j)``: conjugate-linear in ``y``."""
    s = ZERO
    for a, b in zip(x, y):
        if a and b:
            s = s + a * b.conj_i()
    return s


@lru_cache(maxsize=None)
def inner_matrix(sig: Signature) -> FieldMatrix:
    """Matrix ``M`` with ``<u, v> = hermitian(M u, v)`` in standard coordinates."""
    r = sig.r
    if r == 0:
        raise ValueError("positive definite signature has no indefinite spinor product; "
                         "use hermitian() for the definite one")
    rep = build_rep(sig)
    M = rep.product(sig.timelike())
    return M.scale(I ** (r * (r - 1) // 2))


def inner(rep: CliffordRep, u: Spinor, v: Spinor) -> FieldScalar:
    """Spin_0-invariant indefinite product ``<u, v>``."""
    if u.basis != v.basis:
        raise ValueError("spinors given in different bases")
    M = inner_matrix(rep.signature)
    if u.dim != rep.dim or v.dim != rep.dim:
        raise ValueError("spinor dimension does not match the representation")
    return hermitian(M @ u.standard(), v.standard())


def inner_closed_standard(r: int, s: int, eps_a: Sequence[int], eps_b: Sequence[int]) -> FieldScalar:
    """Closed form of ``<u(eps_a), u(eps_b)>`` for ``standard(r, s)``, ``r`` even."""
    if r % 2:
        raise ValueError("closed form only holds for even index r")
    m = (r + s) // 2
    if len(eps_a) != m or len(eps_b) != m:
        raise ValueError(f"epsilon tuples must have length {m}")
    if tuple(eps_a) != tuple(eps_b):
        return ZERO
    prod = 1
    for j in range(1, r // 2 + 1):
        prod *= eps_a[m - j]
    return FieldScalar(prod)


def inner_closed_interleaved(r: int, eps_a: Sequence[int], eps_b: Sequence[int]) -> FieldScalar:
    """Closed form of ``<u(eps_a), u(eps_b)>`` for ``interleaved(r)``."""
    if len(eps_a) != r or len(eps_b) != r:
        raise ValueError(f"epsilon tuples must have length {r}")
    if any(a != -b for a, b in zip(eps_a, eps_b)):
        return ZERO

    def e(j):
        return eps_a[r - j]

    half = r // 2
    prod = 1
    if r % 2 == 0:
        for j in range(1, r, 2):
            prod *= e(j)
        return (-I) ** half * prod
    for j in range(2, r, 2):
        prod *= e(j)
    return -(I ** half) * prod


def _real_sign(x: FieldScalar) -> int:
    """Exact sign of a real element ``a + b sqrt2`` (a, b rational)."""
    a, _, b, _ = x.parts()
    if b == 0:
        return (a > 0) - (a < 0)
    if a == 0 or (a > 0) == (b > 0):
        return 1 if (a > 0 or (a == 0 and b > 0)) else -1
    # opposite signs: compare a^2 with 2 b^2
    if a * a > 2 * b * b:
        return 1 if a > 0 else -1
    return 1 if b > 0 else -1


def causal_type(norm: FieldScalar) -> Causal:
    if norm.is_zero():
        return Causal.ISOTROPIC
    if not norm.is_real():
        return Causal.NON_REAL
    return Causal.SPACELIKE if _real_sign(norm) > 0 else Causal.TIMELIKE


@dataclass(frozen=True)
class GramReport:
    gram: FieldMatrix
    causal: tuple[Causal, ...]

    @property
    def diagonal(self) -> tuple[FieldScalar, ...]:
        return tuple(self.gram[i, i] for i in range(self.gram.rows))

    def is_definite(self) -> bool:
        """True if the product restricted to the span is definite.

        Uses leading principal minors of the Gram matrix (Sylvester); exact
        for Hermitian Gram matrices with real minors.
        """
        from .numfield import rank as _rank

        k = self.gram.rows
        if k == 0:
            return False
        G = self.gram
        if G.adjoint() != G:
            return False
        if _rank(G) < k:
            return False
        signs = []
        for size in range(1, k + 1):
            d = _det([[G[i, j] for j in range(size)] for i in range(size)])
            if not d.is_real() or d.is_zero():
                return False
            signs.append(_real_sign(d))
        return all(s > 0 for s in signs) or all(
            s == (-1) ** (t + 1) for t, s in enumerate(signs))


def _det(rows) -> FieldScalar:
    rows = [list(r) for r in rows]
    n = len(rows)
    det = ONE
    for c in range(n):
        p = next((i for i in range(c, n) if rows[i][c]), None)
        if p is None:
            return ZERO
        if p != c:
            rows[c], rows[p] = rows[p], rows[c]
            det = -det
        piv = rows[c][c]
        det = det * piv
        inv = piv.inverse()
        for i in range(c + 1, n):
            f = rows[i][c] * inv
            if f:
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[c])]
    return det


def gram_report(rep: CliffordRep, basis: Sequence[Spinor]) -> GramReport:
    """Pairwise products ``<v_i, v_j>`` and a causal tag per vector."""
    M = inner_matrix(rep.signature)
    std = [v.standard() for v in basis]
    images = [M @ x for x in std]
    k = len(basis)
    entries = {}
    for i in range(k):
        for j in range(k):
            entries[(i, j)] = hermitian(images[i], std[j])
    G = FieldMatrix.from_entries(k, k, entries)
    tags = tuple(causal_type(G[i, i]) for i in range(k))
    return GramReport(G, tags)
