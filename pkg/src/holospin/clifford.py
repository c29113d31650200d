"""Spinor representations of Clifford algebras in arbitrary signature.

Conventions
-----------
* ``Signature.kappa[j]`` is ``<e_j, e_j>``; the Clifford relation is
  ``e_i e_j + e_j e_i = -2 kappa_j delta_ij``.
* Generators are tensor products of the 2x2 matrices ``E, T, U, V``.  The
  Kronecker product puts the rightmost factor's index fastest, and the factor
  order of the tensor formula is used literally: for the pair ``e_{2k-1}``,
  ``e_{2k}`` the ``U`` or ``V`` factor sits in slot ``m-k+1`` (1-based from the
  left), with ``k-1`` factors of ``T`` to its right.
* In odd dimension the extra generator is ``tau_n * i * T x ... x T``, the
  first component of the two-block representation.

Indices in the public API are 1-based, like the mathematical notation.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

from .numfield import I, ONE, ZERO, FieldMatrix, FieldScalar, as_scalar

__all__ = [
    "Signature",
    "CliffordRep",
    "MAT_E",
    "MAT_T",
    "MAT_U",
    "MAT_V",
    "build_rep",
    "e_matrix",
    "is_metric_skew",
    "so_coordinates",
    "so_from_coordinates",
    "lift",
    "clifford_mult",
    "vector_image",
    "NotMetricSkewError",
]


class NotMetricSkewError(ValueError):
    """Raised when a matrix is not in the orthogonal Lie algebra of a signature."""


@dataclass(frozen=True)
class Signature:
    """Ordered list of metric signs; ``-1`` marks a timelike direction."""

    kappa: tuple[int, ...]

    def __post_init__(self):
        kappa = tuple(int(k) for k in self.kappa)
        if not kappa:
            raise ValueError("signature needs at least one direction")
        if any(k not in (-1, 1) for k in kappa):
            raise ValueError(f"metric signs must be +-1, got {kappa}")
        object.__setattr__(self, "kappa", kappa)

    @classmethod
    def standard(cls, r: int, s: int) -> "Signature":
        """``r`` timelike directions followed by ``s`` spacelike ones."""
        if r < 0 or s < 0 or r + s < 1:
            raise ValueError(f"invalid signature ({r},{s})")
        return cls((-1,) * r + (1,) * s)

    @classmethod
    def interleaved(cls, p: int) -> "Signature":
        """``(-1, +1)`` repeated ``p`` times: odd directions timelike."""
        if p < 1:
            raise ValueError("interleaved signature needs p >= 1")
        return cls((-1, 1) * p)

    @property
    def n(self) -> int:
        return len(self.kappa)

    @property
    def r(self) -> int:
        return sum(1 for k in self.kappa if k == -1)

    @property
    def s(self) -> int:
        return self.n - self.r

    @property
    def m(self) -> int:
        return self.n // 2

    @property
    def spinor_dim(self) -> int:
        return 2 ** self.m

    def timelike(self) -> list[int]:
        """1-based indices of the timelike directions, ascending."""
        return [j + 1 for j, k in enumerate(self.kappa) if k == -1]

    def spacelike(self) -> list[int]:
        return [j + 1 for j, k in enumerate(self.kappa) if k == 1]

    def metric(self) -> FieldMatrix:
        return FieldMatrix.diagonal(self.kappa)

    def is_standard(self) -> bool:
        return self.kappa == Signature.standard(self.r, self.s).kappa

    def is_interleaved(self) -> bool:
        return self.n % 2 == 0 and self.kappa == (-1, 1) * (self.n // 2)

    def tau(self, k: int) -> FieldScalar:
        return I if self.kappa[k - 1] == -1 else ONE

    def label(self) -> str:
        if self.is_standard():
            return f"standard({self.r},{self.s})"
        if self.is_interleaved():
            return f"interleaved({self.n // 2})"
        return "(" + ",".join("-" if k < 0 else "+" for k in self.kappa) + ")"

    def __str__(self):
        return self.label()


MAT_E = FieldMatrix.identity(2)
MAT_T = FieldMatrix.from_rows([[0, -I], [I, 0]])
MAT_U = FieldMatrix.from_rows([[I, 0], [0, -I]])
MAT_V = FieldMatrix.from_rows([[0, I], [I, 0]])


def _kron_all(factors: Sequence[FieldMatrix]) -> FieldMatrix:
    out = factors[0]
    for f in factors[1:]:
        out = out.kron(f)
    return out


@lru_cache(maxsize=None)
def _definite_generators(n: int) -> tuple[FieldMatrix, ...]:
    m = n // 2
    if m == 0:
        return (FieldMatrix.from_rows([[I]]),)
    gens = []
    for k in range(1, m + 1):
        for middle in (MAT_U, MAT_V):
            factors = [MAT_E] * (m - k) + [middle] + [MAT_T] * (k - 1)
            gens.append(_kron_all(factors))
    if n % 2:
        gens.append(_kron_all([MAT_T] * m).scale(I))
    return tuple(gens)


@dataclass(frozen=True)
class CliffordRep:
    """Matrices ``Phi(e_1), ..., Phi(e_n)`` acting on the spinor module."""

    signature: Signature
    generators: tuple[FieldMatrix, ...]
    tau: tuple[FieldScalar, ...] = field(repr=False)
    _products: dict = field(default_factory=dict, init=False, repr=False, compare=False)

    def __hash__(self):
        return hash(self.signature)

    @property
    def n(self) -> int:
        return self.signature.n

    @property
    def dim(self) -> int:
        return self.signature.spinor_dim

    def gamma(self, k: int) -> FieldMatrix:
        """``Phi(e_k)`` for 1-based ``k``."""
        if not 1 <= k <= self.n:
            raise IndexError(f"generator index {k} outside 1..{self.n}")
        return self.generators[k - 1]

    def pair(self, k: int, l: int) -> FieldMatrix:
        """Cached ``Phi(e_k) Phi(e_l)``."""
        key = (k, l)
        P = self._products.get(key)
        if P is None:
            P = self._products[key] = self.gamma(k) @ self.gamma(l)
        return P

    def product(self, indices: Sequence[int]) -> FieldMatrix:
        out = FieldMatrix.identity(self.dim)
        for k in indices:
            out = out @ self.gamma(k)
        return out


@lru_cache(maxsize=None)
def build_rep(sig: Signature) -> CliffordRep:
    """Build the spinor representation for ``sig``.

    The result equals the positive definite representation with each timelike
    generator multiplied by ``i``.
    """
    base = _definite_generators(sig.n)
    taus = tuple(sig.tau(k) for k in range(1, sig.n + 1))
    gens = tuple(g if t == ONE else g.scale(t) for g, t in zip(base, taus))
    return CliffordRep(sig, gens, taus)


def _check_pair(sig: Signature, k: int, l: int):
    n = sig.n
    if not (1 <= k < l <= n):
        raise IndexError(f"need 1 <= k < l <= {n}, got ({k},{l})")


def e_matrix(sig: Signature, k: int, l: int) -> FieldMatrix:
    """``E_kl = -kappa_l D_kl + kappa_k D_lk`` (1-based, ``k < l``)."""
    _check_pair(sig, k, l)
    kap = sig.kappa
    return FieldMatrix.from_entries(sig.n, sig.n, {
        (k - 1, l - 1): -kap[l - 1],
        (l - 1, k - 1): kap[k - 1],
    })


def is_metric_skew(X: FieldMatrix, sig: Signature) -> bool:
    """``X^T G + G X == 0`` with ``G = diag(kappa)``."""
    if X.shape != (sig.n, sig.n):
        return False
    kap = sig.kappa
    for (i, j), x in X.entries():
        # (X^T G + G X)[j, i] = X[i, j] kappa_i + kappa_j X[j, i]
        if x * kap[i] + X[j, i] * kap[j]:
            return False
    return True


def so_coordinates(X: FieldMatrix, sig: Signature) -> dict[tuple[int, int], FieldScalar]:
    """Coefficients ``a_kl`` with ``X = sum a_kl E_kl`` (1-based keys).

    The ``E_kl`` have disjoint supports, so ``a_kl = -kappa_l X[k, l]``.
    """
    if not is_metric_skew(X, sig):
        raise NotMetricSkewError(f"matrix is not in so({sig.label()})")
    kap = sig.kappa
    coords = {}
    for (i, j), x in X.entries():
        if i < j:
            coords[(i + 1, j + 1)] = x * (-kap[j])
    return coords


def so_from_coordinates(coords: dict, sig: Signature) -> FieldMatrix:
    out = {}
    kap = sig.kappa
    for (k, l), a in coords.items():
        a = as_scalar(a)
        if not a:
            continue
        _check_pair(sig, k, l)
        out[(k - 1, l - 1)] = a * (-kap[l - 1])
        out[(l - 1, k - 1)] = a * kap[k - 1]
    return FieldMatrix.from_entries(sig.n, sig.n, out)


_HALF = FieldScalar(Fraction(1, 2))


def lift(rep: CliffordRep, X: FieldMatrix) -> FieldMatrix:
    """Image of ``X`` in so(r,s) under the spin representation.

    Uses ``lambda_*(e_k e_l) = 2 E_kl``: ``X = sum a_kl E_kl`` lifts to
    ``sum (a_kl / 2) Phi(e_k) Phi(e_l)``.
    """
    coords = so_coordinates(X, rep.signature)
    dim = rep.dim
    acc: list[dict] = [{} for _ in range(dim)]
    for (k, l), a in sorted(coords.items()):
        c = a * _HALF
        P = rep.pair(k, l)
        for i in range(dim):
            row = acc[i]
            for j, x in P.row_items(i):
                v = c * x
                y = row.get(j)
                if y is None:
                    row[j] = v
                else:
                    s = y + v
                    if s:
                        row[j] = s
                    else:
                        del row[j]
    return FieldMatrix(dim, dim, acc)


def vector_image(rep: CliffordRep, v: Sequence) -> FieldMatrix:
    """Clifford image ``sum v_k Phi(e_k)`` of a vector of R^{r,s}."""
    out = FieldMatrix.zeros(rep.dim)
    for k, c in enumerate(v, start=1):
        c = as_scalar(c)
        if c:
            out = out + rep.gamma(k).scale(c)
    return out


def clifford_mult(rep: CliffordRep, k: int, v: Sequence[FieldScalar]) -> tuple[FieldScalar, ...]:
    """``Phi(e_k) v`` for a spinor given in standard coordinates."""
    return rep.gamma(k) @ v


def zero_spinor(dim: int) -> tuple[FieldScalar, ...]:
    return (ZERO,) * dim
