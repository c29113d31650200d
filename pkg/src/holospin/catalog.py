"""Lie algebras of the irreducible non-symmetric holonomy groups.

Every entry of the (corrected) Berger list is presented as a list of real
matrices in ``so(r, s)`` for an explicit signature, ready to be lifted to the
spinor module.  Classical algebras are built from explicit real-form bases
pushed through the realification maps; exceptional ones are computed as
stabilizers of nice forms.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations
from typing import Sequence

from .clifford import Signature, e_matrix, is_metric_skew
from .forms import nice_form, stabilizer_algebra
from .numfield import (I, ONE, SQRT2, ZERO, FieldMatrix, FieldScalar,
                       kernel_basis, rank)

__all__ = [
    "FAMILIES",
    "HolonomyId",
    "AlgebraPresentation",
    "ConstraintError",
    "Quaternion",
    "realify",
    "complexify_quaternion",
    "quaternion_matrix",
    "right_mult_block",
    "form_preserving_algebra",
    "hyperbolic_orthonormal_basis",
    "algebra",
    "expected_dim",
]


FAMILIES = (
    "SO0", "U", "SU", "Sp", "SpSp1", "SpR_SL2R", "SpC_SL2C", "SOC",
    "G2", "G2star", "G2C", "Spin7", "Spin43", "Spin7C",
)
_EXCEPTIONAL = {"G2", "G2star", "G2C", "Spin7", "Spin43", "Spin7C"}
_ONE_PARAM = {"SpR_SL2R", "SpC_SL2C", "SOC"}


class ConstraintError(ValueError):
    """Parameters violate the dimension/index bounds of the holonomy list."""


@dataclass(frozen=True, order=True)
class HolonomyId:
    family: str
    p: int = 0
    q: int = 0

    def __post_init__(self):
        fam = _canonical_family(self.family)
        object.__setattr__(self, "family", fam)
        p, q = int(self.p), int(self.q)
        if p < 0 or q < 0:
            raise ConstraintError("p and q must be non-negative")
        if fam in ("SO0",):
            if p + q < 2:
                raise ConstraintError(f"SO0(p,q) needs n = p+q >= 2, got n={p + q}")
        elif fam in ("U", "SU"):
            if p + q < 2:
                raise ConstraintError(f"{fam}(p,q) needs n = 2(p+q) >= 4, got n={2 * (p + q)}")
        elif fam in ("Sp", "SpSp1"):
            if p + q < 2:
                raise ConstraintError(f"{fam}(p,q) needs n = 4(p+q) >= 8, got n={4 * (p + q)}")
        elif fam == "SpR_SL2R":
            if q:
                raise ConstraintError("SpR_SL2R takes a single parameter p")
            if p < 2:
                raise ConstraintError(f"SpR_SL2R needs n = 4p >= 8, got n={4 * p}")
        elif fam == "SpC_SL2C":
            if q:
                raise ConstraintError("SpC_SL2C takes a single parameter p")
            if p < 2:
                raise ConstraintError(f"SpC_SL2C needs n = 8p >= 16, got n={8 * p}")
        elif fam == "SOC":
            if q:
                raise ConstraintError("SOC takes a single parameter p")
            if p < 2:
                raise ConstraintError(f"SOC needs n = 2p >= 4, got n={2 * p}")
        elif fam in _EXCEPTIONAL:
            if p or q:
                raise ConstraintError(f"{fam} has a fixed signature and takes no parameters")
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "q", q)

    @classmethod
    def parse(cls, name: str, p: int | None = None, q: int | None = None) -> "HolonomyId":
        return cls(name, p or 0, q or 0)

    @property
    def signature(self) -> Signature:
        return signature_of(self)

    @property
    def n(self) -> int:
        return self.signature.n

    @property
    def r(self) -> int:
        return self.signature.r

    def label(self) -> str:
        f, p, q = self.family, self.p, self.q
        if f in _EXCEPTIONAL:
            return f
        if f in _ONE_PARAM:
            return f"{f}({p})"
        return f"{f}({p},{q})"

    def __str__(self):
        return self.label()


def _canonical_family(name: str) -> str:
    key = name.replace("-", "_").lower()
    for fam in FAMILIES:
        if fam.lower() == key:
            return fam
    aliases = {"so": "SO0", "so0": "SO0", "sp_sp1": "SpSp1", "spr": "SpR_SL2R",
               "spc": "SpC_SL2C", "so_c": "SOC", "g2*": "G2star", "spin4_3": "Spin43",
               "spin7_c": "Spin7C", "g2_c": "G2C"}
    if key in aliases:
        return aliases[key]
    raise ConstraintError(f"unknown holonomy family {name!r}; choose from {', '.join(FAMILIES)}")


def signature_of(hid: HolonomyId) -> Signature:
    f, p, q = hid.family, hid.p, hid.q
    if f == "SO0":
        return Signature.standard(p, q)
    if f in ("U", "SU"):
        return Signature.standard(2 * p, 2 * q)
    if f in ("Sp", "SpSp1"):
        return Signature.standard(4 * p, 4 * q)
    if f == "SpR_SL2R":
        return Signature.standard(2 * p, 2 * p)
    if f == "SpC_SL2C":
        return Signature.standard(4 * p, 4 * p)
    if f == "SOC":
        return Signature.interleaved(p)
    return {
        "G2": Signature.standard(0, 7),
        "G2star": Signature.standard(4, 3),
        "Spin7": Signature.standard(0, 8),
        "Spin43": Signature.standard(4, 4),
        "G2C": Signature.interleaved(7),
        "Spin7C": Signature.interleaved(8),
    }[f]


def expected_dim(hid: HolonomyId) -> int:
    f, p, q = hid.family, hid.p, hid.q
    if f == "SO0":
        n = p + q
        return n * (n - 1) // 2
    if f == "U":
        return (p + q) ** 2
    if f == "SU":
        return (p + q) ** 2 - 1
    if f == "Sp":
        N = p + q
        return N * (2 * N + 1)
    if f == "SpSp1":
        N = p + q
        return N * (2 * N + 1) + 3
    if f == "SpR_SL2R":
        return p * (2 * p + 1) + 3
    if f == "SpC_SL2C":
        return 2 * (p * (2 * p + 1) + 3)
    if f == "SOC":
        return p * (p - 1)
    return {"G2": 14, "G2star": 14, "Spin7": 21, "Spin43": 21, "G2C": 28, "Spin7C": 42}[f]


@dataclass(frozen=True)
class AlgebraPresentation:
    hid: HolonomyId
    signature: Signature
    generators: tuple[FieldMatrix, ...]
    expected_dim: int
    route: str
    notes: tuple[str, ...] = field(default=())

    def rank(self) -> int:
        return rank([g.flatten() for g in self.generators])


# -- scalar helpers ----------------------------------------------------------


def _re(z: FieldScalar) -> FieldScalar:
    a, _, b, _ = z.parts()
    return FieldScalar.from_parts(a, 0, b, 0)


def _im(z: FieldScalar) -> FieldScalar:
    _, a, _, b = z.parts()
    return FieldScalar.from_parts(a, 0, b, 0)


def realify(Z: FieldMatrix) -> FieldMatrix:
    """Replace each complex entry ``x + iy`` by the real block ``[[x, -y], [y, x]]``."""
    entries = {}
    for (i, j), z in Z.entries():
        x, y = _re(z), _im(z)
        if x:
            entries[(2 * i, 2 * j)] = x
            entries[(2 * i + 1, 2 * j + 1)] = x
        if y:
            entries[(2 * i, 2 * j + 1)] = -y
            entries[(2 * i + 1, 2 * j)] = y
    return FieldMatrix.from_entries(2 * Z.rows, 2 * Z.cols, entries)


@dataclass(frozen=True)
class Quaternion:
    """``z + w j`` with complex ``z, w``; ``j z = conj(z) j``."""

    z: FieldScalar = ZERO
    w: FieldScalar = ZERO

    def __mul__(self, other: "Quaternion") -> "Quaternion":
        z1, w1, z2, w2 = self.z, self.w, other.z, other.w
        return Quaternion(z1 * z2 - w1 * w2.conj_i(), z1 * w2 + w1 * z2.conj_i())

    def __add__(self, other):
        return Quaternion(self.z + other.z, self.w + other.w)

    def __neg__(self):
        return Quaternion(-self.z, -self.w)

    def scale(self, c) -> "Quaternion":
        c = FieldScalar(c)
        return Quaternion(self.z * c, self.w * c)

    def conj(self) -> "Quaternion":
        return Quaternion(self.z.conj_i(), -self.w)

    def __bool__(self):
        return bool(self.z) or bool(self.w)


Q_ONE = Quaternion(ONE, ZERO)
Q_I = Quaternion(I, ZERO)
Q_J = Quaternion(ZERO, ONE)
Q_K = Quaternion(ZERO, I)


def quaternion_matrix(n: int, entries: dict) -> tuple[FieldMatrix, FieldMatrix]:
    """Quaternionic ``n x n`` matrix as the pair ``(Z, W)`` with ``A = Z + W j``."""
    zs, ws = {}, {}
    for ij, a in entries.items():
        zs[ij] = a.z
        ws[ij] = a.w
    return FieldMatrix.from_entries(n, n, zs), FieldMatrix.from_entries(n, n, ws)


def complexify_quaternion(A: tuple[FieldMatrix, FieldMatrix]) -> FieldMatrix:
    """Replace each entry ``z + w j`` by the complex block ``[[z, -w], [conj w, conj z]]``."""
    Z, W = A
    n = Z.rows
    entries = {}
    for i in range(n):
        for j in range(n):
            z, w = Z[i, j], W[i, j]
            if z:
                entries[(2 * i, 2 * j)] = z
                entries[(2 * i + 1, 2 * j + 1)] = z.conj_i()
            if w:
                entries[(2 * i, 2 * j + 1)] = -w
                entries[(2 * i + 1, 2 * j)] = w.conj_i()
    return FieldMatrix.from_entries(2 * n, 2 * n, entries)


def right_mult_block(x0, y0, x1, y1) -> FieldMatrix:
    """4x4 real matrix of right multiplication by ``x0 + i y0 + (x1 + i y1) j``."""
    return FieldMatrix.from_rows([
        [x0, -y0, -x1, y1],
        [y0, x0, y1, x1],
        [x1, -y1, x0, -y0],
        [-y1, -x1, y0, x0],
    ])


def _block_diag(block: FieldMatrix, count: int) -> FieldMatrix:
    b = block.rows
    entries = {}
    for t in range(count):
        for (i, j), x in block.entries():
            entries[(t * b + i, t * b + j)] = x
    return FieldMatrix.from_entries(b * count, b * count, entries)


# -- classical real forms ------------------------------------------------------


def _unitary_basis(p: int, q: int, special: bool) -> list[FieldMatrix]:
    """Complex matrices ``A`` with ``conj(A)^T I + I A = 0`` (``I = I_{p,q}``)."""
    N = p + q
    kap = [-1] * p + [1] * q
    out = []
    for k, l in combinations(range(N), 2):
        s = kap[k] * kap[l]
        out.append(FieldMatrix.from_entries(N, N, {(k, l): 1, (l, k): -s}))
        out.append(FieldMatrix.from_entries(N, N, {(k, l): I, (l, k): I * s}))
    if special:
        for k in range(1, N):
            out.append(FieldMatrix.from_entries(N, N, {(0, 0): I, (k, k): -I}))
    else:
        for k in range(N):
            out.append(FieldMatrix.from_entries(N, N, {(k, k): I}))
    return out


def _symplectic_basis(p: int, q: int) -> list[tuple[FieldMatrix, FieldMatrix]]:
    """Quaternionic matrices ``A`` with ``conj(A)^T I + I A = 0``."""
    N = p + q
    kap = [-1] * p + [1] * q
    out = []
    for k, l in combinations(range(N), 2):
        s = kap[k] * kap[l]
        for u in (Q_ONE, Q_I, Q_J, Q_K):
            out.append(quaternion_matrix(N, {(k, l): u, (l, k): u.conj().scale(-s)}))
    for k in range(N):
        for u in (Q_I, Q_J, Q_K):
            out.append(quaternion_matrix(N, {(k, k): u}))
    return out


def form_preserving_algebra(G: FieldMatrix) -> list[FieldMatrix]:
    """Basis of ``{X : X^T G + G X = 0}`` for a square matrix ``G``."""
    n = G.rows
    cols = []
    for a in range(n):
        for b in range(n):
            X = FieldMatrix.from_entries(n, n, {(a, b): 1})
            cols.append((X.T @ G + G @ X).flatten())
    A = FieldMatrix.from_columns(cols)
    return [FieldMatrix.from_rows([v[i * n:(i + 1) * n] for i in range(n)])
            for v in kernel_basis(A)]


def _symplectic_form(p: int) -> FieldMatrix:
    """``omega(e_i, e_{p+i}) = 1``."""
    entries = {}
    for i in range(p):
        entries[(i, p + i)] = 1
        entries[(p + i, i)] = -1
    return FieldMatrix.from_entries(2 * p, 2 * p, entries)


_DET = FieldMatrix.from_rows([[0, 1], [-1, 0]])


def hyperbolic_orthonormal_basis(G: FieldMatrix) -> tuple[FieldMatrix, Signature]:
    """Change of basis ``P`` with ``P^T G P = diag(kappa)`` in standard order.

    ``G`` must be symmetric with exactly one nonzero entry (``+-1``) per row,
    off the diagonal: a sum of hyperbolic planes.  Each pair ``(e_a, e_b)``
    with ``G[a, b] = c`` is replaced by ``(e_a - c e_b)/sqrt2`` (norm ``-1``)
    and ``(e_a + c e_b)/sqrt2`` (norm ``+1``).
    """
    n = G.rows
    if G.T != G:
        raise ValueError("metric must be symmetric")
    h = SQRT2.inverse()
    timelike, spacelike = [], []
    seen = set()
    for a in range(n):
        items = list(G.row_items(a))
        if len(items) != 1 or items[0][0] == a or items[0][1] not in (ONE, -ONE):
            raise ValueError("metric is not a sum of hyperbolic planes in this basis")
        b, c = items[0]
        if a in seen:
            continue
        seen.update((a, b))
        timelike.append({a: h, b: -c * h})
        spacelike.append({a: h, b: c * h})
    cols = timelike + spacelike
    P = FieldMatrix.from_entries(n, n, {(i, j): x for j, col in enumerate(cols) for i, x in col.items()})
    sig = Signature.standard(len(timelike), len(spacelike))
    assert P.T @ G @ P == sig.metric()
    return P, sig


def _conjugate_into_standard(gens: Sequence[FieldMatrix], G: FieldMatrix):
    P, sig = hyperbolic_orthonormal_basis(G)
    Pinv = sig.metric() @ P.T @ G
    return [Pinv @ X @ P for X in gens], sig


# -- dispatch ------------------------------------------------------------------


def _all_e(sig: Signature) -> list[FieldMatrix]:
    return [e_matrix(sig, k, l) for k, l in combinations(range(1, sig.n + 1), 2)]


def _kron_gens(left: Sequence[FieldMatrix], right: Sequence[FieldMatrix], n_left: int, n_right: int):
    Il, Ir = FieldMatrix.identity(n_left), FieldMatrix.identity(n_right)
    return [S.kron(Ir) for S in left] + [Il.kron(B) for B in right]


@lru_cache(maxsize=None)
def algebra(hid: HolonomyId) -> AlgebraPresentation:
    """Generators of the holonomy Lie algebra as metric-skew real matrices."""
    f, p, q = hid.family, hid.p, hid.q
    sig = signature_of(hid)
    notes: list[str] = []
    if f == "SO0":
        gens, route = _all_e(sig), "embedding"
    elif f in ("U", "SU"):
        gens = [realify(A) for A in _unitary_basis(p, q, special=(f == "SU"))]
        route = "embedding"
    elif f in ("Sp", "SpSp1"):
        gens = [realify(complexify_quaternion(A)) for A in _symplectic_basis(p, q)]
        if f == "SpSp1":
            N = p + q
            for a in ((0, 1, 0, 0), (0, 0, 1, 0), (0, 0, 0, 1)):
                gens.append(_block_diag(right_mult_block(*a), N))
        route = "embedding"
    elif f == "SpR_SL2R":
        Om = _symplectic_form(p)
        raw = _kron_gens(form_preserving_algebra(Om), form_preserving_algebra(_DET), 2 * p, 2)
        G = Om.kron(_DET)
        gens, sig2 = _conjugate_into_standard(raw, G)
        assert sig2 == sig
        route = "tensor-metric"
    elif f == "SpC_SL2C":
        Om = _symplectic_form(p)
        raw = _kron_gens(form_preserving_algebra(Om), form_preserving_algebra(_DET), 2 * p, 2)
        cgens = []
        for X in raw:
            cgens.append(realify(X))
            cgens.append(realify(X.scale(I)))
        G = Om.kron(_DET).kron(FieldMatrix.diagonal([1, -1]))
        gens, sig2 = _conjugate_into_standard(cgens, G)
        assert sig2 == sig
        route = "tensor-metric"
    elif f == "SOC":
        base = _all_e(Signature.standard(0, p))
        gens = [realify(X) for X in base] + [realify(X.scale(I)) for X in base]
        route = "embedding"
    elif f in ("G2", "G2star", "Spin7", "Spin43"):
        form = {"G2": "w0", "G2star": "w1", "Spin7": "sigma0", "Spin43": "sigma1"}[f]
        gens = stabilizer_algebra(nice_form(form), sig)
        route = "form-stabilizer"
        notes.append(f"stabilizer of {form} in so({sig.label()})")
    elif f in ("G2C", "Spin7C"):
        form, base_sig = {"G2C": ("w0", Signature.standard(0, 7)),
                          "Spin7C": ("sigma0", Signature.standard(0, 8))}[f]
        base = stabilizer_algebra(nice_form(form), base_sig, scalars="complex")
        gens = []
        for X in base:
            gens.append(realify(X))
            gens.append(realify(X.scale(I)))
        route = "form-stabilizer"
        notes.append(f"complex stabilizer of {form}, realified")
    else:  # pragma: no cover - HolonomyId validates families
        raise ConstraintError(f)
    for X in gens:
        if not is_metric_skew(X, sig):
            raise AssertionError(f"generator of {hid} is not metric-skew for {sig}")
    return AlgebraPresentation(hid, sig, tuple(gens), expected_dim(hid), route, tuple(notes))
