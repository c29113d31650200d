"""Fixed-spinor spaces of holonomy algebras, orientation variants, theorem table."""

from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Sequence

from .catalog import (_EXCEPTIONAL, _ONE_PARAM, FAMILIES, AlgebraPresentation,
                      ConstraintError, HolonomyId, algebra, signature_of)
from .clifford import CliffordRep, Signature, build_rep, lift
from .numfield import (ONE, FieldMatrix, kernel_basis, row_space_basis,
                       span_equal)
from .spinors import (UBASIS, Causal, Chirality, GramReport, Spinor,
                      chirality_of_coords, gram_report, u_basis_matrix)
from . import reference

__all__ = [
    "FixedSpaceReport",
    "VariantReport",
    "TheoremRow",
    "TableRow",
    "fixed_space",
    "fixed_space_stacked",
    "annihilator",
    "chirality_split",
    "orientation_variants",
    "expected_row",
    "enumerate_ids",
    "theorem_table",
    "reference_spinors",
]


@dataclass(frozen=True)
class ChiralitySplit:
    plus: int
    minus: int
    mixed: bool

    def as_tuple(self):
        return (self.plus, self.minus, self.mixed)


@dataclass
class FixedSpaceReport:
    hid: HolonomyId
    signature: Signature
    dim: int
    basis: list[Spinor]
    chirality: ChiralitySplit | None
    basis_chirality: list[Chirality] | None
    gram: GramReport | None
    notes: list[str] = field(default_factory=list)


def _lifted(pres: AlgebraPresentation, rep: CliffordRep) -> list[FieldMatrix]:
    return [lift(rep, X) for X in pres.generators]


def annihilator(lifted: Sequence[FieldMatrix], dim: int) -> list[tuple]:
    """Common kernel of the matrices, in standard spinor coordinates.

    The kernel is cut down one matrix at a time: if the columns of ``K`` span
    the common kernel so far, the next one is ``K`` times the kernel of
    ``L K``.  The final space equals the kernel of the stacked matrix.
    """
    K: FieldMatrix | None = None
    # Sparser matrices first: cheap eliminations shrink the space early.
    for L in sorted(lifted, key=lambda M: M.nnz()):
        if K is None:
            null = kernel_basis(L)
            if not null:
                return []
            K = FieldMatrix.from_columns(null, dim)
            continue
        W = L @ K
        if W.is_zero():
            continue
        null = kernel_basis(W)
        if not null:
            return []
        K = FieldMatrix.from_columns([K @ c for c in null], dim)
    if K is None:
        return [tuple(ONE if i == j else 0 for j in range(dim)) for i in range(dim)]
    return [K.column(j) for j in range(K.cols)]


def _to_canonical_u(vectors: Sequence[tuple], m: int) -> list[Spinor]:
    if not vectors:
        return []
    Bh = u_basis_matrix(m).adjoint()
    u_vectors = [Bh @ v for v in vectors]
    return [Spinor(row, UBASIS) for row in row_space_basis(u_vectors)]


def chirality_split(basis: Sequence[Spinor]) -> ChiralitySplit:
    """Dimensions of ``V & Delta+`` and ``V & Delta-`` for ``V = span(basis)``."""
    from .spinors import _eps_sign

    if not basis:
        return ChiralitySplit(0, 0, False)
    dims = {}
    for sign in (1, -1):
        # Coefficient vectors c with sum c_i v_i vanishing on the other half.
        other = [i for i in range(basis[0].dim) if _eps_sign(i) != sign]
        if not other:
            dims[sign] = len(basis)
            continue
        rows = [[v.coords[i] for v in basis] for i in other]
        dims[sign] = len(kernel_basis(FieldMatrix.from_rows(rows)))
    return ChiralitySplit(dims[1], dims[-1], dims[1] + dims[-1] < len(basis))


def reference_spinors(hid: HolonomyId) -> list[Spinor] | None:
    """Hand-written basis of the fixed space, where one is available."""
    f = hid.family
    m = hid.signature.m
    if f == "SU":
        return reference.su_spinors(m)
    if f == "Sp":
        return reference.phi_sp(hid.p + hid.q)
    if f in ("G2", "G2star"):
        return [reference.phi_g2()]
    if f in ("Spin7", "Spin43"):
        return [reference.psi_spin7()]
    if f == "G2C":
        return [reference.psi1_g2c(), reference.psi2_g2c()]
    if f == "Spin7C":
        return [reference.eta_spin7c()]
    if expected_row(hid).expected_N == 0:
        return []
    return None


def _report(hid, sig, rep, lifted, kernel_std, notes) -> FixedSpaceReport:
    basis = _to_canonical_u(kernel_std, sig.m)
    for v in basis:
        x = v.standard()
        for L in lifted:
            if any(L @ x):
                raise AssertionError(f"basis spinor not annihilated for {hid}")
    notes.append(f"annihilation verified for {len(lifted)} generators")
    if sig.n % 2 == 0:
        split = chirality_split(basis)
        per = [chirality_of_coords(v.coords) for v in basis]
    else:
        split, per = None, None
    gram = gram_report(rep, basis) if sig.r >= 1 and basis else None
    ref = reference_spinors(hid)
    if ref is not None:
        same = span_equal([v.coords for v in basis] or [(0,) * sig.spinor_dim],
                          [v.ucoords() for v in ref] or [(0,) * sig.spinor_dim])
        notes.append(f"span equals reference spinors: {same}")
    return FixedSpaceReport(hid, sig, len(basis), basis, split, per, gram, notes)


def fixed_space(hid: HolonomyId) -> FixedSpaceReport:
    """Space of spinors annihilated by the lifted holonomy algebra.

    The basis is the reduced row echelon basis in u-coordinates, so the
    first nonzero coordinate of each vector is 1 and the result is
    reproducible.
    """
    pres = algebra(hid)
    sig = pres.signature
    rep = build_rep(sig)
    lifted = _lifted(pres, rep)
    kernel = annihilator(lifted, rep.dim)
    return _report(hid, sig, rep, lifted, kernel,
                   [f"{len(pres.generators)} generators via {pres.route}"])


def fixed_space_stacked(hid: HolonomyId) -> FixedSpaceReport:
    """Same as :func:`fixed_space`, via one elimination of the stacked matrices."""
    pres = algebra(hid)
    sig = pres.signature
    rep = build_rep(sig)
    lifted = _lifted(pres, rep)
    stacked = lifted[0].vstack(*lifted[1:])
    return _report(hid, sig, rep, lifted, kernel_basis(stacked),
                   [f"{len(pres.generators)} generators via {pres.route}", "stacked elimination"])


# -- orientation variants ---------------------------------------------------------


@dataclass
class VariantReport:
    label: str
    operator: tuple[int, ...]
    basis: list[Spinor]
    chirality: ChiralitySplit | None
    basis_chirality: list[Chirality] | None
    gram: GramReport | None
    predicted_factor: int | None
    checks: dict[str, bool] = field(default_factory=dict)


def _apply(rep: CliffordRep, indices: Sequence[int], basis: Sequence[Spinor]) -> list[Spinor]:
    M = rep.product(indices)
    return [Spinor(M @ v.standard(), "standard").to(UBASIS) for v in basis]


def orientation_variants(report: FixedSpaceReport) -> tuple[dict[str, VariantReport], list[str]]:
    """Fixed spaces of the conjugate holonomy groups ``H', H'', H'''``.

    They are ``e1 . V``, ``en . V`` and ``e1 en . V`` with ``e1`` the first
    timelike and ``en`` the last spacelike basis vector.  Returns the variant
    reports keyed by label plus a list of explanations for variants that
    could not be formed.
    """
    sig = report.signature
    rep = build_rep(sig)
    t, s = sig.timelike(), sig.spacelike()
    problems = []
    ops: dict[str, tuple[int, ...]] = {"H": ()}
    if t:
        ops["H'"] = (t[0],)
    else:
        problems.append("no timelike direction: H' and H''' are not formed")
    if s:
        ops["H''"] = (s[-1],)
    else:
        problems.append("no spacelike direction: H'' and H''' are not formed")
    if t and s:
        ops["H'''"] = (t[0], s[-1])
    even = sig.n % 2 == 0
    out = {}
    for label, idx in ops.items():
        basis = _apply(rep, idx, report.basis) if idx else list(report.basis)
        split = chirality_split(basis) if even else None
        per = [chirality_of_coords(v.coords) for v in basis] if even else None
        gram = gram_report(rep, basis) if sig.r >= 1 and basis else None
        factor = None
        if sig.r >= 1:
            factor = 1
            for k in idx:
                factor *= (-1) ** sig.r * sig.kappa[k - 1]
        checks = {}
        if idx and even and report.basis_chirality:
            flips = len(idx) % 2 == 1
            checks["chirality_flipped" if flips else "chirality_preserved"] = all(
                (b != a) if flips else (b == a)
                for a, b in zip(report.basis_chirality, per)
                if a != Chirality.MIXED)
        if idx and gram is not None and report.gram is not None:
            checks["gram_scaled_by_factor"] = gram.gram == report.gram.gram.scale(factor)
        if idx:
            back = _apply(rep, idx[::-1], basis)
            checks["involution"] = span_equal([v.coords for v in back] or [(0,) * sig.spinor_dim],
                                              [v.coords for v in report.basis] or [(0,) * sig.spinor_dim])
        out[label] = VariantReport(label, idx, basis, split, per, gram, factor, checks)
    return out, problems


# -- theorem table -------------------------------------------------------------


@dataclass(frozen=True)
class TheoremRow:
    hid: HolonomyId
    n: int
    r: int
    expected_N: int
    chirality_pattern: str
    causal_pattern: str


def expected_row(hid: HolonomyId) -> TheoremRow:
    sig = signature_of(hid)
    f, p, q = hid.family, hid.p, hid.q
    n, r = sig.n, sig.r
    N, chi, causal = 0, "n/a", "n/a"
    if f == "SU":
        N = 2
        chi = "same-half" if (p + q) % 2 == 0 else "one-each"
        if r >= 1:
            causal = "same" if p % 2 == 0 else "different"
    elif f == "Sp":
        N = p + q + 1
        chi = "single-half"
        if r >= 1:
            causal = "definite"
    elif f in ("G2", "G2star"):
        N = 1
        if r >= 1:
            causal = "non-isotropic"
    elif f in ("Spin7", "Spin43", "Spin7C"):
        N = 1
        chi = "plus"
        if r >= 1:
            causal = "non-isotropic"
    elif f == "G2C":
        N = 2
        chi = "one-each"
        causal = "isotropic-nonorthogonal"
    return TheoremRow(hid, n, r, N, chi, causal)


def _check_chirality(pattern: str, rep: FixedSpaceReport) -> bool:
    if pattern == "n/a":
        return True
    split = rep.chirality
    N = rep.dim
    if split is None:
        return False
    if pattern in ("same-half", "single-half"):
        return split.as_tuple() in ((N, 0, False), (0, N, False))
    if pattern == "one-each":
        return split.as_tuple() == (1, 1, False)
    if pattern == "plus":
        return split.as_tuple() == (N, 0, False)
    raise ValueError(pattern)


def _check_causal(pattern: str, rep: FixedSpaceReport) -> bool:
    if pattern == "n/a":
        return True
    g = rep.gram
    if g is None:
        return False
    tags = g.causal
    if pattern in ("same", "different"):
        if len(tags) != 2 or Causal.ISOTROPIC in tags or Causal.NON_REAL in tags:
            return False
        return (tags[0] == tags[1]) == (pattern == "same")
    if pattern == "definite":
        return g.is_definite()
    if pattern == "non-isotropic":
        return len(tags) == 1 and tags[0] != Causal.ISOTROPIC
    if pattern == "isotropic-nonorthogonal":
        G = g.gram
        return (G.rows == 2 and all(t == Causal.ISOTROPIC for t in tags)
                and bool(G[0, 1]) and bool(G[1, 0]))
    raise ValueError(pattern)


@dataclass
class TableRow:
    expected: TheoremRow
    report: FixedSpaceReport
    passed: bool
    failures: list[str]


def enumerate_ids(max_n: int) -> list[HolonomyId]:
    """Every admissible holonomy id with ``n <= max_n``, in list order."""
    ids = []
    for fam in FAMILIES:
        if fam in _EXCEPTIONAL:
            hid = HolonomyId(fam)
            if hid.n <= max_n:
                ids.append(hid)
            continue
        if fam in _ONE_PARAM:
            for p in range(2, max_n + 1):
                try:
                    hid = HolonomyId(fam, p)
                except ConstraintError:
                    continue
                if hid.n <= max_n:
                    ids.append(hid)
            continue
        for total in range(2, max_n + 1):
            for p in range(total, -1, -1):
                try:
                    hid = HolonomyId(fam, p, total - p)
                except ConstraintError:
                    continue
                if hid.n <= max_n:
                    ids.append(hid)
    return ids


def evaluate_row(hid: HolonomyId) -> TableRow:
    exp = expected_row(hid)
    rep = fixed_space(hid)
    failures = []
    if rep.dim != exp.expected_N:
        failures.append(f"N={rep.dim}, expected {exp.expected_N}")
    if rep.dim == exp.expected_N and rep.dim:
        if not _check_chirality(exp.chirality_pattern, rep):
            failures.append(f"chirality pattern {exp.chirality_pattern} not met")
        if not _check_causal(exp.causal_pattern, rep):
            failures.append(f"causal pattern {exp.causal_pattern} not met")
    return TableRow(exp, rep, not failures, failures)


def _workers(requested: int | None) -> int:
    """Worker count: the request (default: CPU count), capped by ``HOLOSPIN_THREADS``."""
    n = requested if requested is not None else (os.cpu_count() or 1)
    env = os.environ.get("HOLOSPIN_THREADS")
    if env:
        try:
            n = min(n, int(env))
        except ValueError:
            raise ValueError(f"HOLOSPIN_THREADS must be an integer, got {env!r}") from None
    return max(1, n)


def theorem_table(max_n: int, ids: Sequence[HolonomyId] | None = None,
                  workers: int | None = None) -> list[TableRow]:
    """Run :func:`fixed_space` on every admissible id with ``n <= max_n``.

    Rows come back in enumeration order whatever the number of workers.
    """
    if max_n < 4:
        raise ValueError("max_n must be at least 4")
    if ids is None:
        ids = enumerate_ids(max_n)
    ids = list(ids)
    nw = _workers(workers)
    if nw == 1 or len(ids) < 2:
        return [evaluate_row(h) for h in ids]
    # Largest rows first so they do not straggle at the end.
    order = sorted(range(len(ids)), key=lambda i: -ids[i].n)
    with ProcessPoolExecutor(max_workers=nw) as pool:
        results = dict(zip(order, pool.map(evaluate_row, [ids[i] for i in order])))
    return [results[i] for i in range(len(ids))]
