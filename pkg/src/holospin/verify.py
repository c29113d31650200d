"""Property suites over the Clifford, spinor and form machinery.

Each check runs exhaustively over its stated range and reports the first
counterexample it meets.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import combinations, product
from typing import Callable, Iterator

from .catalog import HolonomyId, algebra
from .clifford import (Signature, build_rep, e_matrix, lift, so_from_coordinates,
                       vector_image, _definite_generators)
from .forms import nice_form, stabilizer_algebra
from .numfield import I, ONE, ZERO, FieldMatrix, FieldScalar, span_equal
from .reference import complex_list, g2_list, spin7_list
from .spinors import (_eps_sign, hermitian, index_to_eps, inner_closed_interleaved,
                      inner_closed_standard, inner_matrix, u_basis_matrix)

__all__ = ["PropertyResult", "SUITES", "run_suite", "standard_signatures"]

_UNITS = {ZERO, ONE, -ONE, I, -I}


@dataclass
class PropertyResult:
    suite: str
    name: str
    passed: bool
    checked: int
    counterexample: dict | None = None


def _check(suite: str, name: str, cases: Callable[[], Iterator[dict | None]]) -> PropertyResult:
    """Run ``cases``; each yields ``None`` on success or a counterexample dict."""
    count = 0
    for bad in cases():
        count += 1
        if bad is not None:
            return PropertyResult(suite, name, False, count, bad)
    return PropertyResult(suite, name, True, count)


def standard_signatures(max_n: int, min_n: int = 1) -> list[Signature]:
    return [Signature.standard(r, n - r) for n in range(min_n, max_n + 1) for r in range(n + 1)]


def catalog_signatures(max_n: int = 16) -> list[Signature]:
    """Signatures of the minimal-parameter catalog entries and the larger cases tested."""
    ids = [HolonomyId(f) for f in ("G2", "G2star", "G2C", "Spin7", "Spin43", "Spin7C")]
    ids += [HolonomyId("SpR_SL2R", 2), HolonomyId("SpR_SL2R", 3), HolonomyId("SpC_SL2C", 2),
            HolonomyId("SOC", 2), HolonomyId("SOC", 3), HolonomyId("Sp", 2, 1),
            HolonomyId("Sp", 3, 1), HolonomyId("SU", 2, 2), HolonomyId("SU", 4, 4)]
    seen = []
    for h in ids:
        if h.n <= max_n and h.signature not in seen:
            seen.append(h.signature)
    return seen


# -- clifford -----------------------------------------------------------------


def _relations(sigs):
    def cases():
        for sig in sigs:
            rep = build_rep(sig)
            eye = FieldMatrix.identity(rep.dim)
            for i in range(1, sig.n + 1):
                for j in range(i, sig.n + 1):
                    anti = rep.pair(i, j) + rep.pair(j, i)
                    want = eye.scale(-2 * sig.kappa[j - 1]) if i == j else FieldMatrix.zeros(rep.dim)
                    yield None if anti == want else {"signature": sig.label(), "i": i, "j": j}
    return cases


def _entries_are_units(sigs):
    def cases():
        for sig in sigs:
            rep = build_rep(sig)
            for k in range(1, sig.n + 1):
                bad = [x for _, x in rep.gamma(k).entries() if x not in _UNITS]
                yield {"signature": sig.label(), "k": k, "entry": str(bad[0])} if bad else None
    return cases


def _factorization(sigs):
    def cases():
        for sig in sigs:
            rep = build_rep(sig)
            base = _definite_generators(sig.n)
            for k in range(1, sig.n + 1):
                ok = rep.gamma(k) == base[k - 1].scale(sig.tau(k))
                yield None if ok else {"signature": sig.label(), "k": k}
    return cases


def _chirality_exchange(sigs):
    def cases():
        for sig in sigs:
            if sig.n % 2:
                continue
            rep = build_rep(sig)
            B = u_basis_matrix(sig.m)
            Bh = B.adjoint()
            for k in range(1, sig.n + 1):
                # In u-coordinates the generator must map each half into the other.
                G = Bh @ rep.gamma(k) @ B
                bad = [(i, j) for (i, j), _ in G.entries() if _eps_sign(i) == _eps_sign(j)]
                yield {"signature": sig.label(), "k": k, "entry": bad[0]} if bad else None
    return cases


def _clifford_square(sigs):
    def cases():
        for sig in sigs:
            rep = build_rep(sig)
            for k in range(1, sig.n + 1):
                for w in range(rep.dim):
                    v = tuple(ONE if i == w else ZERO for i in range(rep.dim))
                    out = rep.gamma(k) @ (rep.gamma(k) @ v)
                    want = tuple(x * -sig.kappa[k - 1] for x in v)
                    yield None if out == want else {"signature": sig.label(), "k": k, "w": w}
    return cases


def clifford_suite(max_n: int = 10) -> list[PropertyResult]:
    small = standard_signatures(max_n) + [Signature.interleaved(p) for p in range(1, max_n // 2 + 1)]
    every = small + catalog_signatures()
    return [
        _check("clifford", f"relations n<={max_n} and catalog signatures to n=16", _relations(every)),
        _check("clifford", "entries in {0, +-1, +-i}", _entries_are_units(every)),
        _check("clifford", "factorization through the definite representation", _factorization(every)),
        _check("clifford", "generators exchange chirality (n<=8)", _chirality_exchange(standard_signatures(8, 2))),
        _check("clifford", "Clifford square on basis spinors (n<=8)", _clifford_square(standard_signatures(8))),
    ]


# -- equivariance ---------------------------------------------------------------


def _pairs(n):
    return list(combinations(range(1, n + 1), 2))


def _linearity(sigs, seed=0):
    rng = random.Random(seed)

    def cases():
        for sig in sigs:
            if sig.n < 2:
                continue
            rep = build_rep(sig)
            pairs = _pairs(sig.n)
            for _ in range(4):
                X = so_from_coordinates({p: rng.randint(-3, 3) for p in pairs}, sig)
                Y = so_from_coordinates({p: rng.randint(-3, 3) for p in pairs}, sig)
                a = FieldScalar(rng.randint(-5, 5)) / rng.randint(1, 4)
                b = FieldScalar(rng.randint(-5, 5)) / rng.randint(1, 4)
                ok = lift(rep, X.scale(a) + Y.scale(b)) == lift(rep, X).scale(a) + lift(rep, Y).scale(b)
                yield None if ok else {"signature": sig.label(), "a": str(a), "b": str(b)}
    return cases


def _bracket(sigs):
    def cases():
        for sig in sigs:
            rep = build_rep(sig)
            E = {p: e_matrix(sig, *p) for p in _pairs(sig.n)}
            L = {p: lift(rep, X) for p, X in E.items()}
            for p, q in product(E, repeat=2):
                if p >= q:
                    continue
                ok = lift(rep, E[p].commutator(E[q])) == L[p].commutator(L[q])
                yield None if ok else {"signature": sig.label(), "X": p, "Y": q}
    return cases


def _equivariance(sigs):
    def cases():
        for sig in sigs:
            rep = build_rep(sig)
            for p in _pairs(sig.n):
                X = e_matrix(sig, *p)
                L = lift(rep, X)
                for m in range(1, sig.n + 1):
                    ok = L.commutator(rep.gamma(m)) == vector_image(rep, X.column(m - 1))
                    yield None if ok else {"signature": sig.label(), "X": p, "m": m}
    return cases


def equivariance_suite(max_n: int = 8) -> list[PropertyResult]:
    sigs = standard_signatures(max_n, 2) + [Signature.interleaved(p) for p in range(1, max_n // 2 + 1)]
    return [
        _check("equivariance", f"lift is linear (n<={max_n})", _linearity(sigs)),
        _check("equivariance", f"lift respects brackets (n<={max_n})", _bracket(sigs)),
        _check("equivariance", f"[lift X, e_m] = X e_m (n<={max_n})", _equivariance(sigs)),
    ]


# -- inner product ----------------------------------------------------------------


def _u_gram(sig: Signature) -> FieldMatrix:
    """``<u(a), u(b)>`` for all basis spinors, entry ``[a, b]``."""
    B = u_basis_matrix(sig.m)
    return B.adjoint() @ inner_matrix(sig) @ B  # hermitian(Mx, y) = y^H M x


def _oracle_standard(max_n):
    def cases():
        for sig in standard_signatures(max_n, 2):
            if sig.r == 0 or sig.r % 2:
                continue
            G = _u_gram(sig)
            m = sig.m
            for a, b in product(range(2 ** m), repeat=2):
                want = inner_closed_standard(sig.r, sig.s, index_to_eps(a, m), index_to_eps(b, m))
                # G[b, a] = <u(a), u(b)>
                if G[b, a] != want:
                    yield {"signature": sig.label(), "eps_a": index_to_eps(a, m),
                           "eps_b": index_to_eps(b, m), "got": str(G[b, a]), "want": str(want)}
                else:
                    yield None
    return cases


def _oracle_interleaved(exhaustive_max: int, sampled: tuple[int, ...], samples: int = 40, seed=1):
    rng = random.Random(seed)

    def cases():
        for r in list(range(1, exhaustive_max + 1)) + list(sampled):
            sig = Signature.interleaved(r)
            M = inner_matrix(sig)
            B = u_basis_matrix(r)
            if r <= exhaustive_max:
                pairs = list(product(range(2 ** r), repeat=2))
            else:
                pairs = []
                for _ in range(samples):
                    a = rng.randrange(2 ** r)
                    # Half the samples on the nonzero antidiagonal.
                    b = (2 ** r - 1 - a) if rng.random() < 0.5 else rng.randrange(2 ** r)
                    pairs.append((a, b))
            for a, b in pairs:
                got = hermitian(M @ B.column(a), B.column(b))
                want = inner_closed_interleaved(r, index_to_eps(a, r), index_to_eps(b, r))
                yield None if got == want else {"signature": sig.label(), "eps_a": index_to_eps(a, r),
                                                "eps_b": index_to_eps(b, r), "got": str(got), "want": str(want)}
    return cases


def _invariance(max_n):
    def cases():
        for sig in standard_signatures(max_n, 2) + [Signature.interleaved(p) for p in range(1, max_n // 2 + 1)]:
            if sig.r == 0:
                continue
            rep = build_rep(sig)
            M = inner_matrix(sig)
            for p in _pairs(sig.n):
                L = lift(rep, e_matrix(sig, *p))
                # <Lu, v> + <u, Lv> = v^H (M L + L^H M) u for every u, v
                ok = (M @ L + L.adjoint() @ M).is_zero()
                yield None if ok else {"signature": sig.label(), "E": p}
    return cases


def _orthogonality(max_n):
    def cases():
        for sig in standard_signatures(max_n, 2):
            if sig.r == 0 or sig.n % 2:
                continue
            G = _u_gram(sig)
            if sig.r % 2 == 0:
                bad = [(a, b) for (b, a), x in G.entries() if _eps_sign(a) != _eps_sign(b)]
            else:
                bad = [(a, b) for (b, a), x in G.entries() if _eps_sign(a) == _eps_sign(b)]
            yield {"signature": sig.label(), "pair": bad[0]} if bad else None
    return cases


def _unitary(max_m):
    def cases():
        for m in range(0, max_m + 1):
            B = u_basis_matrix(m)
            ok = B.adjoint() @ B == FieldMatrix.identity(2 ** m)
            yield None if ok else {"m": m}
    return cases


def inner_suite(max_n: int = 8) -> list[PropertyResult]:
    return [
        _check("inner", f"closed form, standard signature, even r (n<={max_n})", _oracle_standard(max_n)),
        _check("inner", "closed form, interleaved signature (r<=4 all, r=7,8 sampled)",
               _oracle_interleaved(4, (7, 8))),
        _check("inner", f"infinitesimal invariance (n<={max_n})", _invariance(max_n)),
        _check("inner", f"half-module orthogonality (n<={max_n})", _orthogonality(max_n)),
        _check("inner", "u-basis is orthonormal", _unitary(max_n // 2)),
    ]


# -- forms --------------------------------------------------------------------


_STABILIZERS = (
    ("w0", Signature.standard(0, 7), 14, g2_list),
    ("w1", Signature.standard(4, 3), 14, None),
    ("sigma0", Signature.standard(0, 8), 21, spin7_list),
    ("sigma1", Signature.standard(4, 4), 21, None),
)


def _stabilizer_dims():
    def cases():
        for name, sig, want, _ in _STABILIZERS:
            for scalars in ("real", "complex"):
                got = len(stabilizer_algebra(nice_form(name), sig, scalars))
                yield None if got == want else {"form": name, "scalars": scalars, "got": got, "want": want}
    return cases


def _stabilizer_lists():
    def cases():
        for name, sig, _, listed in _STABILIZERS:
            if listed is None:
                continue
            got = stabilizer_algebra(nice_form(name), sig)
            ok = span_equal([X.flatten() for X in got], [X.flatten() for X in listed()])
            yield None if ok else {"form": name}
        for fam in ("G2C", "Spin7C"):
            got = algebra(HolonomyId(fam)).generators
            ok = span_equal([X.flatten() for X in got], [X.flatten() for X in complex_list(fam)])
            yield None if ok else {"algebra": fam}
    return cases


def forms_suite() -> list[PropertyResult]:
    return [
        _check("forms", "stabilizer dimensions 14, 14, 21, 21 (real and complex)", _stabilizer_dims()),
        _check("forms", "stabilizers span the listed generators", _stabilizer_lists()),
    ]


SUITES: dict[str, Callable[[], list[PropertyResult]]] = {
    "clifford": clifford_suite,
    "inner": inner_suite,
    "equivariance": equivariance_suite,
    "forms": forms_suite,
}


def run_suite(name: str) -> list[PropertyResult]:
    if name == "all":
        return [res for suite in SUITES.values() for res in suite()]
    try:
        return SUITES[name]()
    except KeyError:
        raise ValueError(f"unknown suite {name!r}; choose from {sorted(SUITES) + ['all']}") from None
