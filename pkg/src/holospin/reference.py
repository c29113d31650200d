"""Explicit generator lists and fixed spinors used to cross-check computed results.

Nothing here feeds the engine; these are independent hand-written data that
computed algebras and kernels are compared against with ``span_equal``.
"""

from __future__ import annotations

from itertools import combinations, product

from .catalog import realify
from .clifford import Signature, e_matrix
from .numfield import I, FieldMatrix
from .spinors import Spinor, spinor_from_terms

__all__ = [
    "g2_list",
    "spin7_list",
    "complex_list",
    "su_list",
    "sp_list",
    "phi_g2",
    "psi_spin7",
    "psi1_g2c",
    "psi2_g2c",
    "eta_spin7c",
    "phi_sp",
    "su_spinors",
]


def _parse_terms(sig: Signature, text: str) -> list[FieldMatrix]:
    """Parse ``"E12-E34, -E57+E68"`` into matrices; pairs are two digits."""
    out = []
    for item in text.split(","):
        item = item.strip().replace(" ", "")
        M = FieldMatrix.zeros(sig.n)
        pos = 0
        while pos < len(item):
            sign = 1
            if item[pos] in "+-":
                sign = -1 if item[pos] == "-" else 1
                pos += 1
            assert item[pos] == "E", item
            k, l = int(item[pos + 1]), int(item[pos + 2])
            M = M + e_matrix(sig, k, l).scale(sign)
            pos += 3
        out.append(M)
    return out


_G2 = """E12-E34, E12-E56, E13+E24, E13-E67, E14-E23,
E14-E57, E15+E26, E15+E47, E16-E25, E16+E37,
E17-E36, E17-E45, E27-E35, E27+E46"""

_SPIN7 = """E12+E34, E13-E24, E14+E23, E56+E78, -E57+E68, E58+E67,
-E15+E26, E12+E56, E16+E25, E37-E48, E34+E78, E38+E47,
E12-E78, E17+E28, E18-E27, E34-E56, E35+E46, E36-E45,
E18+E36, E17+E35, E26-E48, E25+E38, E23+E67, E24+E57"""

# Reference generator lists for the complexified algebras, with xi/eta written as E.
_G2C = """E12-E34, E13+E24, E14-E23, E12-E56, E16-E25, E15+E26, E36-E45,
E35+E46, -E13+E67, -E14+E57, E16+E37, E15+E47, E36-E17, E35-E27"""

_SPIN7C = """E12+E34, E13-E24, E14+E23, E56+E78, -E57+E68, E58+E67, -E15+E26,
E12+E56, E16+E25, E37-E48, E38+E47, E17+E28, E18-E27, E35+E46,
E36-E45, E18+E36, E17+E35, E26-E48, E25+E38, E23+E67, E24+E57"""


def g2_list() -> list[FieldMatrix]:
    """The 14 spanning elements of g2 in so(7)."""
    return _parse_terms(Signature.standard(0, 7), _G2)


def spin7_list() -> list[FieldMatrix]:
    """The 24 listed generators of spin(7) in so(8) (they span 21 dimensions)."""
    return _parse_terms(Signature.standard(0, 8), _SPIN7)


def complex_list(which: str) -> list[FieldMatrix]:
    """The xi/eta list for ``"G2C"`` or ``"Spin7C"`` in so(n, n).

    Read with ``xi_kl = realify(E_kl)`` and ``eta_kl = realify(i E_kl)``,
    where ``E_kl`` is the definite-signature basis element of so(n, C).
    """
    text, n = {"G2C": (_G2C, 7), "Spin7C": (_SPIN7C, 8)}[which]
    base = _parse_terms(Signature.standard(0, n), text)
    return [realify(X) for X in base] + [realify(X.scale(I)) for X in base]


def _xy(sig: Signature, half: int):
    def E(k, l):
        return e_matrix(sig, k, l)

    def X(k, l):
        return E(2 * k - 1, 2 * l - 1) + E(2 * k, 2 * l)

    def Y(k, l):
        return E(2 * k - 1, 2 * l) - E(2 * k, 2 * l - 1)

    def D(k):
        return E(2 * k - 1, 2 * k)

    return X, Y, D


def su_list(n: int) -> list[FieldMatrix]:
    """Spanning set of su(n/2) inside so(n)."""
    sig = Signature.standard(0, n)
    X, Y, D = _xy(sig, n // 2)
    h = n // 2
    out = []
    for k, l in combinations(range(1, h + 1), 2):
        out += [X(k, l), Y(k, l)]
    out += [D(1) - D(k) for k in range(2, h + 1)]
    return out


def sp_list(n: int) -> list[FieldMatrix]:
    """Spanning set of sp(n/4) inside so(n)."""
    sig = Signature.standard(0, n)
    X, Y, D = _xy(sig, n // 2)
    h = n // 4
    out = []
    for k, l in combinations(range(1, h + 1), 2):
        out += [
            X(2 * k - 1, 2 * l - 1) + X(2 * k, 2 * l),
            Y(2 * k - 1, 2 * l - 1) - Y(2 * k, 2 * l),
            X(2 * k - 1, 2 * l) - X(2 * k, 2 * l - 1),
            Y(2 * k - 1, 2 * l) + Y(2 * k, 2 * l - 1),
        ]
    for k in range(1, h + 1):
        out += [X(2 * k - 1, 2 * k), Y(2 * k - 1, 2 * k)]
    for k in range(1, h + 1):
        out.append(D(2 * k - 1) - D(2 * k))
    return out


def _spinor(text: str) -> Spinor:
    """Parse ``"+(1,1,1) +i(-1,-1,-1)"`` style sums of u-basis spinors."""
    terms = []
    for tok in text.split():
        sign = -1 if tok[0] == "-" else 1
        tok = tok.lstrip("+-")
        coef = sign
        if tok.startswith("i"):
            coef = sign * I
            tok = tok[1:]
        eps = tuple(int(x) for x in tok.strip("()").split(",") if x)
        terms.append((coef, eps))
    return spinor_from_terms(terms)


def phi_g2() -> Spinor:
    return _spinor("+(1,1,1) +i(-1,-1,-1)")


def psi_spin7() -> Spinor:
    return _spinor("+(1,-1,-1,1) -(-1,1,1,-1)")


def psi1_g2c() -> Spinor:
    return _spinor("""
        +(1,1,1,1,1,1,1) +(1,1,1,-1,-1,-1,-1)
        +(1,-1,-1,-1,-1,1,1) +(1,-1,-1,1,1,-1,-1)
        +(-1,-1,1,-1,1,-1,1) -(-1,1,-1,1,-1,-1,1)
        -(-1,1,-1,-1,1,1,-1) -(-1,-1,1,1,-1,1,-1)""")


def psi2_g2c() -> Spinor:
    return _spinor("""
        +(-1,1,1,1,1,-1,-1) +(-1,1,1,-1,-1,1,1)
        +(-1,-1,-1,1,1,1,1) +(-1,-1,-1,-1,-1,-1,-1)
        -(1,1,-1,1,-1,1,-1) +(1,-1,1,-1,1,1,-1)
        +(1,-1,1,1,-1,-1,1) +(1,1,-1,-1,1,-1,1)""")


def eta_spin7c() -> Spinor:
    return _spinor("""
        +(1,1,1,1,1,1,1,1) -(1,1,1,1,-1,-1,-1,-1)
        -(-1,-1,-1,-1,1,1,1,1) +(-1,-1,-1,-1,-1,-1,-1,-1)
        -(1,1,-1,-1,1,1,-1,-1) -(-1,-1,1,1,-1,-1,1,1)
        +(1,1,-1,-1,-1,-1,1,1,) +(-1,-1,1,1,1,1,-1,-1)
        -(1,-1,1,-1,1,-1,1,-1) -(-1,1,-1,1,1,-1,1,-1)
        -(1,-1,1,-1,-1,1,-1,1) -(-1,1,-1,1,-1,1,-1,1)
        -(1,-1,-1,1,1,-1,-1,1) -(-1,1,1,-1,-1,1,1,-1)
        +(1,-1,-1,1,-1,1,1,-1) +(-1,1,1,-1,1,-1,-1,1)""")


def phi_sp(N: int) -> list[Spinor]:
    """``phi_k``, k = 0..N: sums of ``u(e_N, e_N, ..., e_1, e_1)`` with k entries -1."""
    out = []
    for k in range(N + 1):
        terms = []
        for eps in product((1, -1), repeat=N):  # eps = (e_N, ..., e_1)
            if sum(1 for e in eps if e == -1) == k:
                doubled = tuple(e for e in eps for _ in range(2))
                terms.append((1, doubled))
        out.append(spinor_from_terms(terms, 2 * N))
    return out


def su_spinors(m: int) -> list[Spinor]:
    """``u(1, ..., 1)`` and ``u(-1, ..., -1)``."""
    return [spinor_from_terms([(1, (1,) * m)]), spinor_from_terms([(1, (-1,) * m)])]
