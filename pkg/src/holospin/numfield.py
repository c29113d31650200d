"""Exact arithmetic over Q(i, sqrt2) and exact linear algebra over that field.

A scalar is stored as ``(ar + ai*i + (br + bi*i)*sqrt2) / d`` with integer
numerators and a single positive denominator ``d`` that shares no common
factor with all four numerators.  That representation is unique, so equality
and hashing are structural.

Matrices are stored sparsely (one dict per row) but behave as dense grids.
Vectors are plain tuples of :class:`FieldScalar`.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from numbers import Rational
from typing import Iterable, Sequence

__all__ = [
    "FieldScalar",
    "FieldMatrix",
    "ZERO",
    "ONE",
    "I",
    "SQRT2",
    "as_scalar",
    "kernel_basis",
    "rank",
    "rref",
    "span_equal",
    "row_space_basis",
    "vector",
    "dot",
]


def _normalize(ar, ai, br, bi, d):
    if d == 0:
        raise ZeroDivisionError("zero denominator")
    if d < 0:
        ar, ai, br, bi, d = -ar, -ai, -br, -bi, -d
    if d != 1:
        g = gcd(gcd(gcd(ar, ai), gcd(br, bi)), d)
        if g > 1:
            ar, ai, br, bi, d = ar // g, ai // g, br // g, bi // g, d // g
    return ar, ai, br, bi, d


class FieldScalar:
    """Element ``a + b*sqrt2`` of Q(i, sqrt2) with ``a, b`` Gaussian rationals.

    Construct from integers, :class:`fractions.Fraction`, or via the
    classmethods :meth:`from_parts` / :meth:`gaussian`.  Instances are
    immutable and hashable.
    """

    __slots__ = ("_ar", "_ai", "_br", "_bi", "_d")

    def __init__(self, value=0):
        if isinstance(value, FieldScalar):
            self._ar, self._ai, self._br, self._bi, self._d = value._key()
            return
        if isinstance(value, bool):
            value = int(value)
        if isinstance(value, int):
            self._ar, self._ai, self._br, self._bi, self._d = value, 0, 0, 0, 1
            return
        if isinstance(value, Rational):
            self._ar, self._ai, self._br, self._bi, self._d = (
                value.numerator, 0, 0, 0, value.denominator)
            return
        if isinstance(value, complex):
            re, im = value.real, value.imag
            if re != int(re) or im != int(im):
                raise TypeError("only complex values with integer parts are exact")
            self._ar, self._ai, self._br, self._bi, self._d = int(re), int(im), 0, 0, 1
            return
        raise TypeError(f"cannot convert {type(value).__name__} to FieldScalar")

    @classmethod
    def _raw(cls, ar, ai, br, bi, d):
        obj = object.__new__(cls)
        obj._ar, obj._ai, obj._br, obj._bi, obj._d = _normalize(ar, ai, br, bi, d)
        return obj

    @classmethod
    def from_parts(cls, a_re=0, a_im=0, b_re=0, b_im=0) -> "FieldScalar":
        """Build ``(a_re + a_im*i) + (b_re + b_im*i)*sqrt2`` from rationals."""
        parts = [Fraction(x) for x in (a_re, a_im, b_re, b_im)]
        d = 1
        for p in parts:
            d = d * p.denominator // gcd(d, p.denominator)
        nums = [p.numerator * (d // p.denominator) for p in parts]
        return cls._raw(*nums, d)

    @classmethod
    def gaussian(cls, re=0, im=0) -> "FieldScalar":
        return cls.from_parts(re, im)

    def _key(self):
        return (self._ar, self._ai, self._br, self._bi, self._d)

    # -- component access -------------------------------------------------

    def parts(self) -> tuple[Fraction, Fraction, Fraction, Fraction]:
        """Return ``(re a, im a, re b, im b)`` as fractions in lowest terms."""
        d = self._d
        return (Fraction(self._ar, d), Fraction(self._ai, d),
                Fraction(self._br, d), Fraction(self._bi, d))

    @property
    def a(self) -> tuple[Fraction, Fraction]:
        return (Fraction(self._ar, self._d), Fraction(self._ai, self._d))

    @property
    def b(self) -> tuple[Fraction, Fraction]:
        return (Fraction(self._br, self._d), Fraction(self._bi, self._d))

    def is_zero(self) -> bool:
        return not (self._ar or self._ai or self._br or self._bi)

    def __bool__(self):
        return not self.is_zero()

    def is_rational(self) -> bool:
        """True if the value lies in Q (no i, no sqrt2 component)."""
        return not (self._ai or self._br or self._bi)

    def is_gaussian(self) -> bool:
        return not (self._br or self._bi)

    def is_real(self) -> bool:
        return not (self._ai or self._bi)

    def to_fraction(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self} is not rational")
        return Fraction(self._ar, self._d)

    def sign(self) -> int:
        """Sign of a rational value (-1, 0 or +1)."""
        return (self.to_fraction() > 0) - (self.to_fraction() < 0)

    def __complex__(self):
        s = 2 ** 0.5
        return complex((self._ar + self._br * s) / self._d,
                       (self._ai + self._bi * s) / self._d)

    # -- arithmetic ---------------------------------------------------------

    def __add__(self, other):
        if not isinstance(other, FieldScalar):
            try:
                other = FieldScalar(other)
            except TypeError:
                return NotImplemented
        d1, d2 = self._d, other._d
        if d1 == d2:
            return FieldScalar._raw(self._ar + other._ar, self._ai + other._ai,
                                    self._br + other._br, self._bi + other._bi, d1)
        return FieldScalar._raw(self._ar * d2 + other._ar * d1,
                                self._ai * d2 + other._ai * d1,
                                self._br * d2 + other._br * d1,
                                self._bi * d2 + other._bi * d1, d1 * d2)

    __radd__ = __add__

    def __neg__(self):
        obj = object.__new__(FieldScalar)
        obj._ar, obj._ai, obj._br, obj._bi, obj._d = (
            -self._ar, -self._ai, -self._br, -self._bi, self._d)
        return obj

    def __pos__(self):
        return self

    def __sub__(self, other):
        if not isinstance(other, FieldScalar):
            try:
                other = FieldScalar(other)
            except TypeError:
                return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, FieldScalar):
            try:
                other = FieldScalar(other)
            except TypeError:
                return NotImplemented
        xr, xi, yr, yi = self._ar, self._ai, self._br, self._bi
        ur, ui, vr, vi = other._ar, other._ai, other._br, other._bi
        if not (yr or yi or vr or vi):
            return FieldScalar._raw(xr * ur - xi * ui, xr * ui + xi * ur, 0, 0,
                                    self._d * other._d)
        # (x + y r)(u + v r) = (xu + 2yv) + (xv + yu) r,  r = sqrt2
        ar = xr * ur - xi * ui + 2 * (yr * vr - yi * vi)
        ai = xr * ui + xi * ur + 2 * (yr * vi + yi * vr)
        br = xr * vr - xi * vi + yr * ur - yi * ui
        bi = xr * vi + xi * vr + yr * ui + yi * ur
        return FieldScalar._raw(ar, ai, br, bi, self._d * other._d)

    __rmul__ = __mul__

    def conj_i(self) -> "FieldScalar":
        """Complex conjugation: i -> -i, sqrt2 fixed."""
        return FieldScalar._raw(self._ar, -self._ai, self._br, -self._bi, self._d)

    def conj_sqrt2(self) -> "FieldScalar":
        """Galois conjugation sqrt2 -> -sqrt2, i fixed."""
        return FieldScalar._raw(self._ar, self._ai, -self._br, -self._bi, self._d)

    def conjugate(self):
        return self.conj_i()

    def inverse(self) -> "FieldScalar":
        if self.is_zero():
            raise ZeroDivisionError("division by zero in Q(i, sqrt2)")
        # Multiply by the three nontrivial conjugates; the product is rational.
        c1 = self.conj_i()
        c2 = self.conj_sqrt2()
        c3 = c1.conj_sqrt2()
        num = c1 * c2 * c3
        norm = self * num
        q = norm.to_fraction()
        return num * FieldScalar(1 / q)

    def __truediv__(self, other):
        if not isinstance(other, FieldScalar):
            try:
                other = FieldScalar(other)
            except TypeError:
                return NotImplemented
        if other.is_rational():
            q = other.to_fraction()
            if q == 0:
                raise ZeroDivisionError("division by zero in Q(i, sqrt2)")
            return FieldScalar._raw(self._ar * q.denominator, self._ai * q.denominator,
                                    self._br * q.denominator, self._bi * q.denominator,
                                    self._d * q.numerator)
        return self * other.inverse()

    def __rtruediv__(self, other):
        return FieldScalar(other) * self.inverse()

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return self.inverse() ** (-k)
        result, base = ONE, self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    # -- comparison / display -------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, FieldScalar):
            return self._key() == other._key()
        try:
            return self._key() == FieldScalar(other)._key()
        except TypeError:
            return NotImplemented

    def __hash__(self):
        return hash(self._key())

    def __repr__(self):
        return f"FieldScalar({self})"

    def __str__(self):
        def gauss(re, im):
            if not im:
                return str(re)
            if not re:
                return "i" if im == 1 else "-i" if im == -1 else f"{im}i"
            sgn = "+" if im > 0 else "-"
            mag = abs(im)
            return f"({re}{sgn}{'' if mag == 1 else mag}i)"

        are, aim, bre, bim = self.parts()
        if not (bre or bim):
            return gauss(are, aim)
        b = gauss(bre, bim)
        bterm = "sqrt2" if b == "1" else "-sqrt2" if b == "-1" else f"{b}*sqrt2"
        if not (are or aim):
            return bterm
        if bterm.startswith("-"):
            return f"{gauss(are, aim)} - {bterm[1:]}"
        return f"{gauss(are, aim)} + {bterm}"


def as_scalar(x) -> FieldScalar:
    return x if isinstance(x, FieldScalar) else FieldScalar(x)


ZERO = FieldScalar(0)
ONE = FieldScalar(1)
I = FieldScalar.gaussian(0, 1)
SQRT2 = FieldScalar.from_parts(0, 0, 1, 0)


def vector(values: Iterable) -> tuple[FieldScalar, ...]:
    return tuple(as_scalar(v) for v in values)


def dot(u: Sequence[FieldScalar], v: Sequence[FieldScalar]) -> FieldScalar:
    """Bilinear sum of products (no conjugation)."""
    total = ZERO
    for a, b in zip(u, v):
        if a and b:
            total = total + a * b
    return total


class FieldMatrix:
    """Immutable ``rows x cols`` matrix over Q(i, sqrt2), sparse row storage."""

    __slots__ = ("rows", "cols", "_data")

    def __init__(self, rows: int, cols: int, data=None):
        self.rows = rows
        self.cols = cols
        if data is None:
            self._data = tuple({} for _ in range(rows))
        else:
            if len(data) != rows:
                raise ValueError("row count mismatch")
            self._data = tuple(data)

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence]) -> "FieldMatrix":
        rows = list(rows)
        ncols = len(rows[0]) if rows else 0
        data = []
        for r in rows:
            if len(r) != ncols:
                raise ValueError("ragged rows")
            data.append({j: s for j, s in ((j, as_scalar(x)) for j, x in enumerate(r)) if s})
        return cls(len(rows), ncols, data)

    @classmethod
    def from_entries(cls, rows: int, cols: int, entries: dict) -> "FieldMatrix":
        data = [{} for _ in range(rows)]
        for (i, j), x in entries.items():
            if not (0 <= i < rows and 0 <= j < cols):
                raise IndexError((i, j))
            x = as_scalar(x)
            if x:
                data[i][j] = x
        return cls(rows, cols, data)

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence], nrows: int | None = None) -> "FieldMatrix":
        columns = list(columns)
        if nrows is None:
            nrows = len(columns[0])
        data = [{} for _ in range(nrows)]
        for j, col in enumerate(columns):
            for i, x in enumerate(col):
                if x:
                    data[i][j] = as_scalar(x)
        return cls(nrows, len(columns), data)

    @classmethod
    def zeros(cls, rows: int, cols: int | None = None) -> "FieldMatrix":
        return cls(rows, rows if cols is None else cols)

    @classmethod
    def identity(cls, n: int) -> "FieldMatrix":
        return cls(n, n, [{i: ONE} for i in range(n)])

    @classmethod
    def diagonal(cls, values: Sequence) -> "FieldMatrix":
        n = len(values)
        data = []
        for i, v in enumerate(values):
            v = as_scalar(v)
            data.append({i: v} if v else {})
        return cls(n, n, data)

    @property
    def shape(self) -> tuple[int, int]:
        return (self.rows, self.cols)

    def __getitem__(self, ij) -> FieldScalar:
        i, j = ij
        if not (0 <= j < self.cols):
            raise IndexError(ij)
        return self._data[i].get(j, ZERO)

    def row(self, i: int) -> tuple[FieldScalar, ...]:
        r = self._data[i]
        return tuple(r.get(j, ZERO) for j in range(self.cols))

    def row_items(self, i: int):
        return self._data[i].items()

    def to_rows(self) -> list[tuple[FieldScalar, ...]]:
        return [self.row(i) for i in range(self.rows)]

    def column(self, j: int) -> tuple[FieldScalar, ...]:
        return tuple(r.get(j, ZERO) for r in self._data)

    def nnz(self) -> int:
        return sum(len(r) for r in self._data)

    def is_zero(self) -> bool:
        return not any(self._data)

    def entries(self):
        """Iterate ``((i, j), value)`` over nonzero entries."""
        for i, r in enumerate(self._data):
            for j in sorted(r):
                yield (i, j), r[j]

    def flatten(self) -> tuple[FieldScalar, ...]:
        out = []
        for i in range(self.rows):
            out.extend(self.row(i))
        return tuple(out)

    def transpose(self) -> "FieldMatrix":
        data = [{} for _ in range(self.cols)]
        for i, r in enumerate(self._data):
            for j, x in r.items():
                data[j][i] = x
        return FieldMatrix(self.cols, self.rows, data)

    @property
    def T(self):
        return self.transpose()

    def conj(self) -> "FieldMatrix":
        return FieldMatrix(self.rows, self.cols,
                           [{j: x.conj_i() for j, x in r.items()} for r in self._data])

    def adjoint(self) -> "FieldMatrix":
        return self.conj().transpose()

    def trace(self) -> FieldScalar:
        t = ZERO
        for i in range(min(self.rows, self.cols)):
            x = self._data[i].get(i)
            if x is not None:
                t = t + x
        return t

    def map(self, fn) -> "FieldMatrix":
        data = []
        for r in self._data:
            nr = {}
            for j, x in r.items():
                y = fn(x)
                if y:
                    nr[j] = y
            data.append(nr)
        return FieldMatrix(self.rows, self.cols, data)

    def scale(self, c) -> "FieldMatrix":
        c = as_scalar(c)
        if not c:
            return FieldMatrix(self.rows, self.cols)
        return FieldMatrix(self.rows, self.cols,
                           [{j: x * c for j, x in r.items()} for r in self._data])

    def __add__(self, other: "FieldMatrix") -> "FieldMatrix":
        if not isinstance(other, FieldMatrix):
            return NotImplemented
        if self.shape != other.shape:
            raise ValueError(f"shape mismatch {self.shape} vs {other.shape}")
        data = []
        for a, b in zip(self._data, other._data):
            r = dict(a)
            for j, x in b.items():
                y = r.get(j)
                if y is None:
                    r[j] = x
                else:
                    s = y + x
                    if s:
                        r[j] = s
                    else:
                        del r[j]
            data.append(r)
        return FieldMatrix(self.rows, self.cols, data)

    def __neg__(self):
        return self.scale(-1)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, c):
        if isinstance(c, FieldMatrix):
            return NotImplemented
        return self.scale(c)

    __rmul__ = __mul__

    def __matmul__(self, other):
        if isinstance(other, FieldMatrix):
            if self.cols != other.rows:
                raise ValueError(f"shape mismatch {self.shape} @ {other.shape}")
            odata = other._data
            data = []
            for r in self._data:
                acc = {}
                for k, x in r.items():
                    for j, y in odata[k].items():
                        p = x * y
                        z = acc.get(j)
                        acc[j] = p if z is None else z + p
                data.append({j: v for j, v in acc.items() if v})
            return FieldMatrix(self.rows, other.cols, data)
        vec = tuple(other)
        if len(vec) != self.cols:
            raise ValueError("vector length mismatch")
        out = []
        for r in self._data:
            s = ZERO
            for k, x in r.items():
                y = vec[k]
                if y:
                    s = s + x * y
            out.append(s)
        return tuple(out)

    def kron(self, other: "FieldMatrix") -> "FieldMatrix":
        """Kronecker product; the right factor's index varies fastest."""
        data = []
        for ra in self._data:
            for rb in other._data:
                r = {}
                for ja, xa in ra.items():
                    base = ja * other.cols
                    for jb, xb in rb.items():
                        r[base + jb] = xa * xb
                data.append(r)
        return FieldMatrix(self.rows * other.rows, self.cols * other.cols, data)

    def commutator(self, other: "FieldMatrix") -> "FieldMatrix":
        return self @ other - other @ self

    def vstack(self, *others: "FieldMatrix") -> "FieldMatrix":
        data = list(self._data)
        for o in others:
            if o.cols != self.cols:
                raise ValueError("column count mismatch")
            data.extend(o._data)
        return FieldMatrix(len(data), self.cols, data)

    def __eq__(self, other):
        if not isinstance(other, FieldMatrix):
            return NotImplemented
        return self.shape == other.shape and self._data == other._data

    def __hash__(self):
        return hash((self.rows, self.cols,
                     tuple(tuple(sorted(r.items())) for r in self._data)))

    def __repr__(self):
        return f"FieldMatrix({self.rows}x{self.cols}, nnz={self.nnz()})"

    def pretty(self) -> str:
        cells = [[str(x) for x in self.row(i)] for i in range(self.rows)]
        w = max((len(c) for row in cells for c in row), default=1)
        return "\n".join("[" + " ".join(c.rjust(w) for c in row) + "]" for row in cells)


# -- elimination ---------------------------------------------------------------


class _Echelon:
    """Incrementally maintained reduced row echelon form of sparse rows."""

    def __init__(self, ncols: int):
        self.ncols = ncols
        self.pivots: dict[int, dict[int, FieldScalar]] = {}

    def reduce(self, row: dict) -> dict:
        row = dict(row)
        # Pivot rows are mutually reduced, so one pass over a snapshot suffices.
        for c in [c for c in row if c in self.pivots]:
            f = row.get(c)
            if f is None:
                continue
            for j, x in self.pivots[c].items():
                y = row.get(j)
                v = -(f * x) if y is None else y - f * x
                if v:
                    row[j] = v
                else:
                    row.pop(j, None)
        return row

    def add(self, row: dict) -> bool:
        row = self.reduce(row)
        if not row:
            return False
        c = min(row)
        inv = row[c].inverse()
        row = {j: x * inv for j, x in row.items()}
        row[c] = ONE
        for prow in self.pivots.values():
            f = prow.get(c)
            if f is None:
                continue
            for j, x in row.items():
                y = prow.get(j)
                v = -(f * x) if y is None else y - f * x
                if v:
                    prow[j] = v
                else:
                    prow.pop(j, None)
        self.pivots[c] = row
        return True

    @property
    def rank(self) -> int:
        return len(self.pivots)

    def rows(self) -> list[dict]:
        return [self.pivots[c] for c in sorted(self.pivots)]

    def null_basis(self) -> list[tuple[FieldScalar, ...]]:
        n = self.ncols
        pivcols = sorted(self.pivots)
        # Column-indexed view of pivot rows for the free columns.
        free = [j for j in range(n) if j not in self.pivots]
        by_col: dict[int, list] = {f: [] for f in free}
        for c in pivcols:
            for j, x in self.pivots[c].items():
                if j != c:
                    by_col[j].append((c, x))
        basis = []
        for f in free:
            v = [ZERO] * n
            v[f] = ONE
            for c, x in by_col[f]:
                v[c] = -x
            basis.append(tuple(v))
        return basis


def _rows_of(M) -> tuple[int, list[dict]]:
    if isinstance(M, FieldMatrix):
        return M.cols, [dict(M.row_items(i)) for i in range(M.rows)]
    rows = [vector(r) for r in M]
    if not rows:
        raise ValueError("empty row list has no column count")
    n = len(rows[0])
    for r in rows:
        if len(r) != n:
            raise ValueError("vectors of different lengths")
    return n, [{j: x for j, x in enumerate(r) if x} for r in rows]


def _echelon(M, ncols=None) -> _Echelon:
    if ncols is not None and not isinstance(M, FieldMatrix) and len(M) == 0:
        return _Echelon(ncols)
    n, rows = _rows_of(M)
    ech = _Echelon(n)
    for r in rows:
        if r:
            ech.add(r)
    return ech


def rref(M) -> tuple[list[tuple[FieldScalar, ...]], list[int]]:
    """Reduced row echelon form: nonzero rows (as tuples) and pivot columns."""
    ech = _echelon(M)
    n = ech.ncols
    pivcols = sorted(ech.pivots)
    out = []
    for c in pivcols:
        r = ech.pivots[c]
        out.append(tuple(r.get(j, ZERO) for j in range(n)))
    return out, pivcols


def kernel_basis(M: FieldMatrix) -> list[tuple[FieldScalar, ...]]:
    """Basis of ``{v : M v = 0}``.

    The basis is the one read off the reduced row echelon form: one vector per
    free column (ascending), equal to 1 at that column and 0 at the other free
    columns.  It depends only on the null space, so it is reproducible.
    """
    if M.rows == 0:
        return [tuple(ONE if j == i else ZERO for j in range(M.cols)) for i in range(M.cols)]
    return _echelon(M).null_basis()


def rank(M) -> int:
    """Rank of a matrix or of a list of equal-length vectors."""
    if not isinstance(M, FieldMatrix) and len(M) == 0:
        return 0
    return _echelon(M).rank


def row_space_basis(vectors) -> list[tuple[FieldScalar, ...]]:
    """Canonical basis (RREF rows) of the span of ``vectors``."""
    if len(vectors) == 0:
        return []
    return rref(vectors)[0]


def span_equal(A, B) -> bool:
    """True iff the spans of the vector lists ``A`` and ``B`` coincide."""
    A = [vector(a) for a in A]
    B = [vector(b) for b in B]
    lengths = {len(v) for v in A + B}
    if len(lengths) > 1:
        raise ValueError(f"vectors of different lengths: {sorted(lengths)}")
    ra, rb = rank(A), rank(B)
    if ra != rb:
        return False
    return rank(A + B) == ra
