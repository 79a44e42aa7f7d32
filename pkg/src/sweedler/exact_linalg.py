"""Exact scalars and dense exact linear algebra over Q, F_p and Z."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property, reduce
from math import gcd, lcm
from typing import Iterable, Sequence, Union


class FpElement:
    """Residue class modulo a prime ``p``, stored in ``[0, p)``."""

    __slots__ = ("value", "p")

    def __init__(self, value: int, p: int):
        self.value = value % p
        self.p = p

    def _coerce(self, other) -> FpElement | None:
        if isinstance(other, FpElement):
            if other.p != self.p:
                raise ValueError(f"mixing residues mod {self.p} and mod {other.p}")
            return other
        if isinstance(other, int):
            return FpElement(other, self.p)
        if isinstance(other, Fraction):
            return FpElement(other.numerator, self.p) / FpElement(other.denominator, self.p)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return FpElement(self.value + o.value, self.p)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return FpElement(self.value - o.value, self.p)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return FpElement(o.value - self.value, self.p)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return FpElement(self.value * o.value, self.p)

    __rmul__ = __mul__

    def __neg__(self):
        return FpElement(-self.value, self.p)

    def inverse(self) -> FpElement:
        if self.value == 0:
            raise ZeroDivisionError(f"0 has no inverse mod {self.p}")
        return FpElement(pow(self.value, -1, self.p), self.p)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        return FpElement(pow(self.value, n, self.p), self.p)

    def __eq__(self, other):
        if isinstance(other, FpElement):
            return self.p == other.p and self.value == other.value
        if isinstance(other, int):
            return (other - self.value) % self.p == 0
        return NotImplemented

    def __hash__(self):
        return hash((self.value, self.p))

    def __bool__(self):
        return self.value != 0

    def __int__(self):
        return self.value

    def __repr__(self):
        return f"{self.value} mod {self.p}"


Scalar = Union[Fraction, int, FpElement]


@dataclass(frozen=True)
class Ring:
    """Tag for one of the three supported base rings.

    ``kind`` is ``"Q"``, ``"Z"`` or ``"Fp"``; ``p`` is the prime for ``"Fp"``.
    Calling the ring coerces a Python number into its canonical element type.
    """

    kind: str
    p: int = 0

    @property
    def name(self) -> str:
        return f"Fp:{self.p}" if self.kind == "Fp" else self.kind

    @property
    def is_field(self) -> bool:
        return self.kind != "Z"

    @property
    def characteristic(self) -> int:
        return self.p if self.kind == "Fp" else 0

    @property
    def zero(self) -> Scalar:
        return self(0)

    @property
    def one(self) -> Scalar:
        return self(1)

    def __call__(self, x) -> Scalar:
        # already canonical: both types are immutable, so hand them back unchanged
        if (self.kind == "Q" and type(x) is Fraction) or (self.kind == "Z" and type(x) is int):
            return x
        if self.kind == "Q":
            if isinstance(x, FpElement):
                raise TypeError("cannot lift a residue to Q")
            return Fraction(x)
        if self.kind == "Z":
            if isinstance(x, FpElement):
                raise TypeError("cannot lift a residue to Z")
            q = Fraction(x)
            if q.denominator != 1:
                raise ValueError(f"{x} is not an integer")
            return q.numerator
        if isinstance(x, FpElement):
            if x.p != self.p:
                raise ValueError(f"residue mod {x.p} is not in F_{self.p}")
            return x
        q = Fraction(x)
        if q.denominator % self.p == 0:
            raise ZeroDivisionError(f"denominator {q.denominator} vanishes mod {self.p}")
        return FpElement(q.numerator, self.p) / q.denominator

    def from_pair(self, num: int, den: int = 1) -> Scalar:
        if den == 0:
            raise ZeroDivisionError("zero denominator")
        return self(Fraction(num, den))

    def to_pair(self, x: Scalar) -> tuple[int, int]:
        if isinstance(x, FpElement):
            return (x.value, 1)
        q = Fraction(x)
        return (q.numerator, q.denominator)

    def __str__(self):
        return self.name


QQ = Ring("Q")
ZZ = Ring("Z")

_P_MAX = 2**63


def GF(p: int) -> Ring:
    from sympy import isprime

    if not 2 <= p < _P_MAX or not isprime(p):
        raise ValueError(f"{p} is not a prime below 2^63")
    return Ring("Fp", p)


def parse_ring(name: str) -> Ring:
    """Parse ``"Q"``, ``"Z"`` or ``"Fp:<prime>"``."""
    if name == "Q":
        return QQ
    if name == "Z":
        return ZZ
    if name.startswith("Fp:"):
        try:
            p = int(name[3:])
        except ValueError:
            raise ValueError(f"bad prime in base ring {name!r}") from None
        return GF(p)
    raise ValueError(f"unknown base ring {name!r}")


@dataclass(frozen=True)
class Matrix:
    """Dense immutable matrix over a :class:`Ring`, stored row-major."""

    ring: Ring
    rows: int
    cols: int
    entries: tuple[tuple[Scalar, ...], ...]

    def __post_init__(self):
        if len(self.entries) != self.rows or any(len(r) != self.cols for r in self.entries):
            raise ValueError("entry table does not match the declared shape")

    @classmethod
    def from_rows(cls, ring: Ring, rows: Iterable[Iterable], cols: int | None = None) -> Matrix:
        data = tuple(tuple(ring(x) for x in r) for r in rows)
        if cols is None:
            if not data:
                raise ValueError("cols is required for a matrix with no rows")
            cols = len(data[0])
        return cls(ring, len(data), cols, data)

    @classmethod
    def zeros(cls, ring: Ring, rows: int, cols: int) -> Matrix:
        z = ring.zero
        return cls(ring, rows, cols, tuple((z,) * cols for _ in range(rows)))

    @classmethod
    def identity(cls, ring: Ring, n: int) -> Matrix:
        z, o = ring.zero, ring.one
        return cls(ring, n, n, tuple(tuple(o if i == j else z for j in range(n)) for i in range(n)))

    @classmethod
    def column(cls, ring: Ring, vec: Sequence) -> Matrix:
        return cls.from_rows(ring, [[x] for x in vec], cols=1)

    @classmethod
    def row_vector(cls, ring: Ring, vec: Sequence) -> Matrix:
        return cls.from_rows(ring, [list(vec)], cols=len(vec))

    @classmethod
    def from_columns(cls, ring: Ring, columns: Sequence[Sequence], rows: int) -> Matrix:
        return cls.from_rows(ring, [[c[i] for c in columns] for i in range(rows)], cols=len(columns))

    @property
    def shape(self) -> tuple[int, int]:
        return (self.rows, self.cols)

    def __getitem__(self, ij: tuple[int, int]) -> Scalar:
        i, j = ij
        return self.entries[i][j]

    def row(self, i: int) -> tuple[Scalar, ...]:
        return self.entries[i]

    def col(self, j: int) -> tuple[Scalar, ...]:
        return tuple(r[j] for r in self.entries)

    def columns(self) -> list[tuple[Scalar, ...]]:
        return [self.col(j) for j in range(self.cols)]

    def to_lists(self) -> list[list[Scalar]]:
        return [list(r) for r in self.entries]

    @property
    def T(self) -> Matrix:
        return Matrix(self.ring, self.cols, self.rows, tuple(zip(*self.entries)) if self.rows else tuple(() for _ in range(self.cols)))

    def _check_ring(self, other: Matrix):
        if self.ring != other.ring:
            raise ValueError(f"base ring mismatch: {self.ring} vs {other.ring}")

    def __add__(self, other: Matrix) -> Matrix:
        self._check_ring(other)
        if self.shape != other.shape:
            raise ValueError(f"shape mismatch {self.shape} vs {other.shape}")
        return Matrix(self.ring, self.rows, self.cols,
                      tuple(tuple(a + b for a, b in zip(r, s)) for r, s in zip(self.entries, other.entries)))

    def __sub__(self, other: Matrix) -> Matrix:
        return self + (-other)

    def __neg__(self) -> Matrix:
        return Matrix(self.ring, self.rows, self.cols, tuple(tuple(-a for a in r) for r in self.entries))

    def scale(self, c) -> Matrix:
        c = self.ring(c)
        return Matrix(self.ring, self.rows, self.cols, tuple(tuple(c * a for a in r) for r in self.entries))

    def __matmul__(self, other: Matrix) -> Matrix:
        self._check_ring(other)
        if self.cols != other.rows:
            raise ValueError(f"cannot multiply {self.shape} by {other.shape}")
        z = self.ring.zero
        # skip zeros: most maps here are permutation-sparse
        other_rows = [[(j, b) for j, b in enumerate(r) if b] for r in other.entries]
        out = []
        for r in self.entries:
            acc = [z] * other.cols
            for k, a in enumerate(r):
                if a:
                    for j, b in other_rows[k]:
                        acc[j] = acc[j] + a * b
            out.append(tuple(acc))
        return Matrix(self.ring, self.rows, other.cols, tuple(out))

    def apply(self, vec: Sequence[Scalar]) -> tuple[Scalar, ...]:
        if len(vec) != self.cols:
            raise ValueError(f"vector of length {len(vec)} for a matrix with {self.cols} columns")
        z = self.ring.zero
        out = []
        for r in self._sparse_rows:
            acc = z
            for k, a in r:
                x = vec[k]
                if x:
                    acc = acc + a * x
            out.append(acc)
        return tuple(out)

    @cached_property
    def _sparse_rows(self) -> tuple[tuple[tuple[int, Scalar], ...], ...]:
        return tuple(tuple((k, a) for k, a in enumerate(r) if a) for r in self.entries)

    def is_zero(self) -> bool:
        return not any(a for r in self.entries for a in r)

    def hstack(self, other: Matrix) -> Matrix:
        self._check_ring(other)
        if self.rows != other.rows:
            raise ValueError("row count mismatch")
        return Matrix(self.ring, self.rows, self.cols + other.cols,
                      tuple(r + s for r, s in zip(self.entries, other.entries)))

    def vstack(self, other: Matrix) -> Matrix:
        self._check_ring(other)
        if self.cols != other.cols:
            raise ValueError("column count mismatch")
        return Matrix(self.ring, self.rows + other.rows, self.cols, self.entries + other.entries)

    def submatrix(self, rows: Sequence[int], cols: Sequence[int]) -> Matrix:
        return Matrix(self.ring, len(rows), len(cols),
                      tuple(tuple(self.entries[i][j] for j in cols) for i in rows))

    def change_ring(self, ring: Ring) -> Matrix:
        return Matrix.from_rows(ring, self.entries, cols=self.cols)

    def __repr__(self):
        body = "; ".join(" ".join(str(a) for a in r) for r in self.entries)
        return f"Matrix[{self.ring}]({self.rows}x{self.cols}: {body})"


def kronecker(m: Matrix, n: Matrix) -> Matrix:
    """Tensor product of two matrices; basis pair ``(i, j)`` has index ``i * n.rows + j``."""
    m._check_ring(n)
    z = m.ring.zero
    out = []
    for mr in m.entries:
        for nr in n.entries:
            out.append(tuple((a * b if a and b else z) for a in mr for b in nr))
    return Matrix(m.ring, m.rows * n.rows, m.cols * n.cols, tuple(out))


def tensor_index(i: int, j: int, n_second: int) -> int:
    return i * n_second + j


# --- elimination over fields -------------------------------------------------

def _require_field(m: Matrix, op: str):
    if not m.ring.is_field:
        raise ValueError(f"{op} needs a field base ring, got {m.ring}; use smith_normal_form over Z")


def _integer_rows(m: Matrix) -> list[list[int]]:
    """Clear denominators row by row (entries are Fractions over Q)."""
    out = []
    for r in m.entries:
        den = 1
        for a in r:
            if a and a.denominator != 1:
                den = lcm(den, a.denominator)
        out.append([a.numerator * (den // a.denominator) if a else 0 for a in r])
    return out


def _fraction_free_rank(a: list[list[int]]) -> int:
    """Rank of an integer matrix by fraction-free elimination (mutates ``a``).

    Rows with a zero in the pivot column are left alone and every updated row
    is divided by its content, which keeps entries small on sparse inputs.
    """
    m = len(a)
    n = len(a[0]) if m else 0
    r = 0
    for c in range(n):
        piv = next((i for i in range(r, m) if a[i][c]), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        row_r = a[r]
        p = row_r[c]
        nz = [j for j in range(c, n) if row_r[j]]
        for i in range(r + 1, m):
            row_i = a[i]
            aic = row_i[c]
            if not aic:
                continue
            if p != 1:
                row_i = [x * p for x in row_i]
            for j in nz:
                row_i[j] -= aic * row_r[j]
            g = gcd_all(row_i)
            a[i] = [x // g for x in row_i] if g > 1 else row_i
        r += 1
        if r == m:
            break
    return r


def bareiss_det(a: Sequence[Sequence[int]]) -> int:
    """Determinant of a square integer matrix by Bareiss elimination."""
    a = [list(map(int, r)) for r in a]
    n = len(a)
    if any(len(r) != n for r in a):
        raise ValueError("determinant of a non-square matrix")
    sign, prev = 1, 1
    for k in range(n):
        piv = next((i for i in range(k, n) if a[i][k]), None)
        if piv is None:
            return 0
        if piv != k:
            a[k], a[piv] = a[piv], a[k]
            sign = -sign
        p = a[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * p - a[i][k] * a[k][j]) // prev
        prev = p
    return sign * a[n - 1][n - 1] if n else 1


def _rref(m: Matrix) -> tuple[list[list[Scalar]], list[int]]:
    ring = m.ring
    a = [list(r) for r in m.entries]
    pivots: list[int] = []
    r = 0
    for c in range(m.cols):
        piv = next((i for i in range(r, m.rows) if a[i][c]), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        inv = ring.one / a[r][c]
        a[r] = [x * inv for x in a[r]]
        for i in range(m.rows):
            if i != r and a[i][c]:
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        pivots.append(c)
        r += 1
        if r == m.rows:
            break
    return a, pivots


def rank(m: Matrix) -> int:
    """Row rank over Q or F_p."""
    _require_field(m, "rank")
    if m.rows == 0 or m.cols == 0:
        return 0
    if m.ring.kind == "Q":
        return _fraction_free_rank(_integer_rows(m))
    return len(_rref(m)[1])


def kernel_basis(m: Matrix) -> Matrix:
    """Matrix whose columns are a basis of the null space of ``m``."""
    _require_field(m, "kernel_basis")
    ring = m.ring
    a, pivots = _rref(m)
    free = [c for c in range(m.cols) if c not in pivots]
    cols = []
    for f in free:
        v = [ring.zero] * m.cols
        v[f] = ring.one
        for row, pc in enumerate(pivots):
            v[pc] = -a[row][f]
        cols.append(v)
    return Matrix.from_columns(ring, cols, m.cols)


def solve(m: Matrix, b: Sequence) -> tuple[Scalar, ...] | None:
    """Some ``x`` with ``m x = b`` (free variables set to zero), or ``None``."""
    _require_field(m, "solve")
    if len(b) != m.rows:
        raise ValueError(f"right-hand side has length {len(b)}, matrix has {m.rows} rows")
    ring = m.ring
    aug = m.hstack(Matrix.column(ring, b))
    a, pivots = _rref(aug)
    if m.cols in pivots:
        return None
    x = [ring.zero] * m.cols
    for row, pc in enumerate(pivots):
        x[pc] = a[row][m.cols]
    return tuple(x)


def inverse(m: Matrix) -> Matrix:
    """Inverse of a square matrix; over Z the inverse must itself be integral."""
    if m.rows != m.cols:
        raise ValueError("inverse of a non-square matrix")
    work = m if m.ring.is_field else m.change_ring(QQ)
    a, pivots = _rref(work.hstack(Matrix.identity(work.ring, m.rows)))
    if pivots[: m.rows] != list(range(m.rows)) or len(pivots) < m.rows:
        raise ValueError("matrix is singular")
    inv = Matrix.from_rows(work.ring, [r[m.cols:] for r in a], cols=m.rows)
    return inv if m.ring.is_field else inv.change_ring(ZZ)


def column_space_contains(m: Matrix, vec: Sequence) -> bool:
    return solve(m, vec) is not None


def field_rank(m: Matrix) -> int:
    """Rank, computing over Q when the base ring is Z."""
    return rank(m if m.ring.is_field else m.change_ring(QQ))


# --- Smith normal form over Z -------------------------------------------------

def smith_normal_form(m: Matrix) -> tuple[Matrix, Matrix, Matrix]:
    """Return ``(U, D, V)`` with ``m == U @ D @ V``, ``U``/``V`` unimodular, ``D`` diagonal.

    The diagonal of ``D`` is non-negative and satisfies ``d[i] | d[i+1]``.
    """
    if m.ring != ZZ:
        raise ValueError(f"smith_normal_form needs base ring Z, got {m.ring}")
    rows, cols = m.rows, m.cols
    a = [list(r) for r in m.entries]
    u = [[int(i == j) for j in range(rows)] for i in range(rows)]
    v = [[int(i == j) for j in range(cols)] for i in range(cols)]

    # a row op E on `a` is mirrored by U <- U E^-1 (a column op on U);
    # a column op F on `a` is mirrored by V <- F^-1 V (a row op on V)
    def swap_rows(i, j):
        a[i], a[j] = a[j], a[i]
        for r in u:
            r[i], r[j] = r[j], r[i]

    def swap_cols(i, j):
        for r in a:
            r[i], r[j] = r[j], r[i]
        v[i], v[j] = v[j], v[i]

    def add_row(dst, src, q):  # row_dst += q * row_src
        a[dst] = [x + q * y for x, y in zip(a[dst], a[src])]
        for r in u:
            r[src] -= q * r[dst]

    def add_col(dst, src, q):  # col_dst += q * col_src
        for r in a:
            r[dst] += q * r[src]
        v[src] = [x - q * y for x, y in zip(v[src], v[dst])]

    def negate_row(i):
        a[i] = [-x for x in a[i]]
        for r in u:
            r[i] = -r[i]

    for t in range(min(rows, cols)):
        nonzero = [(abs(a[i][j]), i, j) for i in range(t, rows) for j in range(t, cols) if a[i][j]]
        if not nonzero:
            break
        _, pi, pj = min(nonzero)
        swap_rows(t, pi)
        swap_cols(t, pj)
        while True:
            changed = False
            for i in range(t + 1, rows):
                if a[i][t]:
                    add_row(i, t, -(a[i][t] // a[t][t]))
                    if a[i][t]:
                        swap_rows(t, i)
                        changed = True
            for j in range(t + 1, cols):
                if a[t][j]:
                    add_col(j, t, -(a[t][j] // a[t][t]))
                    if a[t][j]:
                        swap_cols(t, j)
                        changed = True
            if changed:
                continue
            bad = next(((i, j) for i in range(t + 1, rows) for j in range(t + 1, cols)
                        if a[i][j] % a[t][t]), None)
            if bad is None:
                break
            add_row(t, bad[0], 1)
        if a[t][t] < 0:
            negate_row(t)

    return (Matrix.from_rows(ZZ, u, cols=rows),
            Matrix.from_rows(ZZ, a, cols=cols),
            Matrix.from_rows(ZZ, v, cols=cols))


def invariant_factors(m: Matrix) -> list[int]:
    """Diagonal of the Smith form, length ``min(rows, cols)`` (zeros included)."""
    _, d, _ = smith_normal_form(m)
    return [d[i, i] for i in range(min(m.rows, m.cols))]


def integer_det(m: Matrix) -> int:
    if m.ring != ZZ:
        raise ValueError("integer_det needs base ring Z")
    return bareiss_det(m.entries)


def gcd_all(xs: Iterable[int]) -> int:
    return reduce(gcd, xs, 0)
