"""Exact rational vectors/matrices and integer-lattice primitives.

Scalars are `fractions.Fraction` throughout, which keeps every value in
canonical form (positive denominator, gcd(num, den) = 1) for free.  Nothing
in this module ever rounds; determinants, inverses and kernel bases are all
computed with exact elimination.  Sizes are small (n <= 8 in practice), so
everything is dense.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm
from typing import Iterable, Sequence

from .errors import DimensionMismatch, SingularMatrix, ZeroFunctional

Scalar = int | Fraction


def _frac(x: Scalar) -> Fraction:
    return x if isinstance(x, Fraction) else Fraction(x)


@dataclass(frozen=True)
class Vec:
    """Immutable vector of exact rationals."""

    entries: tuple[Fraction, ...]

    def __init__(self, entries: Iterable[Scalar]):
        object.__setattr__(self, "entries", tuple(_frac(e) for e in entries))
        if not self.entries:
            raise DimensionMismatch("empty vector")

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    def __getitem__(self, i: int) -> Fraction:
        return self.entries[i]

    def __add__(self, other: "Vec") -> "Vec":
        self._check_len(other)
        return Vec(a + b for a, b in zip(self.entries, other.entries))

    def __sub__(self, other: "Vec") -> "Vec":
        self._check_len(other)
        return Vec(a - b for a, b in zip(self.entries, other.entries))

    def __neg__(self) -> "Vec":
        return Vec(-a for a in self.entries)

    def __rmul__(self, c: Scalar) -> "Vec":
        c = _frac(c)
        return Vec(c * a for a in self.entries)

    def dot(self, other: "Vec") -> Fraction:
        """Plain coordinate dot product (no form involved)."""
        self._check_len(other)
        return sum((a * b for a, b in zip(self.entries, other.entries)), Fraction(0))

    def is_zero(self) -> bool:
        return all(a == 0 for a in self.entries)

    def is_integral(self) -> bool:
        return all(a.denominator == 1 for a in self.entries)

    def to_ints(self) -> tuple[int, ...]:
        if not self.is_integral():
            raise ValueError("vector has non-integer entries")
        return tuple(int(a) for a in self.entries)

    def _check_len(self, other: "Vec") -> None:
        if len(self) != len(other):
            raise DimensionMismatch(f"vector lengths {len(self)} != {len(other)}")

    @staticmethod
    def zero(n: int) -> "Vec":
        return Vec([0] * n)

    @staticmethod
    def unit(n: int, i: int) -> "Vec":
        return Vec([1 if j == i else 0 for j in range(n)])

    def __repr__(self) -> str:
        return "Vec(" + ", ".join(str(a) for a in self.entries) + ")"


@dataclass(frozen=True)
class Mat:
    """Immutable matrix of exact rationals (rectangular allowed)."""

    rows: tuple[tuple[Fraction, ...], ...]

    def __init__(self, rows: Iterable[Iterable[Scalar]]):
        tup = tuple(tuple(_frac(e) for e in row) for row in rows)
        if not tup or not tup[0]:
            raise DimensionMismatch("empty matrix")
        ncols = len(tup[0])
        if any(len(r) != ncols for r in tup):
            raise DimensionMismatch("ragged rows")
        object.__setattr__(self, "rows", tup)

    @property
    def nrows(self) -> int:
        return len(self.rows)

    @property
    def ncols(self) -> int:
        return len(self.rows[0])

    @property
    def is_square(self) -> bool:
        return self.nrows == self.ncols

    def __getitem__(self, ij: tuple[int, int]) -> Fraction:
        return self.rows[ij[0]][ij[1]]

    def row(self, i: int) -> Vec:
        return Vec(self.rows[i])

    def col(self, j: int) -> Vec:
        return Vec(r[j] for r in self.rows)

    def cols(self) -> list[Vec]:
        return [self.col(j) for j in range(self.ncols)]

    def __add__(self, other: "Mat") -> "Mat":
        self._check_shape(other)
        return Mat(
            tuple(a + b for a, b in zip(ra, rb))
            for ra, rb in zip(self.rows, other.rows)
        )

    def __sub__(self, other: "Mat") -> "Mat":
        self._check_shape(other)
        return Mat(
            tuple(a - b for a, b in zip(ra, rb))
            for ra, rb in zip(self.rows, other.rows)
        )

    def __neg__(self) -> "Mat":
        return Mat(tuple(-a for a in r) for r in self.rows)

    def __rmul__(self, c: Scalar) -> "Mat":
        c = _frac(c)
        return Mat(tuple(c * a for a in r) for r in self.rows)

    def __matmul__(self, other):
        if isinstance(other, Vec):
            if self.ncols != len(other):
                raise DimensionMismatch(f"{self.ncols} cols vs vector length {len(other)}")
            return Vec(
                sum((a * b for a, b in zip(row, other.entries)), Fraction(0))
                for row in self.rows
            )
        if isinstance(other, Mat):
            if self.ncols != other.nrows:
                raise DimensionMismatch(f"{self.ncols} cols vs {other.nrows} rows")
            bt = other.transpose().rows
            return Mat(
                tuple(
                    sum((a * b for a, b in zip(row, colt)), Fraction(0))
                    for colt in bt
                )
                for row in self.rows
            )
        return NotImplemented

    def transpose(self) -> "Mat":
        return Mat(zip(*self.rows))

    def trace(self) -> Fraction:
        self._require_square()
        return sum((self.rows[i][i] for i in range(self.nrows)), Fraction(0))

    def determinant(self) -> Fraction:
        """Exact determinant by Gaussian elimination over the rationals."""
        self._require_square()
        n = self.nrows
        a = [list(r) for r in self.rows]
        det = Fraction(1)
        for c in range(n):
            piv = next((r for r in range(c, n) if a[r][c] != 0), None)
            if piv is None:
                return Fraction(0)
            if piv != c:
                a[c], a[piv] = a[piv], a[c]
                det = -det
            det *= a[c][c]
            inv = 1 / a[c][c]
            for r in range(c + 1, n):
                if a[r][c] == 0:
                    continue
                f = a[r][c] * inv
                for k in range(c, n):
                    a[r][k] -= f * a[c][k]
        return det

    def inverse(self) -> "Mat":
        """Exact inverse via Gauss-Jordan; raises SingularMatrix if det = 0."""
        self._require_square()
        n = self.nrows
        a = [list(r) + [Fraction(1) if j == i else Fraction(0) for j in range(n)]
             for i, r in enumerate(self.rows)]
        for c in range(n):
            piv = next((r for r in range(c, n) if a[r][c] != 0), None)
            if piv is None:
                raise SingularMatrix("matrix is not invertible")
            if piv != c:
                a[c], a[piv] = a[piv], a[c]
            inv = 1 / a[c][c]
            a[c] = [x * inv for x in a[c]]
            for r in range(n):
                if r != c and a[r][c] != 0:
                    f = a[r][c]
                    a[r] = [x - f * y for x, y in zip(a[r], a[c])]
        return Mat(tuple(row[n:]) for row in a)

    def solve(self, b: Vec) -> Vec:
        """Solve self @ x = b exactly; raises SingularMatrix when singular."""
        if self.nrows != len(b):
            raise DimensionMismatch("right-hand side length mismatch")
        return self.inverse() @ b

    def rank(self) -> int:
        a = [list(r) for r in self.rows]
        nr, nc = self.nrows, self.ncols
        rank = 0
        for c in range(nc):
            piv = next((r for r in range(rank, nr) if a[r][c] != 0), None)
            if piv is None:
                continue
            a[rank], a[piv] = a[piv], a[rank]
            inv = 1 / a[rank][c]
            for r in range(rank + 1, nr):
                if a[r][c] != 0:
                    f = a[r][c] * inv
                    for k in range(c, nc):
                        a[r][k] -= f * a[rank][k]
            rank += 1
            if rank == nr:
                break
        return rank

    def is_symmetric(self) -> bool:
        return self.is_square and all(
            self.rows[i][j] == self.rows[j][i]
            for i in range(self.nrows)
            for j in range(i)
        )

    def is_integral(self) -> bool:
        return all(a.denominator == 1 for r in self.rows for a in r)

    def is_unimodular(self) -> bool:
        """Integer matrix with determinant +-1 (element of GL_n(Z))."""
        return self.is_square and self.is_integral() and abs(self.determinant()) == 1

    def _check_shape(self, other: "Mat") -> None:
        if self.nrows != other.nrows or self.ncols != other.ncols:
            raise DimensionMismatch("matrix shapes differ")

    def _require_square(self) -> None:
        if not self.is_square:
            raise DimensionMismatch("square matrix required")

    @staticmethod
    def identity(n: int) -> "Mat":
        return Mat(tuple(1 if i == j else 0 for j in range(n)) for i in range(n))

    @staticmethod
    def zero(n: int, m: int | None = None) -> "Mat":
        return Mat(tuple(0 for _ in range(m or n)) for _ in range(n))

    @staticmethod
    def from_cols(cols: Sequence[Vec]) -> "Mat":
        return Mat((c[i] for c in cols) for i in range(len(cols[0])))

    @staticmethod
    def diagonal(diag: Iterable[Scalar]) -> "Mat":
        d = [_frac(x) for x in diag]
        return Mat(
            tuple(d[i] if i == j else 0 for j in range(len(d))) for i in range(len(d))
        )

    def __repr__(self) -> str:
        return "Mat[" + "; ".join(" ".join(str(a) for a in r) for r in self.rows) + "]"


def primitive_integer_vector(f: Vec) -> tuple[int, ...]:
    """Scale a nonzero rational vector to a primitive integer vector.

    Multiplies by the lcm of denominators, then divides by the gcd.  The sign
    is kept as-is (the kernel is the same either way).
    """
    if f.is_zero():
        raise ZeroFunctional("zero functional has no primitive form")
    den = lcm(*(a.denominator for a in f.entries))
    ints = [int(a * den) for a in f.entries]
    g = gcd(*ints)
    return tuple(x // g for x in ints)


def hermite_row_reduce(rows: Sequence[Sequence[int]]) -> list[tuple[int, ...]]:
    """Row-style Hermite normal form of an integer matrix.

    Rows are returned ordered by pivot column; pivots are positive and every
    entry above a pivot is reduced into [0, pivot).  Zero rows are dropped.
    The output is a canonical basis of the row lattice, so any two bases of
    the same lattice reduce to identical rows.
    """
    a = [list(r) for r in rows]
    if not a:
        return []
    ncols = len(a[0])
    top = 0
    for c in range(ncols):
        while True:
            live = [r for r in range(top, len(a)) if a[r][c] != 0]
            if not live:
                break
            r0 = min(live, key=lambda r: (abs(a[r][c]), r))
            a[top], a[r0] = a[r0], a[top]
            done = True
            for r in range(top + 1, len(a)):
                if a[r][c] != 0:
                    q = a[r][c] // a[top][c]
                    a[r] = [x - q * y for x, y in zip(a[r], a[top])]
                    if a[r][c] != 0:
                        done = False
            if done:
                break
        if top < len(a) and a[top][c] != 0:
            if a[top][c] < 0:
                a[top] = [-x for x in a[top]]
            for r in range(top):
                q = a[r][c] // a[top][c]
                if q:
                    a[r] = [x - q * y for x, y in zip(a[r], a[top])]
            top += 1
            if top == len(a):
                break
    return [tuple(r) for r in a[:top]]


def integer_kernel_basis(f: Vec) -> list[Vec]:
    """Z-basis of the kernel sublattice {v in Z^n : f . v = 0}.

    The functional is first scaled to a primitive integer vector, then a
    unimodular column transform reduces it to (g, 0, ..., 0); the transformed
    basis vectors annihilating f span the kernel lattice.  The result is
    Hermite-reduced (see hermite_row_reduce) so output is deterministic.
    """
    fi = list(primitive_integer_vector(f))
    n = len(fi)
    # Columns of u form a Z-basis of Z^n; column ops mirror the gcd reduction.
    u = [[1 if i == j else 0 for j in range(n)] for i in range(n)]

    def colop(j0: int, j1: int, x: int, y: int, p: int, q: int) -> None:
        # (col j0, col j1) <- (x*col j0 + y*col j1, p*col j0 + q*col j1)
        for i in range(n):
            c0, c1 = u[i][j0], u[i][j1]
            u[i][j0] = x * c0 + y * c1
            u[i][j1] = p * c0 + q * c1

    for j in range(1, n):
        if fi[j] == 0:
            continue
        if fi[0] == 0:
            colop(0, j, 0, 1, -1, 0)
            fi[0], fi[j] = fi[j], 0
            continue
        g, x, y = _xgcd(fi[0], fi[j])
        colop(0, j, x, y, -(fi[j] // g), fi[0] // g)
        fi[0], fi[j] = g, 0
    kernel_rows = [[u[i][j] for i in range(n)] for j in range(1, n)]
    return [Vec(r) for r in hermite_row_reduce(kernel_rows)]


def _xgcd(a: int, b: int) -> tuple[int, int, int]:
    """Return (g, x, y) with g = gcd(a, b) > 0 and a*x + b*y = g."""
    old_r, r = a, b
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    if old_r < 0:
        old_r, old_s, old_t = -old_r, -old_s, -old_t
    return old_r, old_s, old_t
