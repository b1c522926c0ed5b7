"""Exact integer solutions of positive definite norm equations.

The enumeration follows the Fincke-Pohst recursion on an exact rational
LDL^T factorization: with y = L^T x the form reads sum_j d_j y_j^2, so
coordinate ranges are rational intervals whose integer endpoints are
computed with `math.isqrt` (never floating point).  Also houses the
classical two- and three-squares representability predicates used as
factorization obstructions.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import floor, isqrt

from .errors import InvalidForm, NegativeTarget, NotPositiveDefinite
from .linalg import Mat, Vec


class PosDefForm:
    """Symmetric positive definite rational Gram matrix with cached LDL^T.

    Positivity is certified exactly: the factorization pivots d_j are the
    ratios of consecutive leading principal minors, so requiring every
    pivot > 0 is Sylvester's criterion.
    """

    def __init__(self, gram: Mat):
        if not gram.is_symmetric():
            raise InvalidForm("Gram matrix must be symmetric")
        self.gram = gram
        self._diag, self._lower = _ldl(gram)

    @property
    def dim(self) -> int:
        return self.gram.nrows

    @property
    def pivots(self) -> tuple[Fraction, ...]:
        """LDL^T pivots; all positive."""
        return self._diag

    def leading_minors(self) -> tuple[Fraction, ...]:
        out, acc = [], Fraction(1)
        for d in self._diag:
            acc *= d
            out.append(acc)
        return tuple(out)

    def evaluate(self, v) -> Fraction:
        """v^T gram v for a vector or plain int/Fraction sequence."""
        entries = v.entries if isinstance(v, Vec) else tuple(v)
        n = self.dim
        acc = Fraction(0)
        for i in range(n):
            row = self.gram.rows[i]
            acc += entries[i] * sum(
                (row[j] * entries[j] for j in range(n)), Fraction(0)
            )
        return acc


def _ldl(gram: Mat) -> tuple[tuple[Fraction, ...], tuple[tuple[Fraction, ...], ...]]:
    n = gram.nrows
    d: list[Fraction] = []
    low = [[Fraction(0)] * n for _ in range(n)]
    for j in range(n):
        pivot = gram.rows[j][j] - sum(
            (low[j][k] * low[j][k] * d[k] for k in range(j)), Fraction(0)
        )
        if pivot <= 0:
            raise NotPositiveDefinite(f"pivot {j} is {pivot}")
        d.append(pivot)
        low[j][j] = Fraction(1)
        for i in range(j + 1, n):
            low[i][j] = (
                gram.rows[i][j]
                - sum((low[i][k] * low[j][k] * d[k] for k in range(j)), Fraction(0))
            ) / pivot
    return tuple(d), tuple(tuple(r) for r in low)


@dataclass(frozen=True)
class NormSolutionSet:
    """All integer vectors of a given norm, in lexicographic order."""

    target: int
    solutions: tuple[tuple[int, ...], ...]
    canonicalized: bool

    def __len__(self) -> int:
        return len(self.solutions)

    def __iter__(self):
        return iter(self.solutions)

    def __contains__(self, v) -> bool:
        return tuple(v) in self.solutions

    def vectors(self) -> list[Vec]:
        return [Vec(s) for s in self.solutions]

    def canonical(self) -> "NormSolutionSet":
        """Keep one of each +-v pair: first nonzero entry positive."""
        if self.canonicalized:
            return self
        kept = tuple(s for s in self.solutions if _sign_canonical(s))
        return NormSolutionSet(self.target, kept, True)


def _sign_canonical(v: tuple[int, ...]) -> bool:
    for x in v:
        if x:
            return x > 0
    return True


def _floor_sqrt(f: Fraction) -> int:
    """floor(sqrt(f)) for f >= 0, exactly."""
    return isqrt(f.numerator * f.denominator) // f.denominator


def _floor_plus_sqrt(c: Fraction, f: Fraction) -> int:
    """floor(c + sqrt(f)) for rational c and f >= 0, exactly."""
    k = floor(c) + _floor_sqrt(f) + 2
    while True:
        g = k - c
        if g <= 0 or g * g <= f:
            return k
        k -= 1


def _exact_sqrt(f: Fraction) -> Fraction | None:
    """sqrt(f) when f >= 0 is a perfect rational square, else None."""
    rn, rd = isqrt(f.numerator), isqrt(f.denominator)
    if rn * rn == f.numerator and rd * rd == f.denominator:
        return Fraction(rn, rd)
    return None


def vectors_of_norm(q: PosDefForm, c: int, canonical: bool = False) -> NormSolutionSet:
    """Complete set {v in Z^d : v^T Q v = c}, exact and deterministic.

    Coordinates are chosen from the last to the first; at each level the
    admissible range is the exact rational interval allowed by the
    remaining budget.  The first coordinate is solved directly.  With
    canonical=True only one of each +-v pair is kept.
    """
    if c < 0:
        raise NegativeTarget(f"norm target {c} is negative")
    n = q.dim
    diag, lower = q._diag, q._lower
    sols: list[tuple[int, ...]] = []
    x = [0] * n

    def rec(j: int, rem: Fraction) -> None:
        shift = sum((lower[i][j] * x[i] for i in range(j + 1, n)), Fraction(0))
        if j == 0:
            root = _exact_sqrt(rem / diag[0])
            if root is None:
                return
            for cand in {-shift + root, -shift - root}:
                if cand.denominator == 1:
                    x[0] = int(cand)
                    sols.append(tuple(x))
            return
        ratio = rem / diag[j]
        hi = _floor_plus_sqrt(-shift, ratio)
        lo = -_floor_plus_sqrt(shift, ratio)
        for v in range(lo, hi + 1):
            x[j] = v
            y = v + shift
            rec(j - 1, rem - diag[j] * y * y)
        x[j] = 0

    rec(n - 1, Fraction(c))
    result = NormSolutionSet(c, tuple(sorted(sols)), False)
    return result.canonical() if canonical else result


def two_squares_representable(n: int) -> bool:
    """True iff n = a^2 + b^2 has an integer solution.

    Fermat: representable iff every prime = 3 (mod 4) divides n to an even
    power.  Trial division; inputs are desk-scale.
    """
    if n < 0:
        raise NegativeTarget(f"{n} is negative")
    if n == 0:
        return True
    while n % 2 == 0:
        n //= 2
    p = 3
    while p * p <= n:
        if n % p == 0:
            e = 0
            while n % p == 0:
                n //= p
                e += 1
            if p % 4 == 3 and e % 2:
                return False
        p += 2
    return n % 4 != 3


def three_squares_representable(n: int) -> bool:
    """True iff n = a^2 + b^2 + c^2 has an integer solution.

    Legendre: representable iff n is not of the form 4^t (8k + 7).
    """
    if n < 0:
        raise NegativeTarget(f"{n} is negative")
    if n == 0:
        return True
    while n % 4 == 0:
        n //= 4
    return n % 8 != 7
