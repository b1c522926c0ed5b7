"""Shared fixtures and seeded random generators for the test suite."""

from __future__ import annotations

import random
from fractions import Fraction

from superlat.linalg import Mat, Vec

# Wilson's classic symmetric unimodular test matrix and one known integral
# factor F with F^T F = WILSON, det F = 1.
WILSON = Mat([
    [5, 7, 6, 5],
    [7, 10, 8, 7],
    [6, 8, 10, 9],
    [5, 7, 9, 10],
])
WILSON_FACTOR = Mat([
    [2, 3, 2, 2],
    [1, 1, 2, 1],
    [0, 0, 1, 2],
    [0, 0, 1, 1],
])

# A pair of even quaternary Gram matrices of determinant 24 that are
# rationally equivalent but admit no integral isometry.
EVEN24_B = Mat([
    [2, 1, 0, 0],
    [1, 2, 0, 0],
    [0, 0, 2, 0],
    [0, 0, 0, 4],
])
EVEN24_BPRIME = Mat([
    [2, 1, 1, 0],
    [1, 2, 0, 0],
    [1, 0, 2, 0],
    [0, 0, 0, 6],
])

# Eight known rational solutions M of EVEN24_BPRIME = M^T EVEN24_B M
# (denominators 2 and 4); none is integral.
_F = Fraction
EVEN24_RATIONAL_SOLUTIONS = tuple(
    Mat(rows)
    for rows in [
        [
            [_F(1, 2), _F(3, 4), _F(3, 4), _F(1, 2)],
            [-1, _F(-1, 2), _F(-1, 2), -1],
            [_F(-1, 2), _F(-1, 4), _F(-1, 4), _F(3, 2)],
            [0, _F(-1, 2), _F(1, 2), 0],
        ],
        [
            [_F(1, 2), _F(3, 4), _F(3, 4), _F(1, 2)],
            [-1, _F(-1, 2), _F(-1, 2), -1],
            [_F(-1, 2), _F(-1, 4), _F(-1, 4), _F(3, 2)],
            [0, _F(1, 2), _F(-1, 2), 0],
        ],
        [
            [_F(1, 2), _F(3, 4), _F(3, 4), _F(1, 2)],
            [-1, _F(-1, 2), _F(-1, 2), -1],
            [_F(1, 2), _F(1, 4), _F(1, 4), _F(-3, 2)],
            [0, _F(-1, 2), _F(1, 2), 0],
        ],
        [
            [_F(1, 2), _F(3, 4), _F(3, 4), _F(1, 2)],
            [-1, _F(-1, 2), _F(-1, 2), -1],
            [_F(1, 2), _F(1, 4), _F(1, 4), _F(-3, 2)],
            [0, _F(1, 2), _F(-1, 2), 0],
        ],
        [
            [_F(1, 2), 1, 0, 1],
            [0, 0, 0, -2],
            [_F(1, 2), 0, 1, 0],
            [_F(-1, 2), 0, 0, 0],
        ],
        [
            [_F(1, 2), 1, 0, 1],
            [0, 0, 0, -2],
            [_F(1, 2), 0, 1, 0],
            [_F(1, 2), 0, 0, 0],
        ],
        [
            [0, _F(1, 2), _F(1, 2), 1],
            [0, 0, 0, -2],
            [1, _F(1, 2), _F(1, 2), 0],
            [0, _F(-1, 2), _F(1, 2), 0],
        ],
        [
            [0, _F(1, 2), _F(1, 2), 1],
            [0, 0, 0, -2],
            [1, _F(1, 2), _F(1, 2), 0],
            [0, _F(1, 2), _F(-1, 2), 0],
        ],
    ]
)


def signed_permutations(n: int) -> list[Mat]:
    """All 2^n n! signed permutation matrices (the automorphisms of I_n)."""
    import itertools

    out = []
    for perm in itertools.permutations(range(n)):
        for signs in itertools.product((1, -1), repeat=n):
            rows = [[0] * n for _ in range(n)]
            for i, (j, s) in enumerate(zip(perm, signs)):
                rows[i][j] = s
            out.append(Mat(rows))
    return out


def _naive_box_bounds(gram: Mat, c: int) -> list[int]:
    # |x_i| <= sqrt(c * (G^{-1})_ii) by Cauchy-Schwarz in the G-inner product.
    from math import isqrt

    inv = gram.inverse()
    bounds = []
    for i in range(gram.nrows):
        f = Fraction(c) * inv.rows[i][i]
        bounds.append(isqrt(f.numerator * f.denominator) // f.denominator)
    return bounds


def naive_box_volume(gram: Mat, c: int) -> int:
    """Number of lattice points the box oracle would scan; lets tests
    redraw forms whose oracle cost would be prohibitive."""
    vol = 1
    for b in _naive_box_bounds(gram, c):
        vol *= 2 * b + 1
    return vol


def naive_box_norm_solutions(gram: Mat, c: int) -> set[tuple[int, ...]]:
    """Independent oracle for vectors_of_norm: scan the Cauchy-Schwarz
    box and filter by evaluating x^T G x directly (integer arithmetic on
    a denominator-cleared copy, no shared code with the enumerator)."""
    import itertools
    from math import lcm

    n = gram.nrows
    scale = lcm(*(x.denominator for row in gram.rows for x in row))
    gi = [[int(x * scale) for x in row] for row in gram.rows]
    target = c * scale
    out = set()
    for tup in itertools.product(
        *(range(-b, b + 1) for b in _naive_box_bounds(gram, c))
    ):
        acc = 0
        for i in range(n):
            xi = tup[i]
            if xi:
                row = gi[i]
                acc += xi * sum(row[j] * tup[j] for j in range(n))
        if acc == target:
            out.add(tup)
    return out


def rand_int_vec(rng: random.Random, n: int, bound: int = 5) -> Vec:
    """Nonzero integer vector with entries in [-bound, bound]."""
    while True:
        v = [rng.randint(-bound, bound) for _ in range(n)]
        if any(v):
            return Vec(v)


def rand_rational_vec(rng: random.Random, n: int, bound: int = 5) -> Vec:
    """Nonzero rational vector with small numerators and denominators."""
    while True:
        v = [
            Fraction(rng.randint(-bound, bound), rng.randint(1, bound))
            for _ in range(n)
        ]
        if any(v):
            return Vec(v)


def rand_matrix(rng: random.Random, n: int, bound: int = 5) -> Mat:
    return Mat([[rng.randint(-bound, bound) for _ in range(n)] for _ in range(n)])


def rand_invertible(rng: random.Random, n: int, bound: int = 5) -> Mat:
    """Random integer matrix with nonzero determinant."""
    while True:
        m = rand_matrix(rng, n, bound)
        if m.determinant() != 0:
            return m


def rand_rational_invertible(rng: random.Random, n: int, bound: int = 4) -> Mat:
    """Random rational matrix with nonzero determinant."""
    while True:
        m = Mat([
            [Fraction(rng.randint(-bound, bound), rng.randint(1, 3)) for _ in range(n)]
            for _ in range(n)
        ])
        if m.determinant() != 0:
            return m


def rand_unimodular(rng: random.Random, n: int, steps: int = 12) -> Mat:
    """Random element of GL_n(Z) built from shears, swaps and sign flips."""
    m = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
    for _ in range(steps):
        op = rng.randrange(3)
        i, j = rng.sample(range(n), 2) if n > 1 else (0, 0)
        if op == 0 and i != j:
            c = rng.choice([-2, -1, 1, 2])
            m[i] = [a + c * b for a, b in zip(m[i], m[j])]
        elif op == 1 and i != j:
            m[i], m[j] = m[j], m[i]
        else:
            m[i] = [-a for a in m[i]]
    return Mat(m)


def rand_pd_gram(rng: random.Random, n: int, bound: int = 3) -> Mat:
    """Random integral positive definite Gram matrix R^T R."""
    while True:
        r = rand_matrix(rng, n, bound)
        if r.determinant() != 0:
            return r.transpose() @ r


def rand_sym_nondegenerate(rng: random.Random, n: int, bound: int = 4) -> Mat:
    """Random integral symmetric matrix with nonzero determinant."""
    while True:
        a = [[0] * n for _ in range(n)]
        for i in range(n):
            for j in range(i, n):
                a[i][j] = a[j][i] = rng.randint(-bound, bound)
        m = Mat(a)
        if m.determinant() != 0:
            return m


def rand_anchor(rng: random.Random, gram: Mat, bound: int = 3) -> Vec:
    """Random integer vector w with w^T gram w != 0."""
    n = gram.nrows
    while True:
        w = Vec([rng.randint(-bound, bound) for _ in range(n)])
        if not w.is_zero() and (gram @ w).dot(w) != 0:
            return w


def rand_pullback_problem(
    rng: random.Random,
    sizes: tuple[int, ...] = (2, 3, 4),
    entry_cap: int = 12,
    gram_bound: int = 2,
    steps: int = 6,
    max_wnorm: int = 2,
):
    """Random (source gram, target gram, anchor, phi) with the target the
    pullback of a positive definite source along a unimodular phi,
    resampled until all entries stay desk-scale.

    The anchor is a standard basis vector of small norm: search cost
    scales steeply with B(w,w), so tests follow the same small-anchor
    heuristic the search documentation recommends.
    """
    from superlat.forms import GramForm, pullback

    while True:
        n = rng.choice(sizes)
        gram = rand_pd_gram(rng, n, gram_bound)
        phi = rand_unimodular(rng, n, steps=steps)
        target = pullback(GramForm(gram), phi).gram
        entries = [abs(int(x)) for row in (gram.rows + target.rows) for x in row]
        if max(entries) > entry_cap:
            continue
        norms = [int(gram.rows[i][i]) for i in range(n)]
        best = min(norms)
        if best > max_wnorm:
            continue
        w = Vec.unit(n, rng.choice([i for i, v in enumerate(norms) if v == best]))
        return gram, target, w, phi
