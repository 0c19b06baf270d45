"""Small exact dense linear algebra over the Gaussian rationals.

Matrices are plain lists of lists of :class:`GaussianRational`.  Sizes in
this package stay tiny (at most a few dozen rows), so everything is the
naive algorithm; the point is exactness, not speed.
"""

from __future__ import annotations

from fractions import Fraction

from .exactnum import GAUSS_ONE, GAUSS_ZERO, GaussianRational, gauss

Matrix = list[list[GaussianRational]]


def zeros(rows: int, cols: int) -> Matrix:
    return [[GAUSS_ZERO for _ in range(cols)] for _ in range(rows)]


def identity(n: int) -> Matrix:
    m = zeros(n, n)
    for i in range(n):
        m[i][i] = GAUSS_ONE
    return m


def mat_add(a: Matrix, b: Matrix) -> Matrix:
    return [[x + y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def mat_sub(a: Matrix, b: Matrix) -> Matrix:
    return [[x - y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def mat_scale(a: Matrix, s: GaussianRational | Fraction | int) -> Matrix:
    return [[x * s for x in row] for row in a]


def mat_mul(a: Matrix, b: Matrix) -> Matrix:
    n, k, m = len(a), len(b), len(b[0])
    assert len(a[0]) == k
    out = zeros(n, m)
    for i in range(n):
        ai = a[i]
        for j in range(m):
            acc = GAUSS_ZERO
            for t in range(k):
                if ai[t] or b[t][j]:
                    acc = acc + ai[t] * b[t][j]
            out[i][j] = acc
    return out


def mat_eq(a: Matrix, b: Matrix) -> bool:
    return a == b


def is_zero_matrix(a: Matrix) -> bool:
    return all(x.is_zero() for row in a for x in row)


def is_diagonal(a: Matrix) -> bool:
    return all(a[i][j].is_zero() for i in range(len(a)) for j in range(len(a[i])) if i != j)


def trace(a: Matrix) -> GaussianRational:
    t = GAUSS_ZERO
    for i in range(len(a)):
        t = t + a[i][i]
    return t


def rank(a: Matrix) -> int:
    """Rank by fraction-exact Gaussian elimination over Q(i)."""
    if not a:
        return 0
    m = [row[:] for row in a]
    rows, cols = len(m), len(m[0])
    r = 0
    for c in range(cols):
        pivot = next((i for i in range(r, rows) if not m[i][c].is_zero()), None)
        if pivot is None:
            continue
        m[r], m[pivot] = m[pivot], m[r]
        inv = GAUSS_ONE / m[r][c]
        m[r] = [x * inv for x in m[r]]
        for i in range(rows):
            if i != r and not m[i][c].is_zero():
                f = m[i][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[r])]
        r += 1
        if r == rows:
            break
    return r


def nullity(a: Matrix) -> int:
    return (len(a[0]) if a else 0) - rank(a)


def charpoly(a: Matrix) -> list[GaussianRational]:
    """Monic characteristic polynomial det(xI - A), coefficients by descending
    power (length n+1), computed with the Faddeev-LeVerrier recursion."""
    n = len(a)
    coeffs = [GAUSS_ONE]
    m = [row[:] for row in a]
    for j in range(1, n + 1):
        c = -(trace(m) * gauss(Fraction(1, j)))
        coeffs.append(c)
        if j < n:
            m = mat_mul(a, mat_add(m, mat_scale(identity(n), c)))
    return coeffs


def poly_mul(p: list[GaussianRational], q: list[GaussianRational]) -> list[GaussianRational]:
    out = [GAUSS_ZERO] * (len(p) + len(q) - 1)
    for i, x in enumerate(p):
        for j, y in enumerate(q):
            out[i + j] = out[i + j] + x * y
    return out


def charpoly_from_roots(roots: list[tuple[Fraction, int]]) -> list[GaussianRational]:
    """Expand prod (x - r)^mult, coefficients by descending power."""
    p = [GAUSS_ONE]
    for r, mult in roots:
        factor = [GAUSS_ONE, gauss(-r)]
        for _ in range(mult):
            p = poly_mul(p, factor)
    return p
