"""Complete enumeration of integer points on ellipsoids, in exact arithmetic.

Solves  t^T M t - 2 b^T t - c0 = 0  over t in Z^n for a positive definite
integer matrix M.  Completing the square turns the solution set into the
integer points of an ellipsoid centered at mu = M^{-1} b with squared
radius rho = c0 + b^T mu; the recursion below walks the ellipsoid level by
level using a rational Cholesky decomposition, so no lattice point can be
missed or hallucinated by rounding.  This is the feasibility core behind
the phi computation and must stay complete: no heuristic pruning.
"""

from __future__ import annotations

from fractions import Fraction
from math import ceil, floor, isqrt
from typing import Iterator, Sequence

Matrix = Sequence[Sequence[int]]


def cholesky_exact(m: Matrix) -> tuple[list[Fraction], list[list[Fraction]]]:
    """Decompose M = R^T D R with R unit upper triangular, D positive.

    Returns (D, R) over Fraction.  Raises ValueError if M is not positive
    definite.
    """
    n = len(m)
    d = [Fraction(0)] * n
    r = [[Fraction(0)] * n for _ in range(n)]
    for i in range(n):
        s = Fraction(m[i][i])
        for k in range(i):
            s -= d[k] * r[k][i] * r[k][i]
        if s <= 0:
            raise ValueError("matrix is not positive definite")
        d[i] = s
        r[i][i] = Fraction(1)
        for j in range(i + 1, n):
            t = Fraction(m[i][j])
            for k in range(i):
                t -= d[k] * r[k][i] * r[k][j]
            r[i][j] = t / d[i]
    return d, r


def solve_pd(m: Matrix, b: Sequence[int],
             chol: tuple[list[Fraction], list[list[Fraction]]] | None = None
             ) -> list[Fraction]:
    """Solve M x = b exactly for positive definite M via R^T D R."""
    d, r = chol if chol is not None else cholesky_exact(m)
    n = len(b)
    # forward substitution R^T y = b, then D z = y, then back R x = z
    y = [Fraction(0)] * n
    for i in range(n):
        s = Fraction(b[i])
        for k in range(i):
            s -= r[k][i] * y[k]
        y[i] = s
    x = [y[i] / d[i] for i in range(n)]
    for i in range(n - 1, -1, -1):
        s = x[i]
        for j in range(i + 1, n):
            s -= r[i][j] * x[j]
        x[i] = s
    return x


def _integer_interval(center: Fraction, r2: Fraction) -> tuple[int, int]:
    """Integers x with (x - center)^2 <= r2, as an inclusive range (lo, hi).

    Empty ranges come back with lo > hi.  Bounds are located with an
    integer-sqrt estimate and then corrected by exact comparisons.
    """
    if r2 < 0:
        return 1, 0
    approx = isqrt(r2.numerator // r2.denominator) + 1
    lo = floor(center) - approx
    hi = ceil(center) + approx
    while (lo - center) ** 2 > r2:
        lo += 1
        if lo > hi:
            return 1, 0
    while (hi - center) ** 2 > r2:
        hi -= 1
    return lo, hi


def quadric_points(m: Matrix, b: Sequence[int], c0: int) -> Iterator[tuple[int, ...]]:
    """Yield every t in Z^n with t^T M t - 2 b^T t - c0 == 0 (M pos. def.)."""
    n = len(m)
    chol = cholesky_exact(m)
    d, r = chol
    mu = solve_pd(m, b, chol)
    rho = Fraction(c0) + sum(Fraction(bi) * mi for bi, mi in zip(b, mu))
    if rho < 0:
        return
    t = [0] * n

    def descend(i: int, budget: Fraction) -> Iterator[tuple[int, ...]]:
        center = mu[i]
        for j in range(i + 1, n):
            center -= r[i][j] * (t[j] - mu[j])
        lo, hi = _integer_interval(center, budget / d[i])
        for x in range(lo, hi + 1):
            t[i] = x
            rest = budget - d[i] * (x - center) ** 2
            if i == 0:
                if rest == 0:
                    yield tuple(t)
            else:
                yield from descend(i - 1, rest)

    yield from descend(n - 1, rho)
