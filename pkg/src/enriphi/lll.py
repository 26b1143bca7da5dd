"""LLL basis reduction with an exact, pluggable inner product.

Used to precondition the rank-9 orthogonal-complement bases before lattice
point enumeration: bases produced by integer elimination can be badly skew,
which makes the enumeration tree explode.  Reduction is a pure performance
measure; enumeration results never depend on it.

All arithmetic is exact (integers and fractions.Fraction), delta = 3/4.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Callable, Sequence

IntVec = tuple[int, ...]
InnerProduct = Callable[[Sequence[int], Sequence[int]], int]

DELTA = Fraction(3, 4)


def lll_reduce(basis: Sequence[Sequence[int]], ip: InnerProduct) -> list[IntVec]:
    """Return an LLL-reduced basis of the lattice spanned by ``basis``.

    ``ip`` must be a positive definite symmetric bilinear form (integer
    valued on the span).  The reduced vectors are integer combinations of
    the input and span the same lattice.
    """
    b = [list(v) for v in basis]
    n = len(b)
    if n <= 1:
        return [tuple(v) for v in b]

    # Gram-Schmidt data over Fraction: mu[i][j] for j < i, Bs[i] = |b_i*|^2.
    mu = [[Fraction(0)] * n for _ in range(n)]
    Bs = [Fraction(0)] * n

    def gso_row(i: int) -> None:
        # inner products of b_i against b_j* expressed through mu rows < i
        ips = [Fraction(ip(b[i], b[j])) for j in range(i + 1)]
        for j in range(i):
            s = ips[j]
            for k in range(j):
                s -= mu[j][k] * mu[i][k] * Bs[k]
            if Bs[j] == 0:
                raise ValueError("inner product is not positive definite on the basis")
            mu[i][j] = s / Bs[j]
        s = ips[i]
        for k in range(i):
            s -= mu[i][k] * mu[i][k] * Bs[k]
        if s <= 0:
            raise ValueError("inner product is not positive definite on the basis")
        Bs[i] = s

    for i in range(n):
        gso_row(i)

    def size_reduce(k: int, j: int) -> None:
        m = _round_half_away(mu[k][j])
        if m == 0:
            return
        b[k] = [x - m * y for x, y in zip(b[k], b[j])]
        mu[k][j] -= m
        for l in range(j):
            mu[k][l] -= m * mu[j][l]

    k = 1
    while k < n:
        size_reduce(k, k - 1)
        if Bs[k] >= (DELTA - mu[k][k - 1] ** 2) * Bs[k - 1]:
            for j in range(k - 2, -1, -1):
                size_reduce(k, j)
            k += 1
            continue
        # swap b_k, b_{k-1} and patch the GSO data (classic update formulas)
        b[k], b[k - 1] = b[k - 1], b[k]
        m_old = mu[k][k - 1]
        B_new = Bs[k] + m_old * m_old * Bs[k - 1]
        mu[k][k - 1] = m_old * Bs[k - 1] / B_new
        Bs[k] = Bs[k - 1] * Bs[k] / B_new
        Bs[k - 1] = B_new
        for j in range(k - 1):
            mu[k - 1][j], mu[k][j] = mu[k][j], mu[k - 1][j]
        for i in range(k + 1, n):
            t = mu[i][k]
            mu[i][k] = mu[i][k - 1] - m_old * t
            mu[i][k - 1] = t + mu[k][k - 1] * mu[i][k]
        k = max(k - 1, 1)

    return [tuple(v) for v in b]


def _round_half_away(x: Fraction) -> int:
    num, den = x.numerator, x.denominator
    if num >= 0:
        return (2 * num + den) // (2 * den)
    return -((-2 * num + den) // (2 * den))
