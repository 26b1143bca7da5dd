"""Exact arithmetic on the rank-10 Enriques lattice U + E8(-1).

The numerical lattice of an unnodal Enriques surface is the even unimodular
hyperbolic lattice of signature (1, 9).  We fix once and for all the basis

    (f1, f2, e1, ..., e8)

where f1, f2 span a hyperbolic plane U (f1^2 = f2^2 = 0, f1.f2 = 1) and
e1..e8 carry the negated E8 Cartan matrix in Bourbaki node ordering (node 2
is the branch node attached to node 4; the chain is 1-3-4-5-6-7-8).

Vectors are plain 10-tuples of Python ints; all arithmetic is exact and
unbounded.  Every function here is pure, so values can be shared freely
between threads.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Iterable, Sequence

Vector = tuple[int, ...]

RANK = 10

# Bourbaki E8 Dynkin diagram edges (node 2 hangs off node 4).
_E8_EDGES = ((1, 3), (2, 4), (3, 4), (4, 5), (5, 6), (6, 7), (7, 8))


def _e8_cartan() -> tuple[tuple[int, ...], ...]:
    c = [[0] * 8 for _ in range(8)]
    for i in range(8):
        c[i][i] = 2
    for i, j in _E8_EDGES:
        c[i - 1][j - 1] = -1
        c[j - 1][i - 1] = -1
    return tuple(tuple(row) for row in c)


E8_CARTAN = _e8_cartan()

# Gram matrix of (f1, f2, e1..e8): hyperbolic block plus -Cartan.
GRAM: tuple[tuple[int, ...], ...] = tuple(
    tuple(
        (1 if {i, j} == {0, 1} else 0) if i < 2 or j < 2 else -E8_CARTAN[i - 2][j - 2]
        for j in range(RANK)
    )
    for i in range(RANK)
)

F1: Vector = (1, 0, 0, 0, 0, 0, 0, 0, 0, 0)
F2: Vector = (0, 1, 0, 0, 0, 0, 0, 0, 0, 0)
BASIS: tuple[Vector, ...] = tuple(
    tuple(1 if j == i else 0 for j in range(RANK)) for i in range(RANK)
)


class LatticeError(ValueError):
    """A mathematical precondition was violated (not a parse problem)."""


def as_vector(coords: Iterable[int]) -> Vector:
    """Normalize an iterable of 10 integers to the canonical tuple form."""
    v = tuple(coords)
    if len(v) != RANK:
        raise LatticeError(f"expected {RANK} coordinates, got {len(v)}")
    for x in v:
        if not isinstance(x, int) or isinstance(x, bool):
            raise LatticeError(f"coordinates must be integers, got {x!r}")
    return v


def vec(u1: int = 0, u2: int = 0, *e: int) -> Vector:
    """Convenience constructor: vec(a, b, e1..e8), missing e's are zero."""
    if len(e) > 8:
        raise LatticeError("at most 8 E8 coordinates")
    return (u1, u2) + tuple(e) + (0,) * (8 - len(e))


def add(x: Sequence[int], y: Sequence[int]) -> Vector:
    return tuple(a + b for a, b in zip(x, y))


def sub(x: Sequence[int], y: Sequence[int]) -> Vector:
    return tuple(a - b for a, b in zip(x, y))


def smul(n: int, x: Sequence[int]) -> Vector:
    return tuple(n * a for a in x)


def neg(x: Sequence[int]) -> Vector:
    return tuple(-a for a in x)


def is_zero(x: Sequence[int]) -> bool:
    return all(a == 0 for a in x)


def gram_apply(x: Sequence[int]) -> Vector:
    """The covector G.x; pairing against x is the dot product with this."""
    a, b = x[0], x[1]
    e = x[2:]
    ge = tuple(-sum(E8_CARTAN[i][j] * e[j] for j in range(8)) for i in range(8))
    return (b, a) + ge


def pair(x: Sequence[int], y: Sequence[int]) -> int:
    """Intersection pairing x.y = x^T G y.  Symmetric, bilinear, exact."""
    return x[0] * y[1] + x[1] * y[0] - sum(
        x[i + 2] * E8_CARTAN[i][j] * y[j + 2] for i in range(8) for j in range(8)
    )


def self_int(x: Sequence[int]) -> int:
    """Self-intersection x^2; always an even integer (the lattice is even)."""
    return pair(x, x)


def content(x: Sequence[int]) -> int:
    """gcd of the coordinates; 0 iff x = 0.

    Because the Gram matrix is unimodular this equals the divisibility of
    the linear functional pair(x, .) on the whole lattice.
    """
    g = 0
    for a in x:
        g = gcd(g, a)
    return g


def is_forward(x: Sequence[int]) -> bool:
    """Select the component of the positive cone containing ample classes.

    Defined for x != 0 with x^2 >= 0: true iff x pairs positively against
    f1 + f2.  On the (mathematically unreachable) tie pair(x, f1+f2) = 0 the
    sign of the first nonzero pairing against (f1, f2) decides, so the rule
    is a total order on each +/- orbit.
    """
    if is_zero(x):
        raise LatticeError("is_forward is undefined for the zero vector")
    if self_int(x) < 0:
        raise LatticeError(f"is_forward requires x^2 >= 0, got x^2 = {self_int(x)}")
    s = pair(x, add(F1, F2))
    if s != 0:
        return s > 0
    for f in (F1, F2):
        t = pair(x, f)
        if t != 0:
            return t > 0
    # x pairs to zero with the whole hyperbolic plane and has x^2 >= 0,
    # which forces x = 0; unreachable given the guards above.
    raise AssertionError("unreachable: isotropic tie-break on a nonzero vector")


@dataclass(frozen=True)
class PicClass:
    """A Picard class: numerical part plus the 2-torsion canonical bit.

    The torsion bit records an added copy of the (numerically trivial)
    canonical class; it never influences any numerical predicate.
    """

    num: Vector
    torsion: int = 0

    def __post_init__(self):
        object.__setattr__(self, "num", as_vector(self.num))
        if self.torsion not in (0, 1):
            raise LatticeError(f"torsion bit must be 0 or 1, got {self.torsion}")

    def twist(self) -> "PicClass":
        """Add the canonical class: flips the torsion bit, fixes the numerics."""
        return PicClass(self.num, self.torsion ^ 1)


def gram_determinant() -> int:
    """Exact determinant of the Gram matrix (fraction-free Bareiss)."""
    n = RANK
    m = [list(row) for row in GRAM]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for r in range(k + 1, n):
                if m[r][k] != 0:
                    m[k], m[r] = m[r], m[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


def gram_signature() -> tuple[int, int]:
    """Exact signature (n_plus, n_minus) via congruence diagonalization."""
    n = RANK
    m = [[Fraction(GRAM[i][j]) for j in range(n)] for i in range(n)]
    plus = minus = 0
    for k in range(n):
        if m[k][k] == 0:
            # pull a nonzero diagonal entry into position k
            for r in range(k + 1, n):
                if m[r][r] != 0:
                    m[k], m[r] = m[r], m[k]
                    for row in m:
                        row[k], row[r] = row[r], row[k]
                    break
            else:
                for r in range(k + 1, n):
                    if m[r][k] != 0:
                        # congruence by adding row/col r into k makes the
                        # diagonal nonzero (char 0)
                        for j in range(n):
                            m[k][j] += m[r][j]
                        for i in range(n):
                            m[i][k] += m[i][r]
                        break
                else:
                    continue  # the whole block is zero
        d = m[k][k]
        if d > 0:
            plus += 1
        else:
            minus += 1
        for i in range(k + 1, n):
            f = m[i][k] / d
            if f == 0:
                continue
            for j in range(n):
                m[i][j] -= f * m[k][j]
            for r in range(n):
                m[r][i] -= f * m[r][k]
    return plus, minus
