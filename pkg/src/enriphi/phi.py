"""The phi-function on the Enriques lattice, computed exactly.

For H with H^2 > 0,

    phi(H) = min { |H.F| : F != 0, F^2 = 0 }

is the minimal pairing against a nonzero isotropic class.  The minimum
exists and is positive: candidates f1, f2 bound it above, and an isotropic
class orthogonal to H would lie in the negative definite complement H-perp,
hence vanish.

Search strategy (exact throughout):

* candidate values c = content(H), 2*content(H), ... are tried in
  increasing order, so the first feasible one is the minimum;
* for fixed c, one integral solution F0 of H.F0 = c is produced from an
  extended-gcd elimination (the pairing functional is surjective onto
  content(H)*Z because the lattice is unimodular), and the solution coset
  F0 + H-perp is searched for isotropic vectors: the condition F^2 = 0 cuts
  an ellipsoid out of the rank-9 negative definite complement, which is
  enumerated completely in rational arithmetic (quadric module);
* the complement basis is LLL-reduced first, a pure speed measure.

The independent check `phi_bruteforce` scans a coordinate box exhaustively
and shares none of this machinery.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence

from .gram import (LatticeError, Vector, as_vector, content, gram_apply,
                   pair, self_int)
from .lll import lll_reduce
from .quadric import cholesky_exact, quadric_points, solve_pd

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class PhiResult:
    """Value of phi(H) together with a primitive isotropic witness."""

    value: int
    witness: Vector


def ext_gcd(a: int, b: int) -> tuple[int, int, int]:
    """(g, x, y) with g = gcd(a, b) >= 0 and x*a + y*b = g."""
    old_r, r = a, b
    old_x, x = 1, 0
    old_y, y = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_x, x = x, old_x - q * x
        old_y, y = y, old_y - q * y
    if old_r < 0:
        old_r, old_x, old_y = -old_r, -old_x, -old_y
    return old_r, old_x, old_y


def _covector_split(w: Sequence[int]) -> tuple[int, Vector, list[Vector]]:
    """Unimodular change of coordinates for the functional x -> w.x.

    Returns (g, F_g, kernel) where g = gcd(w) > 0, w.F_g = g, and kernel is
    a basis of the full integer kernel of the functional.
    """
    n = len(w)
    cols = [[1 if i == c else 0 for i in range(n)] for c in range(n)]
    r = list(w)
    for i in range(1, n):
        if r[i] == 0:
            continue
        g, x, y = ext_gcd(r[0], r[i])
        p, q = r[0] // g, r[i] // g
        c_new = [x * u + y * v for u, v in zip(cols[0], cols[i])]
        c_ker = [-q * u + p * v for u, v in zip(cols[0], cols[i])]
        cols[0], cols[i] = c_new, c_ker
        r[0], r[i] = g, 0
    if r[0] < 0:
        r[0] = -r[0]
        cols[0] = [-u for u in cols[0]]
    return r[0], tuple(cols[0]), [tuple(c) for c in cols[1:]]


class _Engine:
    """Per-H state shared by all candidate values c: complement basis,
    LLL reduction and Cholesky data are computed once."""

    def __init__(self, H: Vector):
        self.H = H
        self.h2 = self_int(H)
        if self.h2 <= 0:
            raise LatticeError(f"phi is only defined for H^2 > 0, got H^2 = {self.h2}")
        w = gram_apply(H)
        g, f_g, kernel = _covector_split(w)
        self.g = g
        self.f_g = f_g
        # -pair is positive definite on H-perp since H^2 > 0 in signature (1,9)
        self.kernel = lll_reduce(kernel, lambda u, v: -pair(u, v))
        self.M = [[-pair(u, v) for v in self.kernel] for u in self.kernel]
        self.chol = cholesky_exact(self.M)

    def solutions(self, c: int) -> list[Vector]:
        """All F with F^2 = 0 and H.F = c (complete, duplicate-free)."""
        if c % self.g:
            return []
        f0 = tuple((c // self.g) * x for x in self.f_g)
        b = [pair(k, f0) for k in self.kernel]
        c0 = self_int(f0)
        mu = solve_pd(self.M, b, self.chol)
        rho = Fraction(c0) + sum(Fraction(bi) * m for bi, m in zip(b, mu))
        assert rho == Fraction(c * c, self.h2), "ellipsoid radius sanity check"
        out = []
        for t in quadric_points(self.M, b, c0):
            f = list(f0)
            for ti, k in zip(t, self.kernel):
                if ti:
                    for j in range(len(f)):
                        f[j] += ti * k[j]
            f = tuple(f)
            assert self_int(f) == 0 and pair(self.H, f) == c
            out.append(f)
        out.sort(reverse=True)
        return out


@lru_cache(maxsize=None)
def _engine(H: Vector) -> _Engine:
    return _Engine(H)


@lru_cache(maxsize=None)
def _phi_cached(H: Vector) -> PhiResult:
    eng = _engine(H)
    # f1 and f2 are isotropic, so their pairings bound the minimum; both are
    # nonzero because H^2 > 0 forces both U-coefficients of H nonzero.
    bound = min(abs(pair(H, (1, 0, 0, 0, 0, 0, 0, 0, 0, 0))),
                abs(pair(H, (0, 1, 0, 0, 0, 0, 0, 0, 0, 0))))
    for c in range(eng.g, bound + 1, eng.g):
        sols = eng.solutions(c)
        if sols:
            witnesses = {_primitive(f) for f in sols}
            witness = max(witnesses)
            result = PhiResult(c, witness)
            if c * c > eng.h2:
                # classical bound phi(H)^2 <= H^2; a violation indicates a bug
                log.warning("phi(%s)^2 = %d exceeds H^2 = %d", H, c * c, eng.h2)
            return result
    raise AssertionError(f"no isotropic pairing found up to {bound} for {H}")


def _primitive(f: Vector) -> Vector:
    d = content(f)
    return f if d == 1 else tuple(x // d for x in f)


def phi(H: Iterable[int]) -> PhiResult:
    """Exact phi(H) with a primitive isotropic witness attaining it.

    The witness is deterministic: among all witnesses with positive pairing
    it is the lexicographically largest coordinate tuple.
    """
    return _phi_cached(as_vector(H))


def enumerate_isotropic_with_pairing(H: Iterable[int], c: int) -> list[Vector]:
    """The complete list of F with F^2 = 0 and H.F = c, each exactly once.

    Solutions for -c are the negatives of these and are not repeated.  The
    list is empty when c is not a multiple of content(H).  Sorted in
    decreasing lexicographic order, so the canonical representative of a
    phi value comes first.
    """
    v = as_vector(H)
    if not isinstance(c, int) or isinstance(c, bool) or c < 1:
        raise LatticeError(f"the pairing value must be a positive integer, got {c!r}")
    return _engine(v).solutions(c)


def phi_bruteforce(H: Iterable[int], radius: int):
    """Independent box oracle: exhaustive scan of all F with coordinates in
    [-radius, radius], returning min |H.F| over nonzero isotropic F, or
    None if the box holds no such vector (impossible for radius >= 1, which
    always contains f1).

    An upper bound for phi(H), and exact whenever the box contains a
    minimizer.
    """
    from . import oracle

    v = as_vector(H)
    if self_int(v) <= 0:
        raise LatticeError(f"phi is only defined for H^2 > 0, got H^2 = {self_int(v)}")
    if not isinstance(radius, int) or isinstance(radius, bool) or radius < 1:
        raise LatticeError(f"radius must be a positive integer, got {radius!r}")
    return oracle.box_minimum(v, radius)
