"""Divisor classes L~ - a*B on the Hilbert scheme of points S^[n].

The Picard group of S^[n] splits as classes pulled back from the surface
plus Z*B, where 2B is the exceptional divisor of the Hilbert-Chow morphism
(Fogarty).  A class is modeled by the pair (L, a) for L~ - a*B, with the
Hilbert-scheme order n carried along.

Positivity implemented here:

* nef: Nuer's exact criterion for unnodal surfaces - L nef on S and
  0 <= n*a <= phi(L) (the rational bound a <= phi(L)/n stated as an
  integer inequality);
* ample / very ample: the sufficient criteria proved on S^[2] (see
  `ample_verdict_hilb2`).  They do not characterize ampleness, so the
  verdict is graded and carries the nef fact separately instead of
  pretending to decide more than it can.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .gram import LatticeError, PicClass, self_int
from .phi import phi
from .surface import is_ample_on_s, is_nef_on_s

# Citation tags for the literature results backing each verdict.
CITE_NUER = "Thm Nuer"
CITE_HB_VERY_AMPLE = "Prop h-b"
CITE_LINE_BUNDLES_AMPLE = "Prop line-bundles-ampi"
CITE_AMPLE_FAMILY = "Remark ample family"


class PhiUndefinedError(LatticeError):
    """phi(L) was needed but L^2 <= 0."""


class Level(Enum):
    PROVED_VERY_AMPLE = "ProvedVeryAmple"
    PROVED_AMPLE = "ProvedAmple"
    NEF_ONLY = "NefOnly"
    NOT_NEF = "NotNef"
    UNKNOWN = "Unknown"


@dataclass(frozen=True)
class Hilb2Class:
    """The divisor class L~ - a*B on S^[n] (default n = 2)."""

    L: PicClass
    a: int
    n: int = 2

    def __post_init__(self):
        if not isinstance(self.a, int) or isinstance(self.a, bool):
            raise LatticeError(f"the B-coefficient must be an integer, got {self.a!r}")
        if not isinstance(self.n, int) or isinstance(self.n, bool) or self.n < 2:
            raise LatticeError(f"the Hilbert-scheme order must be >= 2, got {self.n!r}")


@dataclass(frozen=True)
class PositivityVerdict:
    """Graded positivity: a proved level plus the (always decidable) nef fact."""

    level: Level
    criterion: str
    nef: bool


def is_nef_hilb(c: Hilb2Class) -> bool:
    """Nuer's criterion: L~ - a*B is nef on S^[n] iff L is nef on S and
    0 <= a with n*a <= phi(L).

    For a = 0 only nefness of L is needed; for a > 0 with L^2 = 0 the bound
    phi(L) is undefined and the call fails rather than guessing.
    """
    L = c.L.num
    if c.a < 0:
        return False
    if not is_nef_on_s(L):
        return False
    if c.a == 0:
        return True
    h2 = self_int(L)
    if h2 <= 0:
        raise PhiUndefinedError(
            f"phi undefined: L^2 = {h2} <= 0 while a = {c.a} > 0")
    return c.n * c.a <= phi(L).value


def ample_verdict_hilb2(c: Hilb2Class) -> PositivityVerdict:
    """Strongest proved positivity of L~ - a*B on S^[2].

    Criteria, strongest first (m = phi(L); all assume L ample on S):

    * a = 1 and m >= 5:                   very ample (Grassmannian embedding);
    * m even, m > 4, 1 <= a <= m/2 - 1:   ample (the nef-interval family);
    * a >= 3 and m > 2a:                  ample (the k = a - 2 criterion).

    The even-m family and the m > 2a criterion agree wherever both apply.
    Classes proved nothing remain Unknown when a >= 1 but nef, NefOnly when
    a = 0, and NotNef when the nef test fails.
    """
    if c.n != 2:
        raise LatticeError(
            f"ampleness criteria are proved on S^[2] only, got n = {c.n}")
    L = c.L.num
    h2 = self_int(L)
    if h2 <= 0:
        raise PhiUndefinedError(f"phi undefined: L^2 = {h2} <= 0")
    a = c.a
    nef = is_nef_hilb(c)
    if is_ample_on_s(L):
        m = phi(L).value
        if a == 1 and m >= 5:
            return PositivityVerdict(Level.PROVED_VERY_AMPLE, CITE_HB_VERY_AMPLE, nef)
        if m % 2 == 0 and m > 4 and 1 <= a <= m // 2 - 1:
            return PositivityVerdict(Level.PROVED_AMPLE, CITE_AMPLE_FAMILY, nef)
        if a >= 3 and m > 2 * a:
            return PositivityVerdict(Level.PROVED_AMPLE, CITE_LINE_BUNDLES_AMPLE, nef)
    if not nef:
        return PositivityVerdict(Level.NOT_NEF, CITE_NUER, False)
    if a == 0:
        return PositivityVerdict(Level.NEF_ONLY, CITE_NUER, True)
    return PositivityVerdict(Level.UNKNOWN, CITE_NUER, True)


def restrict_torsion_twist(c: Hilb2Class) -> Hilb2Class:
    """Replace L by L - K_S: flips the torsion bit, every numerical verdict
    is unchanged (K_S is numerically trivial)."""
    return Hilb2Class(c.L.twist(), c.a, c.n)
