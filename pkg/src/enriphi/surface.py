"""Numerical invariants of a polarized unnodal Enriques surface (S, H).

On an unnodal surface there are no (-2)-curves, so the nef cone of
numerical classes is the full closed forward positive cone (which is
self-dual in a Lorentzian lattice); consequently

    nef    <=>  L = 0, or L^2 >= 0 and L forward,
    ample  <=>  L^2 > 0 and L forward,

and k-very ampleness of H is equivalent to phi(H) >= k + 2 (the
Knutsen-Szemberg criterion, whose effective-divisor clause is vacuous
without (-2)-curves).  See the README for references.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .gram import (LatticeError, PicClass, Vector, as_vector, is_forward,
                   is_zero, self_int)
from .phi import phi


def is_nef_on_s(L: Iterable[int]) -> bool:
    """Nef on the surface: zero, or forward with L^2 >= 0."""
    v = as_vector(L)
    if is_zero(v):
        return True
    return self_int(v) >= 0 and is_forward(v)


def is_ample_on_s(L: Iterable[int]) -> bool:
    """Ample on the surface: forward with L^2 > 0 (interior of the cone)."""
    v = as_vector(L)
    return self_int(v) > 0 and is_forward(v)


def sectional_genus(H: Iterable[int]) -> int:
    """g with H^2 = 2g - 2; requires H^2 > 0."""
    v = as_vector(H)
    h2 = self_int(v)
    if h2 <= 0:
        raise LatticeError(f"sectional genus requires H^2 > 0, got H^2 = {h2}")
    return h2 // 2 + 1


def linear_system_dim(H: Iterable[int]) -> int:
    """dim |H| = g - 1 for ample H."""
    v = as_vector(H)
    require_ample(v)
    return sectional_genus(v) - 1


def is_k_very_ample(H: Iterable[int], k: int) -> bool:
    """k-very ampleness via the phi threshold: phi(H) >= k + 2."""
    v = as_vector(H)
    if self_int(v) <= 0:
        raise LatticeError(
            f"k-very ampleness requires H^2 > 0, got H^2 = {self_int(v)}")
    if not isinstance(k, int) or isinstance(k, bool) or k < 0:
        raise LatticeError(f"k must be a non-negative integer, got {k!r}")
    return phi(v).value >= k + 2


@dataclass(frozen=True)
class PolarizedSurfaceReport:
    """Report on (S, H): genus, dimension of |H|, phi, very-ampleness order.

    max_k_very_ample = phi - 2 is the largest k for which H is k-very
    ample; -1 means not even globally generated is guaranteed.
    """

    H: PicClass
    h_squared: int
    genus: int
    linsys_dim: int
    phi: int
    max_k_very_ample: int


def polarized_report(H: Iterable[int] | PicClass) -> PolarizedSurfaceReport:
    cls = H if isinstance(H, PicClass) else PicClass(as_vector(H))
    v = cls.num
    require_ample(v)
    g = sectional_genus(v)
    value = phi(v).value
    return PolarizedSurfaceReport(
        H=cls,
        h_squared=self_int(v),
        genus=g,
        linsys_dim=g - 1,
        phi=value,
        max_k_very_ample=max(value - 2, -1),
    )


def require_ample(v: Vector) -> None:
    """Raise LatticeError with the failing numeric fact unless H is ample."""
    h2 = self_int(v)
    if h2 <= 0:
        raise LatticeError(f"not ample: H^2 = {h2} <= 0")
    if not is_forward(v):
        raise LatticeError("not ample: wrong cone component")
