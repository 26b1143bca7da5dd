"""Exhaustive box oracle for phi, independent of the lattice engine.

`box_minimum(H, radius)` returns min |H.F| over all nonzero isotropic F
whose ten coordinates lie in [-radius, radius].  Writing F = p f1 + q f2 + v
with v in the E8 block, F^2 = 0 is equivalent to p*q = v^T C v / 2 =: t(v)
(C the E8 Cartan matrix), so the scan factors:

* v = 0: the candidates are p f1 and q f2 alone, contributing
  min(|a|, |b|) for H = a f1 + b f2 + h;
* v != 0: only v with 1 <= t(v) <= radius^2 admit a factor pair inside the
  box; those v form the "survivor" set, scanned against every factorization
  t(v) = p*q with 1 <= p, q <= radius.  Sign flips (-p, -q, v) are covered
  because the survivor set is symmetric under v -> -v.

The survivor set does not depend on H, so it is cached per radius and only
the cheap per-query scan runs per vector.  A compiled kernel is used when
available; set ENRIPHI_PURE=1 to force the NumPy fallback.  Every path is
exhaustive over the box: this module is the independent check against the
lattice engine and shares none of its machinery.
"""

from __future__ import annotations

import os
import threading

import numpy as np

from .gram import E8_CARTAN, Vector, gram_apply

if os.environ.get("ENRIPHI_PURE", "") not in ("", "0"):
    from . import _oracle_numpy as _kern

    BACKEND = "numpy (forced)"
else:
    try:
        from . import _corekern as _kern  # type: ignore[no-redef]

        BACKEND = "cython"
    except ImportError:
        from . import _oracle_numpy as _kern  # type: ignore[no-redef]

        BACKEND = "numpy"

#: Largest radius whose survivor table is materialized and cached; larger
#: radii stream the box per query instead (slower, bounded memory).
TABLE_MAX_RADIUS = 5

_CARTAN = np.array(E8_CARTAN, dtype=np.int64)
_lock = threading.Lock()
_tables: dict[int, tuple[np.ndarray, np.ndarray]] = {}
_pairs: dict[int, tuple[np.ndarray, np.ndarray, np.ndarray]] = {}


def backend_name() -> str:
    return BACKEND


def divisor_pairs(radius: int) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Factorizations t = p*q with 1 <= p, q <= radius, grouped by t.

    Returns (p, q, off): the pairs for t live at indices off[t]:off[t+1].
    """
    with _lock:
        if radius in _pairs:
            return _pairs[radius]
    tmax = radius * radius
    ps: list[int] = []
    qs: list[int] = []
    off = np.zeros(tmax + 2, dtype=np.int64)
    for t in range(1, tmax + 1):
        off[t] = len(ps)
        for p in range(1, radius + 1):
            if t % p == 0 and t // p <= radius:
                ps.append(p)
                qs.append(t // p)
    off[tmax + 1] = len(ps)
    out = (np.array(ps, dtype=np.int64), np.array(qs, dtype=np.int64), off)
    with _lock:
        _pairs[radius] = out
    return out


def survivor_table(radius: int) -> tuple[np.ndarray, np.ndarray]:
    """Survivor rows sorted by t, plus group offsets indexed by t."""
    with _lock:
        if radius in _tables:
            return _tables[radius]
    v, t = _kern.build_survivors(radius, _CARTAN)
    order = np.argsort(t, kind="stable")
    v_sorted = np.ascontiguousarray(v[order])
    t_sorted = t[order]
    offsets = np.searchsorted(t_sorted, np.arange(radius * radius + 2)).astype(np.int64)
    out = (v_sorted, offsets)
    with _lock:
        _tables[radius] = out
    return out


def _fits_int64(a: int, b: int, w8: Vector, radius: int) -> bool:
    bound = radius * (abs(a) + abs(b)) + 8 * radius * max(abs(x) for x in w8)
    return bound < 2**62


def box_minimum(H: Vector, radius: int) -> int:
    """min |H.F| over nonzero isotropic F with coordinates in the box."""
    a, b = H[0], H[1]
    w8 = gram_apply(H)[2:]
    pp, qq, poff = divisor_pairs(radius)
    if not _fits_int64(a, b, w8, radius):
        return _bigint_minimum(a, b, w8, radius)
    w8_arr = np.array(w8, dtype=np.int64)
    if radius <= TABLE_MAX_RADIUS:
        v_sorted, offsets = survivor_table(radius)
        return int(_kern.scan_min(v_sorted, offsets, pp, qq, poff,
                                  a, b, w8_arr))
    return int(_kern.stream_min(a, b, w8_arr, radius, _CARTAN, pp, qq, poff))


def _bigint_minimum(a: int, b: int, w8: Vector, radius: int) -> int:
    # Exact big-integer path for coefficients too large for the kernels.
    # Same scan, plain Python ints; only speed differs.
    pp, qq, poff = divisor_pairs(radius)
    v_sorted, offsets = survivor_table(min(radius, TABLE_MAX_RADIUS))
    if radius > TABLE_MAX_RADIUS:
        raise NotImplementedError(
            "box oracle with radius > 5 is not supported for coefficients "
            "beyond 62 bits")
    best = min(abs(a), abs(b))
    rows = v_sorted.tolist()
    for t in range(1, radius * radius + 1):
        j0, j1 = int(poff[t]), int(poff[t + 1])
        if j0 == j1:
            continue
        for i in range(int(offsets[t]), int(offsets[t + 1])):
            row = rows[i]
            s = sum(int(c) * x for c, x in zip(row, w8))
            for j in range(j0, j1):
                cand = abs(b * int(pp[j]) + a * int(qq[j]) + s)
                if cand < best:
                    best = cand
    return best
