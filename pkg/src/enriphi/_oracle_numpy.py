"""NumPy implementation of the box-oracle kernels.

Fallback backend, API-identical to the compiled `_corekern` extension; the
`oracle` module picks one at import time.  See `oracle` for the shared
survivor-table layout and the mathematics of the U + E8 split.
"""

from __future__ import annotations

import numpy as np

_CHUNK_ROWS = 1 << 20


def build_survivors(radius: int, cartan: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Scan the E8 coordinate box [-radius, radius]^8 and keep vectors v with
    1 <= v^T C v / 2 <= radius^2 (the only ones an isotropic box vector can
    use).  Returns (V, t) unsorted, V int8 of shape (n, 8), t int32.
    """
    r = radius
    tmax = r * r
    rng = np.arange(-r, r + 1, dtype=np.int32)
    grid = np.stack(np.meshgrid(rng, rng, rng, rng, indexing="ij"), axis=-1)
    half = grid.reshape(-1, 4)  # (2r+1)^4 rows, both halves use the same grid
    c = cartan.astype(np.int32)
    a_blk, b_blk, d_blk = c[:4, :4], c[:4, 4:], c[4:, 4:]
    q_a = np.einsum("ij,jk,ik->i", half, a_blk, half)
    q_d = np.einsum("ij,jk,ik->i", half, d_blk, half)
    xb = half @ b_blk
    v_parts: list[np.ndarray] = []
    t_parts: list[np.ndarray] = []
    step = max(1, _CHUNK_ROWS // half.shape[0])
    for lo in range(0, half.shape[0], step):
        hi = min(lo + step, half.shape[0])
        q = q_a[lo:hi, None] + 2 * (xb[lo:hi] @ half.T) + q_d[None, :]
        t = q >> 1
        keep = (t >= 1) & (t <= tmax)
        xi, yi = np.nonzero(keep)
        if xi.size == 0:
            continue
        rows = np.concatenate([half[lo + xi], half[yi]], axis=1)
        v_parts.append(rows.astype(np.int8))
        t_parts.append(t[xi, yi].astype(np.int32))
    if not v_parts:
        return np.empty((0, 8), np.int8), np.empty(0, np.int32)
    return np.concatenate(v_parts), np.concatenate(t_parts)


def scan_min(v_sorted: np.ndarray, offsets: np.ndarray,
             pairs_p: np.ndarray, pairs_q: np.ndarray, pair_off: np.ndarray,
             a: int, b: int, w8: np.ndarray) -> int:
    """min |H.F| over nonzero isotropic F in the box, given the survivor
    table sorted by t.  The U-part minimum min(|a|, |b|) seeds the result
    (vectors p*f1 and q*f2, the whole v = 0 stratum)."""
    best = min(abs(a), abs(b))
    n = v_sorted.shape[0]
    s = np.empty(n, dtype=np.int64)
    for lo in range(0, n, _CHUNK_ROWS):
        hi = min(lo + _CHUNK_ROWS, n)
        s[lo:hi] = v_sorted[lo:hi].astype(np.int64) @ w8
    for t in range(1, offsets.shape[0] - 1):
        j0, j1 = int(pair_off[t]), int(pair_off[t + 1])
        lo, hi = int(offsets[t]), int(offsets[t + 1])
        if j0 == j1 or lo == hi:
            continue
        sv = s[lo:hi]
        for j in range(j0, j1):
            kappa = b * int(pairs_p[j]) + a * int(pairs_q[j])
            m = int(np.abs(sv + kappa).min())
            if m < best:
                best = m
    return best


def stream_min(a: int, b: int, w8: np.ndarray, radius: int, cartan: np.ndarray,
               pairs_p: np.ndarray, pairs_q: np.ndarray, pair_off: np.ndarray) -> int:
    """Table-free variant for radii too large to materialize survivors."""
    r = radius
    tmax = r * r
    best = min(abs(a), abs(b))
    kappas: list[list[int]] = [[] for _ in range(tmax + 1)]
    for t in range(1, tmax + 1):
        for j in range(int(pair_off[t]), int(pair_off[t + 1])):
            kappas[t].append(b * int(pairs_p[j]) + a * int(pairs_q[j]))
    rng = np.arange(-r, r + 1, dtype=np.int64)
    grid = np.stack(np.meshgrid(rng, rng, rng, rng, indexing="ij"), axis=-1)
    half = grid.reshape(-1, 4)
    c = cartan.astype(np.int64)
    a_blk, b_blk, d_blk = c[:4, :4], c[:4, 4:], c[4:, 4:]
    q_a = np.einsum("ij,jk,ik->i", half, a_blk, half)
    q_d = np.einsum("ij,jk,ik->i", half, d_blk, half)
    xb = half @ b_blk
    s_x = half @ w8[:4]
    s_y = half @ w8[4:]
    step = max(1, _CHUNK_ROWS // half.shape[0])
    for lo in range(0, half.shape[0], step):
        hi = min(lo + step, half.shape[0])
        q = q_a[lo:hi, None] + 2 * (xb[lo:hi] @ half.T) + q_d[None, :]
        t = q >> 1
        s = s_x[lo:hi, None] + s_y[None, :]
        for tv in range(1, tmax + 1):
            if not kappas[tv]:
                continue
            sv = s[t == tv]
            if sv.size == 0:
                continue
            for kappa in kappas[tv]:
                m = int(np.abs(sv + kappa).min())
                if m < best:
                    best = m
    return best
