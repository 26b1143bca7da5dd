# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled box-oracle kernels (hot loops of `oracle`).

API-identical to the `_oracle_numpy` fallback: a survivor box scan, the
per-query minimum scan over the survivor table, and a table-free streaming
scan for large radii.  Arithmetic is plain int64; the `oracle` wrapper
routes oversized inputs to an exact big-integer path before overflow can
occur.
"""

import numpy as np

cimport numpy as cnp

cnp.import_array()

ctypedef cnp.int64_t i64
ctypedef cnp.int8_t i8
ctypedef cnp.int32_t i32


cdef inline i64 _llabs(i64 x) nogil:
    return -x if x < 0 else x


cdef Py_ssize_t _survivor_rec(int level, i64 q, i64 *lin, i64 r, i64 tmax,
                              const i64[:, :] cart, i64 *v,
                              i8[:, :] out, i32[:] tvals,
                              Py_ssize_t cnt, bint fill) nogil:
    cdef i64 x, t
    cdef int j
    cdef i64 lin2[8]
    cdef i64 qn
    if level == 8:
        t = q >> 1
        if t >= 1 and t <= tmax:
            if fill:
                for j in range(8):
                    out[cnt, j] = <i8> v[j]
                tvals[cnt] = <i32> t
            cnt += 1
        return cnt
    for x in range(-r, r + 1):
        v[level] = x
        qn = q + cart[level, level] * x * x + lin[level] * x
        for j in range(8):
            if j > level:
                lin2[j] = lin[j] + 2 * cart[level, j] * x
            else:
                lin2[j] = lin[j]
        cnt = _survivor_rec(level + 1, qn, lin2, r, tmax, cart, v,
                            out, tvals, cnt, fill)
    return cnt


def build_survivors(int radius, cartan):
    """Counterpart of _oracle_numpy.build_survivors (two-pass box scan)."""
    cdef const i64[:, :] cart = np.ascontiguousarray(cartan, dtype=np.int64)
    cdef i64 lin0[8]
    cdef i64 v[8]
    cdef int j
    for j in range(8):
        lin0[j] = 0
        v[j] = 0
    empty_v = np.empty((0, 8), dtype=np.int8)
    empty_t = np.empty(0, dtype=np.int32)
    cdef i8[:, :] out0 = empty_v
    cdef i32[:] t0 = empty_t
    cdef Py_ssize_t n
    with nogil:
        n = _survivor_rec(0, 0, lin0, radius, <i64> radius * radius, cart, v,
                          out0, t0, 0, 0)
    vs = np.empty((n, 8), dtype=np.int8)
    ts = np.empty(n, dtype=np.int32)
    cdef i8[:, :] out = vs
    cdef i32[:] tv = ts
    for j in range(8):
        lin0[j] = 0
        v[j] = 0
    with nogil:
        _survivor_rec(0, 0, lin0, radius, <i64> radius * radius, cart, v,
                      out, tv, 0, 1)
    return vs, ts


def scan_min(const i8[:, ::1] v_sorted, const i64[::1] offsets,
             const i64[::1] pairs_p, const i64[::1] pairs_q,
             const i64[::1] pair_off, i64 a, i64 b, const i64[::1] w8):
    """Counterpart of _oracle_numpy.scan_min over the t-sorted table."""
    cdef i64 best = min(_llabs(a), _llabs(b))
    cdef Py_ssize_t t, i, j
    cdef Py_ssize_t tmax = offsets.shape[0] - 2
    cdef i64 s, cand
    with nogil:
        for t in range(1, tmax + 1):
            if pair_off[t] == pair_off[t + 1]:
                continue
            for i in range(offsets[t], offsets[t + 1]):
                s = (v_sorted[i, 0] * w8[0] + v_sorted[i, 1] * w8[1]
                     + v_sorted[i, 2] * w8[2] + v_sorted[i, 3] * w8[3]
                     + v_sorted[i, 4] * w8[4] + v_sorted[i, 5] * w8[5]
                     + v_sorted[i, 6] * w8[6] + v_sorted[i, 7] * w8[7])
                for j in range(pair_off[t], pair_off[t + 1]):
                    cand = _llabs(b * pairs_p[j] + a * pairs_q[j] + s)
                    if cand < best:
                        best = cand
    return int(best)


cdef i64 _stream_rec(int level, i64 q, i64 s, i64 *lin, i64 r, i64 tmax,
                     const i64[:, :] cart, const i64[::1] w8,
                     const i64[::1] kappa, const i64[::1] koff,
                     i64 best) nogil:
    cdef i64 x, t, cand, qn, sn
    cdef int j
    cdef Py_ssize_t p
    cdef i64 lin2[8]
    if level == 8:
        t = q >> 1
        if t >= 1 and t <= tmax:
            for p in range(koff[t], koff[t + 1]):
                cand = _llabs(kappa[p] + s)
                if cand < best:
                    best = cand
        return best
    for x in range(-r, r + 1):
        qn = q + cart[level, level] * x * x + lin[level] * x
        sn = s + w8[level] * x
        for j in range(8):
            if j > level:
                lin2[j] = lin[j] + 2 * cart[level, j] * x
            else:
                lin2[j] = lin[j]
        best = _stream_rec(level + 1, qn, sn, lin2, r, tmax, cart, w8,
                           kappa, koff, best)
    return best


def stream_min(i64 a, i64 b, w8, int radius, cartan, pairs_p, pairs_q, pair_off):
    """Counterpart of _oracle_numpy.stream_min (no survivor table)."""
    cdef const i64[:, :] cart = np.ascontiguousarray(cartan, dtype=np.int64)
    cdef const i64[::1] w = np.ascontiguousarray(w8, dtype=np.int64)
    cdef const i64[::1] pp = np.ascontiguousarray(pairs_p, dtype=np.int64)
    cdef const i64[::1] qq = np.ascontiguousarray(pairs_q, dtype=np.int64)
    cdef const i64[::1] poff = np.ascontiguousarray(pair_off, dtype=np.int64)
    cdef i64 tmax = <i64> radius * radius
    kap = np.empty(pp.shape[0], dtype=np.int64)
    cdef i64[::1] kappa = kap
    cdef Py_ssize_t j
    for j in range(pp.shape[0]):
        kappa[j] = b * pp[j] + a * qq[j]
    cdef i64 lin0[8]
    cdef int i
    for i in range(8):
        lin0[i] = 0
    cdef i64 best = min(_llabs(a), _llabs(b))
    with nogil:
        best = _stream_rec(0, 0, 0, lin0, radius, tmax, cart, w,
                           kappa, poff, best)
    return int(best)
