# cython: boundscheck=False, wraparound=False, initializedcheck=False
"""Compiled scan kernels: incidence counting, cutting-rank scans, minimality
witnesses and codeword weight enumeration, all table-driven over field codes.

Coordinates are uint16 codes; add/sub/mul are dense (q, q) int16 tables.
Rank computation is division-free Gaussian elimination (rows are rescaled by
the pivot, which leaves the rank alone), capped at the target rank.
"""

import numpy as np

from libc.stdlib cimport free, malloc


cdef inline Py_ssize_t _rank_buf(int* buf, Py_ssize_t m, Py_ssize_t d,
                                 const short[:, ::1] sub, const short[:, ::1] mul,
                                 Py_ssize_t cap) noexcept nogil:
    cdef Py_ssize_t rank = 0, col, i, j, piv
    cdef int pv, e, t
    for col in range(d):
        piv = -1
        for i in range(rank, m):
            if buf[i * d + col] != 0:
                piv = i
                break
        if piv < 0:
            continue
        if piv != rank:
            for j in range(d):
                t = buf[rank * d + j]
                buf[rank * d + j] = buf[piv * d + j]
                buf[piv * d + j] = t
        pv = buf[rank * d + col]
        for i in range(rank + 1, m):
            e = buf[i * d + col]
            if e != 0:
                for j in range(col, d):
                    buf[i * d + j] = sub[mul[pv, buf[i * d + j]],
                                         mul[e, buf[rank * d + j]]]
        rank += 1
        if rank >= cap or rank == m:
            return rank
    return rank


def incidence_counts(const unsigned short[:, ::1] hyps,
                     const unsigned short[:, ::1] pts,
                     const short[:, ::1] add, const short[:, ::1] sub,
                     const short[:, ::1] mul):
    cdef Py_ssize_t N = hyps.shape[0], n = pts.shape[0], d = hyps.shape[1]
    out = np.zeros(N, dtype=np.int64)
    cdef long long[::1] ov = out
    cdef Py_ssize_t i, j, k
    cdef int acc
    cdef long long cnt
    with nogil:
        for i in range(N):
            cnt = 0
            for j in range(n):
                acc = 0
                for k in range(d):
                    acc = add[acc, mul[hyps[i, k], pts[j, k]]]
                if acc == 0:
                    cnt += 1
            ov[i] = cnt
    return out


def cutting_scan(const unsigned short[:, ::1] hyps,
                 const unsigned short[:, ::1] pts,
                 const short[:, ::1] add, const short[:, ::1] sub,
                 const short[:, ::1] mul, Py_ssize_t r):
    """(min over hyperplanes of min(rank(H cap X), r), first index with rank < r)."""
    cdef Py_ssize_t N = hyps.shape[0], n = pts.shape[0], d = hyps.shape[1]
    cdef Py_ssize_t i, j, k, m, rk
    cdef int acc
    cdef Py_ssize_t minr = r, first_bad = -1
    cdef int* buf = <int*> malloc(n * d * sizeof(int))
    if buf == NULL:
        raise MemoryError()
    try:
        with nogil:
            for i in range(N):
                m = 0
                for j in range(n):
                    acc = 0
                    for k in range(d):
                        acc = add[acc, mul[hyps[i, k], pts[j, k]]]
                    if acc == 0:
                        for k in range(d):
                            buf[m * d + k] = pts[j, k]
                        m += 1
                rk = _rank_buf(buf, m, d, sub, mul, r)
                if rk < minr:
                    minr = rk
                if rk < r and first_bad < 0:
                    first_bad = i
    finally:
        free(buf)
    return minr, first_bad


def cutting_check(const unsigned short[:, ::1] hyps,
                  const unsigned short[:, ::1] pts,
                  const short[:, ::1] add, const short[:, ::1] sub,
                  const short[:, ::1] mul, Py_ssize_t r):
    """First hyperplane index whose intersection has rank < r, or -1."""
    cdef Py_ssize_t N = hyps.shape[0], n = pts.shape[0], d = hyps.shape[1]
    cdef Py_ssize_t i, j, k, m
    cdef int acc
    cdef Py_ssize_t bad = -1
    cdef int* buf = <int*> malloc(n * d * sizeof(int))
    if buf == NULL:
        raise MemoryError()
    try:
        with nogil:
            for i in range(N):
                m = 0
                for j in range(n):
                    acc = 0
                    for k in range(d):
                        acc = add[acc, mul[hyps[i, k], pts[j, k]]]
                    if acc == 0:
                        for k in range(d):
                            buf[m * d + k] = pts[j, k]
                        m += 1
                if _rank_buf(buf, m, d, sub, mul, r) < r:
                    bad = i
                    break
    finally:
        free(buf)
    return bad


def minimality_scan(const unsigned short[:, ::1] hyps,
                    const unsigned short[:, ::1] pts,
                    const short[:, ::1] add, const short[:, ::1] sub,
                    const short[:, ::1] mul, Py_ssize_t r,
                    Py_ssize_t base_index=0):
    """Essential-point marks for the minimality check.

    A point is essential once some hyperplane through it has a leave-one-out
    intersection of rank < r.  witness[j] is the first (base_index-offset)
    hyperplane index showing that, -1 while none.
    """
    cdef Py_ssize_t N = hyps.shape[0], n = pts.shape[0], d = hyps.shape[1]
    essential = np.zeros(n, dtype=np.uint8)
    witness = np.full(n, -1, dtype=np.int64)
    cdef unsigned char[::1] ev = essential
    cdef long long[::1] wv = witness
    cdef Py_ssize_t i, j, k, m, t, u, w
    cdef int acc
    cdef int* buf = <int*> malloc(n * d * sizeof(int))
    cdef Py_ssize_t* sel = <Py_ssize_t*> malloc(n * sizeof(Py_ssize_t))
    if buf == NULL or sel == NULL:
        free(buf)
        free(sel)
        raise MemoryError()
    try:
        with nogil:
            for i in range(N):
                m = 0
                for j in range(n):
                    acc = 0
                    for k in range(d):
                        acc = add[acc, mul[hyps[i, k], pts[j, k]]]
                    if acc == 0:
                        sel[m] = j
                        m += 1
                if m == 0:
                    continue
                for t in range(m):
                    if ev[sel[t]]:
                        continue
                    w = 0
                    for u in range(m):
                        if u == t:
                            continue
                        for k in range(d):
                            buf[w * d + k] = pts[sel[u], k]
                        w += 1
                    if _rank_buf(buf, w, d, sub, mul, r) < r:
                        ev[sel[t]] = 1
                        wv[sel[t]] = base_index + i
    finally:
        free(buf)
        free(sel)
    return essential, witness


def codeword_weight_counts(const unsigned short[:, ::1] gen, int q,
                           const short[:, ::1] add, const short[:, ::1] mul):
    """Weight histogram over one codeword per projective class (first nonzero 1)."""
    cdef Py_ssize_t k = gen.shape[0], n = gen.shape[1]
    counts = np.zeros(n + 1, dtype=np.int64)
    cdef long long[::1] cv = counts
    cdef Py_ssize_t lead, pos, j, w
    cdef int carry
    cdef int* u = <int*> malloc(k * sizeof(int))
    cdef int* cw = <int*> malloc(n * sizeof(int))
    if u == NULL or cw == NULL:
        free(u)
        free(cw)
        raise MemoryError()
    try:
        with nogil:
            for lead in range(k):
                for pos in range(k):
                    u[pos] = 0
                u[lead] = 1
                while True:
                    for j in range(n):
                        cw[j] = 0
                    for pos in range(lead, k):
                        if u[pos] != 0:
                            for j in range(n):
                                cw[j] = add[cw[j], mul[u[pos], gen[pos, j]]]
                    w = 0
                    for j in range(n):
                        if cw[j] != 0:
                            w += 1
                    cv[w] += 1
                    # odometer over the digits after the leading 1
                    carry = 1
                    pos = k - 1
                    while carry and pos > lead:
                        u[pos] += 1
                        if u[pos] == q:
                            u[pos] = 0
                        else:
                            carry = 0
                        pos -= 1
                    if carry:
                        break
    finally:
        free(u)
        free(cw)
    return counts
