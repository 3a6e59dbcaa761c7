"""Kernel selection and the scan API used by the verifiers.

The compiled extension is picked up when present; CUTBLOCK_PURE=1 forces the
numpy fallback.  Both backends share contracts, and scans may be split over
worker threads: chunk results are merged in index order, so the outcome is
identical for every thread count.
"""

import os
from concurrent.futures import ThreadPoolExecutor

import numpy as np

if os.environ.get("CUTBLOCK_PURE") == "1":
    from . import _kernels_py as _impl

    BACKEND = "fallback"
else:
    try:
        from . import _kernels as _impl

        BACKEND = "compiled"
    except ImportError:
        from . import _kernels_py as _impl

        BACKEND = "fallback"

TABLE_CAP = 1024


def field_tables(f):
    """(add, sub, mul) dense int16 tables for a field of order <= TABLE_CAP."""
    cached = getattr(f, "_np_tables", None)
    if cached is not None:
        return cached
    q = f.order
    if q > TABLE_CAP:
        raise ValueError("field order %d too large for dense scan tables" % q)
    add = np.empty((q, q), dtype=np.int16)
    sub = np.empty((q, q), dtype=np.int16)
    mul = np.empty((q, q), dtype=np.int16)
    for a in range(q):
        fa, fs, fm = f.add, f.sub, f.mul
        for b in range(q):
            add[a, b] = fa(a, b)
            sub[a, b] = fs(a, b)
            mul[a, b] = fm(a, b)
    tables = (add, sub, mul)
    f._np_tables = tables
    return tables


def _chunks(N, threads):
    threads = max(1, min(threads, N)) if N else 1
    step = -(-N // threads)
    return [(s, min(s + step, N)) for s in range(0, N, step)]


def scan_incidence_counts(space, pts_arr, threads=1):
    """Per-hyperplane |H meet X| over all hyperplanes, in rank order."""
    add, sub, mul = field_tables(space.f)
    hyps = space.point_array()
    if threads <= 1:
        return _impl.incidence_counts(hyps, pts_arr, add, sub, mul)
    parts = _chunks(hyps.shape[0], threads)
    with ThreadPoolExecutor(max_workers=len(parts)) as ex:
        futs = [ex.submit(_impl.incidence_counts, hyps[a:b], pts_arr, add, sub, mul)
                for a, b in parts]
        return np.concatenate([fu.result() for fu in futs])


def scan_cutting(space, pts_arr, threads=1):
    """(min rank of H meet X capped at r, first hyperplane rank with rank < r)."""
    add, sub, mul = field_tables(space.f)
    hyps = space.point_array()
    r = space.r
    if threads <= 1:
        return _impl.cutting_scan(hyps, pts_arr, add, sub, mul, r)
    parts = _chunks(hyps.shape[0], threads)
    with ThreadPoolExecutor(max_workers=len(parts)) as ex:
        futs = [ex.submit(_impl.cutting_scan, hyps[a:b], pts_arr, add, sub, mul, r)
                for a, b in parts]
        minr, first_bad = r, -1
        for (a, _), fu in zip(parts, futs):
            mr, fb = fu.result()
            minr = min(minr, mr)
            if fb >= 0 and first_bad < 0:
                first_bad = a + fb
        return minr, first_bad


def scan_cutting_abort(space, pts_arr):
    """First violating hyperplane rank or -1; aborts on the first hit."""
    add, sub, mul = field_tables(space.f)
    return _impl.cutting_check(space.point_array(), pts_arr, add, sub, mul, space.r)


def scan_minimality(space, pts_arr, threads=1):
    """(essential flags, first witness hyperplane rank per point; -1 if none)."""
    add, sub, mul = field_tables(space.f)
    hyps = space.point_array()
    r = space.r
    if threads <= 1:
        return _impl.minimality_scan(hyps, pts_arr, add, sub, mul, r)
    parts = _chunks(hyps.shape[0], threads)
    with ThreadPoolExecutor(max_workers=len(parts)) as ex:
        futs = [ex.submit(_impl.minimality_scan, hyps[a:b], pts_arr, add, sub, mul,
                          r, a)
                for a, b in parts]
        n = pts_arr.shape[0]
        essential = np.zeros(n, dtype=np.uint8)
        witness = np.full(n, -1, dtype=np.int64)
        for (a, _), fu in zip(parts, futs):
            ev, wv = fu.result()
            for j in range(n):
                if ev[j] and not essential[j]:
                    essential[j] = 1
                    witness[j] = wv[j]
        return essential, witness


def codeword_weights(f, gen_arr):
    """Weight histogram over projective codeword representatives."""
    add, sub, mul = field_tables(f)
    return _impl.codeword_weight_counts(gen_arr, f.order, add, mul)
