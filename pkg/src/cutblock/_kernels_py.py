"""Pure-Python/numpy fallback for the scan kernels.

Same contracts as the compiled module: incidence via blocked table lookups,
ranks by small division-free eliminations in Python.  Slower, used when the
extension is not built or CUTBLOCK_PURE=1.
"""

import numpy as np

_BLOCK = 4096


def _dot_block(hb, pts, add, mul):
    acc = mul[hb[:, 0][:, None], pts[:, 0][None, :]]
    for k in range(1, hb.shape[1]):
        acc = add[acc, mul[hb[:, k][:, None], pts[:, k][None, :]]]
    return acc


def _rank_rows(rows, sub, mul, cap):
    m = len(rows)
    if m == 0:
        return 0
    d = len(rows[0])
    rank = 0
    for col in range(d):
        piv = -1
        for i in range(rank, m):
            if rows[i][col]:
                piv = i
                break
        if piv < 0:
            continue
        if piv != rank:
            rows[rank], rows[piv] = rows[piv], rows[rank]
        pv = rows[rank][col]
        prow = rows[rank]
        for i in range(rank + 1, m):
            e = rows[i][col]
            if e:
                ri = rows[i]
                mpv = mul[pv]
                mee = mul[e]
                rows[i] = [sub[mpv[x]][mee[y]] for x, y in zip(ri, prow)]
        rank += 1
        if rank >= cap or rank == m:
            return rank
    return rank


def incidence_counts(hyps, pts, add, sub, mul):
    N = hyps.shape[0]
    out = np.zeros(N, dtype=np.int64)
    for s in range(0, N, _BLOCK):
        acc = _dot_block(hyps[s:s + _BLOCK], pts, add, mul)
        out[s:s + acc.shape[0]] = (acc == 0).sum(axis=1)
    return out


def cutting_scan(hyps, pts, add, sub, mul, r):
    N = hyps.shape[0]
    sub_l, mul_l = sub.tolist(), mul.tolist()
    pts_l = pts.tolist()
    minr, first_bad = r, -1
    for s in range(0, N, _BLOCK):
        acc = _dot_block(hyps[s:s + _BLOCK], pts, add, mul)
        zero = acc == 0
        for i in range(zero.shape[0]):
            rows = [pts_l[j] for j in np.flatnonzero(zero[i])]
            rk = _rank_rows(rows, sub_l, mul_l, r)
            if rk < minr:
                minr = rk
            if rk < r and first_bad < 0:
                first_bad = s + i
    return minr, first_bad


def cutting_check(hyps, pts, add, sub, mul, r):
    N = hyps.shape[0]
    sub_l, mul_l = sub.tolist(), mul.tolist()
    pts_l = pts.tolist()
    for s in range(0, N, _BLOCK):
        acc = _dot_block(hyps[s:s + _BLOCK], pts, add, mul)
        zero = acc == 0
        for i in range(zero.shape[0]):
            rows = [pts_l[j] for j in np.flatnonzero(zero[i])]
            if _rank_rows(rows, sub_l, mul_l, r) < r:
                return s + i
    return -1


def minimality_scan(hyps, pts, add, sub, mul, r, base_index=0):
    N = hyps.shape[0]
    n = pts.shape[0]
    sub_l, mul_l = sub.tolist(), mul.tolist()
    pts_l = pts.tolist()
    essential = np.zeros(n, dtype=np.uint8)
    witness = np.full(n, -1, dtype=np.int64)
    for s in range(0, N, _BLOCK):
        acc = _dot_block(hyps[s:s + _BLOCK], pts, add, mul)
        zero = acc == 0
        for i in range(zero.shape[0]):
            sel = np.flatnonzero(zero[i])
            for t in sel:
                if essential[t]:
                    continue
                rows = [pts_l[j] for j in sel if j != t]
                if _rank_rows(rows, sub_l, mul_l, r) < r:
                    essential[t] = 1
                    witness[t] = base_index + s + i
    return essential, witness


def codeword_weight_counts(gen, q, add, mul):
    k, n = gen.shape
    counts = np.zeros(n + 1, dtype=np.int64)
    for lead in range(k):
        tail = k - lead - 1
        m = q ** tail
        msgs = np.zeros((m, k), dtype=np.uint16)
        msgs[:, lead] = 1
        idx = np.arange(m)
        for pos in range(lead + 1, k):
            msgs[:, pos] = (idx // q ** (k - 1 - pos)) % q
        acc = np.zeros((m, n), dtype=np.int16)
        for pos in range(lead, k):
            acc = add[acc, mul[msgs[:, pos][:, None], gen[pos][None, :]]]
        weights = n - (acc == 0).sum(axis=1)
        counts += np.bincount(weights, minlength=n + 1)
    return counts
