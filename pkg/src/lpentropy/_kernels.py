"""Numba kernels for the greedy combinatorial constructions.

Two interchangeable greedy strategies produce the separated ternary codes:

* ``greedy_code_masks`` streams every word of the weight-2m ternary shell as
  a (plus-mask, minus-mask) pair of 64-bit words and keeps survivors after
  each accept.  Exact for any m but quadratic-ish; used for m >= 4.

* ``greedy_code_supports`` exploits that for m <= 3 two words at Hamming
  distance <= m must share all but at most one support element, so the kill
  set of an accepted word is a precomputed sign-pattern bitmask in its own
  support and in each single-swap neighbour support.  Near-linear; used for
  m <= 3 at any n.

Both follow the same fixed enumeration order (supports lexicographic, sign
patterns in ascending binary order, bit j set meaning -1 at the j-th
support element) and therefore produce identical codes.
"""

from __future__ import annotations

import numba
import numpy as np

U0 = np.uint64(0)
U1 = np.uint64(1)
U64_FULL = np.uint64(0xFFFFFFFFFFFFFFFF)


@numba.njit(cache=True, inline="always")
def _pc64(x):
    x = x - ((x >> np.uint64(1)) & np.uint64(0x5555555555555555))
    x = (x & np.uint64(0x3333333333333333)) + (
        (x >> np.uint64(2)) & np.uint64(0x3333333333333333)
    )
    x = (x + (x >> np.uint64(4))) & np.uint64(0x0F0F0F0F0F0F0F0F)
    return (x * np.uint64(0x0101010101010101)) >> np.uint64(56)


@numba.njit(cache=True)
def combos_lex(n, w, total):
    """All w-subsets of {0..n-1} in lexicographic order, as an index array."""
    out = np.empty((total, w), np.int64)
    sup = np.empty(w, np.int64)
    for i in range(w):
        sup[i] = i
    row = 0
    while True:
        for i in range(w):
            out[row, i] = sup[i]
        row += 1
        i = w - 1
        while i >= 0 and sup[i] == n - w + i:
            i -= 1
        if i < 0:
            break
        sup[i] += 1
        for j in range(i + 1, w):
            sup[j] = sup[j - 1] + 1
    return out


@numba.njit(cache=True)
def combo_masks_lex(n, w, total):
    """All w-subsets of {0..n-1} in lexicographic order, as uint64 bitmasks."""
    out = np.empty(total, np.uint64)
    sup = np.empty(w, np.int64)
    for i in range(w):
        sup[i] = i
    row = 0
    while True:
        mask = U0
        for i in range(w):
            mask |= U1 << np.uint64(sup[i])
        out[row] = mask
        row += 1
        i = w - 1
        while i >= 0 and sup[i] == n - w + i:
            i -= 1
        if i < 0:
            break
        sup[i] += 1
        for j in range(i + 1, w):
            sup[j] = sup[j - 1] + 1
    return out


@numba.njit(cache=True)
def enum_code_masks(n, m, n_sup, P, Q):
    """Fill P (plus) and Q (minus) masks for the weight-2m ternary shell."""
    w = 2 * m
    n_signs = 1 << w
    sup = np.empty(w, np.int64)
    for i in range(w):
        sup[i] = i
    out = 0
    while True:
        smask = U0
        for i in range(w):
            smask |= U1 << np.uint64(sup[i])
        for sig in range(n_signs):
            neg = U0
            for j in range(w):
                if (sig >> j) & 1:
                    neg |= U1 << np.uint64(sup[j])
            Q[out] = neg
            P[out] = smask & ~neg
            out += 1
        i = w - 1
        while i >= 0 and sup[i] == n - w + i:
            i -= 1
        if i < 0:
            break
        sup[i] += 1
        for j in range(i + 1, w):
            sup[j] = sup[j - 1] + 1
    return out


@numba.njit(cache=True)
def greedy_code_masks(P, Q, m):
    """Greedy scan over mask-encoded words, compacting survivors per accept."""
    total = P.shape[0]
    live = np.arange(total)
    nlive = total
    acc = np.empty(total, np.int64)
    nacc = 0
    mm = np.uint64(m)
    while nlive > 0:
        i0 = live[0]
        acc[nacc] = i0
        nacc += 1
        p0 = P[i0]
        q0 = Q[i0]
        w = 0
        for t in range(1, nlive):
            j = live[t]
            if _pc64((P[j] ^ p0) | (Q[j] ^ q0)) > mm:
                live[w] = j
                w += 1
        nlive = w
    return acc[:nacc]


@numba.njit(cache=True, inline="always")
def _lex_rank(t, n, w, binom):
    # rank of the strictly increasing w-tuple t in lexicographic order
    r = 0
    prev = -1
    for i in range(w):
        r += binom[n - 1 - prev, w - i] - binom[n - t[i], w - i]
        prev = t[i]
    return r


@numba.njit(cache=True)
def greedy_code_supports(supports, n, m, binom, table0, table1, full, amax):
    """Greedy code via per-support alive bitmasks and precomputed kill tables.

    Valid for m <= 3 only: words at Hamming distance <= m then share at least
    2m-1 support elements, so accepting a word can only kill sign patterns in
    its own support (table0) or in single-swap supports (table1, indexed by
    the inserted element's position and the accepted pattern with the removed
    position's bit dropped).
    """
    n_sup = supports.shape[0]
    w = supports.shape[1]
    alive = np.full(n_sup, full, np.uint64)
    acc_sup = np.empty(n_sup * amax, np.int64)
    acc_sig = np.empty(n_sup * amax, np.int64)
    nacc = 0
    member = np.zeros(n, np.uint8)
    tbuf = np.empty(w, np.int64)
    for r in range(n_sup):
        a = alive[r]
        if a == U0:
            continue
        sup = supports[r]
        for i in range(w):
            member[sup[i]] = 1
        while a != U0:
            lsb = a & (~a + U1)
            sig = int(_pc64(lsb - U1))
            acc_sup[nacc] = r
            acc_sig[nacc] = sig
            nacc += 1
            alive[r] &= ~table0[sig]
            if m >= 2:
                for ai in range(w):
                    tau = (sig & ((1 << ai) - 1)) | ((sig >> (ai + 1)) << ai)
                    for b in range(n):
                        if member[b] == 1:
                            continue
                        # neighbour support: drop position ai, insert b
                        bi = -1
                        j = 0
                        for i2 in range(w):
                            if i2 == ai:
                                continue
                            v = sup[i2]
                            if bi < 0 and b < v:
                                bi = j
                                tbuf[j] = b
                                j += 1
                            tbuf[j] = v
                            j += 1
                        if bi < 0:
                            bi = w - 1
                            tbuf[w - 1] = b
                        t_rank = _lex_rank(tbuf, n, w, binom)
                        alive[t_rank] &= ~table1[bi, tau]
            a = alive[r]
        for i in range(w):
            member[sup[i]] = 0
    return acc_sup[:nacc], acc_sig[:nacc]


@numba.njit(cache=True)
def greedy_half_overlap_masks(masks, thr):
    """Greedy family of equal-size subsets with pairwise |intersection| < thr."""
    total = masks.shape[0]
    live = np.arange(total)
    nlive = total
    acc = np.empty(total, np.int64)
    nacc = 0
    t_u = np.uint64(thr)
    while nlive > 0:
        i0 = live[0]
        acc[nacc] = i0
        nacc += 1
        m0 = masks[i0]
        w = 0
        for t in range(1, nlive):
            j = live[t]
            if _pc64(masks[j] & m0) < t_u:
                live[w] = j
                w += 1
        nlive = w
    return acc[:nacc]


@numba.njit(cache=True)
def greedy_half_overlap_rows(rows, thr):
    """Same greedy over sorted index rows; for dimensions beyond 64 bits."""
    total = rows.shape[0]
    k = rows.shape[1]
    live = np.arange(total)
    nlive = total
    acc = np.empty(total, np.int64)
    nacc = 0
    while nlive > 0:
        i0 = live[0]
        acc[nacc] = i0
        nacc += 1
        r0 = rows[i0]
        w = 0
        for t in range(1, nlive):
            j = live[t]
            a = 0
            b = 0
            inter = 0
            while a < k and b < k:
                va = r0[a]
                vb = rows[j, b]
                if va == vb:
                    inter += 1
                    a += 1
                    b += 1
                elif va < vb:
                    a += 1
                else:
                    b += 1
            if inter < thr:
                live[w] = j
                w += 1
        nlive = w
    return acc[:nacc]
