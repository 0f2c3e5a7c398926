"""numba kernels for table construction and traceback.

Vectors are rows of ``uint64`` words laid out as in :mod:`bitalign.bitvec`:
bit ``j`` lives in word ``j >> 6`` at machine position ``63 - (j & 63)``.

Every left shift by one is followed by an explicit fill of bit ``m - 1``
with the value of the virtual column ``j = m`` (the empty pattern suffix),
whose distance to ``text[i:]`` is ``n - i``.  A plain zero fill would let
the tail of the text go unaligned for free.
"""

import numpy as np
from numba import njit

ALL = np.uint64(0xFFFFFFFFFFFFFFFF)
U0 = np.uint64(0)
U1 = np.uint64(1)
U63 = np.uint64(63)

# op codes shared with transcript.py
OP_MATCH = 0
OP_SUB = 1
OP_INS = 2
OP_DEL = 3

# traceback status codes
TB_OK = 0
TB_STUCK = 1
TB_OUT_OF_REGION = 2

ALPHABET_CODES = 5  # A C G T + "matches nothing"


@njit(cache=True, nogil=True)
def high_mask(nbits):
    """Word mask keeping the top ``nbits`` (1..64) machine bits."""
    if nbits >= 64:
        return ALL
    return ALL << np.uint64(64 - nbits)


@njit(cache=True, nogil=True)
def fill_shl_ones(out, m, s):
    """``out <- ones(m) << s``."""
    nw = (m + 63) >> 6
    for w in range(nw):
        out[w] = U0
    keep = m - s
    full = keep >> 6
    for w in range(full):
        out[w] = ALL
    rem = keep & 63
    if rem:
        out[full] = high_mask(rem)


@njit(cache=True, nogil=True)
def shl_words(src, out, m, s):
    """Zero-fill left shift of an ``m``-bit row by ``s`` (0 <= s <= m)."""
    nw = (m + 63) >> 6
    q = s >> 6
    r = s & 63
    for w in range(nw):
        a = src[w + q] if w + q < nw else U0
        b = src[w + q + 1] if w + q + 1 < nw else U0
        if r:
            out[w] = (a << np.uint64(r)) | (b >> np.uint64(64 - r))
        else:
            out[w] = a


@njit(cache=True, nogil=True)
def build_masks(pattern, out):
    """Pattern masks: bit j of mask[c] is 0 iff pattern[j] == c (c < 4)."""
    m = pattern.shape[0]
    nw = (m + 63) >> 6
    for c in range(ALPHABET_CODES):
        for w in range(nw):
            out[c, w] = U0
        fill_shl_ones(out[c], m, 0)
    for j in range(m):
        c = pattern[j]
        if c < 4:
            out[c, j >> 6] &= ~(U1 << np.uint64(63 - (j & 63)))


@njit(cache=True, nogil=True)
def _store(dst, src, kw, kmask):
    for w in range(kw - 1):
        dst[w] = src[w]
    dst[kw - 1] = src[kw - 1] & kmask


@njit(cache=True, nogil=True)
def dc_kernel(text, pm, m, k, early, store_edges, keep_cols, keep_bits,
              prev, cur, entries, edges):
    """Row-wise (d-major) construction of R for one window.

    Entries policy stores R[i][d] for i < keep_cols; edges policy stores the
    I, D, M vectors of every computed cell with i < keep_cols.  Only the
    high ``keep_bits`` bits are retained.

    Returns ``(d_opt, rows_computed)`` with ``d_opt = -1`` when no row
    d <= k reaches the corner.
    """
    n = text.shape[0]
    nw = (m + 63) >> 6
    kw = (keep_bits + 63) >> 6
    kmask = high_mask(keep_bits - ((kw - 1) << 6))
    lw = (m - 1) >> 6
    lb = U1 << np.uint64(63 - ((m - 1) & 63))
    d_opt = -1
    rows = 0
    for d in range(k + 1):
        fill_shl_ones(cur[n], m, min(d, m))
        if not store_edges and n < keep_cols:
            for w in range(kw):
                entries[d, n, w] = cur[n, w] & (kmask if w == kw - 1 else ALL)
        for i in range(n - 1, -1, -1):
            c = text[i]
            rem_next = n - i - 1
            if d == 0:
                for w in range(nw):
                    v = cur[i + 1, w] << U1
                    if w + 1 < nw:
                        v |= cur[i + 1, w + 1] >> U63
                    cur[i, w] = v | pm[c, w]
                if rem_next > 0:
                    cur[i, lw] |= lb
                if not store_edges and i < keep_cols:
                    for w in range(kw):
                        entries[0, i, w] = cur[i, w] & (kmask if w == kw - 1 else ALL)
                if store_edges and i < keep_cols:
                    for w in range(kw - 1):
                        edges[0, i, 0, w] = ALL
                        edges[0, i, 1, w] = ALL
                    edges[0, i, 0, kw - 1] = kmask
                    edges[0, i, 1, kw - 1] = kmask
                    _store(edges[0, i, 2], cur[i], kw, kmask)
                continue
            inj_i = rem_next + 1 > d - 1
            inj_s = rem_next > d - 1
            inj_m = rem_next > d
            for w in range(nw):
                vi = prev[i, w] << U1
                vs = prev[i + 1, w] << U1
                vm = cur[i + 1, w] << U1
                if w + 1 < nw:
                    vi |= prev[i, w + 1] >> U63
                    vs |= prev[i + 1, w + 1] >> U63
                    vm |= cur[i + 1, w + 1] >> U63
                if w == lw:
                    if inj_i:
                        vi |= lb
                    if inj_s:
                        vs |= lb
                    if inj_m:
                        vm |= lb
                vm |= pm[c, w]
                vd = prev[i + 1, w]
                r = vi & vd & vs & vm
                cur[i, w] = r
                if i < keep_cols and w < kw:
                    msk = kmask if w == kw - 1 else ALL
                    if store_edges:
                        edges[d, i, 0, w] = vi & msk
                        edges[d, i, 1, w] = vd & msk
                        edges[d, i, 2, w] = vm & msk
                    else:
                        entries[d, i, w] = r & msk
        rows = d + 1
        if d_opt < 0 and (cur[0, 0] >> U63) == U0:
            d_opt = d
            if early:
                break
        prev, cur = cur, prev
    return d_opt, rows


@njit(cache=True, nogil=True)
def _bit(row, j):
    return np.int64((row[j >> 6] >> np.uint64(63 - (j & 63))) & U1)


@njit(cache=True, nogil=True)
def entry_bit(entries, cols, bits, n, m, i, d, j):
    """Bit j of R[i][d] from an entries table; -1 when discarded.

    j == m is the virtual empty-suffix column and is computed, not read.
    """
    if j == m:
        return np.int64(1) if n - i > d else np.int64(0)
    if i >= cols or j >= bits:
        return np.int64(-1)
    return _bit(entries[d, i], j)


@njit(cache=True, nogil=True)
def edge_bit(edges, cols, bits, n, m, i, d, j, which):
    """Bit j of stored edge ``which`` (0=I, 1=D, 2=M) at cell (i, d); -1 when discarded."""
    if i >= cols or j >= bits:
        return np.int64(-1)
    return _bit(edges[d, i, which], j)


@njit(cache=True, nogil=True)
def tb_kernel(text, pm, m, d_opt, max_steps, store_edges, cols, bits,
              entries, edges, ops):
    """Follow zeros from (i=0, j=0, d=d_opt) towards the far corner.

    Priority among legal moves: match, substitution, deletion, insertion.
    Returns ``(n_ops, i, j, d, reads, status)``.
    """
    n = text.shape[0]
    i = 0
    j = 0
    d = d_opt
    nops = 0
    reads = 0
    while True:
        if i == n and j == m:
            break
        if max_steps >= 0 and nops >= max_steps:
            break
        if i == n or j == m:
            if d < 1:
                return nops, i, j, d, reads, TB_STUCK
            if i == n:
                ops[nops] = OP_INS
                j += 1
            else:
                ops[nops] = OP_DEL
                i += 1
            nops += 1
            d -= 1
            continue
        c = text[i]
        pmb = _bit(pm[c], j)
        op = -1
        if store_edges:
            reads += 1
            mb = edge_bit(edges, cols, bits, n, m, i, d, j, 2)
            if mb < 0:
                return nops, i, j, d, reads, TB_OUT_OF_REGION
            if mb == 0:
                op = OP_MATCH
            elif d > 0:
                reads += 1
                db = edge_bit(edges, cols, bits, n, m, i, d, j, 1)
                # S is D shifted by one; its fill bit is the virtual column
                if j + 1 == m:
                    sb = np.int64(1) if n - i - 1 > d - 1 else np.int64(0)
                else:
                    sb = edge_bit(edges, cols, bits, n, m, i, d, j + 1, 1)
                if db < 0 or sb < 0:
                    return nops, i, j, d, reads, TB_OUT_OF_REGION
                if sb == 0:
                    op = OP_SUB
                elif db == 0:
                    op = OP_DEL
                else:
                    reads += 1
                    ib = edge_bit(edges, cols, bits, n, m, i, d, j, 0)
                    if ib < 0:
                        return nops, i, j, d, reads, TB_OUT_OF_REGION
                    if ib == 0:
                        op = OP_INS
        else:
            reads += 1
            mb = entry_bit(entries, cols, bits, n, m, i + 1, d, j + 1)
            if mb < 0:
                return nops, i, j, d, reads, TB_OUT_OF_REGION
            if (mb | pmb) == 0:
                op = OP_MATCH
            elif d > 0:
                reads += 1
                sb = entry_bit(entries, cols, bits, n, m, i + 1, d - 1, j + 1)
                db = entry_bit(entries, cols, bits, n, m, i + 1, d - 1, j)
                if sb < 0 or db < 0:
                    return nops, i, j, d, reads, TB_OUT_OF_REGION
                if sb == 0:
                    op = OP_SUB
                elif db == 0:
                    op = OP_DEL
                else:
                    reads += 1
                    ib = entry_bit(entries, cols, bits, n, m, i, d - 1, j + 1)
                    if ib < 0:
                        return nops, i, j, d, reads, TB_OUT_OF_REGION
                    if ib == 0:
                        op = OP_INS
        if op < 0:
            return nops, i, j, d, reads, TB_STUCK
        ops[nops] = op
        nops += 1
        if op == OP_MATCH:
            i += 1
            j += 1
        elif op == OP_SUB:
            i += 1
            j += 1
            d -= 1
        elif op == OP_DEL:
            i += 1
            d -= 1
        else:
            j += 1
            d -= 1
    return nops, i, j, d, reads, TB_OK
