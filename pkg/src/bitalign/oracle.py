"""Exact quadratic references used for verification and accuracy scoring.

Nothing here is on the alignment hot path.  Rows of the Wagner-Fischer
matrix are filled with numpy: the diagonal and vertical candidates are
vectorised, and the horizontal (left-neighbour) dependency is resolved with
a running minimum of ``cand[j] - j``.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import cigar as cigarlib
from .errors import InputError

MAX_ORACLE_LEN = 100_000
_FULL_MATRIX_CELLS = 4_000_000


def _codes(seq: str) -> np.ndarray:
    # N never matches, not even another N, mirroring the bit-parallel masks
    arr = np.frombuffer(seq.upper().encode("ascii"), dtype=np.uint8).astype(np.int16)
    arr[~np.isin(arr, np.frombuffer(b"ACGT", dtype=np.uint8))] = -1
    return arr


def _next_row(prev: np.ndarray, ch: int, pat: np.ndarray, i: int, ramp: np.ndarray) -> np.ndarray:
    cost = (pat != ch) | (pat < 0) | (ch < 0)
    cand = np.empty_like(prev)
    cand[0] = i
    np.minimum(prev[1:] + 1, prev[:-1] + cost, out=cand[1:])
    return np.minimum.accumulate(cand - ramp) + ramp


def _last_row(text: np.ndarray, pat: np.ndarray) -> np.ndarray:
    ramp = np.arange(len(pat) + 1, dtype=np.int64)
    row = ramp.copy()
    for i, ch in enumerate(text, 1):
        row = _next_row(row, ch, pat, i, ramp)
    return row


def levenshtein(text: str, pattern: str) -> int:
    t, p = _codes(text), _codes(pattern)
    if len(t) < len(p):
        t, p = p, t
    return int(_last_row(t, p)[-1])


def suffix_distance_table(text: str, pattern: str) -> list[list[int]]:
    """``d[i][j]`` = edit distance of ``text[i:]`` and ``pattern[j:]``.

    Plain Python on purpose: this is the reference the bit-parallel table
    is checked against.
    """
    n, m = len(text), len(pattern)
    d = [[0] * (m + 1) for _ in range(n + 1)]
    for i in range(n, -1, -1):
        for j in range(m, -1, -1):
            if i == n:
                d[i][j] = m - j
            elif j == m:
                d[i][j] = n - i
            else:
                same = text[i] == pattern[j] and text[i] in "ACGT"
                d[i][j] = min(d[i + 1][j + 1] + (not same), d[i + 1][j] + 1, d[i][j + 1] + 1)
    return d


def _full_align(t: np.ndarray, p: np.ndarray) -> str:
    n, m = len(t), len(p)
    ramp = np.arange(m + 1, dtype=np.int64)
    mat = np.empty((n + 1, m + 1), dtype=np.int64)
    mat[0] = ramp
    for i in range(1, n + 1):
        mat[i] = _next_row(mat[i - 1], t[i - 1], p, i, ramp)
    ops = []
    i, j = n, m
    while i or j:
        if i and j:
            same = t[i - 1] == p[j - 1] and t[i - 1] >= 0
            if mat[i, j] == mat[i - 1, j - 1] + (not same):
                ops.append("=" if same else "X")
                i -= 1
                j -= 1
                continue
        if i and mat[i, j] == mat[i - 1, j] + 1:
            ops.append("D")
            i -= 1
        else:
            ops.append("I")
            j -= 1
    return "".join(reversed(ops))


def _hirschberg(t: np.ndarray, p: np.ndarray) -> str:
    n, m = len(t), len(p)
    if n == 0:
        return "I" * m
    if m == 0:
        return "D" * n
    if n * m <= _FULL_MATRIX_CELLS or n == 1:
        return _full_align(t, p)
    mid = n // 2
    fwd = _last_row(t[:mid], p)
    rev = _last_row(t[mid:][::-1], p[::-1])[::-1]
    split = int(np.argmin(fwd + rev))
    return _hirschberg(t[:mid], p[:split]) + _hirschberg(t[mid:], p[split:])


def global_align(text: str, pattern: str) -> tuple[int, str]:
    """Optimal unit-cost global alignment as ``(distance, cigar)``."""
    if len(text) > MAX_ORACLE_LEN or len(pattern) > MAX_ORACLE_LEN:
        raise InputError(f"oracle limited to sequences of {MAX_ORACLE_LEN} characters")
    if not text or not pattern:
        raise InputError("empty sequence")
    ops = _hirschberg(_codes(text), _codes(pattern))
    return len(ops) - ops.count("="), cigarlib.compress(ops)


@dataclass(frozen=True)
class ScoringParams:
    match_bonus: int = 2
    mismatch_penalty: int = 4
    gap_open: int = 4
    gap_extend: int = 2

    def __post_init__(self):
        if min(self.mismatch_penalty, self.gap_open, self.gap_extend) < 0:
            raise InputError("penalties must be non-negative")


def score_cigar(cigar: str, params: ScoringParams = ScoringParams()) -> int:
    """Affine-gap score; every I or D run is one gap."""
    score = 0
    for n, op in cigarlib.parse(cigar):
        if op == "=":
            score += params.match_bonus * n
        elif op == "X":
            score -= params.mismatch_penalty * n
        else:
            score -= params.gap_open + params.gap_extend * n
    return score


def _ref_positions(cigar: str) -> list[int | None]:
    pos = []
    r = 0
    for n, op in cigarlib.parse(cigar):
        if op in "=X":
            pos.extend(range(r, r + n))
            r += n
        elif op == "I":
            pos.extend([None] * n)
        else:
            r += n
    return pos


def correctly_aligned_bases(cigar: str, truth: str) -> float:
    """Fraction of read bases placed on the same reference position as ``truth``.

    Inserted bases count as correct when the truth also leaves them
    unplaced.
    """
    got, want = _ref_positions(cigar), _ref_positions(truth)
    if len(got) != len(want):
        raise InputError("CIGARs span different read lengths")
    if not got:
        return 1.0
    return sum(a == b for a, b in zip(got, want)) / len(got)
