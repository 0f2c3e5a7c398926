"""Bit-parallel DP table construction for one alignment window.

Bit ``j`` of ``R[i][d]`` is 0 exactly when ``text[i:]`` and ``pattern[j:]``
are within ``d`` edits.  The table is built row by row in ``d``; the
storage policy decides what is retained for traceback:

* ``BASELINE_EDGES`` - the I, D and M vectors of every computed cell
  (S is D shifted by one and is never stored),
* ``SENE_ENTRIES``  - only the entries ``R[i][d]``; edges are regenerated,
* ``DENT_EDGES`` / ``DENT_ENTRIES`` - the same, trimmed to the columns and
  high bits a traceback of at most ``trace_limit`` steps can touch.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field, fields
from typing import Optional

import numpy as np

from . import kernels
from .bitvec import MAX_W, BitVector
from .errors import ConfigError, InputError, OutOfStoredRegionError

ALPHABET = "ACGT"

_CODES = np.full(256, 4, dtype=np.uint8)
for _c, _ch in enumerate(ALPHABET):
    _CODES[ord(_ch)] = _c


def encode(seq) -> np.ndarray:
    """Map a sequence to codes 0..3 for ACGT; anything else becomes 4.

    Code 4 has an all-ones mask, so it never matches (an N always costs one
    substitution, even against another N).
    """
    if isinstance(seq, np.ndarray):
        return seq
    return _CODES[np.frombuffer(seq.encode("ascii"), dtype=np.uint8)]


class Policy(enum.Enum):
    BASELINE_EDGES = "baseline"
    SENE_ENTRIES = "sene"
    DENT_EDGES = "dent"
    DENT_ENTRIES = "sene+dent"

    @classmethod
    def from_flags(cls, sene: bool, dent: bool) -> "Policy":
        if dent:
            return cls.DENT_ENTRIES if sene else cls.DENT_EDGES
        return cls.SENE_ENTRIES if sene else cls.BASELINE_EDGES

    @property
    def stores_edges(self) -> bool:
        return self in (Policy.BASELINE_EDGES, Policy.DENT_EDGES)

    @property
    def trimmed(self) -> bool:
        return self in (Policy.DENT_EDGES, Policy.DENT_ENTRIES)


@dataclass
class Counters:
    """Instrumentation for one window or accumulated over an alignment.

    ``stored_bits`` counts logical bits (trimmed vectors count only their
    kept bits, not word padding).  ``table_reads`` counts vector loads made
    by traceback; construction reads its previous row from scratch buffers.
    """

    stored_bits: int = 0
    table_writes: int = 0
    table_reads: int = 0
    rows_computed: int = 0
    cells_computed: int = 0

    def add(self, other: "Counters") -> "Counters":
        for f in fields(self):
            setattr(self, f.name, getattr(self, f.name) + getattr(other, f.name))
        return self

    def as_dict(self) -> dict:
        return {f.name: getattr(self, f.name) for f in fields(self)}


@dataclass
class PatternMasks:
    m: int
    masks: dict[str, BitVector]
    words: np.ndarray  # (5, nwords); row 4 is the never-matching mask

    def __getitem__(self, ch: str) -> BitVector:
        return self.masks[ch]


def _mask_words(codes: np.ndarray, out: Optional[np.ndarray] = None) -> np.ndarray:
    m = codes.shape[0]
    if out is None:
        out = np.zeros((kernels.ALPHABET_CODES, (m + 63) >> 6), dtype=np.uint64)
    kernels.build_masks(codes, out)
    return out


def build_pattern_masks(pattern) -> PatternMasks:
    codes = encode(pattern)
    m = codes.shape[0]
    if m == 0:
        raise InputError("empty pattern")
    if m > MAX_W:
        raise InputError(f"pattern length {m} exceeds {MAX_W}")
    words = _mask_words(codes)
    masks = {ch: BitVector.from_words(words[c], m) for c, ch in enumerate(ALPHABET)}
    return PatternMasks(m, masks, words)


@dataclass
class WindowTask:
    text: np.ndarray
    pattern: np.ndarray
    k: int

    def __post_init__(self):
        self.text = encode(self.text)
        self.pattern = encode(self.pattern)
        n, m = len(self.text), len(self.pattern)
        if n < 1 or m < 1:
            raise InputError("window sequences must be non-empty")
        if n > MAX_W or m > MAX_W:
            raise InputError(f"window longer than {MAX_W}")
        if self.k < 0:
            raise ConfigError("k must be non-negative")


class Workspace:
    """Scratch rows and table storage, reusable serially across windows.

    A table returned by :func:`compute_dc` views this storage, so it stays
    valid only until the workspace is used for the next window.
    """

    def __init__(self, max_len: int, max_k: int):
        if not 1 <= max_len <= MAX_W:
            raise ConfigError(f"workspace length {max_len} outside [1, {MAX_W}]")
        self.max_len = max_len
        self.max_k = max_k
        nw = (max_len + 63) >> 6
        self.prev = np.zeros((max_len + 1, nw), dtype=np.uint64)
        self.cur = np.zeros((max_len + 1, nw), dtype=np.uint64)
        self.pm = np.zeros((kernels.ALPHABET_CODES, nw), dtype=np.uint64)
        self.ops = np.zeros(2 * max_len + 1, dtype=np.int8)
        self._entries = None
        self._edges = None

    @property
    def entries(self):
        if self._entries is None:
            nw = (self.max_len + 63) >> 6
            self._entries = np.zeros((self.max_k + 1, self.max_len + 1, nw), dtype=np.uint64)
        return self._entries

    @property
    def edges(self):
        if self._edges is None:
            nw = (self.max_len + 63) >> 6
            self._edges = np.zeros((self.max_k + 1, self.max_len, 3, nw), dtype=np.uint64)
        return self._edges

    def fits(self, n: int, m: int, k: int) -> bool:
        return max(n, m) <= self.max_len and k <= self.max_k


@dataclass
class DpTable:
    policy: Policy
    n: int
    m: int
    rows: int  # rows 0 .. rows-1 are stored
    cols: int  # stored columns 0 .. cols-1
    bits: int  # stored high bits per vector
    entries: Optional[np.ndarray]
    edges: Optional[np.ndarray]
    counters: Counters = field(default_factory=Counters)

    def _check(self, i, d, j=None, cols=None):
        cols = self.cols if cols is None else cols
        if not (0 <= d < self.rows and 0 <= i < cols):
            raise OutOfStoredRegionError(f"cell (i={i}, d={d}) not stored")
        if j is not None and not 0 <= j < self.bits:
            raise OutOfStoredRegionError(f"bit {j} not stored")

    def entry(self, i: int, d: int) -> BitVector:
        """Stored ``R[i][d]`` (high ``bits`` bits) under an entries policy."""
        if self.policy.stores_edges:
            raise TypeError("edge tables do not store entries")
        self._check(i, d)
        return BitVector.from_words(self.entries[d, i], self.bits)

    def stored_edges(self, i: int, d: int) -> tuple[BitVector, BitVector, BitVector]:
        """Stored ``(I, D, M)`` for cell (i, d) under an edges policy."""
        if not self.policy.stores_edges:
            raise TypeError("entry tables do not store edges")
        self._check(i, d)
        e = self.edges[d, i]
        return tuple(BitVector.from_words(e[w], self.bits) for w in range(3))


@dataclass
class DcResult:
    edit_distance: Optional[int]  # None: no d <= k reaches the corner
    table: DpTable
    rows_computed: int


_NO_ENTRIES = np.zeros((1, 1, 1), dtype=np.uint64)
_NO_EDGES = np.zeros((1, 1, 1, 1), dtype=np.uint64)


def storage_shape(policy: Policy, n: int, m: int, trace_limit: Optional[int]) -> tuple[int, int]:
    """``(columns, bits)`` retained per row under ``policy``."""
    if policy.trimmed:
        if trace_limit is None or trace_limit < 1:
            raise ConfigError("trimmed storage needs a positive traceback step limit")
        cols = min(n + 1, trace_limit + 1)
        bits = min(m, trace_limit + 1)
    else:
        cols, bits = n + 1, m
    if policy.stores_edges:
        # edges exist only for cells i < n and are read at i < trace_limit
        cols = min(n, trace_limit) if policy.trimmed else n
    return cols, bits


def compute_dc(task: WindowTask, policy: Policy = Policy.SENE_ENTRIES,
               early_termination: bool = False, workspace: Optional[Workspace] = None,
               trace_limit: Optional[int] = None) -> DcResult:
    """Build R for ``task`` and report the smallest d with a 0 in msb(R[0][d])."""
    text, pattern, k = task.text, task.pattern, task.k
    n, m = len(text), len(pattern)
    if workspace is None:
        workspace = Workspace(max(n, m), k)
    elif not workspace.fits(n, m, k):
        raise ValueError(
            f"workspace ({workspace.max_len}, k={workspace.max_k}) too small for "
            f"n={n}, m={m}, k={k}")
    cols, bits = storage_shape(policy, n, m, trace_limit)
    pm = workspace.pm
    kernels.build_masks(pattern, pm)
    edges_mode = policy.stores_edges
    entries = _NO_ENTRIES if edges_mode else workspace.entries
    edges = workspace.edges if edges_mode else _NO_EDGES
    d_opt, rows = kernels.dc_kernel(
        text, pm, m, k, early_termination, edges_mode, cols, bits,
        workspace.prev, workspace.cur, entries, edges)
    per_cell = 3 if edges_mode else 1
    counters = Counters(
        stored_bits=rows * cols * per_cell * bits,
        table_writes=rows * cols * per_cell,
        rows_computed=rows,
        cells_computed=rows * n,
    )
    table = DpTable(policy, n, m, rows, cols, bits,
                    None if edges_mode else entries,
                    edges if edges_mode else None, counters)
    return DcResult(None if d_opt < 0 else int(d_opt), table, int(rows))


def distance_bit(table: DpTable, i: int, d: int, j: int) -> int:
    """Bit j of R[i][d], read from whatever the policy retained."""
    if not 0 <= j < table.m or not 0 <= i <= table.n:
        raise IndexError(f"(i={i}, j={j}) outside the table")
    if not 0 <= d < table.rows:
        raise OutOfStoredRegionError(f"row d={d} not computed")
    if i == table.n:
        return int(j < table.m - d)
    if not table.policy.stores_edges:
        table._check(i, d, j)
        return int(kernels.entry_bit(table.entries, table.cols, table.bits,
                                     table.n, table.m, i, d, j))
    table._check(i, d, j)
    vi, vd, vm = (int(kernels.edge_bit(table.edges, table.cols, table.bits,
                                       table.n, table.m, i, d, j, w)) for w in range(3))
    if j + 1 == table.m:
        vs = int(table.n - i - 1 > d - 1)
    else:
        table._check(i, d, j + 1)
        vs = int(kernels.edge_bit(table.edges, table.cols, table.bits,
                                  table.n, table.m, i, d, j + 1, 1))
    if d == 0:
        return vm
    return vi & vd & vs & vm

