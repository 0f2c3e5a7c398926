"""Traceback over a window table.

Coordinates: ``i`` indexes text, ``j`` indexes pattern, ``d`` is the
remaining edit budget.  The walk starts at (0, 0, d_opt) and both ``i`` and
``j`` only grow:

* match        -> (i+1, j+1, d)
* substitution -> (i+1, j+1, d-1)
* deletion     -> (i+1, j,   d-1)   consumes text only
* insertion    -> (i,   j+1, d-1)   consumes pattern only

When several moves are legal the first of match, substitution, deletion,
insertion wins.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

import numpy as np

from . import kernels
from .bitvec import BitVector, and_, ones, or_, shl
from .errors import InternalConsistencyError, OutOfStoredRegionError
from .table import DpTable, PatternMasks, Workspace, encode

OP_CHARS = "=XID"
MATCH, SUBSTITUTION, INSERTION, DELETION = OP_CHARS


@dataclass
class EdgeSet:
    I: BitVector
    D: BitVector
    S: BitVector
    M: BitVector

    def combined(self) -> BitVector:
        return and_(and_(self.I, self.D), and_(self.S, self.M))


@dataclass
class Transcript:
    ops: str  # one char per op from OP_CHARS
    text_consumed: int
    pattern_consumed: int
    reads: int = 0

    @property
    def cost(self) -> int:
        return len(self.ops) - self.ops.count(MATCH)


def _shl_fill(v: BitVector, fill: int, full: bool) -> BitVector:
    # for a trimmed vector the incoming bit was discarded; report it as 1
    out = shl(v, 1)
    if fill or not full:
        out = or_(out, BitVector.from_bits([0] * (v.length - 1) + [1]))
    return out


def regen_edges(table: DpTable, i: int, d: int, masks: PatternMasks, text_char: str) -> EdgeSet:
    """Recompute I, D, S, M for cell (i, d) from the stored neighbour entries.

    Vectors have the table's stored bit width.  On a trimmed table the last
    bit of I, S and M depends on a discarded bit and is reported as 1.
    """
    if table.policy.stores_edges:
        raise TypeError("edge tables store their edges; use DpTable.stored_edges")
    n, b = table.n, table.bits
    if not 0 <= i < n:
        raise OutOfStoredRegionError(f"no edges for column i={i}")
    full = b == table.m
    east = table.entry(i + 1, d)
    pm = masks[text_char] if text_char in masks.masks else ones(masks.m)
    pm = BitVector.from_words(pm.to_words(), b)
    M = or_(_shl_fill(east, int(n - i - 1 > d), full), pm)
    if d == 0:
        allset = ones(b)
        return EdgeSet(allset, allset, allset, M)
    north_east = table.entry(i + 1, d - 1)
    north = table.entry(i, d - 1)
    I = _shl_fill(north, int(n - i > d - 1), full)
    S = _shl_fill(north_east, int(n - i - 1 > d - 1), full)
    return EdgeSet(I, north_east, S, M)


def traceback(table: DpTable, d_opt: int, masks, text,
              max_steps: Optional[int] = None,
              workspace: Optional[Workspace] = None) -> Transcript:
    """Recover the edit transcript of one window.

    ``masks`` is a :class:`PatternMasks` or its raw kernel word array.

    ``max_steps=None`` follows the path to the far corner; otherwise the walk
    stops after ``max_steps`` ops.
    """
    text = encode(text)
    if len(text) != table.n:
        raise ValueError("text does not match the table")
    limit = -1 if max_steps is None else max_steps
    if workspace is not None and workspace.ops.shape[0] >= table.n + table.m:
        ops = workspace.ops
    else:
        ops = np.zeros(table.n + table.m + 1, dtype=np.int8)
    words = masks.words if isinstance(masks, PatternMasks) else masks
    edges_mode = table.policy.stores_edges
    nops, i, j, d, reads, status = kernels.tb_kernel(
        text, words, table.m, d_opt, limit, edges_mode, table.cols, table.bits,
        table.entries if not edges_mode else _NO_ENTRIES,
        table.edges if edges_mode else _NO_EDGES, ops)
    if status == kernels.TB_OUT_OF_REGION:
        raise OutOfStoredRegionError(
            f"traceback left the stored region at (i={i}, j={j}, d={d})")
    if status != kernels.TB_OK or (max_steps is None and d != 0):
        raise InternalConsistencyError(
            f"traceback stuck at (i={i}, j={j}, d={d}) after {nops} ops")
    return Transcript(ops_to_str(ops[:nops]), int(i), int(j), int(reads))


_NO_ENTRIES = np.zeros((1, 1, 1), dtype=np.uint64)
_NO_EDGES = np.zeros((1, 1, 1, 1), dtype=np.uint64)
_OP_LUT = np.frombuffer(OP_CHARS.encode(), dtype=np.uint8)


def ops_to_str(codes: np.ndarray) -> str:
    return _OP_LUT[codes].tobytes().decode()
