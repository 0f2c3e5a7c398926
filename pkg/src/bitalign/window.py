"""Pairwise alignment of arbitrary-length sequences by greedy windowing."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from . import cigar as cigarlib
from .bitvec import MAX_W
from .errors import ConfigError, InputError, InternalConsistencyError
from .table import Counters, Policy, WindowTask, Workspace, compute_dc, encode
from .transcript import traceback

WINDOWED = "windowed"
SINGLE = "single"


@dataclass(frozen=True)
class AlignerConfig:
    """Window size ``W``, overlap ``O`` and improvement toggles.

    Each non-final window commits its first ``W - O`` traceback steps; the
    remaining ``O`` characters are re-aligned by the next window.
    """

    W: int = 64
    O: int = 33
    sene: bool = True
    dent: bool = True
    early_termination: bool = True
    mode: str = WINDOWED
    k_single: Optional[int] = None

    def __post_init__(self):
        if self.mode not in (WINDOWED, SINGLE):
            raise ConfigError(f"unknown mode {self.mode!r}")
        if self.mode == WINDOWED and not 0 <= self.O < self.W <= MAX_W:
            raise ConfigError(f"need 0 <= O < W <= {MAX_W}, got W={self.W}, O={self.O}")
        if self.dent and self.mode == SINGLE:
            raise ConfigError("DENT needs truncated traceback; disable it in single-window mode")
        if self.k_single is not None and self.k_single < 0:
            raise ConfigError("k must be non-negative")

    @classmethod
    def short_reads(cls, **kw) -> "AlignerConfig":
        return cls(W=32, O=17, **kw)

    @property
    def step_limit(self) -> int:
        return self.W - self.O


@dataclass
class AlignmentResult:
    distance: int
    cigar: str
    windows: int = 1
    counters: Counters = field(default_factory=Counters)


def _normalize(seq: str, what: str) -> str:
    if not seq:
        raise InputError(f"empty {what}")
    return seq.upper()


def align(text: str, pattern: str, config: AlignerConfig = AlignerConfig(),
          workspace: Optional[Workspace] = None) -> AlignmentResult:
    """Align ``pattern`` (read) against ``text`` (reference), end to end.

    The reported distance is an upper bound on the edit distance; it is
    exact whenever both sequences fit in one window.
    """
    text = _normalize(text, "text")
    pattern = _normalize(pattern, "pattern")
    if config.mode == SINGLE:
        k = config.k_single if config.k_single is not None else max(len(text), len(pattern))
        res = align_single_window(text, pattern, k, config, workspace)
        if res is None:
            raise InputError(f"no alignment within k={k} edits")
        return res
    W = config.W
    if workspace is None or not workspace.fits(W, W, W):
        workspace = Workspace(W, W)
    t_codes, p_codes = encode(text), encode(pattern)
    n, m = len(t_codes), len(p_codes)
    steady = Policy.from_flags(config.sene, config.dent)
    final = Policy.from_flags(config.sene, False)
    limit = config.step_limit
    max_windows = 4 * (n + m) // limit + 4

    pieces = []
    counters = Counters()
    ti = pi = 0
    windows = 0
    while ti < n and pi < m:
        windows += 1
        if windows > max_windows:
            raise InternalConsistencyError(
                f"window cap {max_windows} exceeded at text {ti}, pattern {pi}")
        last = n - ti <= W and m - pi <= W
        tw = t_codes[ti:ti + W]
        task = WindowTask(tw, p_codes[pi:pi + W], W)
        policy = final if last else steady
        dc = compute_dc(task, policy, config.early_termination, workspace, limit)
        tr = traceback(dc.table, dc.edit_distance, workspace.pm, tw,
                       None if last else limit, workspace)
        counters.add(dc.table.counters)
        counters.table_reads += tr.reads
        pieces.append(tr.ops)
        ti += tr.text_consumed
        pi += tr.pattern_consumed
    # one side ran out: the rest of the other is pure indels
    if ti < n:
        pieces.append("D" * (n - ti))
    if pi < m:
        pieces.append("I" * (m - pi))
    ops = "".join(pieces)
    return AlignmentResult(len(ops) - ops.count("="), cigarlib.compress(ops), windows, counters)


def align_single_window(text: str, pattern: str, k: int,
                        config: Optional[AlignerConfig] = None,
                        workspace: Optional[Workspace] = None) -> Optional[AlignmentResult]:
    """Exact alignment with one table of ``k + 1`` rows; ``None`` if distance > k."""
    config = config or AlignerConfig(mode=SINGLE, dent=False)
    if config.dent:
        raise ConfigError("DENT needs truncated traceback; disable it in single-window mode")
    text = _normalize(text, "text")
    pattern = _normalize(pattern, "pattern")
    if len(text) > MAX_W or len(pattern) > MAX_W:
        raise InputError(f"single-window mode supports sequences up to {MAX_W}")
    # rows past max(n, m) can never be needed
    k = min(k, max(len(text), len(pattern)))
    task = WindowTask(text, pattern, k)
    if workspace is None or not workspace.fits(len(text), len(pattern), k):
        workspace = Workspace(max(len(text), len(pattern)), k)
    dc = compute_dc(task, Policy.from_flags(config.sene, False),
                    config.early_termination, workspace)
    if dc.edit_distance is None:
        return None
    tr = traceback(dc.table, dc.edit_distance, workspace.pm, task.text, None, workspace)
    counters = dc.table.counters
    counters.table_reads += tr.reads
    return AlignmentResult(tr.cost, cigarlib.compress(tr.ops), 1, counters)

