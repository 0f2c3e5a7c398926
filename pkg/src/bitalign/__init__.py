"""Bit-parallel windowed pairwise sequence alignment.

Quick start::

    from bitalign import align, AlignerConfig
    res = align("ACGTACGT", "ACGAACGT", AlignerConfig(W=64, O=33))
    res.distance, res.cigar
"""

from .bitvec import MAX_W, BitVector
from .errors import (AlignError, ConfigError, InputError, InternalConsistencyError,
                     OutOfStoredRegionError, ParseError)
from .table import Counters, Policy, WindowTask, Workspace, build_pattern_masks, compute_dc
from .transcript import Transcript, regen_edges, traceback
from .window import AlignerConfig, AlignmentResult, align, align_single_window

__all__ = [
    "MAX_W", "BitVector", "AlignError", "ConfigError", "InputError",
    "InternalConsistencyError", "OutOfStoredRegionError", "ParseError", "Counters",
    "Policy", "WindowTask", "Workspace", "build_pattern_masks", "compute_dc",
    "Transcript", "regen_edges", "traceback", "AlignerConfig", "AlignmentResult",
    "align", "align_single_window",
]

__version__ = "0.1.0"
