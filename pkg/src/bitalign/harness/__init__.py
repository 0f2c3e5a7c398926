"""Dataset I/O, simulation, batch runs and accuracy sweeps."""

from .batch import BatchResult, run_batch
from .io import SeqPairRecord, read_pairs
from .simulate import simulate_pairs
from .sweep import SweepReport, nearest_rank, sweep

__all__ = ["BatchResult", "run_batch", "SeqPairRecord", "read_pairs", "simulate_pairs",
           "SweepReport", "nearest_rank", "sweep"]
