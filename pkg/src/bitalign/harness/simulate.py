"""Deterministic read-pair simulator with ground-truth CIGARs.

Randomness comes from numpy's Philox4x32 counter-based generator seeded
with the user seed, so a seed reproduces the same dataset on any platform
and numpy build that ships Philox.

Every text position independently carries an error with probability
``error_rate``.  The error kind is drawn from ``mix = (sub, ins, del)``:

* substitution - the read gets one of the three other bases (``X``),
* insertion    - a random base is inserted before the text base, which is
  then copied (``I`` then ``=``),
* deletion     - the text base is dropped (``D``).
"""

from __future__ import annotations

from typing import Iterator

import numpy as np

from .. import cigar as cigarlib
from ..errors import InputError
from .io import SeqPairRecord

BASES = "ACGT"


def make_rng(seed: int) -> np.random.Generator:
    return np.random.Generator(np.random.Philox(seed))


def _check_mix(mix) -> tuple[float, float, float]:
    mix = tuple(float(x) for x in mix)
    if len(mix) != 3 or min(mix) < 0 or abs(sum(mix) - 1.0) > 1e-9:
        raise InputError(f"mix must be three non-negative fractions summing to 1, got {mix}")
    return mix


def mutate(text: str, error_rate: float, mix, rng: np.random.Generator) -> tuple[str, str]:
    """Return ``(pattern, truth_cigar)`` for one reference string."""
    mix = _check_mix(mix)
    n = len(text)
    hit = rng.random(n) < error_rate
    kind = rng.choice(3, size=n, p=mix)
    shift = rng.integers(1, 4, size=n)  # substitute by a non-zero base offset
    extra = rng.integers(0, 4, size=n)
    read, ops = [], []
    for i, ch in enumerate(text):
        if not hit[i]:
            read.append(ch)
            ops.append("=")
        elif kind[i] == 0:
            read.append(BASES[(BASES.index(ch) + shift[i]) % 4])
            ops.append("X")
        elif kind[i] == 1:
            read.append(BASES[extra[i]] + ch)
            ops.append("I=")
        else:
            ops.append("D")
    return "".join(read), cigarlib.compress("".join(ops))


def simulate_pairs(count: int, length: int, error_rate: float = 0.05,
                   mix=(1 / 3, 1 / 3, 1 / 3), seed: int = 0,
                   length_range: tuple[int, int] | None = None) -> Iterator[SeqPairRecord]:
    """Yield ``count`` simulated pairs; ``length_range`` draws each length uniformly."""
    if not 0 <= error_rate < 1:
        raise InputError(f"error rate {error_rate} outside [0, 1)")
    if count < 0 or length < 1:
        raise InputError("count must be >= 0 and length >= 1")
    mix = _check_mix(mix)
    rng = make_rng(seed)
    for idx in range(count):
        n = length if length_range is None else int(rng.integers(length_range[0], length_range[1] + 1))
        text = "".join(BASES[c] for c in rng.integers(0, 4, size=n))
        pattern, truth = mutate(text, error_rate, mix, rng)
        if not pattern:
            # every base deleted: keep one so the pair stays alignable
            pattern, truth = text[0], cigarlib.compress("=" + "D" * (n - 1))
        yield SeqPairRecord(f"sim{idx}", text, pattern, truth)


def random_pairs(count: int, length: int, seed: int = 0) -> Iterator[SeqPairRecord]:
    """Unrelated uniformly random pairs of equal length."""
    rng = make_rng(seed)
    for idx in range(count):
        t = "".join(BASES[c] for c in rng.integers(0, 4, size=length))
        p = "".join(BASES[c] for c in rng.integers(0, 4, size=length))
        yield SeqPairRecord(f"rnd{idx}", t, p)
