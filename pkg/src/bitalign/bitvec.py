"""Fixed-width multi-word bitvectors.

Bit ``j = 0`` is the most significant bit of word 0, so the machine left
shift of every word (plus a carry from the following word) moves bit
``j + 1`` into position ``j``.  Bits past ``length`` in the last word are
always zero.  The numba kernels in :mod:`bitalign.kernels` use exactly this
layout on ``uint64`` arrays; :meth:`BitVector.to_words` and
:meth:`BitVector.from_words` convert between the two.
"""

from __future__ import annotations

from typing import Iterable, Sequence

import numpy as np

from .errors import ConfigError

MAX_W = 1024


class BitVector:
    """Immutable bit string of ``length`` bits stored in ``word_bits``-bit words."""

    __slots__ = ("words", "length")

    word_bits = 64

    def __init__(self, words: Sequence[int], length: int):
        if not 1 <= length <= MAX_W:
            raise ConfigError(f"bitvector length {length} outside [1, {MAX_W}]")
        nw = -(-length // self.word_bits)
        if len(words) != nw:
            raise ValueError(f"expected {nw} words for {length} bits, got {len(words)}")
        wmask = (1 << self.word_bits) - 1
        words = [w & wmask for w in words]
        words[-1] &= self._tail_mask(length)
        object.__setattr__(self, "words", tuple(words))
        object.__setattr__(self, "length", length)

    def __setattr__(self, name, value):
        raise AttributeError("BitVector is immutable")

    @classmethod
    def _tail_mask(cls, length: int) -> int:
        wb = cls.word_bits
        used = length - (-(-length // wb) - 1) * wb
        return ((1 << used) - 1) << (wb - used)

    @classmethod
    def from_bits(cls, bits: Iterable[int] | str) -> "BitVector":
        """Build from bits listed in index order (``"1011"`` has bit 0 = 1)."""
        bits = [int(b) for b in bits]
        wb = cls.word_bits
        words = []
        for start in range(0, len(bits), wb):
            chunk = bits[start:start + wb]
            w = 0
            for pos, b in enumerate(chunk):
                if b:
                    w |= 1 << (wb - 1 - pos)
            words.append(w)
        return cls(words, len(bits))

    @classmethod
    def from_words(cls, words: np.ndarray, length: int) -> "BitVector":
        """Wrap a row of 64-bit kernel words."""
        if cls.word_bits != 64:
            return cls.from_bits(BitVector.from_words(words, length).bits())
        nw = -(-length // 64)
        return cls([int(w) for w in words[:nw]], length)

    def to_words(self) -> np.ndarray:
        if self.word_bits != 64:
            return BitVector.from_bits(self.bits()).to_words()
        return np.array(self.words, dtype=np.uint64)

    def bits(self) -> list[int]:
        return [self.bit_at(j) for j in range(self.length)]

    def bit_at(self, j: int) -> int:
        if not 0 <= j < self.length:
            raise IndexError(f"bit {j} outside [0, {self.length})")
        wb = self.word_bits
        return (self.words[j // wb] >> (wb - 1 - j % wb)) & 1

    def __eq__(self, other):
        if not isinstance(other, BitVector):
            return NotImplemented
        return self.length == other.length and self.bits() == other.bits()

    def __hash__(self):
        return hash((self.length, tuple(self.bits())))

    def __str__(self):
        return "".join(map(str, self.bits()))

    def __repr__(self):
        return f"BitVector('{self}')"

    def __and__(self, other):
        return and_(self, other)

    def __or__(self, other):
        return or_(self, other)

    def __lshift__(self, s):
        return shl(self, s)


def ones(m: int, cls: type[BitVector] = BitVector) -> BitVector:
    if not 1 <= m <= MAX_W:
        raise ConfigError(f"bitvector length {m} outside [1, {MAX_W}]")
    wb = cls.word_bits
    return cls([(1 << wb) - 1] * -(-m // wb), m)


def shl(v: BitVector, s: int) -> BitVector:
    """Shift towards bit 0; zeros enter at bit ``m - 1``.

    Per word this is two left shifts, a right shift and an or: the word's own
    bits move up by ``s % wb`` and the top bits of the next word fill the gap.
    """
    m = v.length
    if not 0 <= s <= m:
        raise ValueError(f"shift {s} outside [0, {m}]")
    wb = v.word_bits
    wmask = (1 << wb) - 1
    q, r = divmod(s, wb)
    src = v.words + (0,) * (q + 1)
    out = []
    for w in range(len(v.words)):
        hi = (src[w + q] << r) & wmask
        lo = src[w + q + 1] >> (wb - r) if r else 0
        out.append(hi | lo)
    return type(v)(out, m)


def _same_length(a: BitVector, b: BitVector):
    assert a.length == b.length, f"length mismatch {a.length} != {b.length}"


def and_(a: BitVector, b: BitVector) -> BitVector:
    _same_length(a, b)
    return type(a)([x & y for x, y in zip(a.words, b.words)], a.length)


def or_(a: BitVector, b: BitVector) -> BitVector:
    _same_length(a, b)
    return type(a)([x | y for x, y in zip(a.words, b.words)], a.length)


def msb(v: BitVector) -> int:
    return v.bit_at(0)


def bit_at(v: BitVector, j: int) -> int:
    return v.bit_at(j)


def slice_high(v: BitVector, b: int) -> BitVector:
    """Keep bits ``0 .. b-1`` of ``v`` as a ``b``-bit vector."""
    if not 1 <= b <= v.length:
        raise ValueError(f"slice width {b} outside [1, {v.length}]")
    nw = -(-b // v.word_bits)
    return type(v)(list(v.words[:nw]), b)
