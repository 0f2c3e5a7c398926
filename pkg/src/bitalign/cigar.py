"""Extended CIGAR strings (``=``, ``X``, ``I``, ``D``).

Text is the reference and pattern is the read: ``I`` consumes pattern only,
``D`` consumes text only.
"""

from __future__ import annotations

import itertools
import re

from .errors import InputError

_TOKEN = re.compile(r"(\d+)([=XID])")


def compress(ops: str) -> str:
    """Run-length encode a per-op string such as ``"===X"`` into ``"3=1X"``."""
    return "".join(f"{len(list(g))}{op}" for op, g in itertools.groupby(ops))


def parse(cigar: str) -> list[tuple[int, str]]:
    pos = 0
    runs = []
    for mt in _TOKEN.finditer(cigar):
        if mt.start() != pos or int(mt.group(1)) == 0:
            raise InputError(f"malformed CIGAR {cigar!r} at offset {pos}")
        runs.append((int(mt.group(1)), mt.group(2)))
        pos = mt.end()
    if pos != len(cigar):
        raise InputError(f"malformed CIGAR {cigar!r} at offset {pos}")
    return runs


def expand(cigar: str) -> str:
    return "".join(op * n for n, op in parse(cigar))


def merge(a: str, b: str) -> str:
    """Concatenate two CIGARs, joining the runs at the seam."""
    if not a or not b:
        return a or b
    ra, rb = parse(a), parse(b)
    if ra[-1][1] == rb[0][1]:
        ra[-1] = (ra[-1][0] + rb[0][0], ra[-1][1])
        rb = rb[1:]
    return "".join(f"{n}{op}" for n, op in ra + rb)


def consumed(cigar: str) -> tuple[int, int]:
    """``(text_length, pattern_length)`` spanned by the CIGAR."""
    t = p = 0
    for n, op in parse(cigar):
        if op in "=XD":
            t += n
        if op in "=XI":
            p += n
    return t, p


def edit_count(cigar: str) -> int:
    return sum(n for n, op in parse(cigar) if op != "=")


def replay(cigar: str, text: str, pattern: str) -> str:
    """Apply the CIGAR to ``text`` and return the sequence it produces.

    Inserted and substituted characters are taken from ``pattern``.  Raises
    :class:`InputError` when an ``=`` covers differing characters, an ``X``
    covers equal ones, or either sequence is over- or under-consumed.
    """
    out = []
    i = j = 0
    for n, op in parse(cigar):
        if op in "=XD" and i + n > len(text) or op in "=XI" and j + n > len(pattern):
            raise InputError(f"CIGAR overruns the sequences at run {n}{op}")
        if op == "=":
            if text[i:i + n] != pattern[j:j + n]:
                raise InputError(f"'=' run over mismatching bases at text {i}")
            out.append(text[i:i + n])
            i += n
            j += n
        elif op == "X":
            for t, p in zip(text[i:i + n], pattern[j:j + n]):
                if t == p and t in "ACGT":
                    raise InputError(f"'X' over matching bases at text {i}")
            out.append(pattern[j:j + n])
            i += n
            j += n
        elif op == "I":
            out.append(pattern[j:j + n])
            j += n
        else:
            i += n
    if i != len(text) or j != len(pattern):
        raise InputError(f"CIGAR consumes ({i}, {j}) of ({len(text)}, {len(pattern)})")
    return "".join(out)


def is_valid(cigar: str, text: str, pattern: str) -> bool:
    try:
        return replay(cigar, text, pattern) == pattern
    except InputError:
        return False
