"""Reading and writing pair datasets and per-pair alignment output."""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterable, Iterator, Optional, Sequence, TextIO

from ..errors import InputError, ParseError

FORMATS = ("tsv", "fasta-pair")


@dataclass(frozen=True)
class SeqPairRecord:
    id: str
    text: str
    pattern: str
    truth: Optional[str] = None  # ground-truth CIGAR, when simulated


def _clean(seq: str, line: int) -> str:
    seq = seq.strip().upper()
    if not seq:
        raise ParseError("empty sequence", line)
    return seq


def _read_tsv(path: str) -> Iterator[SeqPairRecord]:
    with open(path) as fh:
        for lineno, line in enumerate(fh, 1):
            line = line.rstrip("\n\r")
            if not line or line.startswith("#"):
                continue
            fields = line.split("\t")
            if len(fields) not in (3, 4):
                raise ParseError(f"expected 3 or 4 tab-separated fields, got {len(fields)}", lineno)
            truth = fields[3].strip() or None if len(fields) == 4 else None
            yield SeqPairRecord(fields[0], _clean(fields[1], lineno), _clean(fields[2], lineno), truth)


def _read_fasta(path: str) -> Iterator[tuple[str, str, int]]:
    name = None
    chunks: list[str] = []
    start = 0
    with open(path) as fh:
        for lineno, line in enumerate(fh, 1):
            line = line.strip()
            if not line:
                continue
            if line.startswith(">"):
                if name is not None:
                    yield name, _clean("".join(chunks), start), start
                name = line[1:].split()[0] if line[1:].strip() else ""
                if not name:
                    raise ParseError("FASTA header without a name", lineno)
                chunks = []
                start = lineno
            elif name is None:
                raise ParseError("sequence data before the first FASTA header", lineno)
            else:
                chunks.append(line)
    if name is not None:
        yield name, _clean("".join(chunks), start), start


def _read_fasta_pair(text_path: str, pattern_path: str) -> Iterator[SeqPairRecord]:
    texts = _read_fasta(text_path)
    patterns = _read_fasta(pattern_path)
    count = 0
    while True:
        t = next(texts, None)
        p = next(patterns, None)
        if t is None and p is None:
            return
        if t is None or p is None:
            raise InputError(
                f"FASTA files hold different record counts ({text_path}, {pattern_path}): "
                f"one ends after {count} records")
        count += 1
        yield SeqPairRecord(p[0], t[1], p[1])


def read_pairs(paths: str | Sequence[str], fmt: str = "tsv") -> Iterator[SeqPairRecord]:
    """Stream pair records.

    ``tsv``: ``id<TAB>text<TAB>pattern[<TAB>truth_cigar]`` per line.
    ``fasta-pair``: two FASTA files (texts, then patterns) matched by order;
    records take the pattern's name.
    """
    if isinstance(paths, str):
        paths = [paths]
    if fmt == "tsv":
        if len(paths) != 1:
            raise InputError("tsv input takes exactly one file")
        records = _read_tsv(paths[0])
    elif fmt == "fasta-pair":
        if len(paths) != 2:
            raise InputError("fasta-pair input takes two files: texts then patterns")
        records = _read_fasta_pair(paths[0], paths[1])
    else:
        raise InputError(f"unknown format {fmt!r}")
    seen = set()
    for rec in records:
        if rec.id in seen:
            raise InputError(f"duplicate pair id {rec.id!r}")
        seen.add(rec.id)
        yield rec


def write_pairs(records: Iterable[SeqPairRecord], fh: TextIO):
    for rec in records:
        fields = [rec.id, rec.text, rec.pattern] + ([rec.truth] if rec.truth else [])
        fh.write("\t".join(fields) + "\n")


def write_results(ids: Sequence[str], results, fh: TextIO, as_json: bool = False):
    if as_json:
        rows = [{"id": i, "distance": r.distance, "cigar": r.cigar} for i, r in zip(ids, results)]
        json.dump(rows, fh, indent=1)
        fh.write("\n")
        return
    for i, r in zip(ids, results):
        fh.write(f"{i}\t{r.distance}\t{r.cigar}\n")
