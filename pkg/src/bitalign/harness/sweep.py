"""Accuracy and footprint sweeps over window size, overlap and improvements."""

from __future__ import annotations

import csv
import io
import itertools
import json
import math
from dataclasses import dataclass, field
from typing import Callable, Iterable, Sequence

from ..errors import ConfigError, InputError
from ..oracle import ScoringParams, correctly_aligned_bases, global_align, score_cigar
from ..window import AlignerConfig
from .batch import run_batch
from .io import SeqPairRecord

CSV_COLUMNS = ["W", "O", "sene", "dent", "et", "q500", "q100", "q010", "q001",
               "frac_optimal", "mean_rows_frac", "stored_bits_ratio", "pairs_per_s"]
QUANTILES = {"q500": 0.5, "q100": 0.1, "q010": 0.01, "q001": 0.001}
ALL_COMBOS = tuple(itertools.product((False, True), repeat=3))
BASELINE = (False, False, False)


def nearest_rank(values: Sequence[float], q: float):
    """Nearest-rank quantile of ``values`` sorted ascending (worst score first).

    ``q = 0.01`` over 1000 scores returns the 10th worst.
    """
    if not values:
        raise InputError("quantile of an empty list")
    ordered = sorted(values)
    rank = max(1, math.ceil(round(q * len(ordered), 9)))
    return ordered[rank - 1]


def parse_o_rule(rule: str) -> Callable[[int], int]:
    if rule in ("half-plus-one", "half+1"):
        return lambda W: W // 2 + 1
    if rule.startswith("fixed:"):
        value = int(rule.split(":", 1)[1])
        return lambda W: value
    raise ConfigError(f"unknown O rule {rule!r} (use half-plus-one or fixed:<O>)")


def parse_combos(spec: str) -> list[tuple[bool, bool, bool]]:
    """``all`` or comma-separated ``sene dent et`` bit triples, e.g. ``000,111``."""
    if spec == "all":
        return list(ALL_COMBOS)
    combos = []
    for token in spec.split(","):
        token = token.strip()
        if len(token) != 3 or set(token) - {"0", "1"}:
            raise ConfigError(f"bad combo {token!r}; expected three of 0/1 for sene,dent,et")
        combos.append(tuple(c == "1" for c in token))
    return combos


@dataclass
class SweepReport:
    rows: list[dict] = field(default_factory=list)
    oracle: dict = field(default_factory=dict)

    def to_csv(self) -> str:
        buf = io.StringIO()
        writer = csv.DictWriter(buf, CSV_COLUMNS, extrasaction="ignore", lineterminator="\n")
        writer.writeheader()
        for row in self.rows:
            writer.writerow({k: _fmt(row.get(k)) for k in CSV_COLUMNS})
        writer.writerow({k: _fmt(self.oracle.get(k)) for k in CSV_COLUMNS})
        return buf.getvalue()

    def to_json(self) -> str:
        return json.dumps({"rows": self.rows, "oracle": self.oracle}, indent=1, sort_keys=True) + "\n"


def _fmt(value) -> str:
    if value is None:
        return ""
    if isinstance(value, bool):
        return "1" if value else "0"
    if isinstance(value, float):
        return f"{value:.6g}"
    return str(value)


def sweep(pairs: Iterable[SeqPairRecord], W_list: Sequence[int], O_rule="half-plus-one",
          combos: Sequence[tuple[bool, bool, bool]] = ((True, True, True),),
          params: ScoringParams = ScoringParams(), threads: int = 1,
          timing: bool = True) -> SweepReport:
    """One row per (W, O, combo), plus an oracle row of exact-alignment scores.

    ``stored_bits_ratio`` is baseline stored bits over the combo's stored
    bits at the same (W, O): the footprint reduction factor.  With
    ``timing=False`` the throughput column is left empty so the report is
    reproducible byte for byte.
    """
    pairs = list(pairs)
    if not pairs:
        raise InputError("sweep needs at least one pair")
    o_of = parse_o_rule(O_rule) if isinstance(O_rule, str) else O_rule
    oracle = [global_align(p.text, p.pattern) for p in pairs]
    oracle_scores = [score_cigar(c, params) for _, c in oracle]
    report = SweepReport()
    report.oracle = {"W": "oracle", "frac_optimal": 1.0,
                     **{k: nearest_rank(oracle_scores, q) for k, q in QUANTILES.items()}}
    has_truth = all(p.truth for p in pairs)
    if has_truth:
        report.oracle["correct_bases"] = _mean(
            correctly_aligned_bases(c, p.truth) for p, (_, c) in zip(pairs, oracle))

    for W in W_list:
        O = o_of(W)
        runs = {}
        for combo in list(dict.fromkeys([BASELINE, *combos])):
            sene, dent, et = combo
            cfg = AlignerConfig(W=W, O=O, sene=sene, dent=dent, early_termination=et)
            runs[combo] = run_batch(pairs, cfg, threads)
        base_bits = runs[BASELINE].counters.stored_bits
        for combo in combos:
            batch = runs[combo]
            scores = [score_cigar(r.cigar, params) for r in batch.results]
            row = {
                "W": W, "O": O, "sene": combo[0], "dent": combo[1], "et": combo[2],
                **{k: nearest_rank(scores, q) for k, q in QUANTILES.items()},
                "frac_optimal": _mean(r.distance == o[0] for r, o in zip(batch.results, oracle)),
                "mean_rows_frac": _mean(r.counters.rows_computed / (r.windows * (W + 1))
                                        for r in batch.results),
                "stored_bits_ratio": base_bits / batch.counters.stored_bits,
                "pairs_per_s": batch.pairs_per_s if timing else None,
            }
            if has_truth:
                row["correct_bases"] = _mean(correctly_aligned_bases(r.cigar, p.truth)
                                             for r, p in zip(batch.results, pairs))
            report.rows.append(row)
    return report


def _mean(values) -> float:
    values = list(values)
    return sum(values) / len(values)
