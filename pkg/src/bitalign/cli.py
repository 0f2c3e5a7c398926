"""Command line interface: ``align``, ``simulate``, ``sweep`` and ``bench``.

Exit codes: 0 success, 1 input or configuration error, 2 internal
consistency error.
"""

from __future__ import annotations

import contextlib
import csv
import json
import sys
from pathlib import Path

import click

from .errors import ConfigError, InputError, InternalConsistencyError
from .harness.batch import run_batch
from .harness.io import FORMATS, read_pairs, write_pairs, write_results
from .harness.simulate import simulate_pairs
from .harness.sweep import BASELINE, parse_combos, sweep as run_sweep
from .oracle import ScoringParams
from .window import SINGLE, WINDOWED, AlignerConfig

EXIT_INPUT = 1
EXIT_INTERNAL = 2


@contextlib.contextmanager
def _open_out(path):
    if path in (None, "-"):
        yield sys.stdout
    else:
        with open(path, "w", newline="") as fh:
            yield fh


def _int_list(text: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise InputError(f"expected comma-separated integers, got {text!r}")


def _float_list(text: str) -> list[float]:
    try:
        return [float(x) for x in text.split(",")]
    except ValueError:
        raise InputError(f"expected comma-separated numbers, got {text!r}")


def _load(inputs, fmt):
    if not inputs:
        raise InputError("--input is required")
    return list(read_pairs(list(inputs), fmt))


def _figure_path(report, figure, no_figure):
    if no_figure:
        return None
    if figure:
        return figure
    if report and report != "-":
        return str(Path(report).with_suffix(".png"))
    return None


input_options = [
    click.option("--input", "inputs", multiple=True,
                 help="Pair file (tsv) or two FASTA files (fasta-pair: texts, then patterns)."),
    click.option("--format", "fmt", type=click.Choice(FORMATS), default="tsv", show_default=True),
]


def with_inputs(fn):
    for opt in reversed(input_options):
        fn = opt(fn)
    return fn


@click.group()
def cli():
    """Bit-parallel windowed pairwise aligner."""


@cli.command()
@with_inputs
@click.option("--W", "W", type=int, default=64, show_default=True, help="Window size.")
@click.option("--O", "O", type=int, default=33, show_default=True, help="Window overlap.")
@click.option("--sene/--no-sene", default=True, show_default=True)
@click.option("--dent/--no-dent", default=None, help="Default: on when windowed, off when single.")
@click.option("--et/--no-et", default=True, show_default=True)
@click.option("--threads", type=int, default=1, show_default=True)
@click.option("--output", default="-", help="Per-pair TSV (id, distance, cigar).")
@click.option("--mode", type=click.Choice([WINDOWED, SINGLE]), default=WINDOWED, show_default=True)
@click.option("--k", "k", type=int, default=None, help="Edit budget in single mode.")
@click.option("--json", "as_json", is_flag=True, help="Write JSON instead of TSV.")
def align(inputs, fmt, W, O, sene, dent, et, threads, output, mode, k, as_json):
    """Align every pair and write distance and CIGAR."""
    if dent is None:
        dent = mode == WINDOWED
    config = AlignerConfig(W=W, O=O, sene=sene, dent=dent, early_termination=et,
                           mode=mode, k_single=k)
    pairs = _load(inputs, fmt)
    batch = run_batch(pairs, config, threads)
    with _open_out(output) as fh:
        write_results(batch.ids, batch.results, fh, as_json)


@cli.command()
@click.option("--count", type=int, default=100, show_default=True)
@click.option("--length", type=int, default=1000, show_default=True)
@click.option("--length-max", type=int, default=None, help="Draw lengths uniformly in [length, length-max].")
@click.option("--error-rate", type=float, default=0.05, show_default=True)
@click.option("--mix", default="0.334,0.333,0.333", show_default=True,
              help="Fractions of substitutions, insertions, deletions.")
@click.option("--seed", type=int, default=0, show_default=True)
@click.option("--output", default="-")
def simulate(count, length, length_max, error_rate, mix, seed, output):
    """Write simulated pairs as TSV with a ground-truth CIGAR column."""
    mix = _float_list(mix)
    total = sum(mix)
    mix = [x / total for x in mix] if total > 0 else mix
    rng_range = (length, length_max) if length_max else None
    pairs = simulate_pairs(count, length, error_rate, mix, seed, rng_range)
    with _open_out(output) as fh:
        write_pairs(pairs, fh)


@cli.command()
@with_inputs
@click.option("--W-list", "W_list", default="16,32,64,96", show_default=True)
@click.option("--O-rule", "O_rule", default="half-plus-one", show_default=True,
              help="half-plus-one or fixed:<O>.")
@click.option("--combos", default="111", show_default=True,
              help="all, or comma-separated sene/dent/et bit triples such as 000,111.")
@click.option("--report", default="-", help="CSV (or JSON with --json) report path.")
@click.option("--json", "as_json", is_flag=True)
@click.option("--figure", default=None, help="Figure path; defaults to the report path with .png.")
@click.option("--no-figure", is_flag=True)
@click.option("--threads", type=int, default=1, show_default=True)
@click.option("--scoring", default="2,4,4,2", show_default=True,
              help="match, mismatch, gap open, gap extend.")
@click.option("--timing/--no-timing", default=True, show_default=True,
              help="Measure throughput; --no-timing makes reports reproducible byte for byte.")
def sweep(inputs, fmt, W_list, O_rule, combos, report, as_json, figure, no_figure, threads,
          scoring, timing):
    """Accuracy and footprint sweep over W (and O) against the exact oracle."""
    params = _scoring(scoring)
    pairs = _load(inputs, fmt)
    rep = run_sweep(pairs, _int_list(W_list), O_rule, parse_combos(combos), params, threads, timing)
    with _open_out(report) as fh:
        fh.write(rep.to_json() if as_json else rep.to_csv())
    fig = _figure_path(report, figure, no_figure)
    if fig:
        from .harness.plotting import sweep_figure
        sweep_figure(rep, fig)


BENCH_COLUMNS = ["W", "O", "sene", "dent", "et", "pairs", "seconds", "pairs_per_s",
                 "stored_bits", "stored_bits_ratio", "mean_rows_frac", "table_reads"]


@cli.command()
@with_inputs
@click.option("--W", "W", type=int, default=64, show_default=True)
@click.option("--O", "O", type=int, default=33, show_default=True)
@click.option("--combos", default="all", show_default=True)
@click.option("--threads", type=int, default=1, show_default=True)
@click.option("--report", default="-", help="Timing CSV (or JSON with --json).")
@click.option("--json", "as_json", is_flag=True)
@click.option("--output", default=None, help="Per-pair TSV from the last combo.")
@click.option("--figure", default=None)
@click.option("--no-figure", is_flag=True)
def bench(inputs, fmt, W, O, combos, threads, report, as_json, output, figure, no_figure):
    """Time alignment per improvement combination."""
    pairs = _load(inputs, fmt)
    rows = []
    base_bits = None
    batch = None
    for combo in dict.fromkeys([BASELINE, *parse_combos(combos)]):
        sene, dent, et = combo
        cfg = AlignerConfig(W=W, O=O, sene=sene, dent=dent, early_termination=et)
        batch = run_batch(pairs, cfg, threads)
        c = batch.counters
        if combo == BASELINE:
            base_bits = c.stored_bits
        windows = sum(r.windows for r in batch.results)
        rows.append({
            "W": W, "O": O, "sene": int(sene), "dent": int(dent), "et": int(et),
            "pairs": len(pairs), "seconds": round(batch.seconds, 6),
            "pairs_per_s": round(batch.pairs_per_s, 3),
            "stored_bits": c.stored_bits,
            "stored_bits_ratio": round(base_bits / c.stored_bits, 6) if c.stored_bits else None,
            "mean_rows_frac": round(c.rows_computed / (windows * (W + 1)), 6) if windows else None,
            "table_reads": c.table_reads,
        })
    with _open_out(report) as fh:
        if as_json:
            json.dump(rows, fh, indent=1)
            fh.write("\n")
        else:
            writer = csv.DictWriter(fh, BENCH_COLUMNS, lineterminator="\n")
            writer.writeheader()
            writer.writerows(rows)
    if output and batch is not None:
        with _open_out(output) as fh:
            write_results(batch.ids, batch.results, fh)
    fig = _figure_path(report, figure, no_figure)
    if fig and rows:
        from .harness.plotting import bench_figure
        bench_figure(rows, fig)


def _scoring(text: str) -> ScoringParams:
    values = _int_list(text)
    if len(values) != 4:
        raise InputError("--scoring needs four integers")
    return ScoringParams(*values)


def main(argv=None) -> int:
    try:
        rc = cli.main(args=argv, prog_name="bitalign", standalone_mode=False)
        if isinstance(rc, int):
            return rc
    except click.exceptions.Exit as exc:
        return exc.exit_code
    except (click.ClickException, click.exceptions.Abort) as exc:
        if isinstance(exc, click.ClickException):
            exc.show()
        return EXIT_INPUT
    except InternalConsistencyError as exc:
        click.echo(f"internal error: {exc}", err=True)
        return EXIT_INTERNAL
    except (InputError, ConfigError, OSError) as exc:
        click.echo(f"error: {exc}", err=True)
        return EXIT_INPUT
    return 0


if __name__ == "__main__":
    sys.exit(main())
