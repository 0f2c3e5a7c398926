"""Figures written next to sweep and bench reports."""

import math

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402

STYLE = {
    "font.size": 8,
    "axes.labelsize": 9,
    "axes.titlesize": 9,
    "legend.fontsize": 7,
    "xtick.labelsize": 8,
    "ytick.labelsize": 8,
    "lines.linewidth": 1.2,
    "lines.markersize": 4,
    "axes.spines.top": False,
    "axes.spines.right": False,
    "savefig.bbox": "tight",
    "savefig.dpi": 150,
}

QUANTILE_LABELS = {"q500": "0.5", "q100": "0.1", "q010": "0.01", "q001": "0.001"}


def figure_size(width=6.5, ratio=None):
    ratio = ratio or (math.sqrt(5) - 1) / 2
    return width, width * ratio


def _combo_label(row):
    names = [n for n, key in (("SENE", "sene"), ("DENT", "dent"), ("ET", "et")) if row[key]]
    return "+".join(names) or "baseline"


def sweep_figure(report, path):
    """Quantile scores and fraction of distance-optimal pairs against W."""
    with plt.rc_context(STYLE):
        fig, (ax_q, ax_f) = plt.subplots(1, 2, figsize=figure_size())
        # every combo aligns identically, so plot the first one per W
        seen = {}
        for row in report.rows:
            seen.setdefault(row["W"], row)
        Ws = sorted(seen)
        for key, label in QUANTILE_LABELS.items():
            line, = ax_q.plot(Ws, [seen[W][key] for W in Ws], marker="o", label=f"q={label}")
            ax_q.axhline(report.oracle[key], color=line.get_color(), linestyle="--", linewidth=0.8)
        ax_q.set_xlabel("window size W")
        ax_q.set_ylabel("alignment score")
        ax_q.set_title("score quantiles (dashed: exact)")
        ax_q.legend(frameon=False, loc="upper center", bbox_to_anchor=(0.5, -0.16), ncol=4)
        ax_f.plot(Ws, [seen[W]["frac_optimal"] for W in Ws], marker="s", color="k")
        ax_f.set_ylim(0, 1.02)
        ax_f.set_xlabel("window size W")
        ax_f.set_ylabel("fraction distance-optimal")
        fig.tight_layout()
        fig.savefig(path)
        plt.close(fig)


def bench_figure(rows, path):
    """Throughput and computed-row fraction per improvement combination."""
    with plt.rc_context(STYLE):
        fig, (ax_t, ax_r) = plt.subplots(1, 2, figsize=figure_size())
        labels = [_combo_label(r) for r in rows]
        x = range(len(rows))
        ax_t.bar(x, [r["pairs_per_s"] for r in rows], color="#4c72b0")
        ax_t.set_ylabel("pairs / s")
        ax_r.bar(x, [r["stored_bits_ratio"] for r in rows], color="#dd8452")
        ax_r.set_ylabel("stored bits, baseline / combo")
        for ax in (ax_t, ax_r):
            ax.set_xticks(list(x))
            ax.set_xticklabels(labels, rotation=45, ha="right")
        fig.tight_layout()
        fig.savefig(path)
        plt.close(fig)
