"""Chart rendering on top of the aggregation layer.

Each function writes a PNG and returns the aggregated data it drew, so
callers (and tests) can compare the plotted numbers against independent
recomputation.  Rendering is deterministic: fixed backend, dpi and fonts,
and nothing time- or environment-dependent goes into the figure.
"""

from __future__ import annotations

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt

from .records import filter_instance, read_rows
from .stats import AblationSeries, Series, ablation_series, aggregate

_DPI = 120
_FIGSIZE = (6.0, 3.6)

_STYLE = {
    "font.family": "DejaVu Sans",
    "font.size": 9,
    "axes.grid": True,
    "grid.alpha": 0.3,
    "svg.hashsalt": "benchplots",
}


def _new_axes(title: str, ylabel: str):
    fig, ax = plt.subplots(figsize=_FIGSIZE, dpi=_DPI)
    ax.set_xlabel("budget k")
    ax.set_ylabel(ylabel)
    ax.set_title(title)
    return fig, ax


def _finish(fig, ax, out_image) -> None:
    ax.legend()
    fig.tight_layout()
    fig.savefig(out_image, dpi=_DPI, metadata={"Software": "benchplots"})
    plt.close(fig)


def _draw_series(ax, series: list[Series]) -> None:
    for s in series:
        ax.plot(s.ks, s.means, marker="o", markersize=3, label=s.label)
        if s.banded:
            lo = [m - d for m, d in zip(s.means, s.stds)]
            hi = [m + d for m, d in zip(s.means, s.stds)]
            ax.fill_between(s.ks, lo, hi, alpha=0.25)


def plot_objective(csv_path, instance: str, out_image) -> list[Series]:
    """Mean objective value per algorithm vs budget, +/- one sample std."""
    with plt.rc_context(_STYLE):
        rows = filter_instance(read_rows(csv_path), instance)
        series = aggregate(rows, "value")
        fig, ax = _new_axes(instance, "objective value")
        _draw_series(ax, series)
        _finish(fig, ax, out_image)
    return series


def plot_queries(csv_path, instance: str, out_image) -> list[Series]:
    """Mean oracle queries per algorithm vs budget, log scale."""
    with plt.rc_context(_STYLE):
        rows = filter_instance(read_rows(csv_path), instance)
        series = aggregate(rows, "queries")
        fig, ax = _new_axes(instance, "oracle queries")
        ax.set_yscale("log")
        _draw_series(ax, series)
        _finish(fig, ax, out_image)
    return series


def plot_ablation(csv_path, out_image) -> list[AblationSeries]:
    """Steal-on over steal-off value ratio vs budget, one line per instance."""
    with plt.rc_context(_STYLE):
        series = ablation_series(read_rows(csv_path))
        fig, ax = _new_axes("effect of the steal pass", "value ratio (steal on / off)")
        for s in series:
            ax.plot(s.ks, s.ratios, marker="o", markersize=3,
                    label=f"{s.algorithm} on {s.instance}")
        ax.axhline(1.0, color="black", linewidth=0.8, linestyle="--")
        _finish(fig, ax, out_image)
    return series
