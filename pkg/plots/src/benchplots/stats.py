"""Aggregation: per-series means and deviation bands, steal-ablation ratios."""

from __future__ import annotations

import math
from dataclasses import dataclass

from .records import BenchRow


@dataclass(frozen=True)
class Series:
    """One plotted line: a metric aggregated over trials at each budget."""

    label: str
    ks: tuple[int, ...]
    means: tuple[float, ...]
    stds: tuple[float, ...]       # sample std (ddof=1); 0.0 for single trials
    max_trials: int

    @property
    def banded(self) -> bool:
        return self.max_trials > 1


def _mean(xs) -> float:
    return sum(xs) / len(xs)


def _sample_std(xs) -> float:
    if len(xs) < 2:
        return 0.0
    mu = _mean(xs)
    return math.sqrt(sum((x - mu) ** 2 for x in xs) / (len(xs) - 1))


def aggregate(rows: list[BenchRow], metric: str) -> list[Series]:
    """Group a single instance's rows by series label and budget.

    ``metric`` is "value" or "queries".  Trials of randomized algorithms
    collapse to mean and sample standard deviation.
    """
    if metric not in ("value", "queries"):
        raise ValueError(f"metric must be 'value' or 'queries', got {metric!r}")
    grouped: dict[str, dict[int, list[float]]] = {}
    for row in rows:
        grouped.setdefault(row.series, {}).setdefault(row.k, []).append(
            float(getattr(row, metric)))
    out = []
    for label in sorted(grouped):
        by_k = grouped[label]
        ks = tuple(sorted(by_k))
        out.append(Series(
            label=label,
            ks=ks,
            means=tuple(_mean(by_k[k]) for k in ks),
            stds=tuple(_sample_std(by_k[k]) for k in ks),
            max_trials=max(len(v) for v in by_k.values()),
        ))
    return out


@dataclass(frozen=True)
class AblationSeries:
    instance: str
    algorithm: str
    ks: tuple[int, ...]
    ratios: tuple[float, ...]     # mean value with steal / mean value without


def ablation_series(rows: list[BenchRow]) -> list[AblationSeries]:
    """Pair steal-on against steal-off cells per (instance, algorithm, k).

    Only algorithms that ran with the steal pass anywhere are considered;
    for those, every budget must have both sides or the cell is unpaired.
    """
    cells: dict[tuple[str, str, int, bool], list[float]] = {}
    for row in rows:
        key = (row.instance, row.algorithm, row.k, row.steal_enabled)
        cells.setdefault(key, []).append(row.value)
    stealing = {(inst, alg) for inst, alg, _, flag in cells if flag}
    if not stealing:
        raise ValueError("no steal-enabled cells in the CSV; nothing to compare")
    out = []
    for inst, alg in sorted(stealing):
        ks = sorted({k for i, a, k, _ in cells if (i, a) == (inst, alg)})
        ratios = []
        for k in ks:
            on = cells.get((inst, alg, k, True))
            off = cells.get((inst, alg, k, False))
            if on is None or off is None:
                missing = "steal-off" if off is None else "steal-on"
                raise ValueError(
                    f"unpaired ablation cell: no {missing} run for "
                    f"({alg}, {inst}, k={k})")
            base = _mean(off)
            if base == 0:
                raise ValueError(
                    f"steal-off value is 0 for ({alg}, {inst}, k={k}); "
                    "ratio undefined")
            ratios.append(_mean(on) / base)
        out.append(AblationSeries(inst, alg, tuple(ks), tuple(ratios)))
    return out
