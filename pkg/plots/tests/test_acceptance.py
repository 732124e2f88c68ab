"""Acceptance: all three chart kinds render from the checked-in fixtures,
plotted statistics match the CSVs to 1e-9, and the two ablation fixtures
show their characteristic shapes."""

import csv
import statistics
from pathlib import Path

from benchplots.charts import plot_ablation, plot_objective, plot_queries
from benchplots.records import read_rows
from benchplots.stats import ablation_series

FIXTURES = Path(__file__).parent / "fixtures"
BENCH = FIXTURES / "bench_er_small.csv"
ABL_ER = FIXTURES / "ablation_er.csv"
ABL_BA = FIXTURES / "ablation_ba.csv"
INSTANCE = "er:n=60,p=0.3,seed=13"


def report(criterion, passed, detail):
    print(f"[{'PASS' if passed else 'FAIL'}] {criterion}: {detail}")
    assert passed, f"{criterion}: {detail}"


def test_renders_all_chart_kinds(tmp_path):
    outs = [tmp_path / name for name in ("obj.png", "que.png", "abl.png")]
    obj = plot_objective(BENCH, INSTANCE, outs[0])
    que = plot_queries(BENCH, INSTANCE, outs[1])
    abl = plot_ablation(ABL_ER, outs[2])
    ok = all(p.stat().st_size > 0 for p in outs) and obj and que and abl
    report("chart rendering", ok,
           f"3 images from fixtures, {len(obj)} objective series")


def test_plotted_stats_match_csv(tmp_path):
    cells = {}
    with open(BENCH, newline="") as fh:
        for row in csv.DictReader(fh):
            cells.setdefault((row["algorithm"], int(row["k"])), []).append(
                float(row["value"]))
    series = plot_objective(BENCH, INSTANCE, tmp_path / "o.png")
    worst = 0.0
    for s in series:
        for k, mean, std in zip(s.ks, s.means, s.stds):
            xs = cells[(s.label, k)]
            worst = max(worst, abs(mean - statistics.fmean(xs)))
            expect = statistics.stdev(xs) if len(xs) > 1 else 0.0
            worst = max(worst, abs(std - expect))
    report("means/bands equal CSV statistics", worst <= 1e-9,
           f"max deviation {worst:.2e} over {len(series)} series")


def test_ablation_shapes(tmp_path):
    er = ablation_series(read_rows(ABL_ER))[0]
    ba = ablation_series(read_rows(ABL_BA))[0]
    plot_ablation(ABL_ER, tmp_path / "er.png")
    plot_ablation(ABL_BA, tmp_path / "ba.png")
    # dense-random style: the steal pass moves the needle by at most 1.5%
    er_ok = all(r <= 1.015 for r in er.ratios) and all(r >= 1.0 for r in er.ratios)
    # preferential-attachment style: a clearly elevated gain at the smallest
    # plotted budget that decays monotonically as the budget grows
    ba_ok = (ba.ratios[0] >= 1.10
             and all(a >= b for a, b in zip(ba.ratios, ba.ratios[1:]))
             and ba.ratios[-1] <= ba.ratios[0] - 0.05)
    report("ablation shapes", er_ok and ba_ok,
           f"er max {max(er.ratios):.4f} <= 1.015; "
           f"ba {ba.ratios[0]:.3f} -> {ba.ratios[-1]:.3f} decaying")
