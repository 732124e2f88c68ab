"""Aggregation layer against independent recomputation from the raw CSV."""

import csv
import statistics
from pathlib import Path

import pytest

from benchplots.records import filter_instance, instances, read_rows
from benchplots.stats import ablation_series, aggregate

FIXTURES = Path(__file__).parent / "fixtures"
BENCH = FIXTURES / "bench_er_small.csv"
ABL_ER = FIXTURES / "ablation_er.csv"
ABL_BA = FIXTURES / "ablation_ba.csv"


def raw_cells(path, metric):
    """Re-read the CSV with nothing but the stdlib, grouped by (series, k)."""
    cells = {}
    with open(path, newline="") as fh:
        for row in csv.DictReader(fh):
            label = row["algorithm"] + ("+steal" if row["steal_enabled"] == "true" else "")
            cells.setdefault((label, int(row["k"])), []).append(float(row[metric]))
    return cells


class TestReadRows:
    def test_reads_fixture(self):
        rows = read_rows(BENCH)
        assert len(rows) == 24
        assert instances(rows) == ["er:n=60,p=0.3,seed=13"]

    def test_header_mismatch_rejected(self, tmp_path):
        bad = tmp_path / "bad.csv"
        bad.write_text("a,b\n1,2\n")
        with pytest.raises(ValueError, match="header"):
            read_rows(bad)

    def test_bad_row_reports_number(self, tmp_path):
        bad = tmp_path / "bad.csv"
        header = BENCH.read_text().splitlines()[0]
        bad.write_text(header + "\nig,er,60,4,0,0,1,xyz,5,3,false\n")
        with pytest.raises(ValueError, match="row 2"):
            read_rows(bad)

    def test_unknown_instance_lists_available(self):
        rows = read_rows(BENCH)
        with pytest.raises(ValueError, match="er:n=60,p=0.3,seed=13"):
            filter_instance(rows, "er:n=9999")


class TestAggregate:
    @pytest.mark.parametrize("metric", ["value", "queries"])
    def test_means_and_bands_match_recomputation(self, metric):
        rows = filter_instance(read_rows(BENCH), "er:n=60,p=0.3,seed=13")
        cells = raw_cells(BENCH, metric)
        for series in aggregate(rows, metric):
            for k, mean, std in zip(series.ks, series.means, series.stds):
                xs = cells[(series.label, k)]
                assert mean == pytest.approx(statistics.fmean(xs), abs=1e-9)
                expect_std = statistics.stdev(xs) if len(xs) > 1 else 0.0
                assert std == pytest.approx(expect_std, abs=1e-9)

    def test_single_trial_series_have_no_band(self):
        rows = read_rows(BENCH)
        by_label = {s.label: s for s in aggregate(rows, "value")}
        assert not by_label["ig"].banded
        assert not by_label["gupta"].banded
        assert by_label["frg"].banded
        assert by_label["frg"].max_trials == 5

    def test_unknown_metric_rejected(self):
        with pytest.raises(ValueError, match="metric"):
            aggregate(read_rows(BENCH), "wall_ms")


class TestAblationSeries:
    def test_ratios_match_recomputation(self):
        for path in (ABL_ER, ABL_BA):
            on = raw_cells(path, "value")
            series = ablation_series(read_rows(path))
            assert len(series) == 1
            s = series[0]
            for k, ratio in zip(s.ks, s.ratios):
                expect = (statistics.fmean(on[("fig+steal", k)])
                          / statistics.fmean(on[("fig", k)]))
                assert ratio == pytest.approx(expect, abs=1e-9)

    def test_unpaired_cell_names_the_missing_side(self, tmp_path):
        lines = ABL_ER.read_text().splitlines()
        pruned = [l for l in lines if not (l.endswith("false") and ",40," in l)]
        bad = tmp_path / "unpaired.csv"
        bad.write_text("\n".join(pruned) + "\n")
        with pytest.raises(ValueError, match=r"steal-off .*k=40"):
            ablation_series(read_rows(bad))

    def test_no_steal_cells_at_all(self):
        with pytest.raises(ValueError, match="no steal-enabled cells"):
            ablation_series(read_rows(BENCH))
