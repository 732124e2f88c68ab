"""Charts for submodular-maximization benchmark CSVs."""

from .charts import plot_ablation, plot_objective, plot_queries
from .records import BenchRow, filter_instance, instances, read_rows
from .stats import AblationSeries, Series, ablation_series, aggregate

__all__ = [
    "AblationSeries",
    "BenchRow",
    "Series",
    "ablation_series",
    "aggregate",
    "filter_instance",
    "instances",
    "plot_ablation",
    "plot_objective",
    "plot_queries",
    "read_rows",
]
