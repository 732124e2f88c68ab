"""Benchmark CSV schema: parsing and filtering.

The schema is the harness's public contract; this package reads the files
directly and has no import coupling to the code that produced them.
"""

from __future__ import annotations

import csv
from dataclasses import dataclass

HEADER = (
    "algorithm", "instance", "n", "k", "delta_or_epsilon", "trial",
    "seed", "value", "queries", "wall_ms", "steal_enabled",
)


@dataclass(frozen=True)
class BenchRow:
    algorithm: str
    instance: str
    n: int
    k: int
    delta_or_epsilon: float
    trial: int
    seed: int
    value: float
    queries: int
    wall_ms: int
    steal_enabled: bool

    @property
    def series(self) -> str:
        """Label for plotting: steal-enabled runs are their own series."""
        return self.algorithm + ("+steal" if self.steal_enabled else "")


def read_rows(path) -> list[BenchRow]:
    rows: list[BenchRow] = []
    with open(path, "r", encoding="utf-8", newline="") as fh:
        reader = csv.reader(fh)
        header = next(reader, None)
        if header is None:
            return rows
        if tuple(header) != HEADER:
            raise ValueError(f"{path}: unexpected header {header}")
        for rownum, raw in enumerate(reader, start=2):
            if len(raw) != len(HEADER):
                raise ValueError(
                    f"{path}: row {rownum}: expected {len(HEADER)} fields, got {len(raw)}")
            try:
                rows.append(BenchRow(
                    algorithm=raw[0],
                    instance=raw[1],
                    n=int(raw[2]),
                    k=int(raw[3]),
                    delta_or_epsilon=float(raw[4]),
                    trial=int(raw[5]),
                    seed=int(raw[6]),
                    value=float(raw[7]),
                    queries=int(raw[8]),
                    wall_ms=int(raw[9]),
                    steal_enabled=raw[10].lower() == "true",
                ))
            except ValueError as exc:
                raise ValueError(f"{path}: row {rownum}: {exc}") from None
    return rows


def instances(rows) -> list[str]:
    return sorted({row.instance for row in rows})


def filter_instance(rows, instance: str) -> list[BenchRow]:
    """Keep one instance's rows; an unknown descriptor lists what exists."""
    kept = [row for row in rows if row.instance == instance]
    if not kept:
        available = ", ".join(instances(rows)) or "<none>"
        raise ValueError(f"no rows for instance {instance!r}; available: {available}")
    return kept
