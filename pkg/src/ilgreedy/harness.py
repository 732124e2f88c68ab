"""Experiment harness: wires instances, algorithms and verification into
reproducible benchmark runs with machine-readable CSV output.

One record per (algorithm, instance, k, trial) cell.  A master seed is
split per cell through a stable hash, so any cell can be re-run in
isolation and two runs of the same config agree field for field (wall time
excepted, which is recorded but never compared).
"""

from __future__ import annotations

import csv
import hashlib
import time
from dataclasses import asdict, dataclass

from .algorithms import (
    AlgorithmOutcome,
    brute_force_opt,
    fast_interlace_greedy,
    fast_random_greedy,
    gupta_iterated_greedy,
    interlace_greedy,
    pools_from_trace,
    solve_extended,
    standard_greedy,
)
from .core import with_dummy_extension
from .instances import gen_ba, gen_er, gen_tight, load_edge_list, random_weights
from .objectives import CutOracle, TightOracle
from .verification import (
    DEFAULT_TOL,
    calibrate_fig_constant,
    certify_ratio,
    check_submodular,
    fig_query_limit,
    ig_query_limit,
)

ALGORITHMS = ("ig", "fig", "gupta", "frg", "greedy")
RANDOMIZED = frozenset({"frg"})

CSV_FIELDS = (
    "algorithm", "instance", "n", "k", "delta_or_epsilon", "trial",
    "seed", "value", "queries", "wall_ms", "steal_enabled",
)


@dataclass(frozen=True)
class ExperimentRecord:
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


@dataclass
class ExperimentConfig:
    """One benchmark request: which algorithms on which instance, over a k grid."""

    algorithms: list[str]
    instance: str                     # er | ba | edgelist | tight
    k_grid: list[int]
    n: int = 100
    p: float = 0.5
    m: int = 2
    path: str | None = None
    weights: tuple[float, float] | None = None
    trials: int = 10
    master_seed: int = 0
    delta: float = 0.1
    epsilon: float = 0.3
    steal: str = "off"                # off | on | both

    def validate(self) -> None:
        for alg in self.algorithms:
            if alg not in ALGORITHMS:
                raise ValueError(f"unknown algorithm {alg!r}; choose from {ALGORITHMS}")
        if self.instance not in ("er", "ba", "edgelist", "tight"):
            raise ValueError(f"unknown instance kind {self.instance!r}")
        if self.instance == "edgelist" and not self.path:
            raise ValueError("instance 'edgelist' needs a path")
        if self.steal not in ("off", "on", "both"):
            raise ValueError(f"steal must be off, on or both, got {self.steal!r}")
        if self.trials < 1:
            raise ValueError("trials must be at least 1")


def derive_seed(master: int, *parts) -> int:
    """Stable 63-bit seed from the master seed and cell coordinates."""
    text = "|".join([str(master), *(str(p) for p in parts)])
    digest = hashlib.sha256(text.encode("utf-8")).digest()
    return int.from_bytes(digest[:8], "big") >> 1


def _build_oracle(config: ExperimentConfig, k: int):
    if config.instance == "er":
        graph = gen_er(config.n, config.p, config.master_seed)
        name = f"er:n={config.n},p={config.p},seed={config.master_seed}"
    elif config.instance == "ba":
        graph = gen_ba(config.n, config.m, config.master_seed)
        name = f"ba:n={config.n},m={config.m},seed={config.master_seed}"
    elif config.instance == "edgelist":
        graph = load_edge_list(config.path)
        name = f"edgelist:{config.path}"
    else:
        inst = gen_tight(k)
        return TightOracle(inst, name=f"tight:k={k}")
    if config.weights is not None:
        lo, hi = config.weights
        graph = random_weights(graph, lo, hi, derive_seed(config.master_seed, "weights"))
        name += f",w=[{lo},{hi}]"
    return CutOracle(graph, name=name)


def run_cell(alg: str, oracle, k: int, *, delta: float, epsilon: float,
             seed: int, steal: bool) -> tuple[AlgorithmOutcome, int]:
    """Run one algorithm on one instance; returns the outcome and wall ms."""
    start = time.perf_counter()
    if alg == "ig":
        out = solve_extended(interlace_greedy, oracle, k)
    elif alg == "fig":
        out = solve_extended(fast_interlace_greedy, oracle, k, delta=delta, steal=steal)
    elif alg == "gupta":
        out = gupta_iterated_greedy(oracle, k)
    elif alg == "frg":
        out = fast_random_greedy(oracle, k, eps=epsilon, seed=seed)
    elif alg == "greedy":
        out = standard_greedy(oracle, k)
    else:
        raise ValueError(f"unknown algorithm {alg!r}")
    wall_ms = int(round((time.perf_counter() - start) * 1000))
    return out, wall_ms


def run_experiment(config: ExperimentConfig) -> list[ExperimentRecord]:
    """Execute every cell of the config in deterministic order.

    Randomized algorithms get ``trials`` repetitions with derived seeds;
    deterministic ones run once per cell.  The tight family rebuilds its
    instance per budget (its ground set depends on k).
    """
    config.validate()
    records: list[ExperimentRecord] = []
    shared_oracle = None
    if config.instance != "tight" and config.k_grid:
        shared_oracle = _build_oracle(config, config.k_grid[0])
    for alg in config.algorithms:
        trials = config.trials if alg in RANDOMIZED else 1
        steal_flags = (False, True) if (alg == "fig" and config.steal == "both") \
            else ((config.steal == "on" and alg == "fig"),)
        for k in config.k_grid:
            oracle = shared_oracle if shared_oracle is not None else _build_oracle(config, k)
            for trial in range(trials):
                seed = derive_seed(config.master_seed, alg, oracle.name, k, trial)
                for steal_flag in steal_flags:
                    out, wall_ms = run_cell(
                        alg, oracle, k, delta=config.delta, epsilon=config.epsilon,
                        seed=seed, steal=steal_flag)
                    param = config.delta if alg == "fig" else (
                        config.epsilon if alg == "frg" else 0.0)
                    records.append(ExperimentRecord(
                        algorithm=alg,
                        instance=oracle.name,
                        n=oracle.n,
                        k=k,
                        delta_or_epsilon=param,
                        trial=trial,
                        seed=seed,
                        value=out.value,
                        queries=out.queries,
                        wall_ms=wall_ms,
                        steal_enabled=steal_flag,
                    ))
    return records


def _format_field(value) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        return format(value, ".9g")
    return str(value)


def write_csv(records, path) -> None:
    """Write records with the fixed header; floats at 9 significant digits."""
    with open(path, "w", encoding="utf-8", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(CSV_FIELDS)
        for rec in records:
            row = asdict(rec)
            writer.writerow([_format_field(row[name]) for name in CSV_FIELDS])


def read_csv(path) -> list[ExperimentRecord]:
    """Read records back; malformed rows are rejected with their row number."""
    records: list[ExperimentRecord] = []
    with open(path, "r", encoding="utf-8", newline="") as fh:
        reader = csv.reader(fh)
        header = next(reader, None)
        if header is None:
            return records
        if tuple(header) != CSV_FIELDS:
            raise ValueError(f"{path}: unexpected header {header}")
        for rownum, row in enumerate(reader, start=2):
            if len(row) != len(CSV_FIELDS):
                raise ValueError(f"{path}: row {rownum}: expected "
                                 f"{len(CSV_FIELDS)} fields, got {len(row)}")
            try:
                records.append(ExperimentRecord(
                    algorithm=row[0],
                    instance=row[1],
                    n=int(row[2]),
                    k=int(row[3]),
                    delta_or_epsilon=float(row[4]),
                    trial=int(row[5]),
                    seed=int(row[6]),
                    value=float(row[7]),
                    queries=int(row[8]),
                    wall_ms=int(row[9]),
                    steal_enabled=row[10].lower() == "true",
                ))
            except ValueError as exc:
                raise ValueError(f"{path}: row {rownum}: {exc}") from None
    return records


# ---------------------------------------------------------------------------
# Property suite behind the `verify` CLI subcommand: a compact version of the
# full acceptance battery, sized to run in well under a minute.
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str


class _SquaredCardinality:
    """Deliberately non-submodular probe: f(S) = |S|^2."""

    def __init__(self, n: int):
        self.n = n
        self.name = f"squared:n={n}"

    def value(self, members) -> float:
        return float(len(members) ** 2)


def _mini_suite():
    cases = []
    for n in (8, 10, 12):
        for seed in (1, 2):
            graph = gen_er(n, 0.5, seed)
            oracle = CutOracle(graph, name=f"er:n={n},p=0.5,seed={seed}")
            for k in (2, 3):
                cases.append((oracle, k))
    for k in (2, 4):
        cases.append((TightOracle(gen_tight(k)), k))
    return cases


def verify_suite() -> list[CheckResult]:
    """Run the compact property battery; each result is independently checkable."""
    results: list[CheckResult] = []

    def add(name: str, passed: bool, detail: str = "") -> None:
        results.append(CheckResult(name, passed, detail))

    # submodularity of the bundled objectives, plus the planted counterexample
    er8 = CutOracle(gen_er(8, 0.5, 3))
    add("submodular/cut-exhaustive", check_submodular(er8).ok, "er n=8")
    weighted = CutOracle(random_weights(gen_er(7, 0.6, 4), 1.0, 10.0, 5))
    add("submodular/weighted-exhaustive", check_submodular(weighted).ok, "weighted er n=7")
    add("submodular/tight-exhaustive",
        check_submodular(TightOracle(gen_tight(4))).ok, "tight k=4")
    padded = with_dummy_extension(CutOracle(gen_er(6, 0.5, 6)), 2)
    add("submodular/extension-exhaustive", check_submodular(padded).ok,
        "er n=6 padded to 8")
    squared = check_submodular(_SquaredCardinality(3))
    add("submodular/counterexample-flagged", not squared.ok,
        f"violation={squared.violation is not None}")

    # approximation guarantees on the mini suite
    worst_ig = worst_fig05 = worst_fig10 = worst_gupta = float("inf")
    ok_ig = ok_fig05 = ok_fig10 = ok_gupta = True
    structure_ok = True
    structure_msg = ""
    for oracle, k in _mini_suite():
        opt = brute_force_opt(oracle, k)
        ig = solve_extended(interlace_greedy, oracle, k)
        fig05 = solve_extended(fast_interlace_greedy, oracle, k, delta=0.05)
        fig10 = solve_extended(fast_interlace_greedy, oracle, k, delta=0.1)
        gup = gupta_iterated_greedy(oracle, k)
        ok_ig &= certify_ratio(ig, opt, 0.25).passed
        ok_fig05 &= certify_ratio(fig05, opt, (1 - 6 * 0.05) / 4).passed
        ok_fig10 &= certify_ratio(fig10, opt, 0.1).passed
        ok_gupta &= certify_ratio(gup, opt, 1 / 7).passed
        if opt.value > 0:
            worst_ig = min(worst_ig, ig.value / opt.value)
            worst_fig05 = min(worst_fig05, fig05.value / opt.value)
            worst_fig10 = min(worst_fig10, fig10.value / opt.value)
            worst_gupta = min(worst_gupta, gup.value / opt.value)
        for out in (ig, fig05, fig10):
            sets = pools_from_trace(out)
            if sets["A"] & sets["B"]:
                structure_ok, structure_msg = False, f"A,B overlap on {oracle.name}"
            first_a = next((t.element for t in out.trace if t.label == "A"), None)
            if sets["D"] and first_a is not None and sets["D"] & sets["E"] != {first_a}:
                structure_ok, structure_msg = False, f"D,E seed broken on {oracle.name}"
            if len(out.solution) > k:
                structure_ok, structure_msg = False, f"|C|>k on {oracle.name}"
    add("ratio/ig-quarter", ok_ig, f"worst ratio {worst_ig:.4f}")
    add("ratio/fig-delta-0.05", ok_fig05, f"worst ratio {worst_fig05:.4f}")
    add("ratio/fig-delta-0.10", ok_fig10, f"worst ratio {worst_fig10:.4f}")
    add("baseline/gupta-seventh", ok_gupta, f"worst ratio {worst_gupta:.4f}")
    add("structure/interlace-invariants", structure_ok, structure_msg or "traces clean")

    # tight-family ceiling
    ceiling_ok = True
    detail = []
    for k in (8, 16):
        oracle = TightOracle(gen_tight(k))
        ig = solve_extended(interlace_greedy, oracle, k)
        fig = solve_extended(fast_interlace_greedy, oracle, k, delta=0.1)
        cap = 0.25 + 1.0 / k + DEFAULT_TOL
        ceiling_ok &= ig.value <= cap and fig.value <= cap
        detail.append(f"k={k}: ig={ig.value:.4f} fig={fig.value:.4f} cap={cap:.4f}")
    add("tight/ceiling", ceiling_ok, "; ".join(detail))

    # query bounds: closed form for the plain interlacing, calibrated scaling
    # for the thresholded one
    er64 = CutOracle(gen_er(64, 0.3, 7), name="er:n=64")
    ig64 = interlace_greedy(er64, 8)
    add("queries/ig-closed-form", ig64.queries <= ig_query_limit(64, 8),
        f"{ig64.queries} <= {ig_query_limit(64, 8):.0f}")
    ref = fast_interlace_greedy(CutOracle(gen_er(128, 8 / 128, 11), name="er:n=128"),
                                16, delta=0.1)
    c = calibrate_fig_constant(ref.queries, 128, 16, 0.1)
    probe = fast_interlace_greedy(CutOracle(gen_er(256, 8 / 256, 12), name="er:n=256"),
                                  32, delta=0.1)
    limit = fig_query_limit(256, 32, 0.1, c)
    add("queries/fig-scaling", probe.queries <= limit,
        f"{probe.queries} <= {limit:.0f} (c={c:.2f})")

    # stealing post-pass never hurts
    steal_oracle = CutOracle(gen_er(64, 0.3, 9), name="er:n=64,steal")
    plain = fast_interlace_greedy(steal_oracle, 8, delta=0.1, steal=False)
    boosted = fast_interlace_greedy(steal_oracle, 8, delta=0.1, steal=True)
    add("steal/never-decreases", boosted.value >= plain.value - DEFAULT_TOL,
        f"{boosted.value:.1f} >= {plain.value:.1f}")

    return results
