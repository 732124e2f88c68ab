"""Property-checking apparatus: submodularity checks, ratio certificates,
query-bound audits.

Everything here is pure reporting: a violated property is returned as data,
never raised, so harness runs can collect and serialize results.
"""

from __future__ import annotations

import math
from dataclasses import asdict, dataclass

import numpy as np

from .algorithms import AlgorithmOutcome

# Absolute slack for float comparisons; the bundled objectives are exact at
# desk scale, this only absorbs summation order.
DEFAULT_TOL = 1e-9

EXHAUSTIVE_MAX_N = 12


@dataclass(frozen=True)
class Violation:
    """A pair (S, T) with f(S) + f(T) < f(S | T) + f(S & T)."""

    s: frozenset[int]
    t: frozenset[int]
    f_s: float
    f_t: float
    f_union: float
    f_inter: float

    @property
    def deficit(self) -> float:
        return (self.f_union + self.f_inter) - (self.f_s + self.f_t)


@dataclass(frozen=True)
class SubmodularityReport:
    ok: bool
    mode: str
    pairs_checked: int
    violation: Violation | None

    def as_dict(self) -> dict:
        return asdict(self)


def _mask_to_set(mask: int) -> frozenset[int]:
    out = []
    x = 0
    while mask:
        if mask & 1:
            out.append(x)
        mask >>= 1
        x += 1
    return frozenset(out)


def _confirmed_violation(oracle, s: frozenset[int], t: frozenset[int],
                         tol: float) -> Violation | None:
    """Recompute the four values fresh; report only a genuine violation."""
    f_s = oracle.value(s)
    f_t = oracle.value(t)
    f_union = oracle.value(s | t)
    f_inter = oracle.value(s & t)
    if f_s + f_t < f_union + f_inter - tol:
        return Violation(s, t, f_s, f_t, f_union, f_inter)
    return None


def check_submodular(oracle, mode: str = "exhaustive", pairs: int = 10000,
                     seed: int = 0, tol: float = DEFAULT_TOL) -> SubmodularityReport:
    """Verify f(S) + f(T) >= f(S | T) + f(S & T) over pairs of subsets.

    ``exhaustive`` checks every unordered pair (requires n <= 12);
    ``sampled`` checks ``pairs`` uniformly random pairs.  The first
    violating pair is re-verified with four fresh evaluations before being
    reported, so no report is ever a float artifact of the scan.
    """
    n = oracle.n
    if mode == "exhaustive":
        if n > EXHAUSTIVE_MAX_N:
            raise ValueError(f"exhaustive mode handles n <= {EXHAUSTIVE_MAX_N}, got {n}")
        size = 1 << n
        vals = np.empty(size, dtype=np.float64)
        for mask in range(size):
            vals[mask] = oracle.value(_mask_to_set(mask))
        all_masks = np.arange(size, dtype=np.int64)
        checked = 0
        for s_mask in range(size):
            others = all_masks[s_mask:]
            bad = vals[s_mask] + vals[others] < vals[s_mask | others] + vals[s_mask & others] - tol
            checked += others.size
            if bad.any():
                t_mask = int(others[int(np.argmax(bad))])
                violation = _confirmed_violation(
                    oracle, _mask_to_set(s_mask), _mask_to_set(t_mask), tol)
                if violation is not None:
                    return SubmodularityReport(False, "exhaustive", checked, violation)
        return SubmodularityReport(True, "exhaustive", size * (size + 1) // 2, None)

    if mode == "sampled":
        rng = np.random.default_rng(seed)
        for i in range(pairs):
            picks = rng.random((2, n)) < 0.5
            s = frozenset(np.flatnonzero(picks[0]).tolist())
            t = frozenset(np.flatnonzero(picks[1]).tolist())
            violation = _confirmed_violation(oracle, s, t, tol)
            if violation is not None:
                return SubmodularityReport(False, "sampled", i + 1, violation)
        return SubmodularityReport(True, "sampled", pairs, None)

    raise ValueError(f"unknown mode {mode!r}; use 'exhaustive' or 'sampled'")


@dataclass(frozen=True)
class RatioCertificate:
    passed: bool
    achieved: float
    required: float
    alg_value: float
    opt_value: float

    def as_dict(self) -> dict:
        return asdict(self)


def certify_ratio(alg: AlgorithmOutcome, opt: AlgorithmOutcome,
                  ratio: float, tol: float = DEFAULT_TOL) -> RatioCertificate:
    """Check value(alg) >= ratio * value(opt) - tol and report the margin.

    Both outcomes must come from the same instance; mismatched descriptors
    are rejected outright.
    """
    if alg.instance is not None and opt.instance is not None and alg.instance != opt.instance:
        raise ValueError(
            f"outcome from {alg.instance!r} cannot be certified against "
            f"optimum of {opt.instance!r}")
    achieved = alg.value / opt.value if opt.value > 0 else math.inf
    passed = alg.value >= ratio * opt.value - tol
    return RatioCertificate(passed, achieved, ratio, alg.value, opt.value)


@dataclass(frozen=True)
class QueryAudit:
    passed: bool
    queries: int
    limit: float

    def as_dict(self) -> dict:
        return asdict(self)


def ig_query_limit(n: int, k: int) -> float:
    """Closed-form ceiling for the plain interlacing: 4kn + 2n."""
    return 4.0 * k * n + 2.0 * n


def fig_query_limit(n: int, k: int, delta: float, c: float) -> float:
    """Calibrated ceiling for the thresholded interlacing: c (n/delta) ln(k/delta)."""
    return c * (n / delta) * math.log(k / delta)


def audit_query_bound(outcome: AlgorithmOutcome, limit: float) -> QueryAudit:
    """Compare a measured query count against a precomputed ceiling."""
    return QueryAudit(outcome.queries <= limit, outcome.queries, limit)


def calibrate_fig_constant(queries: int, n: int, k: int, delta: float,
                           headroom: float = 1.25) -> float:
    """Turn one reference measurement into the audit constant c.

    The growth law, not the absolute count, is the claim under test, so a
    modest headroom absorbs instance-to-instance wobble.
    """
    return headroom * queries / ((n / delta) * math.log(k / delta))
