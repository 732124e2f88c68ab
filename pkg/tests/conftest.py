"""Shared test helpers: instrumented oracles and independent brute-force baselines."""

from __future__ import annotations

import itertools

from ilgreedy.core import SubmodularOracle


class ProbeOracle(SubmodularOracle):
    """Counts raw value() calls, independently of any CountingOracle on top."""

    def __init__(self, inner):
        super().__init__(inner.n, name=getattr(inner, "name", None))
        self.inner = inner
        self.calls = 0

    def value(self, members):
        self.calls += 1
        return self.inner.value(members)


def exhaustive_best(value_fn, ground, max_size=None):
    """Independent optimum by full enumeration: max f(S) over S subseteq ground.

    ``max_size`` bounds |S|; None means unconstrained.
    """
    ground = sorted(ground)
    top = len(ground) if max_size is None else min(max_size, len(ground))
    best = value_fn(frozenset())
    best_set = frozenset()
    for size in range(1, top + 1):
        for combo in itertools.combinations(ground, size):
            val = value_fn(frozenset(combo))
            if val > best:
                best, best_set = val, frozenset(combo)
    return best_set, best
