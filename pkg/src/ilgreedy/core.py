"""Ground set and value-oracle plumbing shared by every algorithm.

A nonnegative set function f on subsets of [n] = {0, ..., n-1} is exposed
only through an oracle object carrying the ground-set size ``n`` and a
``value(S)`` method.  Algorithms never see how f is computed; their cost is
the number of ``value`` calls, which ``CountingOracle`` tallies.
"""

from __future__ import annotations

from typing import AbstractSet, Callable

ElementSet = AbstractSet[int]


class SubmodularOracle:
    """Value oracle for a nonnegative set function on [n].

    Subclasses either pass an evaluation callable or override ``value``.
    Oracles are immutable after construction and safe to share; all per-run
    mutable state (query tallies) lives in :class:`CountingOracle`.
    """

    def __init__(self, n: int, fn: Callable[[ElementSet], float] | None = None,
                 name: str | None = None):
        if n < 0:
            raise ValueError("ground-set size must be nonnegative")
        self.n = n
        self.name = name
        self._fn = fn

    def value(self, members: ElementSet) -> float:
        if self._fn is None:
            raise NotImplementedError("oracle subclass must override value()")
        return self._fn(members)


class CountingOracle:
    """Wraps an oracle and counts every evaluation.

    Wrapping never changes returned values.  Each algorithm run owns its own
    counter, so concurrent runs need no locking.
    """

    def __init__(self, inner):
        self.inner = inner
        self.count = 0

    @property
    def n(self) -> int:
        return self.inner.n

    @property
    def name(self) -> str | None:
        return getattr(self.inner, "name", None)

    def value(self, members: ElementSet) -> float:
        self.count += 1
        return self.inner.value(members)

    def reset(self) -> None:
        self.count = 0


def evaluate(oracle, members: ElementSet) -> float:
    """Evaluate f(S) after checking S lies inside the ground set.

    Out-of-range elements signal a caller bug and are rejected rather than
    silently ignored.
    """
    n = oracle.n
    for x in members:
        if not 0 <= x < n:
            raise ValueError(f"element {x} outside ground set [0, {n})")
    return oracle.value(members)


def marginal_gain(oracle, x: int, members: ElementSet) -> float:
    """f(S + x) - f(S); may be negative for non-monotone f.

    Costs exactly two queries, except that x already in S short-circuits to
    0.0 with no queries (the gain is identically zero and skipping the
    lookups keeps measured query counts tight).
    """
    if not 0 <= x < oracle.n:
        raise ValueError(f"element {x} outside ground set [0, {oracle.n})")
    if x in members:
        return 0.0
    grown = set(members)
    grown.add(x)
    return oracle.value(grown) - oracle.value(members)


class _PaddedOracle(SubmodularOracle):
    """Ground set enlarged with value-neutral elements: g(A) = f(A & [n])."""

    def __init__(self, inner, m: int):
        super().__init__(m, name=getattr(inner, "name", None))
        self.inner = inner
        self._base_n = inner.n

    def value(self, members: ElementSet) -> float:
        base = self._base_n
        return self.inner.value({x for x in members if x < base})


def with_dummy_extension(oracle, k: int):
    """Return an oracle on a ground set of size >= 4k.

    If ``oracle.n >= 4k`` the oracle is returned unchanged; otherwise the
    ground set is padded to 4k elements that never affect the function
    value.  Solutions on the padded set map back via :func:`map_back`
    without any change in value, so approximation ratios are preserved.
    """
    if k < 0:
        raise ValueError("budget k must be nonnegative")
    if k > oracle.n:
        raise ValueError(f"budget k={k} exceeds ground-set size n={oracle.n}")
    if oracle.n >= 4 * k:
        return oracle
    return _PaddedOracle(oracle, 4 * k)


def map_back(members: ElementSet, n: int) -> frozenset[int]:
    """Project a solution on a padded ground set back to [n]."""
    return frozenset(x for x in members if x < n)
