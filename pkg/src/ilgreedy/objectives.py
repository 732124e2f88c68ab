"""Concrete submodular objectives: graph cuts and a worst-case tie-breaking family.

Cut functions are the standard non-monotone, nonnegative submodular
objectives; the "tight" family is a hand-built function on 2k+2 elements
whose index layout forces interlaced greedy runs onto their worst-case
trajectory under smallest-index tie-breaking.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import AbstractSet, Iterable, Iterator

import numpy as np

from .core import ElementSet, SubmodularOracle

# Packed-bit adjacency is only worth building for dense-ish unweighted
# graphs; beyond these limits the edge-array path wins.
_PACKED_MAX_N = 8192
_PACKED_MIN_DENSITY = 64  # use packed rows when m * density >= n^2


@dataclass(frozen=True)
class CutGraph:
    """Undirected graph with nonnegative edge weights, nodes 0..n-1.

    Edges are stored once each as parallel arrays; the data model permits
    parallel edges but none of the bundled generators emit them.
    """

    n: int
    u: np.ndarray
    v: np.ndarray
    w: np.ndarray

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple]) -> "CutGraph":
        us, vs, ws = [], [], []
        for e in edges:
            if len(e) == 2:
                a, b = e
                wt = 1.0
            else:
                a, b, wt = e
            if not (0 <= a < n and 0 <= b < n):
                raise ValueError(f"edge ({a}, {b}) outside node range [0, {n})")
            if a == b:
                raise ValueError(f"self-loop at node {a}")
            if wt < 0:
                raise ValueError(f"negative weight {wt} on edge ({a}, {b})")
            us.append(a)
            vs.append(b)
            ws.append(float(wt))
        return cls(
            n=n,
            u=np.asarray(us, dtype=np.int64),
            v=np.asarray(vs, dtype=np.int64),
            w=np.asarray(ws, dtype=np.float64),
        )

    @property
    def m(self) -> int:
        return len(self.u)

    def edges(self) -> Iterator[tuple[int, int, float]]:
        for a, b, wt in zip(self.u, self.v, self.w):
            yield int(a), int(b), float(wt)


def cut_value(graph: CutGraph, members: ElementSet) -> float:
    """Total weight of edges with exactly one endpoint in S."""
    if not members or graph.m == 0:
        return 0.0
    mask = np.zeros(graph.n, dtype=bool)
    mask[np.fromiter(members, dtype=np.int64, count=len(members))] = True
    crossing = mask[graph.u] != mask[graph.v]
    return float(graph.w[crossing].sum())


def weighted_cut_value(graph: CutGraph, members: ElementSet) -> float:
    """Weighted boundary of S: sum of w(u, v) over u in S, v not in S.

    This is the monitoring objective (content propagated past a chosen set
    of users); each undirected edge is stored once, so nothing is double
    counted and the computation coincides with :func:`cut_value`.
    """
    return cut_value(graph, members)


class CutOracle(SubmodularOracle):
    """Value oracle for the cut objective of a fixed graph.

    Precomputes either packed-bit adjacency rows (unweighted, dense-ish
    graphs) or reuses the edge arrays; either way an evaluation is a single
    vectorized pass, and the oracle contract never observes which.
    """

    def __init__(self, graph: CutGraph, name: str | None = None):
        super().__init__(graph.n, name=name)
        self.graph = graph
        self._unit = bool(graph.m == 0 or np.all(graph.w == 1.0))
        self._rows = None
        if (
            self._unit
            and 0 < graph.n <= _PACKED_MAX_N
            and graph.m * _PACKED_MIN_DENSITY >= graph.n * graph.n
        ):
            dense = np.zeros((graph.n, graph.n), dtype=bool)
            dense[graph.u, graph.v] = True
            dense[graph.v, graph.u] = True
            self._rows = np.packbits(dense, axis=1)

    def value(self, members: ElementSet) -> float:
        g = self.graph
        if not members or g.m == 0:
            return 0.0
        idx = np.fromiter(members, dtype=np.int64, count=len(members))
        mask = np.zeros(g.n, dtype=bool)
        mask[idx] = True
        if self._rows is not None:
            inside = np.packbits(mask)
            out_rows = self._rows[idx] & ~inside
            return float(np.bitwise_count(out_rows).sum())
        crossing = mask[g.u] != mask[g.v]
        return float(g.w[crossing].sum())


@dataclass(frozen=True)
class TightInstance:
    """Hard instance on 2k+2 elements for interlaced greedy runs.

    Layout: the two mutually-cancelling elements sit at indices 0 and 1,
    the k-element optimum block at 2..k+1, and k value-neutral elements at
    k+2..2k+1.  With smallest-index tie-breaking this ordering makes the
    greedy interlacing pick the cancelling pair first, which caps its ratio
    at 1/4 + 1/k.
    """

    k: int
    a: int
    b: int
    optimum: frozenset[int]
    neutral: frozenset[int]

    @property
    def n(self) -> int:
        return 2 * self.k + 2


def tight_value(inst: TightInstance, members: ElementSet) -> float:
    """Three-case objective of the tight family.

    0 when both cancelling elements are chosen; |S & O|/(2k) + 1/k when
    exactly one is; |S & O|/k when neither is.
    """
    has_a = inst.a in members
    has_b = inst.b in members
    overlap = sum(1 for x in members if x in inst.optimum)
    k = inst.k
    if has_a and has_b:
        return 0.0
    if has_a or has_b:
        return overlap / (2 * k) + 1 / k
    return overlap / k


class TightOracle(SubmodularOracle):
    """Value oracle for a :class:`TightInstance`."""

    def __init__(self, inst: TightInstance, name: str | None = None):
        super().__init__(inst.n, name=name or f"tight:k={inst.k}")
        self.inst = inst

    def value(self, members: ElementSet) -> float:
        return tight_value(self.inst, members)


def max_singleton(oracle) -> tuple[int, float]:
    """Best singleton by value: exactly n queries, smallest index on ties."""
    if oracle.n < 1:
        raise ValueError("ground set is empty")
    best_x = 0
    best_v = -math.inf
    for x in range(oracle.n):
        val = oracle.value({x})
        if val > best_v:
            best_x, best_v = x, val
    return best_x, best_v
