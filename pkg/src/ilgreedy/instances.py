"""Instance acquisition: seeded random graphs, edge-list files, tight instances.

All generators are pure functions of (parameters, seed): the same inputs
reproduce the same instance bit for bit.
"""

from __future__ import annotations

from pathlib import Path

import numpy as np

from .objectives import CutGraph, TightInstance


def gen_er(n: int, p: float, seed: int) -> CutGraph:
    """Erdos-Renyi G(n, p): each unordered pair kept independently, unit weights."""
    if not 0.0 <= p <= 1.0:
        raise ValueError(f"edge probability must lie in [0, 1], got {p}")
    rng = np.random.default_rng(seed)
    us, vs = [], []
    for a in range(n - 1):
        hits = np.flatnonzero(rng.random(n - 1 - a) < p)
        if hits.size:
            us.append(np.full(hits.size, a, dtype=np.int64))
            vs.append(hits.astype(np.int64) + a + 1)
    if us:
        u = np.concatenate(us)
        v = np.concatenate(vs)
    else:
        u = np.empty(0, dtype=np.int64)
        v = np.empty(0, dtype=np.int64)
    return CutGraph(n=n, u=u, v=v, w=np.ones(len(u), dtype=np.float64))


def gen_ba(n: int, m: int, seed: int) -> CutGraph:
    """Preferential-attachment graph with m0 = m seed nodes.

    The m seed nodes start isolated; the first arriving node attaches
    uniformly (hence to all m seeds), and every later node attaches m edges
    to distinct existing nodes with probability proportional to current
    degree.  Edge count is m * (n - m).
    """
    if m < 1:
        raise ValueError("attachment count m must be at least 1")
    if m > n:
        raise ValueError(f"m={m} exceeds node count n={n}")
    rng = np.random.default_rng(seed)
    us, vs = [], []
    endpoints: list[int] = []  # each node repeated once per incident edge
    for t in range(m, n):
        if t == m:
            targets = list(range(m))
        else:
            picked: set[int] = set()
            while len(picked) < m:
                draws = rng.integers(0, len(endpoints), size=2 * m)
                for i in draws:
                    picked.add(endpoints[i])
                    if len(picked) == m:
                        break
            targets = sorted(picked)
        for tgt in targets:
            us.append(t)
            vs.append(tgt)
            endpoints.append(t)
            endpoints.append(tgt)
    return CutGraph(
        n=n,
        u=np.asarray(us, dtype=np.int64),
        v=np.asarray(vs, dtype=np.int64),
        w=np.ones(len(us), dtype=np.float64),
    )


def load_edge_list(path) -> CutGraph:
    """Parse a whitespace-separated ``u v [w]`` edge list.

    Lines starting with '#' (and blank lines) are skipped.  Node labels are
    remapped to dense indices in order of first appearance; duplicate
    undirected edges are dropped, keeping the first weight seen; a missing
    weight means 1.
    """
    labels: dict[int, int] = {}
    seen: set[frozenset[int]] = set()
    edges: list[tuple[int, int, float]] = []

    def dense(label: int) -> int:
        if label not in labels:
            labels[label] = len(labels)
        return labels[label]

    with open(path, "r", encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, start=1):
            stripped = line.strip()
            if not stripped or stripped.startswith("#"):
                continue
            parts = stripped.split()
            if len(parts) not in (2, 3):
                raise ValueError(f"{path}: line {lineno}: expected 'u v [w]', got {line!r}")
            try:
                a_label = int(parts[0])
                b_label = int(parts[1])
                wt = float(parts[2]) if len(parts) == 3 else 1.0
            except ValueError as exc:
                raise ValueError(f"{path}: line {lineno}: {exc}") from None
            if a_label == b_label:
                raise ValueError(f"{path}: line {lineno}: self-loop at node {a_label}")
            a = dense(a_label)
            b = dense(b_label)
            key = frozenset((a, b))
            if key in seen:
                continue
            seen.add(key)
            edges.append((a, b, wt))
    return CutGraph.from_edges(len(labels), edges)


def write_edge_list(graph: CutGraph, path) -> None:
    """Write ``u v w`` lines; inverse of :func:`load_edge_list` for graphs
    whose nodes all appear on some edge."""
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(f"# nodes={graph.n} edges={graph.m}\n")
        for a, b, wt in graph.edges():
            fh.write(f"{a} {b} {wt:.17g}\n")


def random_weights(graph: CutGraph, lo: float, hi: float, seed: int) -> CutGraph:
    """Redraw all edge weights i.i.d. uniform on [lo, hi]; topology unchanged."""
    if lo > hi:
        raise ValueError(f"empty weight range [{lo}, {hi}]")
    rng = np.random.default_rng(seed)
    return CutGraph(
        n=graph.n,
        u=graph.u,
        v=graph.v,
        w=rng.uniform(lo, hi, size=graph.m),
    )


def gen_tight(k: int) -> TightInstance:
    """Tight instance on 2k+2 elements; k must be even.

    The worst-case trajectory splits the k-element optimum block evenly,
    k/2 per interlaced set, so odd budgets are rejected.
    """
    if k < 2:
        raise ValueError("tight instances need k >= 2")
    if k % 2 != 0:
        raise ValueError(
            f"k={k} is odd; the adversarial trajectory splits the optimum "
            "block k/2 per interlaced set, so k must be even"
        )
    return TightInstance(
        k=k,
        a=0,
        b=1,
        optimum=frozenset(range(2, k + 2)),
        neutral=frozenset(range(k + 2, 2 * k + 2)),
    )
