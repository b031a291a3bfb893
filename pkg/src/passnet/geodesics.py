"""All-pairs weighted shortest paths with geodesic counting.

Runs Dijkstra from every source over arrow lengths ``1 / A_ij``, keeping the
full predecessor DAG.  From that DAG we count, for every ordered pair
``(j, k)``, the number of geodesics ``g[j, k]`` and, for every interior node
``i``, how many of them pass through it (``n_through[i, j, k]``).  Betweenness
consumes those counts directly.
"""
from __future__ import annotations

import heapq
import math
from dataclasses import dataclass

import numpy as np

from .model import LengthMatrix

DEFAULT_TIE_TOL = 1e-9


@dataclass(frozen=True)
class PathCountResult:
    d: np.ndarray  # (N, N) geodesic distances, inf when unreachable
    g: np.ndarray  # (N, N) geodesic counts, 0 when unreachable, g[j, j] = 1
    n_through: np.ndarray  # (N, N, N) indexed [interior, source, target]

    @property
    def n(self) -> int:
        return self.d.shape[0]


def tied(a: float, b: float, tie_tol: float = DEFAULT_TIE_TOL) -> bool:
    """Relative tie test used for every path-length comparison."""
    return abs(a - b) <= tie_tol * max(a, b, 1.0)


def _dijkstra_dag(l: np.ndarray, source: int, tie_tol: float):
    """Return (dist, preds, settle_order) for one source."""
    n = l.shape[0]
    dist = [math.inf] * n
    dist[source] = 0.0
    preds: list[list[int]] = [[] for _ in range(n)]
    settled = [False] * n
    order: list[int] = []
    heap = [(0.0, source)]
    while heap:
        _, v = heapq.heappop(heap)
        if settled[v]:
            continue
        settled[v] = True
        order.append(v)
        dv = dist[v]
        for w in range(n):
            lw = l[v, w]
            if w == v or lw == math.inf:
                continue
            alt = dv + lw
            if settled[w]:
                # positive arc lengths: a settled node can never be reached again on a tie
                assert not tied(alt, dist[w], tie_tol), (
                    "tie with an already settled node; tie tolerance too coarse for these weights"
                )
                continue
            if dist[w] == math.inf or (alt < dist[w] and not tied(alt, dist[w], tie_tol)):
                dist[w] = alt
                preds[w] = [v]
                heapq.heappush(heap, (alt, w))
            elif tied(alt, dist[w], tie_tol):
                preds[w].append(v)
                if alt < dist[w]:
                    dist[w] = alt
                    heapq.heappush(heap, (alt, w))
    return dist, preds, order


def all_pairs_geodesics(
    lengths: LengthMatrix, tie_tol: float = DEFAULT_TIE_TOL
) -> PathCountResult:
    """Distances, geodesic counts and through-node counts for every ordered pair.

    Two path lengths ``a`` and ``b`` are treated as equal when
    ``|a - b| <= tie_tol * max(a, b, 1)``.  Unreachable pairs get
    ``d = inf`` and ``g = 0``.
    """
    if tie_tol < 0:
        raise ValueError("tie_tol must be non-negative")
    l = np.asarray(lengths.l, dtype=float)
    n = l.shape[0]
    off = ~np.eye(n, dtype=bool)
    # geodesics are simple only because every arc is strictly positive
    assert np.all(l[off] > 0), "arc lengths must be strictly positive"

    d = np.full((n, n), math.inf)
    g = np.zeros((n, n), dtype=np.int64)
    n_through = np.zeros((n, n, n), dtype=np.int64)

    for s in range(n):
        dist, preds, order = _dijkstra_dag(l, s, tie_tol)

        sigma = np.zeros(n, dtype=np.int64)
        sigma[s] = 1
        succ: list[list[int]] = [[] for _ in range(n)]
        for w in order[1:]:
            for v in preds[w]:
                sigma[w] += sigma[v]
                succ[v].append(w)

        # tau[v, k]: number of DAG paths from v down to k
        tau = np.zeros((n, n), dtype=np.int64)
        for v in reversed(order):
            tau[v, v] = 1
            for w in succ[v]:
                tau[v] += tau[w]
        assert np.array_equal(tau[s], sigma)

        d[s] = dist
        g[s] = sigma
        for i in order[1:]:
            row = sigma[i] * tau[i]
            row[i] = 0
            n_through[i, s] = row

    return PathCountResult(d=d, g=g, n_through=n_through)
