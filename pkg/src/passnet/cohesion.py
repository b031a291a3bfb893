"""Team cohesion: weighted clustering, maximum clique, edge and node connectivity."""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from enum import Enum

import numpy as np

from .exceptions import DegenerateNetworkError, DomainError
from .model import BinaryAdjacency, PassingNetwork, binary_adjacency


class ClusteringVariant(str, Enum):
    # cube root of A_ij * A_kj * A_ki
    FEEDER = "feeder"
    # cube root of A_ij * A_jk * A_ki (Onnela et al. transitivity pattern)
    ONNELA = "onnela"


class CliqueProjection(str, Enum):
    OR = "or"  # pair linked if a pass exists in either direction
    AND = "and"  # pair linked only if passes go both ways


@dataclass(frozen=True)
class ClusteringScores:
    per_player: np.ndarray
    team_average: float


@dataclass(frozen=True)
class CohesionSummary:
    k: int
    k_u: int
    node_k: int
    max_clique: tuple[int, ...]
    clustering: ClusteringScores


# -- clustering ---------------------------------------------------------------

def weighted_clustering(
    net: PassingNetwork, variant: ClusteringVariant | str = ClusteringVariant.FEEDER
) -> ClusteringScores:
    """Per-player weighted clustering and its team mean.

    ``c_i = 1/(u_i (u_i - 1)) * sum_{j,k} cbrt(A_ij A_kj A_ki) / max(A)``
    over ordered pairs of distinct ``j, k`` other than ``i``, where ``u_i``
    is the out-degree.  Players with ``u_i < 2`` score 0.  The ``onnela``
    variant replaces ``A_kj`` by ``A_jk``.

    The value is not bounded by 1 in general: ``k`` ranges over everyone
    who passes to ``i``, not only over ``i``'s recipients.  The bound holds
    whenever passing relations are reciprocal.
    """
    variant = ClusteringVariant(variant)
    A = net.A
    n = net.n_players
    top = A.max() if A.size else 0.0
    if top <= 0:
        raise DegenerateNetworkError("clustering is undefined for a network with no passes")
    W = A / top
    u = (A > 0).sum(axis=1)
    second = W.T if variant is ClusteringVariant.FEEDER else W  # [j, k] -> A_kj or A_jk
    c = np.zeros(n)
    for i in range(n):
        if u[i] < 2:
            continue
        # prod[j, k] = W_ij * second[j, k] * W_ki
        prod = W[i][:, None] * second * W[:, i][None, :]
        prod[i, :] = 0.0
        prod[:, i] = 0.0
        np.fill_diagonal(prod, 0.0)
        c[i] = np.cbrt(prod).sum() / (u[i] * (u[i] - 1))
    return ClusteringScores(per_player=c, team_average=float(c.mean()))


# -- cliques ------------------------------------------------------------------

def undirected_projection(
    eps: BinaryAdjacency, projection: CliqueProjection | str = CliqueProjection.OR
) -> np.ndarray:
    e = np.asarray(eps.eps, dtype=bool)
    if CliqueProjection(projection) is CliqueProjection.OR:
        sym = e | e.T
    else:
        sym = e & e.T
    np.fill_diagonal(sym, False)
    return sym


def _bron_kerbosch(adj: list[set[int]], r: set[int], p: set[int], x: set[int], out: list):
    if not p and not x:
        out.append(r)
        return
    pivot = max(p | x, key=lambda v: len(adj[v] & p))
    for v in sorted(p - adj[pivot]):
        _bron_kerbosch(adj, r | {v}, p & adj[v], x & adj[v], out)
        p = p - {v}
        x = x | {v}


def maximal_cliques(
    eps: BinaryAdjacency, projection: CliqueProjection | str = CliqueProjection.OR
) -> list[tuple[int, ...]]:
    sym = undirected_projection(eps, projection)
    n = sym.shape[0]
    adj = [set(np.flatnonzero(sym[v]).tolist()) for v in range(n)]
    found: list[set[int]] = []
    if n:
        _bron_kerbosch(adj, set(), set(range(n)), set(), found)
    return sorted(tuple(sorted(c)) for c in found)


def max_clique(
    eps: BinaryAdjacency, projection: CliqueProjection | str = CliqueProjection.OR
) -> tuple[int, ...]:
    """Largest clique; ties go to the lexicographically smallest id tuple."""
    cliques = maximal_cliques(eps, projection)
    if not cliques:
        return ()
    return min(cliques, key=lambda c: (-len(c), c))


# -- connectivity -------------------------------------------------------------

def _max_flow(cap: np.ndarray, s: int, t: int) -> int:
    """Edmonds-Karp on an integer capacity matrix (neighbours scanned in index order)."""
    residual = cap.astype(np.int64).copy()
    n = residual.shape[0]
    flow = 0
    while True:
        parent = [-1] * n
        parent[s] = s
        queue = deque([s])
        while queue and parent[t] < 0:
            v = queue.popleft()
            for w in np.flatnonzero(residual[v] > 0):
                if parent[w] < 0:
                    parent[w] = v
                    queue.append(w)
        if parent[t] < 0:
            return flow
        bottleneck = None
        w = t
        while w != s:
            v = parent[w]
            bottleneck = residual[v, w] if bottleneck is None else min(bottleneck, residual[v, w])
            w = v
        w = t
        while w != s:
            v = parent[w]
            residual[v, w] -= bottleneck
            residual[w, v] += bottleneck
            w = v
        flow += int(bottleneck)


def _check_size(eps: BinaryAdjacency) -> np.ndarray:
    e = np.asarray(eps.eps, dtype=np.int64)
    if e.shape[0] < 2:
        raise DomainError("connectivity needs at least 2 players")
    e = e.copy()
    np.fill_diagonal(e, 0)
    return e


def _global_min_cut(cap: np.ndarray) -> int:
    # Any minimum cut separates node 0 from some t in one direction or the other.
    n = cap.shape[0]
    best = None
    for t in range(1, n):
        for s_, t_ in ((0, t), (t, 0)):
            f = _max_flow(cap, s_, t_)
            best = f if best is None else min(best, f)
            if best == 0:
                return 0
    return int(best)


def edge_connectivity_directed(eps: BinaryAdjacency) -> int:
    """Fewest arcs whose removal leaves the digraph not strongly connected."""
    return _global_min_cut(_check_size(eps))


def edge_connectivity_undirected(eps: BinaryAdjacency) -> int:
    """Fewest edges whose removal disconnects the direction-free projection."""
    e = _check_size(eps)
    return _global_min_cut(((e + e.T) > 0).astype(np.int64))


def node_connectivity(eps: BinaryAdjacency) -> int:
    """Fewest players whose removal disconnects the direction-free projection.

    Complete graphs have no separating set and get ``N - 1`` by convention.
    """
    e = _check_size(eps)
    sym = (e + e.T) > 0
    n = sym.shape[0]
    # split every node v into v_in = v and v_out = v + n joined by a unit arc
    cap = np.zeros((2 * n, 2 * n), dtype=np.int64)
    big = n
    for v in range(n):
        cap[v, v + n] = 1
    for a, b in zip(*np.nonzero(sym)):
        cap[a + n, b] = big
    best = n - 1
    for s in range(n):
        for t in range(s + 1, n):
            if sym[s, t]:
                continue
            best = min(best, _max_flow(cap, s + n, t))
            if best == 0:
                return 0
    return best


def cohesion_summary(
    net: PassingNetwork,
    variant: ClusteringVariant | str = ClusteringVariant.FEEDER,
    projection: CliqueProjection | str = CliqueProjection.OR,
) -> CohesionSummary:
    eps = binary_adjacency(net)
    return CohesionSummary(
        k=edge_connectivity_directed(eps),
        k_u=edge_connectivity_undirected(eps),
        node_k=node_connectivity(eps),
        max_clique=max_clique(eps, projection),
        clustering=weighted_clustering(net, variant),
    )
