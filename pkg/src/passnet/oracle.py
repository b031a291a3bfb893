"""Brute-force reference computations for small networks.

Everything here works by exhaustive enumeration (simple paths, vertex
subsets, edge subsets) with exact rational arithmetic.  None of it shares
code with the fast algorithms it is used to check; keep it that way.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

MAX_ORACLE_NODES = 8


@dataclass
class BruteGeodesics:
    d: list[list[Fraction | None]]  # None when unreachable
    g: list[list[int]]
    n_through: list[list[list[int]]]  # [interior][source][target]


def _weights(A) -> list[list[Fraction]]:
    # Fraction entries pass through untouched so callers can supply exact rationals
    return [[v if isinstance(v, Fraction) else Fraction(float(v)) for v in row] for row in A]


def enumerate_geodesics(A) -> BruteGeodesics:
    """Enumerate every simple directed path and keep the shortest ones per pair."""
    W = _weights(A)
    n = len(W)
    best: list[list[Fraction | None]] = [[None] * n for _ in range(n)]
    paths: list[list[list[tuple[int, ...]]]] = [[[] for _ in range(n)] for _ in range(n)]

    def visit(path: list[int], length: Fraction):
        s, v = path[0], path[-1]
        cur = best[s][v]
        if cur is None or length < cur:
            best[s][v] = length
            paths[s][v] = [tuple(path)]
        elif length == cur:
            paths[s][v].append(tuple(path))
        for w in range(n):
            if W[v][w] > 0 and w not in path:
                path.append(w)
                visit(path, length + 1 / W[v][w])
                path.pop()

    for s in range(n):
        visit([s], Fraction(0))

    g = [[len(paths[s][t]) for t in range(n)] for s in range(n)]
    n_through = [[[0] * n for _ in range(n)] for _ in range(n)]
    for s in range(n):
        for t in range(n):
            for p in paths[s][t]:
                for i in p[1:-1]:
                    n_through[i][s][t] += 1
    return BruteGeodesics(d=best, g=g, n_through=n_through)


def betweenness_bruteforce(A) -> list[float]:
    geo = enumerate_geodesics(A)
    n = len(geo.g)
    out = []
    for i in range(n):
        total = Fraction(0)
        for j in range(n):
            for k in range(n):
                if len({i, j, k}) == 3 and geo.g[j][k] > 0:
                    total += Fraction(geo.n_through[i][j][k], geo.g[j][k])
        out.append(float(total / ((n - 1) * (n - 2))))
    return out


# -- connectivity by enumeration -----------------------------------------------

def _arcs(eps) -> list[tuple[int, int]]:
    n = len(eps)
    return [(a, b) for a in range(n) for b in range(n) if a != b and eps[a][b]]


def _strongly_connected(n: int, arcs) -> bool:
    out = {v: set() for v in range(n)}
    back = {v: set() for v in range(n)}
    for a, b in arcs:
        out[a].add(b)
        back[b].add(a)
    for nbrs in (out, back):
        seen, stack = {0}, [0]
        while stack:
            v = stack.pop()
            for w in nbrs[v] - seen:
                seen.add(w)
                stack.append(w)
        if len(seen) != n:
            return False
    return True


def _connected(nodes, edges) -> bool:
    nodes = list(nodes)
    if len(nodes) <= 1:
        return True
    adj = {v: set() for v in nodes}
    for a, b in edges:
        if a in adj and b in adj:
            adj[a].add(b)
            adj[b].add(a)
    seen, stack = {nodes[0]}, [nodes[0]]
    while stack:
        v = stack.pop()
        for w in adj[v] - seen:
            seen.add(w)
            stack.append(w)
    return len(seen) == len(nodes)


def _undirected_edges(eps) -> list[tuple[int, int]]:
    n = len(eps)
    return [(a, b) for a in range(n) for b in range(a + 1, n) if eps[a][b] or eps[b][a]]


def edge_connectivity_by_deletion(eps, directed: bool, max_size: int = 3) -> int | None:
    """Smallest number of arcs (edges) whose deletion disconnects, or None if > max_size."""
    n = len(eps)
    items = _arcs(eps) if directed else _undirected_edges(eps)
    for size in range(max_size + 1):
        for removed in itertools.combinations(items, size):
            keep = set(items) - set(removed)
            ok = _strongly_connected(n, keep) if directed else _connected(range(n), keep)
            if not ok:
                return size
    return None


def edge_connectivity_by_cuts(eps, directed: bool) -> int:
    """Minimum over all vertex bipartitions of the arcs (edges) crossing the cut."""
    n = len(eps)
    best = None
    for mask in range(1, 2 ** n - 1):
        inside = {v for v in range(n) if mask >> v & 1}
        if directed:
            cut = sum(1 for a, b in _arcs(eps) if a in inside and b not in inside)
        else:
            cut = sum(1 for a, b in _undirected_edges(eps) if (a in inside) != (b in inside))
        best = cut if best is None else min(best, cut)
    return best


def node_connectivity_by_deletion(eps, max_size: int | None = None) -> int | None:
    """Smallest vertex set whose removal disconnects the undirected projection.

    Complete graphs return N - 1.  With ``max_size`` set, returns None when no
    separating set of that size or smaller exists (and the graph is not complete).
    """
    n = len(eps)
    edges = _undirected_edges(eps)
    if len(edges) == n * (n - 1) // 2:
        return n - 1
    limit = n - 2 if max_size is None else min(max_size, n - 2)
    for size in range(limit + 1):
        for removed in itertools.combinations(range(n), size):
            rest = [v for v in range(n) if v not in removed]
            if not _connected(rest, edges):
                return size
    return None


# -- cliques ------------------------------------------------------------------

def _linked(eps, a, b, projection: str) -> bool:
    if projection == "and":
        return bool(eps[a][b] and eps[b][a])
    return bool(eps[a][b] or eps[b][a])


def is_clique(eps, nodes, projection: str = "or") -> bool:
    return all(_linked(eps, a, b, projection) for a, b in itertools.combinations(nodes, 2))


def max_clique_bruteforce(eps, projection: str = "or") -> tuple[int, ...]:
    """Largest clique over all vertex subsets, lexicographically smallest on ties."""
    n = len(eps)
    for size in range(n, 0, -1):
        for nodes in itertools.combinations(range(n), size):
            if is_clique(eps, nodes, projection):
                return nodes
    return ()


def is_maximal_clique(eps, nodes, projection: str = "or") -> bool:
    n = len(eps)
    if not is_clique(eps, nodes, projection):
        return False
    return not any(
        is_clique(eps, tuple(nodes) + (v,), projection) for v in range(n) if v not in nodes
    )
