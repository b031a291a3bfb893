"""Player centrality: closeness, weighted closeness, betweenness, pagerank.

The normalising constants are written for a general team size N.  With
eleven players they reduce to the familiar 20 (closeness), 10 (weighted
closeness) and 1/90 (betweenness).
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .cohesion import ClusteringVariant, weighted_clustering
from .exceptions import ConvergenceError, DomainError
from .geodesics import DEFAULT_TIE_TOL, PathCountResult, all_pairs_geodesics
from .model import PassingNetwork, arrow_lengths


@dataclass(frozen=True)
class PagerankParams:
    p: float = 0.85
    q: float = 1.0
    tol: float = 1e-9
    max_iter: int = 10_000

    def __post_init__(self):
        if not 0.0 <= self.p < 1.0:
            raise DomainError(f"pagerank p must lie in [0, 1), got {self.p}")
        if not self.q > 0:
            raise DomainError(f"pagerank q must be positive, got {self.q}")
        if not self.tol > 0:
            raise DomainError(f"pagerank tol must be positive, got {self.tol}")
        if self.max_iter < 1:
            raise DomainError(f"pagerank max_iter must be >= 1, got {self.max_iter}")


@dataclass(frozen=True)
class PlayerScores:
    closeness: np.ndarray
    closeness_weighted: np.ndarray
    betweenness: np.ndarray  # fraction in [0, 1]
    pagerank: np.ndarray
    clustering: np.ndarray | None = None


def _distance_sums(d: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    d = np.asarray(d, dtype=float)
    if d.ndim != 2 or d.shape[0] != d.shape[1]:
        raise DomainError("distance matrix must be square")
    if d.shape[0] < 2:
        raise DomainError("closeness needs at least 2 players")
    off = ~np.eye(d.shape[0], dtype=bool)
    masked = np.where(off, d, 0.0)
    # inf propagates through the sums, which is what zeroes closeness
    return masked.sum(axis=1), masked.sum(axis=0)


def closeness(d: np.ndarray) -> np.ndarray:
    """``C_i = 2(N-1) / (sum_j d_ij + sum_j d_ji)``; 0 when any term is infinite."""
    out_sum, in_sum = _distance_sums(d)
    n = len(out_sum)
    denom = out_sum + in_sum
    with np.errstate(divide="ignore"):
        return np.where(np.isinf(denom), 0.0, 2.0 * (n - 1) / denom)


def closeness_weighted(d: np.ndarray, w: float = 0.5) -> np.ndarray:
    """``C'_i = (N-1) / (w sum_j d_ij + (1-w) sum_j d_ji)``.

    A side with zero coefficient is ignored even when it contains an infinite
    distance, so ``w = 1`` only looks at outgoing distances.
    """
    if not 0.0 <= w <= 1.0:
        raise DomainError(f"closeness weight w must lie in [0, 1], got {w}")
    out_sum, in_sum = _distance_sums(d)
    n = len(out_sum)
    terms = []
    for coef, s in ((w, out_sum), (1.0 - w, in_sum)):
        terms.append(np.zeros_like(s) if coef == 0 else coef * s)
    denom = terms[0] + terms[1]
    with np.errstate(divide="ignore"):
        return np.where(np.isinf(denom), 0.0, (n - 1) / denom)


def betweenness(pc: PathCountResult) -> np.ndarray:
    """Fraction of other-pair geodesics routed through each player.

    Pairs with no path (``g = 0``) are skipped; the result is normalised by
    the number of ordered pairs not involving the player, ``(N-1)(N-2)``.
    """
    n = pc.n
    if n < 3:
        raise DomainError("betweenness needs at least 3 players")
    g = pc.g.astype(float)
    reachable = (pc.g > 0) & ~np.eye(n, dtype=bool)
    ratio = np.divide(
        pc.n_through, g[None, :, :], out=np.zeros(pc.n_through.shape), where=reachable[None, :, :]
    )
    total = np.zeros(n)
    for i in range(n):
        # endpoints never count as interior
        mask = reachable.copy()
        mask[i, :] = False
        mask[:, i] = False
        total[i] = ratio[i][mask].sum()
    return total / ((n - 1) * (n - 2))


def pagerank_update(net: PassingNetwork, x: np.ndarray, params: PagerankParams) -> np.ndarray:
    """One application of ``x_i <- p sum_j (A_ji / L_j) x_j + q``.

    Players who make no passes (``L_j = 0``) contribute nothing.
    """
    A = net.A
    L = net.out_strength
    with np.errstate(divide="ignore", invalid="ignore"):
        share = np.where(L[:, None] > 0, A / L[:, None], 0.0)
    return params.p * (share.T @ x) + params.q


def pagerank(net: PassingNetwork, params: PagerankParams | None = None) -> np.ndarray:
    """Fixed point of :func:`pagerank_update`, iterated from ``x = q``.

    The returned vector moves by at most ``params.tol`` (max norm) under one
    more update.
    """
    params = params or PagerankParams()
    x = np.full(net.n_players, params.q, dtype=float)
    residual = math.inf
    for _ in range(params.max_iter):
        nxt = pagerank_update(net, x, params)
        step = float(np.abs(nxt - x).sum())
        x = nxt
        # The update contracts by p in the L1 norm (rows of A / L sum to 1),
        # so the next step, measured in any p-norm, is at most p * step.
        residual = params.p * step
        if residual <= params.tol:
            return x
    raise ConvergenceError(params.max_iter, residual)


def player_scores(
    net: PassingNetwork,
    pagerank_params: PagerankParams | None = None,
    w: float = 0.5,
    tie_tol: float = DEFAULT_TIE_TOL,
    clustering_variant: ClusteringVariant | str = ClusteringVariant.FEEDER,
    paths: PathCountResult | None = None,
) -> PlayerScores:
    """Every per-player measure for one network, clustering included."""
    pc = paths if paths is not None else all_pairs_geodesics(arrow_lengths(net), tie_tol)
    return PlayerScores(
        closeness=closeness(pc.d),
        closeness_weighted=closeness_weighted(pc.d, w),
        betweenness=betweenness(pc),
        pagerank=pagerank(net, pagerank_params),
        clustering=weighted_clustering(net, clustering_variant).per_player,
    )
