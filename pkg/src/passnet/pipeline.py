"""End-to-end analysis of one team: network -> scores -> tables."""
from __future__ import annotations

from dataclasses import asdict, dataclass, field

from .centrality import PagerankParams, PlayerScores, player_scores
from .cohesion import CliqueProjection, ClusteringVariant, CohesionSummary, cohesion_summary
from .exceptions import DomainError
from .geodesics import DEFAULT_TIE_TOL, PathCountResult, all_pairs_geodesics
from .model import PassingNetwork, arrow_lengths
from .report import (
    DiagramStyle,
    PlayerScoreRow,
    TeamSummary,
    player_table,
    team_summary,
)


@dataclass(frozen=True)
class AnalysisConfig:
    p: float = 0.85
    q: float = 1.0
    tol: float = 1e-9
    max_iter: int = 10_000
    w: float = 0.5
    tie_tol: float = DEFAULT_TIE_TOL
    clustering_variant: str = ClusteringVariant.FEEDER.value
    clique_projection: str = CliqueProjection.OR.value
    width: int = 1200
    height: int = 800
    stroke_min: float = 1.0
    stroke_max: float = 8.0
    color_low: str = "#8796ad"
    color_high: str = "#d7191c"

    def __post_init__(self):
        ClusteringVariant(self.clustering_variant)
        CliqueProjection(self.clique_projection)
        if not 0.0 <= self.w <= 1.0:
            raise DomainError(f"closeness weight w must lie in [0, 1], got {self.w}")
        if self.tie_tol < 0:
            raise DomainError("tie tolerance must be non-negative")
        self.pagerank_params  # validates p, q, tol, max_iter
        style = self.diagram_style
        if not 0 < style.width_min < style.width_max:
            raise DomainError("stroke widths must satisfy 0 < min < max")
        style.color(0.0), style.color(1.0)  # validates the colour stops

    @property
    def pagerank_params(self) -> PagerankParams:
        return PagerankParams(p=self.p, q=self.q, tol=self.tol, max_iter=self.max_iter)

    @property
    def diagram_style(self) -> DiagramStyle:
        return DiagramStyle(
            width_min=self.stroke_min,
            width_max=self.stroke_max,
            color_low=self.color_low,
            color_high=self.color_high,
        )

    def as_dict(self) -> dict:
        return asdict(self)


@dataclass(frozen=True)
class TeamAnalysis:
    net: PassingNetwork
    paths: PathCountResult
    scores: PlayerScores
    cohesion: CohesionSummary
    summary: TeamSummary
    table: list[PlayerScoreRow] = field(repr=False)


def analyze_network(net: PassingNetwork, config: AnalysisConfig | None = None) -> TeamAnalysis:
    config = config or AnalysisConfig()
    paths = all_pairs_geodesics(arrow_lengths(net), config.tie_tol)
    scores = player_scores(
        net,
        config.pagerank_params,
        w=config.w,
        tie_tol=config.tie_tol,
        clustering_variant=config.clustering_variant,
        paths=paths,
    )
    cohesion = cohesion_summary(net, config.clustering_variant, config.clique_projection)
    return TeamAnalysis(
        net=net,
        paths=paths,
        scores=scores,
        cohesion=cohesion,
        summary=team_summary(net, scores, cohesion),
        table=player_table(net, scores),
    )
