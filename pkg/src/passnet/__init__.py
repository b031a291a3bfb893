"""Passing networks of football teams and their graph invariants."""
from .centrality import (
    PagerankParams,
    PlayerScores,
    betweenness,
    closeness,
    closeness_weighted,
    pagerank,
    player_scores,
)
from .cohesion import (
    CliqueProjection,
    ClusteringScores,
    ClusteringVariant,
    CohesionSummary,
    cohesion_summary,
    edge_connectivity_directed,
    edge_connectivity_undirected,
    max_clique,
    node_connectivity,
    weighted_clustering,
)
from .exceptions import (
    ConvergenceError,
    DegenerateNetworkError,
    DomainError,
    FixtureParseError,
    PassnetError,
    RenderError,
    ValidationError,
)
from .geodesics import PathCountResult, all_pairs_geodesics
from .model import (
    BinaryAdjacency,
    LengthMatrix,
    PassingNetwork,
    Player,
    Role,
    TeamRecord,
    arrow_lengths,
    binary_adjacency,
    build_network,
    load_team_record,
    network_from_matrix,
)
from .pipeline import AnalysisConfig, TeamAnalysis, analyze_network
from .report import (
    PlayerScoreRow,
    TeamSummary,
    export_csv,
    player_table,
    render_pitch_diagram,
    team_summary,
)

__version__ = "0.1.0"
