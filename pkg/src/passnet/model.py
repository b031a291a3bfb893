"""Domain types for passing networks and fixture ingestion.

A fixture holds the aggregate pass counts of a team over a tournament.
``build_network`` turns it into a :class:`PassingNetwork` whose weights are
average passes per game; every analysis in the package starts from there.
"""
from __future__ import annotations

import enum
import json
import math
from dataclasses import dataclass, field
from pathlib import Path
from typing import IO, Any, Sequence

import numpy as np

from .exceptions import FixtureParseError, ValidationError


class Role(str, enum.Enum):
    GOALKEEPER = "goalkeeper"
    DEFENDER = "defender"
    MIDFIELDER = "midfielder"
    FORWARD = "forward"
    UNKNOWN = "unknown"


@dataclass(frozen=True)
class Player:
    """One node of the network.

    ``position`` is a normalised formation coordinate: ``x`` runs from the
    own goal (0) to the opponent's goal (1), ``y`` from the right flank (0)
    to the left flank (1).  It may be ``None`` when the formation is unknown.
    """

    id: int
    name: str
    role: Role = Role.UNKNOWN
    position: tuple[float, float] | None = None


def _frozen(a: np.ndarray) -> np.ndarray:
    a = np.array(a, copy=True)
    a.setflags(write=False)
    return a


@dataclass(frozen=True)
class TeamRecord:
    team_name: str
    players: tuple[Player, ...]
    aggregate_passes: np.ndarray  # int64, (N, N)
    games_played: int

    @property
    def n_players(self) -> int:
        return len(self.players)


@dataclass(frozen=True)
class PassingNetwork:
    """Weighted directed graph; ``A[i, j]`` is the mean number of passes i -> j per game."""

    team_name: str
    players: tuple[Player, ...]
    A: np.ndarray = field(repr=False)

    def __post_init__(self):
        A = np.asarray(self.A, dtype=float)
        n = len(self.players)
        if A.shape != (n, n):
            raise ValidationError(f"weight matrix has shape {A.shape}, expected ({n}, {n})", "A")
        if not np.all(np.isfinite(A)) or np.any(A < 0):
            raise ValidationError("weights must be finite and non-negative", "A")
        if np.any(np.diag(A) != 0):
            raise ValidationError("self-pass on the diagonal", "A")
        object.__setattr__(self, "A", _frozen(A))
        object.__setattr__(self, "players", tuple(self.players))

    @property
    def n_players(self) -> int:
        return len(self.players)

    @property
    def total_passes(self) -> float:
        """The team total ``P``: sum of all weights."""
        return float(self.A.sum())

    @property
    def out_strength(self) -> np.ndarray:
        """Passes made by each player (row sums of ``A``)."""
        return self.A.sum(axis=1)

    @property
    def names(self) -> list[str]:
        return [p.name for p in self.players]


@dataclass(frozen=True)
class BinaryAdjacency:
    eps: np.ndarray  # int8, (N, N), entries in {0, 1}

    @property
    def n(self) -> int:
        return self.eps.shape[0]


@dataclass(frozen=True)
class LengthMatrix:
    """Arrow lengths ``1 / A_ij``; ``math.inf`` where no pass exists, 0 on the diagonal."""

    l: np.ndarray

    @property
    def n(self) -> int:
        return self.l.shape[0]


# -- construction helpers -----------------------------------------------------

def network_from_matrix(
    A,
    names: Sequence[str] | None = None,
    positions: Sequence[tuple[float, float] | None] | None = None,
    team_name: str = "team",
) -> PassingNetwork:
    """Wrap a bare weight matrix as a network with placeholder players."""
    A = np.asarray(A, dtype=float)
    n = A.shape[0]
    names = list(names) if names is not None else [f"P{i}" for i in range(n)]
    positions = list(positions) if positions is not None else [None] * n
    players = tuple(
        Player(id=i, name=names[i], position=positions[i]) for i in range(n)
    )
    return PassingNetwork(team_name=team_name, players=players, A=A)


def build_network(record: TeamRecord) -> PassingNetwork:
    """Average the aggregate pass counts over the games played."""
    A = record.aggregate_passes.astype(float) / record.games_played
    return PassingNetwork(team_name=record.team_name, players=record.players, A=A)


def binary_adjacency(net: PassingNetwork) -> BinaryAdjacency:
    return BinaryAdjacency(_frozen((net.A > 0).astype(np.int8)))


def arrow_lengths(net: PassingNetwork) -> LengthMatrix:
    A = net.A
    with np.errstate(divide="ignore"):
        l = np.where(A > 0, 1.0 / A, math.inf)
    np.fill_diagonal(l, 0.0)
    return LengthMatrix(_frozen(l))


# -- fixture parsing ----------------------------------------------------------

def _require(doc: dict, key: str, kind, where: str):
    if key not in doc:
        raise FixtureParseError("missing field", where)
    value = doc[key]
    # bool is an int subclass; reject it wherever a number is expected
    if isinstance(value, bool) and kind is not bool:
        raise FixtureParseError(f"expected {_kind_name(kind)}, got bool", where)
    if not isinstance(value, kind):
        raise FixtureParseError(
            f"expected {_kind_name(kind)}, got {type(value).__name__}", where
        )
    return value


def _kind_name(kind) -> str:
    if isinstance(kind, tuple):
        return " or ".join(k.__name__ for k in kind)
    return kind.__name__


def _parse_player(doc: Any, index: int) -> Player:
    where = f"players[{index}]"
    if not isinstance(doc, dict):
        raise FixtureParseError("expected an object", where)
    pid = _require(doc, "id", int, f"{where}.id")
    name = _require(doc, "name", str, f"{where}.name")
    role_text = doc.get("role", "unknown")
    try:
        role = Role(role_text)
    except ValueError:
        raise FixtureParseError(
            f"unknown role {role_text!r}", f"{where}.role"
        ) from None

    x, y = doc.get("x"), doc.get("y")
    if x is None and y is None:
        position = None
    else:
        coords = []
        for key, value in (("x", x), ("y", y)):
            if value is None or isinstance(value, bool) or not isinstance(value, (int, float)):
                raise FixtureParseError("expected a number", f"{where}.{key}")
            if not 0.0 <= value <= 1.0:
                raise ValidationError(
                    f"coordinate {value} outside [0, 1]", f"{where}.{key}"
                )
            coords.append(float(value))
        position = (coords[0], coords[1])
    return Player(id=pid, name=name, role=role, position=position)


def parse_team_record(doc: Any) -> TeamRecord:
    """Validate an already-decoded fixture document."""
    if not isinstance(doc, dict):
        raise FixtureParseError("top level must be an object")
    team = _require(doc, "team", str, "team")
    games = _require(doc, "games", int, "games")
    raw_players = _require(doc, "players", list, "players")
    raw_passes = _require(doc, "passes", list, "passes")

    players = tuple(_parse_player(p, i) for i, p in enumerate(raw_players))
    n = len(players)
    if n < 2:
        raise ValidationError("a team needs at least 2 players", "players")
    ids = [p.id for p in players]
    if ids != list(range(n)):
        raise ValidationError(
            "player ids must be 0..N-1 in array order", "players"
        )

    rows = []
    for i, row in enumerate(raw_passes):
        if not isinstance(row, list):
            raise FixtureParseError("expected a list", f"passes[{i}]")
        for j, v in enumerate(row):
            if isinstance(v, bool) or not isinstance(v, int):
                raise FixtureParseError("expected an integer", f"passes[{i}][{j}]")
        rows.append(row)
    widths = sorted({len(r) for r in rows})
    if widths and widths != [len(rows)]:
        cols = "/".join(map(str, widths))
        raise ValidationError(f"non-square matrix ({len(rows)}x{cols})", "passes")
    if len(rows) != n:
        raise ValidationError(
            f"matrix side {len(rows)} does not match {n} players", "passes"
        )
    passes = np.array(rows, dtype=np.int64).reshape(n, n)

    neg = np.argwhere(passes < 0)
    if len(neg):
        i, j = neg[0]
        raise ValidationError("negative pass count", f"passes[{i}][{j}]")
    diag = np.flatnonzero(np.diag(passes))
    if len(diag):
        i = diag[0]
        raise ValidationError("self-pass on the diagonal", f"passes[{i}][{i}]")
    if games < 1:
        raise ValidationError("games must be >= 1", "games")

    return TeamRecord(
        team_name=team,
        players=players,
        aggregate_passes=_frozen(passes),
        games_played=games,
    )


def load_team_record(source: IO[bytes] | bytes | str | Path) -> TeamRecord:
    """Read a UTF-8 JSON fixture from a binary stream, raw bytes or a path."""
    if isinstance(source, (str, Path)):
        data = Path(source).read_bytes()
    elif isinstance(source, (bytes, bytearray)):
        data = bytes(source)
    else:
        data = source.read()
    try:
        doc = json.loads(data.decode("utf-8"))
    except (UnicodeDecodeError, json.JSONDecodeError) as exc:
        raise FixtureParseError(f"not valid UTF-8 JSON ({exc})") from exc
    return parse_team_record(doc)


def team_record_to_dict(record: TeamRecord) -> dict:
    """Inverse of :func:`parse_team_record`."""
    players = []
    for p in record.players:
        entry = {"id": p.id, "name": p.name, "role": p.role.value}
        if p.position is not None:
            entry["x"], entry["y"] = p.position
        players.append(entry)
    return {
        "team": record.team_name,
        "games": record.games_played,
        "players": players,
        "passes": record.aggregate_passes.tolist(),
    }
