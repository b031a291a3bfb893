"""Tables and pitch diagrams.

``team_summary`` and ``player_table`` assemble the rows; ``export_csv``
serialises them.  ``render_pitch_diagram`` draws the network on a pitch as a
standalone SVG document.  All output is deterministic.
"""
from __future__ import annotations

import csv
import io
import json
import math
from dataclasses import dataclass
from typing import Iterable, Sequence
from xml.sax.saxutils import escape

import numpy as np

from .centrality import PlayerScores
from .cohesion import CohesionSummary
from .exceptions import RenderError
from .model import PassingNetwork

SUMMARY_HEADER = ["Team", "P", "k", "k_u", "clustering", "betweenness", "clique"]
PLAYER_HEADER = ["Player", "closeness", "betweenness", "pagerank", "clustering"]
SCORE_COLUMNS = PLAYER_HEADER[1:]
TOP_MARK = "*"


@dataclass(frozen=True)
class TeamSummary:
    team: str
    P: float
    k: int
    k_u: int
    avg_clustering_pct: float
    avg_betweenness_pct: float
    clique_size: int


@dataclass(frozen=True)
class PlayerScoreRow:
    name: str
    closeness: float
    betweenness_pct: float
    pagerank: float
    clustering_pct: float
    highlighted: frozenset = frozenset()

    def values(self) -> tuple[float, float, float, float]:
        return (self.closeness, self.betweenness_pct, self.pagerank, self.clustering_pct)


def team_summary(
    net: PassingNetwork, scores: PlayerScores, cohesion: CohesionSummary
) -> TeamSummary:
    return TeamSummary(
        team=net.team_name,
        P=net.total_passes,
        k=cohesion.k,
        k_u=cohesion.k_u,
        avg_clustering_pct=100.0 * cohesion.clustering.team_average,
        avg_betweenness_pct=100.0 * float(np.mean(scores.betweenness)),
        clique_size=len(cohesion.max_clique),
    )


def _top_two(values: Sequence[str]) -> set[int]:
    """Indices whose printed value is among the two highest; ties are all kept."""
    nums = [float(v) for v in values]
    if not nums:
        return set()
    ranked = sorted(nums, reverse=True)
    cutoff = ranked[min(1, len(ranked) - 1)]
    return {i for i, v in enumerate(nums) if v >= cutoff}


def player_table(net: PassingNetwork, scores: PlayerScores) -> list[PlayerScoreRow]:
    """One row per player in roster order, with top-2 markers per column."""
    if scores.clustering is None:
        raise ValueError("player scores carry no clustering values")
    cols = [
        np.asarray(scores.closeness, dtype=float),
        100.0 * np.asarray(scores.betweenness, dtype=float),
        np.asarray(scores.pagerank, dtype=float),
        100.0 * np.asarray(scores.clustering, dtype=float),
    ]
    marks: list[set[str]] = [set() for _ in net.players]
    for name, col in zip(SCORE_COLUMNS, cols):
        for i in _top_two([f"{v:.2f}" for v in col]):
            marks[i].add(name)
    return [
        PlayerScoreRow(
            name=p.name,
            closeness=float(cols[0][i]),
            betweenness_pct=float(cols[1][i]),
            pagerank=float(cols[2][i]),
            clustering_pct=float(cols[3][i]),
            highlighted=frozenset(marks[i]),
        )
        for i, p in enumerate(net.players)
    ]


# -- CSV ----------------------------------------------------------------------

def format_total(P: float) -> str:
    """Team pass total to one decimal, dropping a trailing ``.0`` as in the published table."""
    text = f"{P:.1f}"
    return text[:-2] if text.endswith(".0") else text


def _summary_cells(s: TeamSummary) -> list[str]:
    return [
        s.team,
        format_total(s.P),
        str(s.k),
        str(s.k_u),
        f"{s.avg_clustering_pct:.1f}",
        f"{s.avg_betweenness_pct:.1f}",
        str(s.clique_size),
    ]


def _player_cells(row: PlayerScoreRow) -> list[str]:
    cells = [row.name]
    for name, v in zip(SCORE_COLUMNS, row.values()):
        cells.append(f"{v:.2f}" + (TOP_MARK if name in row.highlighted else ""))
    return cells


def export_csv(obj: TeamSummary | Iterable[TeamSummary] | Iterable[PlayerScoreRow]) -> bytes:
    """Serialise a summary, a list of summaries or a player table as UTF-8 CSV."""
    if isinstance(obj, TeamSummary):
        rows = [obj]
    else:
        rows = list(obj)
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\r\n")
    if rows and isinstance(rows[0], PlayerScoreRow):
        writer.writerow(PLAYER_HEADER)
        writer.writerows(_player_cells(r) for r in rows)
    else:
        writer.writerow(SUMMARY_HEADER)
        writer.writerows(_summary_cells(r) for r in rows)
    return buf.getvalue().encode("utf-8")


def read_summary_csv(data: bytes) -> list[TeamSummary]:
    reader = csv.DictReader(io.StringIO(data.decode("utf-8")))
    return [
        TeamSummary(
            team=r["Team"],
            P=float(r["P"]),
            k=int(r["k"]),
            k_u=int(r["k_u"]),
            avg_clustering_pct=float(r["clustering"]),
            avg_betweenness_pct=float(r["betweenness"]),
            clique_size=int(r["clique"]),
        )
        for r in reader
    ]


def read_player_csv(data: bytes) -> list[PlayerScoreRow]:
    reader = csv.DictReader(io.StringIO(data.decode("utf-8")))
    rows = []
    for r in reader:
        vals, marked = [], set()
        for name in SCORE_COLUMNS:
            cell = r[name]
            if cell.endswith(TOP_MARK):
                marked.add(name)
                cell = cell[: -len(TOP_MARK)]
            vals.append(float(cell))
        rows.append(PlayerScoreRow(r["Player"], *vals, highlighted=frozenset(marked)))
    return rows


# -- pitch diagram ------------------------------------------------------------

@dataclass(frozen=True)
class DiagramStyle:
    width_min: float = 1.0
    width_max: float = 8.0
    color_low: str = "#8796ad"
    color_high: str = "#d7191c"
    node_radius: float = 16.0
    margin: float = 40.0
    curvature: float = 0.12
    pitch_color: str = "#3f8f4f"
    line_color: str = "#f4f4f4"
    node_fill: str = "#ffffff"
    node_stroke: str = "#202020"

    def stroke_width(self, ratio: float) -> float:
        return self.width_min + ratio * (self.width_max - self.width_min)

    def color(self, ratio: float) -> str:
        lo, hi = _rgb(self.color_low), _rgb(self.color_high)
        mix = [round(a + ratio * (b - a)) for a, b in zip(lo, hi)]
        return "#{:02x}{:02x}{:02x}".format(*mix)


def _rgb(hex_color: str) -> tuple[int, int, int]:
    h = hex_color.lstrip("#")
    if len(h) != 6:
        raise ValueError(f"expected #rrggbb colour, got {hex_color!r}")
    return int(h[0:2], 16), int(h[2:4], 16), int(h[4:6], 16)


def _f(v: float) -> str:
    text = f"{v:.2f}"
    return "0.00" if text == "-0.00" else text


@dataclass
class _Arrow:
    i: int
    j: int
    weight: float
    width: float
    color: str
    path: str
    head: str


def pitch_transform(width: int, height: int, style: DiagramStyle):
    """Affine map from formation coordinates to canvas pixels.

    Attack runs left to right, so the right flank (y = 0) is at the bottom.
    """
    left, top = style.margin, style.margin
    w, h = width - 2 * style.margin, height - 2 * style.margin

    def to_canvas(pos: tuple[float, float]) -> tuple[float, float]:
        x, y = pos
        return left + x * w, top + (1.0 - y) * h

    return to_canvas


def _arrow_geometry(p0, p1, width: float, style: DiagramStyle):
    (x0, y0), (x1, y1) = p0, p1
    dx, dy = x1 - x0, y1 - y0
    dist = math.hypot(dx, dy)
    if dist == 0:
        return None
    # bend to the right of the travel direction so i->j and j->i never overlap
    nx_, ny_ = dy / dist, -dx / dist
    cx = (x0 + x1) / 2 + nx_ * style.curvature * dist
    cy = (y0 + y1) / 2 + ny_ * style.curvature * dist
    r = style.node_radius

    def toward(px, py, qx, qy, step):
        L = math.hypot(qx - px, qy - py) or 1.0
        return px + (qx - px) * step / L, py + (qy - py) * step / L

    sx, sy = toward(x0, y0, cx, cy, r)
    tx, ty = toward(x1, y1, cx, cy, r)
    head_len = 6.0 + 2.0 * width
    bx, by = toward(tx, ty, cx, cy, head_len)
    ux, uy = (tx - bx) / head_len, (ty - by) / head_len
    half = head_len * 0.5
    left = (bx + uy * half, by - ux * half)
    right = (bx - uy * half, by + ux * half)
    path = f"M {_f(sx)} {_f(sy)} Q {_f(cx)} {_f(cy)} {_f(bx)} {_f(by)}"
    head = " ".join(f"{_f(px)},{_f(py)}" for px, py in ((tx, ty), left, right))
    return path, head


def render_pitch_diagram(
    net: PassingNetwork,
    width: int = 1200,
    height: int = 800,
    style: DiagramStyle | None = None,
    metadata: dict | None = None,
) -> str:
    """Standalone SVG 1.1 drawing of the passing network on a pitch."""
    style = style or DiagramStyle()
    missing = [p.name for p in net.players if p.position is None]
    if missing:
        raise RenderError("players without a position: " + ", ".join(missing))
    if width <= 2 * style.margin or height <= 2 * style.margin:
        raise RenderError(f"canvas {width}x{height} too small for margin {style.margin}")

    to_canvas = pitch_transform(width, height, style)
    pts = [to_canvas(p.position) for p in net.players]
    A = net.A
    top = float(A.max()) if A.size else 0.0

    arrows = []
    for i, j in zip(*np.nonzero(A > 0)):
        ratio = float(A[i, j]) / top
        w = style.stroke_width(ratio)
        geo = _arrow_geometry(pts[i], pts[j], w, style)
        if geo is None:
            continue
        arrows.append(_Arrow(int(i), int(j), float(A[i, j]), w, style.color(ratio), *geo))
    # heavy arrows drawn last so they stay visible
    arrows.sort(key=lambda a: (a.weight, a.i, a.j))

    m = style.margin
    pw, ph = width - 2 * m, height - 2 * m
    out = [
        '<?xml version="1.0" encoding="UTF-8" standalone="no"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'width="{width}" height="{height}" viewBox="0 0 {width} {height}">',
        f"<title>{escape(net.team_name)}</title>",
    ]
    if metadata is not None:
        out.append(f"<metadata>{escape(json.dumps(metadata, sort_keys=True))}</metadata>")
    out += [
        f'<rect x="0" y="0" width="{width}" height="{height}" fill="{style.pitch_color}"/>',
        f'<g id="pitch" fill="none" stroke="{style.line_color}" stroke-width="2">',
        f'<rect x="{_f(m)}" y="{_f(m)}" width="{_f(pw)}" height="{_f(ph)}"/>',
        f'<line x1="{_f(m + pw / 2)}" y1="{_f(m)}" x2="{_f(m + pw / 2)}" y2="{_f(m + ph)}"/>',
        f'<circle cx="{_f(m + pw / 2)}" cy="{_f(m + ph / 2)}" r="{_f(ph * 0.13)}"/>',
        "</g>",
        '<g id="passes">',
    ]
    for a in arrows:
        label = f"{net.players[a.i].name} -> {net.players[a.j].name}: {a.weight:.2f}"
        out.append(
            f'<g class="pass" data-from="{a.i}" data-to="{a.j}">'
            f"<title>{escape(label)}</title>"
            f'<path d="{a.path}" fill="none" stroke="{a.color}" '
            f'stroke-width="{a.width:.4f}" stroke-linecap="round"/>'
            f'<polygon points="{a.head}" fill="{a.color}"/></g>'
        )
    out.append("</g>")
    out.append('<g id="players">')
    for p, (x, y) in zip(net.players, pts):
        out.append(
            f'<g class="player" data-id="{p.id}">'
            f'<circle cx="{_f(x)}" cy="{_f(y)}" r="{_f(style.node_radius)}" '
            f'fill="{style.node_fill}" stroke="{style.node_stroke}" stroke-width="2"/>'
            f'<text x="{_f(x)}" y="{_f(y + style.node_radius + 14)}" text-anchor="middle" '
            f'font-family="sans-serif" font-size="13" fill="#ffffff">{escape(p.name)}</text></g>'
        )
    out.append("</g>")
    out.append(
        f'<text x="{_f(m)}" y="{_f(m - 12)}" font-family="sans-serif" font-size="18" '
        f'fill="#ffffff">{escape(net.team_name)}</text>'
    )
    out.append("</svg>")
    return "\n".join(out) + "\n"
