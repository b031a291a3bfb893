import csv
import io
import xml.etree.ElementTree as ET
from importlib.resources import files

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import weight_matrices
from graphs import CHAIN3, complete, net
from passnet.exceptions import RenderError
from passnet.model import build_network, load_team_record
from passnet.pipeline import analyze_network
from passnet.report import (
    PLAYER_HEADER,
    DiagramStyle,
    export_csv,
    format_total,
    read_player_csv,
    read_summary_csv,
    render_pitch_diagram,
)

SVG = "{http://www.w3.org/2000/svg}"


def positioned(A, name="T"):
    n = len(A)
    pos = [(0.1 + 0.8 * i / max(n - 1, 1), 0.2 + 0.6 * (i % 2)) for i in range(n)]
    return net(A, positions=pos, team_name=name)


def spain():
    data = files("passnet").joinpath("data/fixtures/spain.json").read_bytes()
    return build_network(load_team_record(data))


def arrows(svg: str):
    root = ET.fromstring(svg)
    return root.findall(f".//{SVG}g[@class='pass']")


# -- summary ------------------------------------------------------------------

def test_complete_graph_summary():
    s = analyze_network(net(complete(11, 1.0))).summary
    assert s.P == pytest.approx(110.0)
    assert (s.k, s.k_u, s.clique_size) == (10, 10, 11)
    assert s.avg_clustering_pct == pytest.approx(100.0)
    assert s.avg_betweenness_pct == 0.0


def test_summary_csv_shape():
    data = export_csv(analyze_network(net(CHAIN3)).summary)
    lines = data.decode().splitlines()
    assert lines[0] == "Team,P,k,k_u,clustering,betweenness,clique"
    assert len(lines) == 2
    assert len(lines[1].split(",")) == 7


def test_spain_total_printed_like_table():
    row = export_csv(analyze_network(spain()).summary).decode().splitlines()[1]
    assert row.split(",")[:2] == ["Spain", "417"]


@pytest.mark.parametrize("P, text", [(417.0, "417"), (227.25, "227.2"), (0.04, "0"), (166.6, "166.6")])
def test_format_total(P, text):
    assert format_total(P) == text


def test_summary_round_trip():
    summaries = [analyze_network(spain()).summary, analyze_network(net(CHAIN3)).summary]
    back = read_summary_csv(export_csv(summaries))
    for a, b in zip(summaries, back):
        assert b.team == a.team
        assert (b.k, b.k_u, b.clique_size) == (a.k, a.k_u, a.clique_size)
        assert b.P == pytest.approx(a.P, abs=0.05)
        assert b.avg_clustering_pct == pytest.approx(a.avg_clustering_pct, abs=0.05)
        assert b.avg_betweenness_pct == pytest.approx(a.avg_betweenness_pct, abs=0.05)


# -- player table -------------------------------------------------------------

def test_player_table_shape():
    nw = spain()
    table = analyze_network(nw).table
    assert [r.name for r in table] == nw.names
    lines = export_csv(table).decode().splitlines()
    assert lines[0].split(",") == PLAYER_HEADER
    assert len(lines) == nw.n_players + 1


def test_player_columns_follow_published_order():
    assert PLAYER_HEADER[1:] == ["closeness", "betweenness", "pagerank", "clustering"]


def test_uniform_graph_marks_every_cell():
    table = analyze_network(net(complete(11, 2.0))).table
    assert all(len(r.highlighted) == 4 for r in table)
    body = export_csv(table).decode().splitlines()[1:]
    assert len({line.split(",", 1)[1] for line in body}) == 1
    assert all(cell.endswith("*") for line in body for cell in line.split(",")[1:])


def test_top_two_with_ties():
    table = analyze_network(net(CHAIN3)).table
    # betweenness column 0, 50, 0: the top value and the tied zeros behind it
    marked = [("betweenness" in r.highlighted) for r in table]
    assert marked == [True, True, True]
    # pagerank 1, 1.68, 2.598: exactly the two largest
    assert [("pagerank" in r.highlighted) for r in table] == [False, True, True]


def test_chain3_forward_has_zero_betweenness_cell():
    table = analyze_network(net(CHAIN3)).table
    rows = list(csv.reader(io.StringIO(export_csv(table).decode())))
    assert rows[3][2].rstrip("*") == "0.00"


def test_player_round_trip():
    table = analyze_network(spain()).table
    back = read_player_csv(export_csv(table))
    for a, b in zip(table, back):
        assert b.name == a.name
        assert b.highlighted == a.highlighted
        assert np.allclose(b.values(), a.values(), atol=0.005, rtol=0)


@settings(max_examples=50, deadline=None)
@given(weight_matrices(min_n=3, max_n=8))
def test_table_shape_on_random_networks(A):
    if not A.any():
        return
    table = analyze_network(net(A)).table
    assert len(table) == len(A)
    for r in table:
        assert 0.0 <= r.betweenness_pct <= 100.0
        assert r.closeness >= 0 and r.pagerank >= 1.0 - 1e-12


# -- diagram ------------------------------------------------------------------

def test_empty_network_draws_players_only():
    nw = positioned(np.zeros((11, 11)))
    svg = render_pitch_diagram(nw)
    root = ET.fromstring(svg)
    assert len(root.findall(f".//{SVG}g[@class='player']")) == 11
    assert arrows(svg) == []


def test_heaviest_arrow_gets_max_width():
    svg = render_pitch_diagram(positioned([[0, 3], [0, 0]]))
    (arrow,) = arrows(svg)
    assert arrow.find(f"{SVG}path").get("stroke-width") == "8.0000"
    assert arrow.find(f"{SVG}path").get("stroke") == DiagramStyle().color_high


def test_chain3_widths_decrease_with_weight():
    svg = render_pitch_diagram(positioned(CHAIN3))
    width = {
        (a.get("data-from"), a.get("data-to")): float(a.find(f"{SVG}path").get("stroke-width"))
        for a in arrows(svg)
    }
    assert len(width) == 3
    assert width[("0", "1")] > width[("1", "2")] > width[("0", "2")]


def test_mutual_passes_draw_two_distinct_arcs():
    svg = render_pitch_diagram(positioned([[0, 2], [5, 0]]))
    paths = [a.find(f"{SVG}path").get("d") for a in arrows(svg)]
    assert len(paths) == 2 and paths[0] != paths[1]
    # control points bend to opposite sides of the chord
    ctrl = [tuple(map(float, p.split("Q")[1].split()[:2])) for p in paths]
    assert ctrl[0] != ctrl[1]


def test_player_positions_are_affine():
    nw = net([[0, 1], [1, 0]], positions=[(0.0, 0.0), (1.0, 1.0)])
    style = DiagramStyle()
    root = ET.fromstring(render_pitch_diagram(nw, 1000, 500, style))
    circles = [g.find(f"{SVG}circle") for g in root.findall(f".//{SVG}g[@class='player']")]
    xy = [(float(c.get("cx")), float(c.get("cy"))) for c in circles]
    m = style.margin
    assert xy == [(m, 500 - m), (1000 - m, m)]


def test_missing_positions_are_reported():
    nw = net(CHAIN3, names=["A", "B", "C"], positions=[(0.1, 0.1), None, None])
    with pytest.raises(RenderError, match="B, C"):
        render_pitch_diagram(nw)


def test_rendering_is_deterministic():
    nw = spain()
    assert render_pitch_diagram(nw) == render_pitch_diagram(nw)


def test_metadata_embedded_and_names_escaped():
    nw = net([[0, 1], [1, 0]], names=["A&B", "<C>"], positions=[(0.2, 0.2), (0.8, 0.8)])
    svg = render_pitch_diagram(nw, metadata={"p": 0.85})
    root = ET.fromstring(svg)
    assert '"p": 0.85' in root.find(f"{SVG}metadata").text
    assert "A&amp;B" in svg


def test_custom_style_endpoints():
    style = DiagramStyle(width_min=2.0, width_max=4.0, color_low="#000000", color_high="#ffffff")
    assert style.stroke_width(0.0) == 2.0 and style.stroke_width(1.0) == 4.0
    assert style.color(0.5) == "#808080"


@settings(max_examples=60, deadline=None)
@given(weight_matrices(min_n=2, max_n=7, max_w=40))
def test_width_is_monotone_in_weight(A):
    svg = render_pitch_diagram(positioned(A))
    pairs = []
    for a in arrows(svg):
        i, j = int(a.get("data-from")), int(a.get("data-to"))
        pairs.append((A[i, j], float(a.find(f"{SVG}path").get("stroke-width"))))
    assert len(pairs) == int((A > 0).sum())
    pairs.sort()
    for (w1, s1), (w2, s2) in zip(pairs, pairs[1:]):
        if w1 < w2:
            assert s1 < s2
        else:
            assert s1 == s2
