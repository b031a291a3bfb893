"""Regenerate the synthetic team fixtures in src/passnet/data/fixtures/.

The published tables give team totals and a few structural invariants but no
pass matrices.  For each team we draw pass matrices from a simple positional
propensity model (nearby players and forward passes are favoured), search
for an arc set whose edge connectivities and clique size match the published
row, then spread exactly P * games passes over those arcs.

    python tools/make_fixtures.py
"""
from __future__ import annotations

import csv
import json
import sys
from pathlib import Path

import numpy as np

from passnet.cohesion import edge_connectivity_directed, edge_connectivity_undirected, max_clique
from passnet.model import BinaryAdjacency

ROOT = Path(__file__).resolve().parents[1]
DATA = ROOT / "src" / "passnet" / "data"

GAMES = {
    "Argentina": 5, "Brazil": 5, "Chile": 4, "England": 4, "Germany": 7,
    "Ghana": 5, "Japan": 4, "Korea Rep.": 4, "Mexico": 4, "Netherlands": 7,
    "Paraguay": 5, "Portugal": 4, "Slovakia": 4, "Spain": 7, "USA": 4,
    "Uruguay": 7,
}

G, D, M, F = "goalkeeper", "defender", "midfielder", "forward"

# (name, role, x, y); x: own goal -> opponent goal, y: right flank -> left flank
ROSTERS = {
    "Spain": [
        ("Casillas", G, 0.04, 0.50), ("Pique", D, 0.20, 0.38), ("Puyol", D, 0.20, 0.62),
        ("Iniesta", M, 0.66, 0.80), ("Villa", F, 0.86, 0.55), ("Xavi", M, 0.56, 0.40),
        ("Capdevila", D, 0.30, 0.90), ("Alonso", M, 0.42, 0.60), ("Ramos", D, 0.30, 0.10),
        ("Busquets", M, 0.38, 0.42), ("Pedro", F, 0.72, 0.18),
    ],
    "Netherlands": [
        ("Stekelenburg", G, 0.04, 0.50), ("Van Der Wiel", D, 0.28, 0.10),
        ("Heitinga", D, 0.20, 0.38), ("Mathijsen", D, 0.20, 0.62),
        ("V. Bronckhorst", D, 0.28, 0.90), ("Van Bommel", M, 0.40, 0.40),
        ("Kuyt", F, 0.70, 0.82), ("De Jong", M, 0.40, 0.62), ("Van Persie", F, 0.88, 0.50),
        ("Sneijder", M, 0.62, 0.50), ("Robben", F, 0.70, 0.16),
    ],
    "Germany": [
        ("Neuer", G, 0.04, 0.50), ("Friedrich", D, 0.20, 0.38), ("Khedira", M, 0.42, 0.40),
        ("Schweinsteiger", M, 0.42, 0.60), ("Özil", M, 0.64, 0.50), ("Podolski", F, 0.68, 0.84),
        ("Klose", F, 0.88, 0.50), ("Trochowski", M, 0.68, 0.16), ("Lahm", D, 0.28, 0.10),
        ("Mertesacker", D, 0.20, 0.62), ("Boateng", D, 0.28, 0.90),
    ],
    "Uruguay": [
        ("Muslera", G, 0.04, 0.50), ("Godin", D, 0.20, 0.62), ("Gargano", M, 0.42, 0.42),
        ("Victorino", D, 0.20, 0.38), ("Cavani", F, 0.74, 0.20), ("Forlan", F, 0.86, 0.55),
        ("A. Pereira", M, 0.56, 0.82), ("Perez", M, 0.44, 0.62), ("M. Pereira", D, 0.32, 0.10),
        ("Arevalo", M, 0.46, 0.40), ("Caceres", D, 0.32, 0.90),
    ],
}

FOUR_FOUR_TWO = [
    ("GK", G, 0.04, 0.50), ("RB", D, 0.28, 0.10), ("RCB", D, 0.20, 0.38),
    ("LCB", D, 0.20, 0.62), ("LB", D, 0.28, 0.90), ("RM", M, 0.55, 0.12),
    ("RCM", M, 0.45, 0.40), ("LCM", M, 0.45, 0.60), ("LM", M, 0.55, 0.88),
    ("RF", F, 0.84, 0.40), ("LF", F, 0.84, 0.60),
]
FOUR_THREE_THREE = [
    ("GK", G, 0.04, 0.50), ("RB", D, 0.28, 0.10), ("RCB", D, 0.20, 0.38),
    ("LCB", D, 0.20, 0.62), ("LB", D, 0.28, 0.90), ("DM", M, 0.40, 0.50),
    ("RCM", M, 0.55, 0.32), ("LCM", M, 0.55, 0.68), ("RW", F, 0.78, 0.14),
    ("ST", F, 0.88, 0.50), ("LW", F, 0.78, 0.86),
]
THREE_FOUR_THREE = [
    ("GK", G, 0.04, 0.50), ("RCB", D, 0.20, 0.26), ("CB", D, 0.18, 0.50),
    ("LCB", D, 0.20, 0.74), ("RWB", M, 0.45, 0.08), ("RCM", M, 0.42, 0.40),
    ("LCM", M, 0.42, 0.60), ("LWB", M, 0.45, 0.92), ("RW", F, 0.76, 0.22),
    ("ST", F, 0.88, 0.50), ("LW", F, 0.76, 0.78),
]
TEMPLATES = {
    "Argentina": ("ARG", FOUR_FOUR_TWO), "Brazil": ("BRA", FOUR_FOUR_TWO),
    "Chile": ("CHI", THREE_FOUR_THREE), "England": ("ENG", FOUR_FOUR_TWO),
    "Ghana": ("GHA", FOUR_THREE_THREE), "Japan": ("JPN", FOUR_THREE_THREE),
    "Korea Rep.": ("KOR", FOUR_FOUR_TWO), "Mexico": ("MEX", FOUR_THREE_THREE),
    "Paraguay": ("PAR", FOUR_FOUR_TWO), "Portugal": ("POR", FOUR_THREE_THREE),
    "Slovakia": ("SVK", FOUR_THREE_THREE), "USA": ("USA", FOUR_FOUR_TWO),
}


def roster(team: str):
    if team in ROSTERS:
        return ROSTERS[team]
    code, template = TEMPLATES[team]
    return [(f"{code} {label}", role, x, y) for label, role, x, y in template]


def propensity(players, rng) -> np.ndarray:
    pos = np.array([(x, y) for _, _, x, y in players])
    role = [r for _, r, _, _ in players]
    diff = pos[None, :, :] - pos[:, None, :]
    dist2 = (diff ** 2).sum(axis=2)
    forward = 1.0 + 0.8 * np.clip(diff[:, :, 0], 0, None)
    P = np.exp(-dist2 / (2 * 0.24 ** 2)) * forward
    for i, r in enumerate(role):
        if r == G:
            P[:, i] *= 0.25
            P[i, :] *= 0.5
        if r == F:
            P[i, :] *= 0.6
    P *= rng.lognormal(0.0, 0.6, size=P.shape)
    np.fill_diagonal(P, 0.0)
    return P


def structure(arcs: np.ndarray) -> tuple[int, int, int]:
    eps = BinaryAdjacency(np.asarray(arcs).astype(np.int8))
    return (
        edge_connectivity_directed(eps),
        edge_connectivity_undirected(eps),
        len(max_clique(eps)),
    )


def _cost(got, target) -> int:
    return sum(abs(a - b) for a, b in zip(got, target))


def search_arcs(players, target, rng, steps: int = 3000) -> tuple[np.ndarray, np.ndarray]:
    """Local search over arc sets, biased towards high-propensity passes."""
    n = len(players)
    prop = propensity(players, rng)
    if target[1] == 0:
        # an undirected cut of size 0 needs a player nobody passes with
        v = int(rng.integers(1, n))
        prop[v, :] = prop[:, v] = 0.0
    off = ~np.eye(n, dtype=bool)
    live = off & (prop > 0)
    density = 0.35 + 0.06 * target[2]
    cutoff = np.quantile(prop[live], max(0.0, 1.0 - density))
    arcs = (prop >= cutoff) & live
    best = _cost(structure(arcs), target)
    candidates = np.argwhere(live)
    weights = prop[live]
    for _ in range(steps):
        if best == 0:
            break
        present = arcs[candidates[:, 0], candidates[:, 1]]
        # adding favours likely passes, removing favours unlikely ones
        w = weights * ~present if rng.random() < 0.5 else present / weights
        if w.sum() == 0:
            continue
        i, j = candidates[rng.choice(len(candidates), p=w / w.sum())]
        arcs[i, j] = not arcs[i, j]
        c = _cost(structure(arcs), target)
        if c <= best:
            best = c
        else:
            arcs[i, j] = not arcs[i, j]
    return arcs, prop


def fill_counts(arcs: np.ndarray, prop: np.ndarray, total: int, rng) -> np.ndarray:
    """Integer pass counts summing to ``total``, positive exactly on ``arcs``."""
    n = arcs.shape[0]
    k = int(arcs.sum())
    if total < k:
        raise ValueError("not enough passes to cover every arc")
    w = np.where(arcs, prop, 0.0).ravel()
    extra = rng.multinomial(total - k, w / w.sum()).reshape(n, n)
    return arcs.astype(np.int64) + extra


def make_team(team: str, row: dict) -> tuple[dict, bool]:
    players = roster(team)
    games = GAMES[team]
    P = int(row["P"])
    target = (int(row["k"]), int(row["k_u"]), int(row["clique"]))
    rng = np.random.default_rng(sum(map(ord, team)))
    for _ in range(20):
        arcs, prop = search_arcs(players, target, rng)
        if structure(arcs) == target:
            break
    counts = fill_counts(arcs, prop, P * games, rng)
    doc = {
        "team": team,
        "games": games,
        "players": [
            {"id": i, "name": name, "role": role, "x": x, "y": y}
            for i, (name, role, x, y) in enumerate(players)
        ],
        "passes": counts.tolist(),
    }
    return doc, structure(counts > 0) == target


def slug(team: str) -> str:
    return team.lower().replace(" ", "_").replace(".", "")


def dump(doc: dict) -> str:
    lines = ["{"]
    lines.append(f'  "team": {json.dumps(doc["team"], ensure_ascii=False)},')
    lines.append(f'  "games": {doc["games"]},')
    lines.append('  "players": [')
    lines.append(",\n".join("    " + json.dumps(p, ensure_ascii=False) for p in doc["players"]))
    lines.append("  ],")
    lines.append('  "passes": [')
    lines.append(",\n".join("    " + json.dumps(r) for r in doc["passes"]))
    lines.append("  ]")
    lines.append("}")
    return "\n".join(lines) + "\n"


def main() -> int:
    out = DATA / "fixtures"
    out.mkdir(parents=True, exist_ok=True)
    with open(DATA / "published_summary.csv", encoding="utf-8") as fh:
        rows = list(csv.DictReader(fh))
    for row in rows:
        team = row["Team"]
        doc, matched = make_team(team, row)
        (out / f"{slug(team)}.json").write_text(dump(doc), encoding="utf-8")
        got = structure(np.array(doc["passes"]) > 0)
        print(f"{team:12s} target k={row['k']} k_u={row['k_u']} Cq={row['clique']}"
              f" -> {got} {'matched' if matched else 'UNMATCHED'}", file=sys.stderr)
    return 0


if __name__ == "__main__":
    sys.exit(main())
