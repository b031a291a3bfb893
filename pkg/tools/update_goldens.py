"""Regenerate the committed golden outputs in tests/golden/.

Run only after a deliberate change to the report or diagram format.
"""
import sys
from pathlib import Path

from passnet.cli import run

ROOT = Path(__file__).resolve().parents[1]
FIXTURE = ROOT / "src" / "passnet" / "data" / "fixtures" / "spain.json"
GOLDEN = ROOT / "tests" / "golden" / "spain"

if __name__ == "__main__":
    sys.exit(run(["analyze", str(FIXTURE), "-o", str(GOLDEN)]))
