import numpy as np
import pytest
from hypothesis import strategies as st

from graphs import CHAIN3, net

ACCEPTANCE_RESULTS: dict[str, tuple[bool, str]] = {}


@pytest.fixture
def chain3():
    return net(CHAIN3)


@st.composite
def weight_matrices(draw, min_n=3, max_n=7, max_w=5):
    n = draw(st.integers(min_n, max_n))
    flat = draw(st.lists(st.integers(0, max_w), min_size=n * n, max_size=n * n))
    A = np.array(flat, dtype=float).reshape(n, n)
    np.fill_diagonal(A, 0.0)
    return A


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for name in sorted(ACCEPTANCE_RESULTS):
        ok, detail = ACCEPTANCE_RESULTS[name]
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  {name}  {detail}")
