import sys
from pathlib import Path

import pytest
from hypothesis import strategies as st

from fibcube.hypergraph import Hypergraph

sys.path.insert(0, str(Path(__file__).parent))


@st.composite
def simple_hypergraphs(draw, max_n=6, min_n=0):
    n = draw(st.integers(min_n, max_n))
    if n < 2:
        return Hypergraph(n)
    raw = draw(st.lists(st.sets(st.integers(0, n - 1), min_size=2, max_size=min(n, 4)),
                        max_size=8))
    masks = {sum(1 << v for v in e) for e in raw}
    minimal = [m for m in masks if not any(o != m and o & m == o for o in masks)]
    return Hypergraph(n, [[v for v in range(n) if m >> v & 1] for m in minimal])


@pytest.fixture
def path3():
    return Hypergraph(3, [(0, 1), (1, 2)])


@pytest.fixture
def single_edge():
    return Hypergraph(2, [(0, 1)])


ACCEPTANCE: list[tuple[str, bool, str]] = []


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for name, ok, detail in ACCEPTANCE:
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  {name}: {detail}")
