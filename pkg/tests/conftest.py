from __future__ import annotations

import sys
from functools import lru_cache
from pathlib import Path

import pytest
from hypothesis import strategies as st

sys.path.insert(0, str(Path(__file__).parent))

from p3iso.enumeration import enumerate_connected  # noqa: E402
from p3iso.graph import Graph  # noqa: E402


@lru_cache(maxsize=None)
def connected_graphs(n: int) -> tuple[Graph, ...]:
    return tuple(enumerate_connected(n))


@pytest.fixture(scope="session")
def connected_upto_8() -> dict[int, tuple[Graph, ...]]:
    return {n: connected_graphs(n) for n in range(1, 9)}


@st.composite
def graphs(draw, min_n: int = 0, max_n: int = 8) -> Graph:
    n = draw(st.integers(min_n, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    flags = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph.from_edges(n, [p for p, keep in zip(pairs, flags) if keep])


@st.composite
def graphs_with_set(draw, min_n: int = 0, max_n: int = 8) -> tuple[Graph, int]:
    g = draw(graphs(min_n, max_n))
    mask = draw(st.integers(0, (1 << g.n) - 1)) if g.n else 0
    return g, mask


ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
