import itertools
import sys
from pathlib import Path

import pytest
from hypothesis import strategies as st

sys.path.insert(0, str(Path(__file__).parent))

from biphole import build_graph  # noqa: E402
from biphole.families import complete, complete_bipartite, cycle, edgeless, path, star  # noqa: E402

DATA = Path(__file__).parent / "data"
GRAPHS8 = DATA / "graphs8.g6"


@st.composite
def graphs(draw, min_n=1, max_n=8):
    n = draw(st.integers(min_n, max_n))
    pairs = list(itertools.combinations(range(n), 2))
    keep = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return build_graph(n, [p for p, k in zip(pairs, keep) if k])


@st.composite
def graph_with_non_edge(draw, max_n=8):
    g = draw(graphs(min_n=2, max_n=max_n).filter(lambda g: not g.is_complete()))
    u, v = draw(st.sampled_from(g.non_edges()))
    return g, u, v


def all_labeled(n):
    pairs = list(itertools.combinations(range(n), 2))
    for code in range(1 << len(pairs)):
        yield build_graph(n, [p for k, p in enumerate(pairs) if code >> k & 1])


@pytest.fixture
def petersen():
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return build_graph(10, outer + spokes + inner)


@pytest.fixture
def bowtie_pair():
    """Two triangles sharing vertex 0."""
    return build_graph(5, [(0, 1), (0, 2), (1, 2), (0, 3), (0, 4), (3, 4)])


NAMED = {
    "K1": lambda: complete(1),
    "K5": lambda: complete(5),
    "K34": lambda: complete_bipartite(3, 4),
    "K33": lambda: complete_bipartite(3, 3),
    "C5": lambda: cycle(5),
    "C6": lambda: cycle(6),
    "P4": lambda: path(4),
    "star5": lambda: star(5),
    "E4": lambda: edgeless(4),
}


_VERDICTS = pytest.StashKey[list]()


def pytest_configure(config):
    config.stash[_VERDICTS] = []


@pytest.fixture
def verdict(request):
    """Record one PASS/FAIL line per acceptance criterion; printed in the run summary."""
    lines = request.config.stash[_VERDICTS]

    def record(criterion, ok, detail):
        line = f"[{'PASS' if ok else 'FAIL'}] criterion {criterion}: {detail}"
        lines.append(line)
        print(line)
        return ok

    return record


def pytest_terminal_summary(terminalreporter, config):
    lines = config.stash.get(_VERDICTS, [])
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
