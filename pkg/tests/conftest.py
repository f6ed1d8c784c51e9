"""Shared fixtures and the acceptance-line reporter.

The heavyweight corpora are session-scoped so the acceptance tests that
share them pay the enumeration cost once.
"""

import pytest

from ridgeline import Graph, enumerate_pure_complexes, from_facets

_ACCEPTANCE_LINES = []


def record_acceptance(num: int, name: str, ok: bool, detail: str = ""):
    """One pass/fail line per criterion, echoed in the terminal summary."""
    line = f"criterion {num:02d} [{name}]: {'PASS' if ok else 'FAIL'}"
    if detail:
        line += f" - {detail}"
    _ACCEPTANCE_LINES.append((num, line))
    print(line)
    assert ok, line


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if _ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for _, line in sorted(_ACCEPTANCE_LINES):
            terminalreporter.write_line(line)


@pytest.fixture(scope="session")
def d3_corpus():
    """Exhaustive pure facet-size-3 complexes with n <= 6 and at most 5
    facets; ambient equals support."""
    return list(enumerate_pure_complexes(6, 3, 5))


@pytest.fixture(scope="session")
def connected_graph_corpus():
    """All connected labeled graphs on 2..6 vertices (with an edge, so each
    one doubles as a pure facet-size-2 complex)."""
    from oracles import connected_labeled_graphs

    out = []
    for n in range(2, 7):
        for n_, edges in connected_labeled_graphs(n):
            out.append(Graph(n_, edges))
    return out


@pytest.fixture(scope="session")
def graph_complex_corpus(connected_graph_corpus):
    """The connected graphs again, as facet-size-2 complexes over their full
    vertex set."""
    return [from_facets(g.edges(), ambient=range(1, g.order + 1))
            for g in connected_graph_corpus]
