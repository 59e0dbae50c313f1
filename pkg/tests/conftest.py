from __future__ import annotations

from functools import lru_cache
from itertools import combinations

import pytest
from hypothesis import strategies as st

from cclosed.enumeration import subset_census
from cclosed.generators import (clique_pendants, complete_bipartite, complete_graph,
                                complete_multipartite, cycle_graph, disjoint_union,
                                double_star, empty_graph, gen_blowup, gen_projective, gnp,
                                is_plus_star, k2_bipartite_plus_edge, path_graph, star)
from cclosed.graph import Graph, build_graph
from cclosed.patterns import CATALOG, PATTERN_IDS

DENSITIES = (0.05, 0.1, 0.2, 0.3, 0.5, 0.7, 0.9)


def gnp_corpus(count: int = 210) -> list[tuple[str, Graph]]:
    """Seeded G(n, p) graphs cycling n through 5..40 and p through DENSITIES."""
    out = []
    for i in range(count):
        n = 5 + i % 36
        p = DENSITIES[i % len(DENSITIES)]
        out.append((f"gnp-{n}-{p}-{1000 + i}", gnp(n, p, 1000 + i)))
    return out


def generator_corpus() -> list[tuple[str, Graph]]:
    """Every generator instance used by the suite with at most 40 vertices."""
    out = []
    out += [(f"star-{t}", star(t)) for t in range(1, 10)]
    out += [(f"double_star-{t}", double_star(t)) for t in range(1, 7)]
    out += [(f"clique_pendants-{k}-{t}", clique_pendants(k, t)) for k in range(3, 7) for t in range(1, 5)]
    out += [(f"k2_bipartite_plus_edge-{n}", k2_bipartite_plus_edge(n)) for n in range(5, 11)]
    out += [(f"is_plus_star-{n}", is_plus_star(n)) for n in (4, 8, 12, 20)]
    out += [("projective-2", gen_projective(2))]
    for pid in PATTERN_IDS:
        k = CATALOG[pid].order
        for blocks in (1, 2, 3):
            out.append((f"blowup-{pid}-{k * blocks}", gen_blowup(pid, k * blocks)))
    out += [(f"complete-{n}", complete_graph(n)) for n in (1, 2, 3, 4, 5, 8)]
    out += [(f"empty-{n}", empty_graph(n)) for n in (0, 1, 3, 5)]
    out += [(f"cycle-{n}", cycle_graph(n)) for n in (3, 4, 5, 6, 7)]
    out += [(f"path-{n}", path_graph(n)) for n in (2, 3, 4, 5, 6)]
    out += [("K2,4", complete_bipartite(2, 4)), ("K3,3", complete_bipartite(3, 3)),
            ("K2,2,2", complete_multipartite(2, 2, 2)),
            ("K3+2K1", disjoint_union(complete_graph(3), empty_graph(2))),
            ("co(K3+2K1)", disjoint_union(complete_graph(3), empty_graph(2)).complement()),
            ("gem", CATALOG["gem"].as_graph()),
            ("2K2", disjoint_union(complete_graph(2), complete_graph(2)))]
    return [(name, g) for name, g in out if g.n <= 40]


def full_corpus() -> list[tuple[str, Graph]]:
    return gnp_corpus() + generator_corpus()


def small_corpus() -> list[tuple[str, Graph]]:
    """Faster slice for the per-module differential tests."""
    return [item for item in gnp_corpus(70) if item[1].n <= 26] + generator_corpus()


@lru_cache(maxsize=None)
def census_of(g: Graph) -> dict[str, frozenset]:
    return {pid: frozenset(occ) for pid, occ in subset_census(g).items()}


def brute_common(g: Graph, u: int, v: int) -> list[int]:
    return [w for w in range(g.n) if g.has_edge(u, w) and g.has_edge(v, w)]


def brute_closure(g: Graph) -> int:
    best = 0
    for u, v in combinations(range(g.n), 2):
        if not g.has_edge(u, v):
            best = max(best, len(brute_common(g, u, v)))
    return best + 1


@st.composite
def graphs(draw, min_n: int = 0, max_n: int = 12):
    n = draw(st.integers(min_n, max_n))
    pairs = list(combinations(range(n), 2))
    if not pairs:
        return build_graph(n, [])
    chosen = draw(st.lists(st.sampled_from(pairs), max_size=len(pairs)))
    return build_graph(n, chosen)


@pytest.fixture(scope="session")
def corpus():
    return small_corpus()


def pytest_terminal_summary(terminalreporter):
    try:
        import test_acceptance
    except ImportError:
        return
    lines = test_acceptance.verdict_lines()
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
