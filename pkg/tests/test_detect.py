from itertools import combinations

import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cclosed.closure import compute_closure
from cclosed.detect import (DETECTORS, PRECONDITIONS, co_components, components, detect_clique,
                            detect_co_claw, detect_co_diamond, detect_co_p3, detect_co_paw,
                            detect_co_square, detect_diamond_baseline, detect_diamond_gemfree,
                            detect_gem, detect_independent_set, detect_p4, detect_paw, detect_square,
                            detect_star, detect_triangle_dense, detect_triangle_sparse,
                            find_is_or_p3)
from cclosed.generators import (clique_pendants, complete_bipartite, complete_graph,
                                complete_multipartite, cycle_graph, disjoint_union, empty_graph,
                                gen_blowup, gen_projective, gnp, is_plus_star,
                                k2_bipartite_plus_edge, path_graph, star)
from cclosed.graph import GraphInputError, StepCounter, build_graph
from cclosed.patterns import CATALOG, PATTERN_IDS, induced_pattern

from conftest import census_of, full_corpus, graphs

K3_2K1 = disjoint_union(complete_graph(3), empty_graph(2))
P3_K1 = disjoint_union(path_graph(3), empty_graph(1))
K2_2K1 = disjoint_union(complete_graph(2), empty_graph(2))
TWO_K2 = disjoint_union(complete_graph(2), complete_graph(2))


def pattern_graph(pid):
    return CATALOG[pid].as_graph()


def assert_sound(res, g, pid):
    if res.found:
        assert induced_pattern(g, res.witness.vertices) == pid
        assert res.witness.pattern == pid


def agrees(fn, g, pid):
    res = fn(g)
    assert res.found == bool(census_of(g)[pid])
    assert_sound(res, g, pid)
    return res


def test_co_p3_examples():
    assert detect_co_p3(disjoint_union(complete_graph(2), empty_graph(1))).found
    assert not detect_co_p3(complete_graph(4)).found
    agrees(detect_co_p3, gnp(25, 0.5, 3), "coP3")


def test_independent_set_examples():
    res = detect_independent_set(star(3), 3)
    assert res.found and set(res.witness.vertices) == {1, 2, 3}
    assert not detect_independent_set(complete_graph(5), 3).found
    agrees(lambda g: detect_independent_set(g, 4), gen_blowup("empty4", 8), "empty4")
    with pytest.raises(GraphInputError):
        detect_independent_set(star(3), 5)


def test_star_examples():
    assert detect_star(pattern_graph("claw"), 3).found
    assert not detect_star(complete_graph(4), 3).found
    agrees(lambda g: detect_star(g, 3), gnp(20, 0.25, 9), "claw")
    assert detect_star(star(6), 5).found and not detect_star(star(6), 7).found
    with pytest.raises(GraphInputError):
        detect_star(star(3), 1)


@pytest.mark.parametrize("fn", [detect_triangle_dense, detect_triangle_sparse,
                                lambda g, counter=None: detect_clique(g, 3, counter)])
def test_triangle_examples(fn):
    assert fn(complete_graph(3)).found
    assert not fn(cycle_graph(4)).found
    assert not fn(complete_bipartite(3, 3)).found
    agrees(fn, clique_pendants(5, 3), "K3")
    agrees(fn, gen_projective(2), "K3")


def test_clique_examples():
    assert detect_clique(complete_graph(4), 4).found
    assert not detect_clique(cycle_graph(5), 3).found
    agrees(lambda g: detect_clique(g, 4), gen_blowup("K4", 8), "K4")
    res = detect_clique(complete_graph(7), 6)
    assert res.found and len(res.witness.vertices) == 6


def test_paw_examples():
    assert detect_paw(pattern_graph("paw")).found
    assert not detect_paw(K3_2K1).found
    assert not detect_paw(cycle_graph(5)).found


def test_co_paw_examples():
    assert detect_co_paw(P3_K1).found
    agrees(detect_co_paw, is_plus_star(8), "coPaw")
    assert detect_co_paw(is_plus_star(8)).found
    assert not detect_co_paw(complete_graph(4)).found
    assert not detect_co_paw(K3_2K1.complement()).found


def test_component_wise_characterisation_regression():
    assert not census_of(K3_2K1)["paw"]
    assert census_of(K3_2K1)["K3"] and census_of(K3_2K1)["coP3"]
    assert not census_of(K3_2K1.complement())["coPaw"]


def test_co_diamond_examples():
    assert detect_co_diamond(K2_2K1).found
    res = detect_co_diamond(cycle_graph(4))
    assert not res.found and res.certificate == "two-clique partition"
    agrees(detect_co_diamond, gnp(30, 0.2, 5), "coDiamond")


def test_co_diamond_two_clique_certificate_on_large_graph():
    # two cliques with a few edges between them, large enough to skip the exhaustive branch
    a, b = range(0, 12), range(12, 24)
    edges = list(combinations(a, 2)) + list(combinations(b, 2)) + [(0, 12), (1, 13)]
    g = build_graph(24, edges)
    assert g.n > 6 * compute_closure(g).c
    res = detect_co_diamond(g)
    assert not res.found and res.certificate == "two-clique partition"
    assert not census_of(g)["coDiamond"]


def _certify_two_cliques(g):
    h = nx.complement(nx.Graph(g.edge_list()) if g.m else nx.empty_graph(g.n))
    h.add_nodes_from(range(g.n))
    return nx.is_bipartite(h)


def test_co_diamond_certificates_are_true():
    for name, g in full_corpus():
        res = detect_co_diamond(g)
        if res.certificate == "two-clique partition":
            assert _certify_two_cliques(g), name


def test_co_diamond_large_cases_reach_every_branch():
    # all have n > 6c, so the structural branches run instead of the exhaustive one
    pendant = build_graph(20, list(combinations(range(18), 2)) + [(0, 18)])
    graphs_ = {
        "low-degree edge": disjoint_union(complete_graph(20), complete_graph(2), empty_graph(1)),
        "middling vertex": disjoint_union(complete_graph(10), complete_graph(10), complete_graph(10)),
        "middling vertex, clique rest": disjoint_union(complete_graph(27), empty_graph(2)),
        "high-degree scan": pendant,
        "high-degree scan, c=2": build_graph(20, list(combinations(range(17), 2)) + [(0, 17)]),
    }
    for name, g in graphs_.items():
        assert g.n > 6 * compute_closure(g).c, name
        assert agrees(detect_co_diamond, g, "coDiamond").found, name


def test_co_square_examples():
    assert detect_co_square(TWO_K2).found
    assert not detect_co_square(cycle_graph(5)).found
    res = detect_co_square(path_graph(5))
    assert res.found and res.witness.vertices == (0, 1, 3, 4)


def test_diamond_examples():
    for fn in (detect_diamond_baseline, detect_diamond_gemfree):
        assert fn(pattern_graph("diamond")).found
        assert not fn(cycle_graph(4)).found
    assert detect_diamond_baseline(k2_bipartite_plus_edge(6)).found


def test_gem_examples():
    assert detect_gem(pattern_graph("gem")).found
    assert not detect_gem(k2_bipartite_plus_edge(6)).found
    assert not detect_gem(cycle_graph(5)).found


def test_gemfree_diamond_examples():
    g = k2_bipartite_plus_edge(8)
    assert not detect_gem(g).found
    assert agrees(detect_diamond_gemfree, g, "diamond").found
    b = gen_blowup("K3", 9)
    assert not detect_gem(b).found
    assert detect_diamond_gemfree(b).found == bool(census_of(b)["diamond"])


def test_square_examples():
    assert detect_square(cycle_graph(4)).found
    assert not detect_square(complete_graph(4)).found


def test_projective_plane_graph_square_follows_oracle():
    # the doubled incidence graph has no induced C4: the common neighbours of
    # two point copies are the two (adjacent) copies of their shared line
    g = gen_projective(2)
    assert not census_of(g)["square"]
    assert not detect_square(g).found
    # two points on a common line with both copies of that line: a diamond, not a C4
    line = next(j for j in range(7) if g.has_edge(0, 14 + 2 * j) and g.has_edge(2, 14 + 2 * j))
    assert induced_pattern(g, (0, 2, 14 + 2 * line, 15 + 2 * line)) == "diamond"


def test_p4_claw_co_claw_examples():
    assert detect_p4(path_graph(4)).found
    assert not detect_p4(complete_multipartite(2, 2, 2)).found
    assert detect_co_claw(disjoint_union(complete_graph(3), empty_graph(1))).found


def test_find_is_or_p3_examples():
    assert find_is_or_p3(star(4), 0).independent == (1, 2, 3, 4)
    # lowest-id greedy from the diamond's apex takes vertex 1 first and swallows
    # the whole neighbourhood; the P3 2-1-3 is caught later by the S_u clique test
    diamond = pattern_graph("diamond")
    assert find_is_or_p3(diamond, 0).independent == (1,)
    assert detect_diamond_gemfree(diamond).found
    # in the gem, N(4) induces the path 0-1-2-3: picking 0 then 2 exposes 2-1-0
    res = find_is_or_p3(pattern_graph("gem"), 4)
    assert res.p3 == (2, 1, 0)


@settings(max_examples=200, deadline=None)
@given(graphs(min_n=1), st.data())
def test_find_is_or_p3_property(g, data):
    v = data.draw(st.integers(0, g.n - 1))
    nv = g.nbrs[v]
    res = find_is_or_p3(g, v)
    if res.p3 is not None:
        end1, mid, end2 = res.p3
        assert {end1, mid, end2} <= nv
        assert g.has_edge(end1, mid) and g.has_edge(mid, end2) and not g.has_edge(end1, end2)
    else:
        ind = res.independent
        assert set(ind) <= nv
        assert all(not g.has_edge(a, b) for a, b in combinations(ind, 2))
        assert all(x in ind or any(g.has_edge(x, a) for a in ind) for x in nv)
        # neighbourhoods inside N(v) are pairwise disjoint
        for a, b in combinations(ind, 2):
            assert not (g.nbrs[a] & g.nbrs[b] & nv)


def test_components_and_co_components():
    g = disjoint_union(complete_graph(2), path_graph(3), empty_graph(1))
    assert components(g) == [[0, 1], [2, 3, 4], [5]]
    h = complete_multipartite(2, 3)
    assert co_components(h) == [[0, 1], [2, 3, 4]]


@settings(max_examples=100, deadline=None)
@given(graphs(max_n=12))
def test_co_components_match_networkx(g):
    h = nx.complement(nx.empty_graph(g.n)) if False else nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from((u, v) for u, v in combinations(range(g.n), 2) if not g.has_edge(u, v))
    expected = sorted(sorted(c) for c in nx.connected_components(h))
    assert sorted(co_components(g)) == expected


@pytest.mark.parametrize("pid", PATTERN_IDS)
def test_every_detector_agrees_with_oracle(pid, corpus):
    for name, g in corpus:
        for algo, fn in DETECTORS[pid].items():
            if PRECONDITIONS.get((pid, algo)) == "gem-free" and detect_gem(g).found:
                continue
            res = fn(g)
            assert res.found == bool(census_of(g)[pid]), (name, algo)
            assert_sound(res, g, pid)


@pytest.mark.parametrize("pid", PATTERN_IDS)
def test_detectors_on_own_pattern_and_complement(pid):
    h = pattern_graph(pid)
    for algo, fn in DETECTORS[pid].items():
        assert fn(h).found, algo


def test_detectors_count_steps():
    g = gnp(30, 0.3, 4)
    for pid in PATTERN_IDS:
        for algo, fn in DETECTORS[pid].items():
            counter = StepCounter()
            fn(g, counter=counter)
            assert sum(counter.values()) > 0, (pid, algo)


def test_high_degree_pair_implies_co_square():
    for name, g in full_corpus():
        c = compute_closure(g).c
        trigger = any(not g.has_edge(u, v) and
                      ((g.degree[u] >= c and g.degree[v] >= 2 * c - 1) or
                       (g.degree[v] >= c and g.degree[u] >= 2 * c - 1))
                      for u, v in combinations(range(g.n), 2))
        if trigger:
            assert census_of(g)["coSquare"], name


def test_large_clique_implies_co_diamond():
    for name, g in full_corpus():
        if g.n > 30:
            continue
        c = compute_closure(g).c
        h = nx.Graph(g.edge_list())
        h.add_nodes_from(range(g.n))
        for clique in nx.find_cliques(h):
            if len(clique) < 2 * c:
                continue
            rest = [v for v in range(g.n) if v not in set(clique)]
            if any(not g.has_edge(a, b) for a, b in combinations(rest, 2)):
                assert census_of(g)["coDiamond"], name
                break
