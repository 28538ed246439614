"""Smoke tests for the python bindings."""

import pytest

import pcg


def test_graph_basics():
    g = pcg.Graph.from_edges(4, [(0, 1), (1, 2), (2, 3)])
    assert g.n == 4
    assert g.m == 3
    assert g.neighbors(1) == [0, 2]
    assert g.adjacent(2, 3)
    assert pcg.diameter(g) == 3

    d = pcg.distances(g)
    assert d[0][3] == 3
    assert pcg.distances(pcg.Graph.from_edges(4, [(0, 1), (2, 3)]))[0][2] == pcg.UNREACHABLE


def test_generators_and_formulas():
    k5 = pcg.gen_complete(5)
    assert k5.graph.n == 5
    assert pcg.formula_chi(k5) == 5
    assert pcg.formula_gap(k5) == 1

    f3 = pcg.gen_friendship(3)
    assert pcg.formula_chi(f3) == 5
    assert pcg.formula_gap(f3) == 3

    cat = pcg.gen_caterpillar([2, 0, 3])
    assert cat.graph.n == 8
    assert cat.spine == [0, 1, 2]
    assert pcg.compute_ct(cat) == 0


def test_solver():
    assert pcg.chi_p(pcg.gen_complete(5).graph).chi == 5
    assert pcg.chi_p(pcg.gen_cycle(7).graph).chi == 4

    res = pcg.chi_p(pcg.gen_caterpillar([2, 2, 2]).graph)
    assert res.chi == 4
    assert not res.exhausted
    assert pcg.verify_coloring(pcg.gen_caterpillar([2, 2, 2]).graph, res.witness.colors) == []

    assert pcg.brute_force_chi(pcg.gen_path(5).graph) == 3
    with pytest.raises(ValueError):
        pcg.brute_force_chi(pcg.gen_path(10).graph)

    status, colors, nodes = pcg.decide_k(pcg.gen_path(4).graph, 2)
    assert status == "infeasible"


def test_gap():
    rep = pcg.gap_report(pcg.gen_friendship(3).graph)
    assert rep.chi == 5
    assert rep.mu == 3
    assert rep.critical

    assert pcg.mu_p(pcg.gen_star(4).graph) == 1
    assert not pcg.is_vertex_critical(pcg.gen_path(6).graph)

    spine_rep = pcg.gap_report(
        pcg.gen_caterpillar([2, 2, 2]).graph, scope="spine", spine=[0, 1, 2]
    )
    assert spine_rep.mu == 2


def test_patterns():
    p = pcg.color_path_pattern(8)
    assert p.coloring.colors == [1, 2, 1, 3, 1, 2, 1, 3]
    assert pcg.verify_coloring(pcg.gen_path(8).graph, p.coloring.colors) == []

    cor = pcg.corona_k1(pcg.gen_caterpillar([1, 0, 0, 1]))
    pat = pcg.color_corona_caterpillar(cor)
    assert pat.claimed_max == 7
    assert pcg.verify_coloring(cor.graph, pat.coloring.colors) == []

    fx = pcg.gap1_fixture(7)
    assert fx.instance.graph.n == 245
    assert fx.claimed_chi == 7
    assert fx.claimed_gap == 1


def test_enumeration():
    assert len(pcg.enumerate_caterpillars(3)) == 3
    assert len(pcg.enumerate_caterpillars(6)) == 14  # 1+1+1+2+3+6
    assert len(pcg.enumerate_spiders(3, 3)) == 19
    lobsters = pcg.enumerate_lobsters(7, 1000)
    assert len(lobsters) == 25  # 1+1+1+2+3+6+11: every tree this small

    cert = pcg.tree_certificate(pcg.gen_path(4).graph)
    assert cert == pcg.tree_certificate(pcg.gen_caterpillar([1, 1]).graph)


def test_sweep():
    lim = pcg.SweepLimits()
    lim.caterpillar_max_n = 8
    rep = pcg.run_sweep("caterpillar-gap", lim)
    assert rep.passed
    assert rep.instances == 44  # canonical caterpillars with n <= 8
    assert int(rep.stats["mu2_witnesses"]) > 0

    with pytest.raises(ValueError):
        pcg.run_sweep("no-such-claim", lim)


def test_graph_text_round_trip():
    g = pcg.gen_windmill(4, 2).graph
    text = pcg.write_graph(g)
    assert text.startswith("p pcg 7 ")
    assert pcg.read_graph(text) == g


def test_budget():
    res = pcg.chi_p(pcg.gen_caterpillar([3, 3, 3, 3]).graph, node_limit=2)
    assert res.exhausted
    assert res.chi >= 4
