import itertools
import json
import math

import networkx as nx
import pytest

from cutcones.adjacency import adjacent, is_crossing
from cutcones.core import Sense, cut_from_vertices, enumerate_cuts
from cutcones.graphs import (
    CapExceeded,
    build_graph,
    clique_number,
    crossing_count,
    degree_bounds,
    degree_formula,
    diameter,
    eccentricities,
    graph_stats,
    middle_cut,
    table_clique_number,
    verify_theorems,
)
from cutcones.io import graph_to_csv, graph_to_dot


def cut(vs, n):
    return cut_from_vertices(vs, n)


def brute_degrees(n, sense):
    cuts = enumerate_cuts(n)
    return {x: sum(1 for y in cuts if y != x and adjacent(x, y, sense)) for x in cuts}


def test_build_n4_min_degree_sequence():
    g = build_graph(4, Sense.MIN)
    assert len(g) == 7
    # pairwise count: 4 cuts with a singleton side reach all 6 others, the 3 2|2 cuts reach 4
    assert sorted(brute_degrees(4, Sense.MIN).values(), reverse=True) == [6, 6, 6, 6, 4, 4, 4]
    assert sorted((g.degree(i) for i in range(7)), reverse=True) == [6, 6, 6, 6, 4, 4, 4]


def test_build_n4_max_degrees():
    g = build_graph(4, Sense.MAX)
    by_card = {x.cardinality: g.degree(i) for i, x in enumerate(g.vertices)}
    assert by_card == {1: 3, 2: 6}


@pytest.mark.parametrize("sense", list(Sense))
def test_build_n3_is_triangle(sense):
    g = build_graph(3, sense)
    assert len(g) == 3 and g.edge_count == 3 and diameter(g) == 1


def test_build_graph_symmetric_irreflexive_and_matches_criterion():
    for n in range(2, 8):
        for s in Sense:
            g = build_graph(n, s)
            assert len(g) == 2 ** (n - 1) - 1
            for i, x in enumerate(g.vertices):
                assert not g.has_edge(i, i)
                for j, y in enumerate(g.vertices):
                    assert g.has_edge(i, j) == g.has_edge(j, i)
                    if i != j:
                        assert g.has_edge(i, j) == adjacent(x, y, s).adjacent


def test_build_graph_cap():
    with pytest.raises(CapExceeded):
        build_graph(9, Sense.MIN, cap=8)


@pytest.mark.parametrize("n, k, sense, expected", [
    (6, 2, Sense.MIN, 16),
    (6, 1, Sense.MAX, 5),
    (6, 3, Sense.MAX, 24),
])
def test_degree_formula_examples(n, k, sense, expected):
    assert degree_formula(n, k, sense) == expected
    g = build_graph(n, sense)
    assert {g.degree(i) for i, x in enumerate(g.vertices) if x.cardinality == k} == {expected}


def test_degree_formula_range():
    with pytest.raises(ValueError):
        degree_formula(6, 4, Sense.MIN)
    with pytest.raises(ValueError):
        crossing_count(6, 0)


@pytest.mark.parametrize("n, k, expected", [(6, 1, 0), (6, 2, 14), (6, 3, 18)])
def test_crossing_count_examples(n, k, expected):
    assert crossing_count(n, k) == expected
    x = next(c for c in enumerate_cuts(n) if c.cardinality == k)
    assert sum(1 for y in enumerate_cuts(n) if is_crossing(x, y)) == expected


def test_degree_and_crossing_formulas_up_to_8():
    for n in range(3, 9):
        for s in Sense:
            g = build_graph(n, s)
            lo, hi = degree_bounds(n, s)
            for i, x in enumerate(g.vertices):
                assert g.degree(i) == degree_formula(n, x.cardinality, s)
                assert lo <= g.degree(i) <= hi
        for x in enumerate_cuts(n):
            assert sum(1 for y in enumerate_cuts(n) if is_crossing(x, y)) == \
                crossing_count(n, x.cardinality)


def test_diameter_and_eccentricities():
    assert diameter(build_graph(5, Sense.MIN)) == 2
    g = build_graph(6, Sense.MAX)
    assert diameter(g) == 2 and set(eccentricities(g)) == {2}
    for n in range(4, 9):
        for s in Sense:
            g = build_graph(n, s)
            ecc = eccentricities(g)
            assert max(ecc) == 2 and set(ecc) <= {1, 2}


def test_eccentricity_one_vertices():
    # min: exactly the cuts with a singleton side; max at n=4: the 2|2 cuts
    g = build_graph(6, Sense.MIN)
    assert [x.cardinality == 1 for x in g.vertices] == [e == 1 for e in eccentricities(g)]
    g = build_graph(4, Sense.MAX)
    assert [x.cardinality == 2 for x in g.vertices] == [e == 1 for e in eccentricities(g)]


def test_diameter_matches_networkx():
    for n in range(3, 7):
        for s in Sense:
            g = build_graph(n, s)
            G = nx.Graph(list(g.edges()))
            assert diameter(g) == nx.diameter(G)
            ecc = nx.eccentricity(G)
            assert eccentricities(g) == [ecc[i] for i in range(len(g))]


@pytest.mark.parametrize("n, sense, expected", [
    (5, Sense.MIN, 7),
    (6, Sense.MAX, 15),
    (7, Sense.MAX, 35),
])
def test_clique_examples(n, sense, expected):
    assert clique_number(build_graph(n, sense)) == expected


def test_clique_number_matches_networkx():
    for n in range(3, 8):
        for s in Sense:
            g = build_graph(n, s)
            G = nx.Graph()
            G.add_nodes_from(range(len(g)))
            G.add_edges_from(g.edges())
            assert clique_number(g) == nx.max_weight_clique(G, weight=None)[1]


def test_clique_numbers_match_literature_formulas():
    for n in range(4, 9):
        for s in Sense:
            assert clique_number(build_graph(n, s)) == table_clique_number(n, s)
    assert [table_clique_number(n, Sense.MAX) for n in range(4, 9)] == [4, 10, 15, 35, 56]
    assert table_clique_number(8, Sense.MAX) == math.comb(8, 3)


def test_clique_cap():
    with pytest.raises(CapExceeded):
        clique_number(build_graph(6, Sense.MIN), cap=5)


def test_middle_cut_examples():
    z = middle_cut(cut([1, 2], 6), cut([1, 2, 3, 4], 6))
    assert z == cut([0, 1, 5], 6) == cut([2, 3, 4], 6)
    z = middle_cut(cut([1], 5), cut([1, 2, 3], 5))
    assert z == cut([0, 1], 5)
    z = middle_cut(cut([1], 5), cut([0, 1, 3, 4], 5))
    assert z == cut([1, 2], 5)
    for x, y in [(cut([1, 2], 6), cut([1, 2, 3, 4], 6)), (cut([1], 5), cut([1, 2, 3], 5)),
                 (cut([1], 5), cut([0, 1, 3, 4], 5))]:
        z = middle_cut(x, y)
        assert adjacent(x, z, Sense.MAX) and adjacent(z, y, Sense.MAX)


def test_middle_cut_refuses_adjacent_pair():
    with pytest.raises(ValueError):
        middle_cut(cut([1], 5), cut([1, 2], 5))


def test_middle_cut_exhaustive_up_to_7():
    for n in range(4, 8):
        for x, y in itertools.combinations(enumerate_cuts(n), 2):
            if not adjacent(x, y, Sense.MAX):
                z = middle_cut(x, y)
                assert z not in (x, y)
                assert adjacent(x, z, Sense.MAX) and adjacent(y, z, Sense.MAX)


def test_stats_json_document():
    stats = graph_stats(build_graph(5, Sense.MIN))
    doc = json.loads(stats.to_json())
    assert set(doc) == {"n", "sense", "vertexCount", "edgeCount", "degreeByCardinality",
                        "diameter", "cliqueNumber", "checks"}
    assert doc["vertexCount"] == 15 and doc["diameter"] == 2 and doc["cliqueNumber"] == 7
    assert doc["degreeByCardinality"] == {"1": [14], "2": [8]}
    assert all(set(c) == {"claim", "expected", "actual", "pass"} for c in doc["checks"])
    assert all(c["pass"] for c in doc["checks"])


def test_dot_and_csv_exports():
    g = build_graph(3, Sense.MIN)
    dot = graph_to_dot(g)
    assert dot.startswith("graph cone_min_K3 {")
    assert 'v0 [label="{1}"]' in dot and dot.count(" -- ") == 3
    rows = graph_to_csv(g).splitlines()
    assert rows[0] == 'cut,{1},{2},"{1,2}"'
    assert rows[1] == "{1},0,1,1"


def test_verify_theorems_small():
    report = verify_theorems(4)
    assert report.passed
    claims = " ".join(c.claim for c in report.checks)
    assert "LP oracle" in claims and "1-skeleton" in claims


def test_verify_theorems_skips_lp_beyond_cap():
    report = verify_theorems(8, cap_lp=6)
    assert report.passed
    assert not any("LP oracle" in c.claim for c in report.checks)
    assert any("LP oracle equivalence skipped" in m for m in report.notices)
    assert "all checks passed" in report.to_text()
