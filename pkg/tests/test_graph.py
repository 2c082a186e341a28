import math
from fractions import Fraction

import networkx as nx
import pytest
from hypothesis import given

from conftest import graphs
from pcfcolor.errors import InvalidEdge, InvalidSpec
from pcfcolor.families import (
    Bouquet,
    Complete,
    CompleteBipartite,
    Corona,
    Cycle,
    FChain,
    Hypercube,
    KSubdivision,
    Path,
    RandomTree,
    Star,
    generate,
    parse_family,
)
from pcfcolor.graph import (
    build_graph,
    cartesian_product,
    degeneracy,
    girth,
    is_valid,
    line_graph,
    stats,
    subdivide,
)


def to_nx(g):
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edge_list)
    return h


def test_build_graph_dedups_and_sorts():
    g = build_graph(3, [(1, 0), (0, 1), (2, 1)])
    assert g.m == 2
    assert g.adj == ((1,), (0, 2), (1,))
    assert is_valid(g)


@pytest.mark.parametrize("edges", [[(0, 0)], [(0, 3)], [(-1, 1)]])
def test_build_graph_rejects_bad_edges(edges):
    with pytest.raises(InvalidEdge):
        build_graph(3, edges)


def test_strict_mode_rejects_duplicates():
    with pytest.raises(InvalidEdge):
        build_graph(2, [(0, 1), (1, 0)], strict=True)


def test_stats_of_c5():
    s = stats(generate(Cycle(5)))
    assert (s.max_degree, s.min_degree, s.girth, s.degeneracy, s.connected) == (2, 2, 5, 2, True)
    assert s.mad == 2


def test_stats_of_empty_and_forest():
    s = stats(build_graph(0, []))
    assert s.max_degree == 0 and s.girth == math.inf and s.mad == 0
    assert stats(generate(Path(4))).girth == math.inf


def test_subdivide_numbering():
    g, chains = subdivide(generate(Complete(3)), 1)
    assert g.n == 6 and g.m == 6
    assert chains == {(0, 1): [3], (0, 2): [4], (1, 2): [5]}
    g2, chains2 = subdivide(generate(Path(3)), {(0, 1): 2})
    assert chains2[(0, 1)] == [3, 4] and chains2[(1, 2)] == []
    assert g2.has_edge(0, 3) and g2.has_edge(3, 4) and g2.has_edge(4, 1)


def test_families_match_networkx():
    assert nx.is_isomorphic(to_nx(generate(Hypercube(3))), nx.hypercube_graph(3))
    assert nx.is_isomorphic(to_nx(generate(CompleteBipartite(2, 3))), nx.complete_bipartite_graph(2, 3))
    assert nx.is_isomorphic(to_nx(generate(Star(4))), nx.star_graph(4))
    prod = generate(parse_family("product:complete:3*complete:3"))
    ref = nx.cartesian_product(nx.complete_graph(3), nx.complete_graph(3))
    assert nx.is_isomorphic(to_nx(prod), ref)
    cor = generate(parse_family("corona:product:complete:3*complete:3"))
    assert (cor.n, cor.m) == (18, 27)


def test_special_families():
    f2 = generate(FChain(2))
    assert (f2.n, f2.m) == (9, 10)
    b = generate(Bouquet(2, 1))
    assert (b.n, b.m, b.degree(0)) == (9, 10, 4)
    cor = generate(Corona(Cycle(4)))
    assert cor.n == 8 and all(cor.degree(4 + v) == 1 for v in range(4))
    k = generate(KSubdivision(Complete(4), 5))
    assert k.n == 4 + 6 * 5 and girth(k) == 18


def test_random_tree_is_tree_and_seeded():
    t = generate(RandomTree(12, 3))
    assert t.m == 11 and t.is_connected()
    assert t == generate(RandomTree(12, 3))


@pytest.mark.parametrize("text", ["cycle:2", "wheel:5", "ksub:x:complete:3", "path:", "cycle:5*cycle:3", "product:cycle:3"])
def test_bad_family_specs(text):
    with pytest.raises(InvalidSpec):
        generate(parse_family(text))


@given(graphs(max_n=9))
def test_girth_and_degeneracy_match_networkx(g):
    h = to_nx(g)
    expected = nx.girth(h)
    assert girth(g) == expected
    core = max(nx.core_number(h).values(), default=0)
    assert degeneracy(g) == core


@given(graphs(max_n=7))
def test_line_graph_matches_networkx(g):
    assert nx.is_isomorphic(to_nx(line_graph(g)), nx.line_graph(to_nx(g)))


@given(graphs(max_n=5), graphs(max_n=4))
def test_product_counts(a, b):
    p = cartesian_product(a, b)
    assert p.n == a.n * b.n
    assert p.m == a.m * b.n + b.m * a.n


@given(graphs(max_n=8))
def test_stats_invariants(g):
    s = stats(g)
    assert s.min_degree <= s.max_degree
    assert s.degeneracy <= s.max_degree
    if g.n:
        assert s.mad >= Fraction(2 * g.m, g.n)
        assert s.max_degree < g.n
    if s.girth != math.inf:
        assert s.girth >= 3
