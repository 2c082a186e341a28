import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import graphs, random_graph
from pcfcolor.constructive import (
    ConstructionOutcome,
    color_ab,
    color_chordal,
    color_clawfree,
    color_corona,
    color_cycle,
    color_hypercube,
    color_path_endpoints,
    color_skn,
    color_subdivided_forest,
    color_subdivided_matching,
    color_thread66,
    color_tree,
    color_via_total_domination,
    product_coloring,
    skn_table,
)
from pcfcolor.errors import (
    BadBase,
    BadDominatingSet,
    BadForest,
    BadMatching,
    HypothesisViolated,
    InvalidSpec,
    NotATree,
    NotChordal,
    NotClawFree,
    TooShort,
)
from pcfcolor.exact import chromatic_value, decide_k
from pcfcolor.families import (
    CHORDAL_REMARK,
    Complete,
    CompleteBipartite,
    CompleteSubdivision,
    Cycle,
    Hypercube,
    KSubdivision,
    Path,
    RandomTree,
    Star,
    generate,
)
from pcfcolor.graph import build_graph, line_graph, subdivide
from pcfcolor.structure import ab_certificate, h_edge_certificate, lexbfs_peo, total_domination_number
from pcfcolor.verify import verify


def check(out: ConstructionOutcome, g=None):
    g = g if g is not None else out.graph
    assert verify(g, out.coloring, "pcf").ok
    assert out.colors_used == len(set(out.coloring.colors)) <= out.bound
    return out


def cycle_value(n):
    return 3 if n % 3 == 0 else 5 if n == 5 else 4


def proper_of(g):
    return chromatic_value(g, "proper").witness


# trees


def test_k2_and_star():
    assert check(color_tree(generate(Path(2)))).colors_used == 2
    star = check(color_tree(generate(Star(5))))
    leaves = [star.coloring.colors[v] for v in range(1, 6)]
    assert star.colors_used == 3 and sorted(leaves.count(c) for c in set(leaves)) == [1, 4]


def test_large_random_tree():
    out = check(color_tree(generate(RandomTree(1000, 5))))
    assert out.colors_used <= 3


def test_tree_rejects_non_trees():
    with pytest.raises(NotATree):
        color_tree(generate(Cycle(4)))
    with pytest.raises(NotATree):
        color_tree(build_graph(1, []))


# cycles and paths


def test_cycle_examples():
    assert [color_cycle(n).colors_used for n in (5, 6, 7)] == [5, 3, 4]
    with pytest.raises(InvalidSpec):
        color_cycle(2)


@pytest.mark.parametrize("n", range(3, 201))
def test_cycle_colors_match_closed_form(n):
    assert check(color_cycle(n)).colors_used == cycle_value(n)


def test_path_examples():
    assert color_path_endpoints(5, 1, 1).colors == (1, 2, 4, 3, 1)
    assert color_path_endpoints(7, 1, 2).colors == (1, 2, 3, 4, 1, 3, 2)
    c = color_path_endpoints(8, 1, 1).colors
    assert c[:4] == (1, 3, 4, 1) and c[-1] == 1
    with pytest.raises(TooShort):
        color_path_endpoints(4, 1, 1)


@pytest.mark.parametrize("n", range(5, 101))
def test_path_endpoint_contract(n):
    g = generate(Path(n))
    for c1 in (1, 2, 3):
        for cn in (1, 2, 3):
            c = color_path_endpoints(n, c1, cn).colors
            assert (c[0], c[-1]) == (c1, cn)
            assert c[1] in (1, 2, 3) and c[-2] in (1, 2, 3)
            assert max(c) <= 4 and verify(g, c, "pcf").ok


# cubes and complete subdivisions


def test_hypercubes():
    q2 = check(color_hypercube(2))
    # Low half {0, 1} by parity in {1, 2}; high half {2, 3} in {3, 4}.
    assert q2.coloring.colors == (1, 2, 4, 3)
    for d in range(2, 11):
        assert check(color_hypercube(d)).colors_used <= 4


def test_skn_tables_and_general_case():
    assert skn_table(4) == {(1, 2): 4, (1, 3): 2, (1, 4): 3, (2, 3): 1, (2, 4): 1, (3, 4): 2}
    for n in range(3, 31):
        assert check(color_skn(n)).colors_used == n


@pytest.mark.parametrize("n", [3, 4, 5, 6])
def test_skn_is_optimal(n):
    g = generate(CompleteSubdivision(Complete(n)))
    assert decide_k(g, "pcf", n - 1) is None


# corona, domination, product


def test_corona_examples():
    c4 = generate(Cycle(4))
    out = check(color_corona(c4, [1, 2, 1, 2]))
    assert out.colors_used == 3
    from pcfcolor.families import parse_family

    k3k3 = generate(parse_family("product:complete:3*complete:3"))
    assert check(color_corona(k3k3, proper_of(k3k3))).colors_used == 4
    assert check(color_corona(generate(Cycle(5)), [1, 2, 1, 2, 3])).colors_used == 3
    with pytest.raises(BadBase):
        color_corona(c4, [1, 1, 2, 2])


def test_total_domination_examples():
    k2 = generate(Path(2))
    assert check(color_via_total_domination(k2, [0, 1], [1, 2])).colors_used == 2
    c6 = generate(Cycle(6))
    size, D = total_domination_number(c6)
    assert size == 4 and check(color_via_total_domination(c6, D, [1, 2] * 3)).colors_used <= 6
    star = generate(Star(4))
    out = check(color_via_total_domination(star, [0, 1], [1, 2, 2, 2, 2]))
    # Palette gamma_t + chi = 4; color 1 only lived on the center, now recolored.
    assert out.bound == 4 and max(out.coloring.colors) == 4
    with pytest.raises(BadDominatingSet):
        color_via_total_domination(c6, [0], [1, 2] * 3)


def test_product_examples():
    assert check(product_coloring(generate(Path(2)), [1, 1], [1, 2])).colors_used == 2
    for g in (generate(Cycle(5)), generate(Hypercube(3))):
        f = chromatic_value(g, "cf").witness
        p = proper_of(g)
        out = check(product_coloring(g, f, p))
        assert out.bound == max(f.colors) * max(p.colors)
    with pytest.raises(BadBase):
        product_coloring(generate(Path(3)), [1, 1, 1], [1, 2, 1])


# subdivisions


def test_subdivided_matching():
    c4 = generate(Cycle(4))
    out = check(color_subdivided_matching(c4, [(0, 1), (2, 3)], [1, 2, 1, 2]))
    assert out.colors_used == 4 and chromatic_value(out.graph, "pcf").value == 4
    k4 = generate(Complete(4))
    assert check(color_subdivided_matching(k4, [(0, 1), (2, 3)], [1, 2, 3, 4])).colors_used <= 5
    k33 = generate(CompleteBipartite(3, 3))
    assert check(color_subdivided_matching(k33, [(0, 3), (1, 4), (2, 5)], [1] * 3 + [2] * 3)).colors_used == 4
    with pytest.raises(BadMatching):
        color_subdivided_matching(c4, [(0, 1)], [1, 2, 1, 2])


def test_subdivided_forest():
    k3 = generate(Complete(3))
    out = check(color_subdivided_forest(k3, [(0, 1), (1, 2)], [], [1, 2, 3]))
    assert out.bound == 5 and out.colors_used == 5
    c4 = generate(Cycle(4))
    assert check(color_subdivided_forest(c4, [(0, 1), (2, 3)], [], [1, 2, 1, 2])).colors_used <= 3
    k4 = generate(Complete(4))
    out = check(color_subdivided_forest(k4, [(0, 1), (0, 2), (0, 3)], [(1, 2)], [1, 2, 3, 4]))
    assert out.bound == 6
    with pytest.raises(BadForest):
        color_subdivided_forest(c4, [(0, 1)], [], [1, 2, 1, 2])


def test_thread66_examples():
    assert check(color_thread66(generate(Cycle(9)))).colors_used == 3
    assert check(color_thread66(generate(KSubdivision(Complete(4), 5)))).colors_used == 4
    assert check(color_thread66(generate(KSubdivision(Star(3), 6)))).colors_used <= 4
    with pytest.raises(HypothesisViolated):
        color_thread66(generate(KSubdivision(Complete(4), 4)))


def test_thread66_random_spiders():
    rng = random.Random(8)
    for _ in range(30):
        base = generate(RandomTree(rng.randint(2, 8), rng.randint(0, 99)))
        g, _ = subdivide(base, rng.randint(5, 8))
        check(color_thread66(g))


# degenerate, claw-free, chordal


def test_ab_examples():
    c5 = generate(Cycle(5))
    assert check(color_ab(c5, ab_certificate(c5, 2, 2))).colors_used == 5
    sk5 = generate(CompleteSubdivision(Complete(5)))
    out = check(color_ab(sk5, ab_certificate(sk5, 2, 4)))
    assert out.bound == 8
    k4 = generate(Complete(4))
    assert check(color_ab(k4, h_edge_certificate(k4, 6))).bound == 8


def test_ab_distance_three_graphs():
    # Two 3-vertices far apart, joined by long threads.
    g = generate(KSubdivision(CompleteBipartite(2, 3), 2))
    cert = ab_certificate(g, 2, 2)
    assert cert
    assert check(color_ab(g, cert)).colors_used <= 5


def test_ab_rejects_foreign_certificate():
    cert = ab_certificate(generate(Cycle(5)), 2, 2)
    with pytest.raises(HypothesisViolated):
        color_ab(generate(Complete(4)), cert)


def test_clawfree():
    assert check(color_clawfree(generate(Complete(4)))).bound == 7
    assert check(color_clawfree(generate(Cycle(5)))).colors_used == 5
    with pytest.raises(NotClawFree):
        color_clawfree(generate(Star(3)))


def test_clawfree_line_graphs_of_cubic_graphs():
    rng = random.Random(4)
    done = 0
    while done < 5:
        g = random_graph(rng, 10, 0.35)
        if all(g.degree(v) <= 3 for v in range(g.n)) and g.m:
            lg = line_graph(g)
            out = check(color_clawfree(lg))
            assert out.bound == 2 * max(lg.degree(v) for v in range(lg.n)) + 1
            done += 1


def test_chordal():
    assert check(color_chordal(generate(Complete(5)))).colors_used == 5
    out = check(color_chordal(generate(CHORDAL_REMARK)))
    assert out.bound == 9
    with pytest.raises(NotChordal):
        color_chordal(generate(Cycle(4)))


def test_chordal_random_interval_graph():
    rng = random.Random(50)
    iv = [(a, a + rng.uniform(0.5, 6)) for a in (rng.uniform(0, 50) for _ in range(50))]
    g = build_graph(50, [(i, j) for i in range(50) for j in range(i + 1, 50) if iv[i][0] < iv[j][1] and iv[j][0] < iv[i][1]])
    out = check(color_chordal(g))
    assert out.bound == 2 * max(g.degree(v) for v in range(g.n)) + 1


# constructions never beat the optimum


def _applicable(g):
    outs = []
    if g.is_connected() and g.m == g.n - 1 and g.n >= 2:
        outs.append(color_tree(g))
    if lexbfs_peo(g) is not None:
        outs.append(color_chordal(g))
    try:
        outs.append(color_clawfree(g))
    except NotClawFree:
        pass
    for a, b in ((2, 2), (2, 3), (3, 3)):
        cert = ab_certificate(g, a, b)
        if cert:
            outs.append(color_ab(g, cert))
    return outs


@settings(max_examples=80)
@given(graphs(min_n=2, max_n=9))
def test_outcomes_verify_and_respect_optimum(g):
    best = None
    for out in _applicable(g):
        check(out, g)
        best = best or chromatic_value(g, "pcf").value
        assert out.colors_used >= best


@given(st.integers(3, 12))
def test_cycle_outcomes_are_optimal(n):
    assert color_cycle(n).colors_used == chromatic_value(generate(Cycle(n)), "pcf").value
