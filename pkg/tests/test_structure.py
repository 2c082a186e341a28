import random
from fractions import Fraction

import networkx as nx
import pytest
from hypothesis import given

from conftest import graphs, random_graph
from oracles import brute_claw_free, brute_cut_vertices, brute_gamma_t, brute_mad
from pcfcolor.errors import HypothesisViolated, NotConnected
from pcfcolor.families import (
    CHORDAL_REMARK,
    Bouquet,
    Complete,
    CompleteSubdivision,
    Cycle,
    FChain,
    KSubdivision,
    Path,
    Star,
    generate,
)
from pcfcolor.graph import build_graph
from pcfcolor.structure import (
    RemoveEdgePair,
    RemoveLowVertex,
    ab_certificate,
    big_vertex_distances,
    blocks,
    degree_two_runs,
    find_claw,
    find_thread,
    h_edge_certificate,
    is_claw_free,
    is_in_F,
    is_peo,
    is_thread,
    is_total_dominating,
    lexbfs_peo,
    mad,
    replay,
    thread_incidence_matching,
    total_domination_number,
)
from pcfcolor.structure.threads import bipartite_matching


def to_nx(g):
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edge_list)
    return h


# threads


def test_find_thread_on_path():
    t = find_thread(generate(Path(6)), 4)
    assert t.endpoints == (0, 5) and t.internal == (1, 2, 3, 4)
    assert is_thread(generate(Path(6)), t)


def test_thread_in_sk4_and_none_in_k4():
    sk4 = generate(CompleteSubdivision(Complete(4)))
    assert find_thread(sk4, 1) is not None
    assert find_thread(sk4, 2) is None
    assert find_thread(generate(Complete(4)), 1) is None


def test_cycle_components_are_reported_separately():
    runs, cycles = degree_two_runs(generate(Cycle(6)))
    assert runs == [] and len(cycles) == 1
    assert cycles[0][0] == 0 and sorted(cycles[0]) == list(range(6))


def test_big_vertex_distances_and_matching():
    g = generate(KSubdivision(Complete(4), 5))
    big, d = big_vertex_distances(g)
    assert big == frozenset(range(4)) and d == 6
    walks = thread_incidence_matching(g)
    assert sorted(walks) == [0, 1, 2, 3]
    used = [w for walk in walks.values() for w in walk]
    assert len(used) == len(set(used))
    assert all(len(walk) == 6 for walk in walks.values())


def test_matching_rejects_bad_inputs():
    with pytest.raises(HypothesisViolated):
        thread_incidence_matching(generate(Cycle(7)))
    with pytest.raises(HypothesisViolated):
        thread_incidence_matching(generate(KSubdivision(Complete(4), 4)))


def test_bipartite_matching_is_maximum():
    rng = random.Random(3)
    for _ in range(50):
        left = list(range(6))
        adj = {a: sorted(rng.sample(range(10, 16), rng.randint(0, 3))) for a in left}
        ours = bipartite_matching(left, adj)
        h = nx.Graph([(a, b) for a in left for b in adj[a]])
        h.add_nodes_from(left)
        ref = nx.bipartite.maximum_matching(h, top_nodes=left)
        assert len(ours) == len(ref) // 2
        assert all(b in adj[a] for a, b in ours.items())


# certificates


def test_c5_certificate():
    cert = ab_certificate(generate(Cycle(5)), 2, 2)
    assert cert and cert.bound == 5
    kinds = [type(s) for s in cert.steps]
    assert kinds == [RemoveEdgePair, RemoveLowVertex, RemoveLowVertex, RemoveLowVertex]


def test_k4_has_no_22_certificate():
    cert = ab_certificate(generate(Complete(4)), 2, 2)
    assert not cert and cert.residual == frozenset(range(4))


def test_sk5_certificate_replays():
    g = generate(CompleteSubdivision(Complete(5)))
    cert = ab_certificate(g, 2, 4)
    assert cert and replay(g, cert) and cert.bound == 8


def test_certificate_parameter_checks():
    with pytest.raises(ValueError):
        ab_certificate(generate(Cycle(5)), 3, 2)
    with pytest.raises(ValueError):
        h_edge_certificate(generate(Cycle(5)), 3)


def test_h_edge_bound():
    cert = h_edge_certificate(generate(Complete(4)), 6)
    assert cert and cert.bound == 8


def _brute_ab(g, a, b):
    # Hereditary definition checked on every induced subgraph.
    from itertools import combinations

    for r in range(1, g.n + 1):
        for sub in combinations(range(g.n), r):
            h, _ = g.induced(sub)
            if any(h.degree(v) <= 1 for v in range(h.n)):
                continue
            if not any(
                (h.degree(u) <= a and h.degree(v) <= b) or (h.degree(v) <= a and h.degree(u) <= b)
                for u, v in h.edge_list
            ):
                return False
    return True


@given(graphs(max_n=7))
def test_ab_certificate_vs_definition(g):
    # The hereditary property forces greedy success; the converse can fail,
    # but a successful elimination is all the coloring argument consumes.
    for a, b in ((2, 2), (2, 3), (3, 3)):
        cert = ab_certificate(g, a, b)
        if _brute_ab(g, a, b):
            assert cert
        if cert:
            assert replay(g, cert)
        else:
            h, _ = g.induced(cert.residual)
            assert all(h.degree(v) >= 2 for v in range(h.n))
            assert not any(cert.edge_ok(*sorted((h.degree(u), h.degree(v)))) for u, v in h.edge_list)


def test_greedy_success_without_hereditary_property():
    g = build_graph(6, [(0, 4), (0, 5), (1, 4), (1, 5), (2, 3), (2, 5), (3, 4), (3, 5), (4, 5)])
    cert = ab_certificate(g, 2, 3)
    assert cert and replay(g, cert)
    # Induced on {0, 1, 3, 4, 5} the degrees are 2, 2, 2, 4, 4 and no edge qualifies.
    assert not _brute_ab(g, 2, 3)
    h, _ = g.induced([0, 1, 3, 4, 5])
    assert not ab_certificate(h, 2, 3)


# classes


def test_claws():
    assert find_claw(generate(Star(3)))[0] == 0
    assert find_claw(generate(Complete(4))) is None
    assert is_claw_free(generate(Cycle(4)))


def test_chordal_recognition():
    assert lexbfs_peo(generate(Cycle(4))) is None
    peo = lexbfs_peo(generate(CHORDAL_REMARK))
    assert peo is not None and is_peo(generate(CHORDAL_REMARK), peo)


@given(graphs(max_n=8))
def test_chordality_and_claws_match_networkx(g):
    assert (lexbfs_peo(g) is not None) == nx.is_chordal(to_nx(g))
    assert is_claw_free(g) == brute_claw_free(g)


# blocks and F


def test_fchain_blocks():
    for t, cuts in ((1, set()), (2, {4}), (3, {4, 8})):
        bd = blocks(generate(FChain(t)))
        assert len(bd.blocks) == t and bd.cut_vertices == cuts
        assert is_in_F(generate(FChain(t)))
    assert not is_in_F(generate(Bouquet(2, 2)))
    assert not is_in_F(generate(Cycle(6)))


def test_is_in_F_needs_connectivity():
    with pytest.raises(NotConnected):
        is_in_F(build_graph(10, [(i, (i + 1) % 5) for i in range(5)] + [(5 + i, 5 + (i + 1) % 5) for i in range(5)]))


@given(graphs(max_n=9))
def test_blocks_match_networkx(g):
    bd = blocks(g)
    ref = {tuple(sorted(c)) for c in nx.biconnected_components(to_nx(g))}
    assert set(bd.blocks) == ref
    assert bd.cut_vertices == brute_cut_vertices(g)


# density


@pytest.mark.parametrize(
    "g, expected",
    [
        (generate(Path(4)), Fraction(3, 2)),
        (generate(Cycle(7)), Fraction(2)),
        (generate(Complete(4)), Fraction(3)),
        (generate(FChain(2)), Fraction(20, 9)),
    ],
)
def test_mad_values(g, expected):
    assert mad(g) == expected


def test_mad_against_oracle_on_random_graphs():
    rng = random.Random(11)
    for _ in range(120):
        g = random_graph(rng, rng.randint(1, 9), rng.random() * 0.7)
        assert mad(g) == brute_mad(g)


# domination


def test_total_domination_examples():
    assert total_domination_number(generate(Complete(2)))[0] == 2
    assert total_domination_number(generate(Star(4)))[0] == 2
    assert total_domination_number(generate(Cycle(6)))[0] == 4


@given(graphs(min_n=2, max_n=8))
def test_total_domination_matches_oracle(g):
    if any(g.degree(v) == 0 for v in range(g.n)):
        return
    size, D = total_domination_number(g)
    assert size == brute_gamma_t(g) == len(D)
    assert is_total_dominating(g, D)
