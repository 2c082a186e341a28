import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import graphs
from oracles import ok_brute
from pcfcolor.errors import BadColor, PartialColoring
from pcfcolor.families import Cycle, Path, generate
from pcfcolor.graph import build_graph
from pcfcolor.verify import Coloring, Variant, verify, verify_partial


def test_c5_rainbow_is_pcf():
    assert verify(generate(Cycle(5)), [1, 2, 3, 4, 5]).ok


def test_c5_with_four_colors_fails():
    r = verify(generate(Cycle(5)), [1, 2, 3, 1, 4])
    # 0 sees {2, 4}; 4 sees {1, 1}: the only failure is at vertex 4.
    assert not r.ok
    assert [v for v, _ in r.cf_failures] == [4]


def test_report_lists_every_violation():
    g = generate(Path(3))
    r = verify(g, [1, 1, 1], "pcf")
    assert r.proper_violations == [(0, 1), (1, 2)]
    assert [v for v, _ in r.cf_failures] == [1]


def test_cf_ignores_properness():
    g = generate(Path(3))
    assert verify(g, [1, 1, 2], Variant.CF).ok
    assert not verify(g, [1, 1, 2], Variant.PCF).ok


def test_odd_vs_pcf():
    # A 4-cycle colored 1,2,1,2: every vertex sees one color twice.
    g = generate(Cycle(4))
    assert verify(g, [1, 2, 1, 2], Variant.PROPER).ok
    assert not verify(g, [1, 2, 1, 2], Variant.ODD).ok


def test_isolated_vertices_are_exempt():
    g = build_graph(3, [(0, 1)])
    assert verify(g, [1, 2, 1]).ok


def test_partial_and_range_errors():
    g = generate(Path(3))
    with pytest.raises(PartialColoring):
        verify(g, [1, 0, 2])
    with pytest.raises(PartialColoring):
        verify(g, [1, 2])
    with pytest.raises(BadColor):
        verify(g, Coloring((1, 2, 5), 3))


def test_verify_partial_treats_unassigned_as_absent():
    g = generate(Path(4))
    assert verify_partial(g, [1, 2, 0, 0]).ok
    assert not verify_partial(g, [1, 1, 0, 0]).ok


def test_variant_parse():
    assert Variant.parse("PCF") is Variant.PCF
    with pytest.raises(ValueError):
        Variant.parse("greedy")


@given(graphs(max_n=6), st.data())
def test_verify_agrees_with_brute_oracle(g, data):
    colors = data.draw(st.lists(st.integers(1, 4), min_size=g.n, max_size=g.n))
    for variant in ("proper", "odd", "cf", "pcf"):
        assert verify(g, colors, variant).ok == ok_brute(g, colors, variant)
