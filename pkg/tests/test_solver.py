import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from dpcolor.cover import hard_cover, is_transversal, same_relabeling_class
from dpcolor.multigraph import build, complete, cycle
from dpcolor.solver import (
    COLORABLE,
    CRITICAL,
    H_MINIMAL,
    NONCOLORABLE_SUBGRAPH,
    UNDECIDED,
    chi_dp,
    find_transversal,
    is_dp_critical,
    is_dp_degree_colorable,
    is_dp_h_colorable,
    is_h_minimal,
    verify_lemma31,
)

from oracles import chromatic_number, cover_as_dict, dp_colorable, has_transversal, list_chromatic_number


@st.composite
def small_instances(draw, max_edges=4, max_h=2):
    n = draw(st.integers(1, 4))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    edges = []
    budget = max_edges
    for p in pairs:
        s = draw(st.integers(0, min(2, budget)))
        budget -= s
        if s:
            edges.append((*p, s))
    g = build(n, edges)
    h = [draw(st.integers(0, max_h)) for _ in range(n)]
    return g, h


@settings(max_examples=120, deadline=None)
@given(small_instances(), st.sampled_from(["search", "enumerate"]), st.booleans(), st.booleans())
def test_agrees_with_raw_enumeration(inst, engine, maximal_only, tree_normalized):
    g, h = inst
    expected = dp_colorable(g, h, maximal_only=False)
    v = is_dp_h_colorable(g, h, engine=engine, maximal_only=maximal_only,
                          tree_normalized=tree_normalized, reduce=False)
    assert v.colorable == expected
    if not expected:
        assert not has_transversal(v.bad_cover.list_sizes, cover_as_dict(v.bad_cover))


@settings(max_examples=80, deadline=None)
@given(small_instances(max_edges=6, max_h=3))
def test_peeling_does_not_change_the_answer(inst):
    g, h = inst
    a = is_dp_h_colorable(g, h, reduce=True)
    b = is_dp_h_colorable(g, h, reduce=False)
    assert a.colorable == b.colorable
    if a.colorable is False:
        assert a.bad_cover.base == g and a.bad_cover.list_sizes == tuple(h)
        assert find_transversal(a.bad_cover).colorable is False


@settings(max_examples=60, deadline=None)
@given(small_instances(max_edges=5, max_h=3), st.integers(0, 5))
def test_monotone_in_h_and_edges(inst, which):
    g, h = inst
    base = is_dp_h_colorable(g, h).colorable
    up = list(h)
    up[which % g.n] += 1
    if base:
        assert is_dp_h_colorable(g, up).colorable
    if g.edges and not base:
        u, v, _ = g.edges[which % len(g.edges)]
        assert is_dp_h_colorable(g.with_edge(u, v), h).colorable is False


def test_witness_is_a_transversal():
    c = hard_cover("even_cycle", 2)
    c2 = type(c)(c.base, (3,) * 4, c.matchings)
    v = find_transversal(c2)
    assert v.colorable and is_transversal(c2, v.witness)


class TestChi:
    @pytest.mark.parametrize("g,value", [(complete(5), 5), (cycle(4), 3), (build(4, [(0, 1), (0, 2), (0, 3)]), 2)])
    def test_values(self, g, value):
        assert chi_dp(g).value == value

    @pytest.mark.parametrize("g", [cycle(4), cycle(5), complete(3), build(4, [(0, 1), (1, 2), (2, 3), (0, 2)]),
                                   build(5, [(0, 1), (1, 2), (2, 3), (3, 4)])])
    def test_dp_dominates_list_dominates_ordinary(self, g):
        dp = chi_dp(g).value
        # list chromatic number with lists drawn from a 4-colour palette
        ell = list_chromatic_number(g, 4)
        assert dp >= ell >= chromatic_number(g)

    def test_undecided_at_budget(self):
        r = chi_dp(cycle(4, 2), max_covers=1)
        assert r.value is None and r.undecided_at is not None


class TestDegreeColourable:
    @pytest.mark.parametrize("g,colourable", [(cycle(4), False), (complete(4), False), (cycle(3, 2), False),
                                              (cycle(5), False),
                                              (build(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)]), True),
                                              (build(4, [(0, 1), (1, 2), (2, 3), (3, 0), (0, 2)]), True)])
    def test_small(self, g, colourable):
        assert is_dp_degree_colorable(g).colorable is colourable

    def test_disconnected_rejected(self):
        with pytest.raises(ValueError):
            is_dp_degree_colorable(build(3, [(0, 1)]))


class TestMinimality:
    @pytest.mark.parametrize("g", [complete(5), complete(2, 4), cycle(3, 2), cycle(4, 2)])
    def test_exceptional_graphs_are_minimal(self, g):
        assert is_h_minimal(g, 4).status == H_MINIMAL

    def test_k5_is_critical(self):
        assert is_dp_critical(complete(5), 5).status == CRITICAL

    def test_c4_is_not_5_critical(self):
        assert is_dp_critical(cycle(4), 5).status == COLORABLE

    def test_c4_is_3_critical(self):
        assert is_dp_critical(cycle(4), 3).status == CRITICAL

    def test_subgraph_certificate(self):
        g = build(5, [(0, 1), (1, 2), (2, 3), (3, 0), (3, 4)])  # C_4 with a pendant edge
        rep = is_h_minimal(g, 2)
        assert rep.status == NONCOLORABLE_SUBGRAPH
        assert rep.deleted == ("edge", 3, 4)
        assert find_transversal(rep.bad_cover).colorable is False

    def test_budget(self):
        assert is_h_minimal(cycle(4, 2), 4, max_covers=2).status == UNDECIDED


class TestLemma31:
    @pytest.mark.parametrize("family,t", [("even_cycle", 2), ("even_cycle", 3), ("clique", 3), ("clique", 4),
                                          ("odd_cycle", 2), ("odd_cycle", 1)])
    def test_desk_scale(self, family, t):
        rep = verify_lemma31(family, t)
        assert rep.passed, rep

    def test_blown_up_clique(self):
        assert verify_lemma31("clique", 3, 2).passed

    def test_budget_marks_undecided(self):
        rep = verify_lemma31("clique", 4, 1, max_covers=1)
        assert rep.undecided and not rep.passed


def test_jobs_do_not_change_the_certificate():
    g, h = cycle(4, 2), [4] * 4
    one = is_dp_h_colorable(g, h, engine="search", jobs=1)
    two = is_dp_h_colorable(g, h, engine="search", jobs=2)
    assert one.colorable is two.colorable is False
    assert one.bad_cover == two.bad_cover
    assert same_relabeling_class(one.bad_cover, two.bad_cover)
