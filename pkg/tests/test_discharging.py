import json
import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from dpcolor.census import random_connected_multigraph, random_h
from dpcolor.discharging import (
    UndefinedSpecialSet,
    check_cases,
    component_sum_vs_phi,
    discharge,
    ledger_json,
    ledger_text,
    special_sets,
)
from dpcolor.multigraph import build, complete, cycle
from dpcolor.potential import params

from oracles import rho_bruteforce


def two_triangles():
    return build(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (2, 3)])


class TestSpecialSets:
    def test_two_triangles(self):
        s = special_sets(two_triangles(), [2] * 6)
        assert s.s0_star == (0, 1, 2) and s.x0_star == 2 and s.y0_star == 3

    def test_bridgeless(self):
        s = special_sets(complete(4), [3] * 4)
        assert s.s0_star == (0, 1, 2, 3) and s.x0_star is None and s.y0_star is None
        assert s.b0 == (0, 1, 2, 3)

    def test_star_undefined(self):
        with pytest.raises(UndefinedSpecialSet):
            special_sets(build(4, [(0, 1), (0, 2), (0, 3)]), [1, 1, 1, 3])

    def test_smaller_block_wins(self):
        # a 4-cycle and a triangle joined by a bridge: the triangle is smaller
        g = build(7, [(0, 1), (1, 2), (2, 3), (3, 0), (3, 4), (4, 5), (5, 6), (4, 6)])
        assert special_sets(g, [2] * 7).s0_star == (4, 5, 6)

    def test_tie_broken_by_edge_count(self):
        # two pendent blocks on 3 vertices; the one with a doubled edge has more edges
        g = build(7, [(0, 1, 2), (1, 2), (0, 2), (2, 3), (3, 4), (4, 5), (5, 6), (4, 6)])
        assert special_sets(g, [3] * 7).s0_star == (4, 5, 6)

    def test_low_set(self):
        s = special_sets(cycle(4), [2, 3, 2, 1])
        assert s.low_set == (0, 2)

    def test_disconnected_rejected(self):
        with pytest.raises(ValueError):
            special_sets(build(3, [(0, 1)]), [1, 1, 0])


class TestDischarge:
    def test_k2_4(self):
        led = discharge(complete(2, 4), [4, 4], 5)
        assert [r.final for r in led.rows] == [Fraction(-1, 2)] * 2
        assert led.total == -1 == led.rho

    def test_no_low_vertices_means_rule_three_idle(self):
        g, h = cycle(5), [4] * 5
        led = discharge(g, h, 5)
        assert led.sets.b0 == ()
        for r in led.rows:
            assert r.final == r.after_pairs == r.initial - Fraction(2 * 13 - 2, 2)

    def test_pairs_end_at_zero(self):
        led = discharge(complete(4, 2), [4] * 4, 5)
        assert all(c == 0 for _, _, c in led.pair_final)
        assert all(c == 1 - 2 * 13 for _, _, c in led.pair_initial)

    def test_undefined_propagates(self):
        with pytest.raises(UndefinedSpecialSet):
            discharge(build(3, [(0, 1), (1, 2)]), [1, 2, 1], 5)

    def test_dumps(self):
        led = discharge(two_triangles(), [2, 2, 3, 3, 2, 2], 5)
        text = ledger_text(led)
        assert "conserved True" in text
        doc = json.loads(ledger_json(led))
        assert doc["special_set"]["s0_star"] == [0, 1, 2]
        assert sum(Fraction(r["final"]) for r in doc["vertices"]) == doc["rho"]


class TestCases:
    def test_n2_vertex(self):
        # a hub of degree k = 5 with h = 4, joined to five low leaves, inside a bridgeless graph
        g = build(6, [(0, i) for i in range(1, 6)] + [(1, 2), (2, 3), (3, 4), (4, 5), (5, 1)])
        h = [4, 3, 3, 3, 3, 3]
        led = discharge(g, h, 5)
        checks = {c.vertex: c for c in check_cases(g, led)}
        assert checks[0].case == "N2" and checks[0].holds and checks[0].conclusion
        assert checks[0].bound == -6 + 1 + 5

    def test_l1_bound(self):
        led = discharge(cycle(4), [2] * 4, 5)
        for c in check_cases(cycle(4), led):
            assert c.case == "L1" and c.holds

    def test_outside_special_set_untagged(self):
        g = two_triangles()
        led = discharge(g, [2, 2, 3, 3, 2, 2], 5)
        assert {r.vertex for r in led.rows if r.case is None} == {3, 4, 5}


class TestComponents:
    def test_vacuous(self):
        g = cycle(5)
        rep = component_sum_vs_phi(g, [4] * 5, discharge(g, [4] * 5, 5))
        assert rep.vacuous and rep.ok

    def test_single_low_top_vertex(self):
        # centre of a wheel-like graph is low with h = d = 4 = k-1; the rim is not low
        g = build(5, [(0, i) for i in range(1, 5)] + [(1, 2), (2, 3), (3, 4), (4, 1)])
        h = [4, 2, 2, 2, 2]
        led = discharge(g, h, 5)
        rep = component_sum_vs_phi(g, h, led)
        (c,) = rep.components
        assert c.vertices == (0,) and c.phi == params(5).alpha * 4 - 1
        assert c.bound_holds and c.hypotheses_hold and c.strict_holds

    def test_regular_component_not_asserted(self):
        led = discharge(complete(5), [4] * 5, 5)
        (c,) = component_sum_vs_phi(complete(5), [4] * 5, led).components
        assert not c.hypotheses_hold and c.strict_holds is None and c.bound_holds


def _expected_final(g, h, k, sets):
    p = params(k)
    low, inside = set(sets.low_set), set(sets.s0_star)
    out = []
    for v in g.vertices:
        x = Fraction(rho_bruteforce(g, h, [v], k))
        for u in g.neighbors(v):
            s = g.mult(u, v)
            x -= Fraction(s * (2 * p.lam + 1) - 1, 2)
            if v in inside and u in inside and (v in low) != (u in low):
                x += p.alpha * s if u in low else -p.alpha * s
        out.append(x)
    return out


@settings(max_examples=100, deadline=None)
@given(st.integers(0, 10**6), st.sampled_from([5, 6, 7]))
def test_random_multigraphs(seed, k):
    rng = random.Random(seed)
    g = random_connected_multigraph(rng)
    h = random_h(rng, g, k)
    try:
        led = discharge(g, h, k)
    except UndefinedSpecialSet:
        return
    assert led.conserved
    assert led.rho == rho_bruteforce(g, h, g.vertices, k)
    assert [r.final for r in led.rows] == _expected_final(g, h, k, led.sets)
    for c in check_cases(g, led):
        assert c.holds and c.conclusion
    assert component_sum_vs_phi(g, h, led).ok
