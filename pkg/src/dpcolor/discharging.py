"""Charge redistribution over a multigraph with list sizes h.

Rules:
  1. vertex v starts with rho(v); a pair joined by s >= 1 edges starts with 1 - s(2*lam+1);
  2. the pair takes (s(2*lam+1) - 1)/2 from each endpoint, leaving it at 0;
  3. inside the special set S, every non-low vertex takes alpha along each edge
     to a low vertex (h = d).
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .multigraph import Multigraph, edge_blocks
from .potential import PotentialParams, params, phi, rho, rho_vertex


class UndefinedSpecialSet(ValueError):
    """Every pendent edge-block is a single cut edge."""


@dataclass(frozen=True)
class SpecialSets:
    s0_star: tuple[int, ...]
    x0_star: int | None
    y0_star: int | None
    low_set: tuple[int, ...]
    b0: tuple[int, ...]


def special_sets(g: Multigraph, h: Sequence[int]) -> SpecialSets:
    if g.n == 0 or not g.is_connected():
        raise ValueError("special sets need a connected, nonempty multigraph")
    low = tuple(v for v in g.vertices if h[v] == g.degree(v))
    dec = edge_blocks(g)
    if not dec.cut_edges:
        s0, x0, y0 = tuple(g.vertices), None, None
    else:
        cands = [b for b in dec.edge_blocks if b.pendent and not b.is_cut_edge]
        if not cands:
            raise UndefinedSpecialSet("every pendent edge-block is K_2; the special set is undefined")

        def size(b):
            inner = g.induced(b.vertices)[0]
            return (len(b.vertices), inner.num_edges, b.vertices)

        best = min(cands, key=size)
        s0 = best.vertices
        x0, y0 = best.attachment
    inside = set(s0)
    return SpecialSets(s0, x0, y0, low, tuple(v for v in low if v in inside))


@dataclass(frozen=True)
class ChargeRow:
    vertex: int
    h: int
    d: int
    initial: int
    after_pairs: Fraction
    final: Fraction
    case: str | None = None


@dataclass(frozen=True)
class ChargeLedger:
    k: int
    rows: tuple[ChargeRow, ...]
    pair_initial: tuple[tuple[int, int, int], ...]  # (u, v, initial charge)
    pair_final: tuple[tuple[int, int, int], ...]
    sets: SpecialSets
    rho: int

    @property
    def total(self) -> Fraction:
        return sum((r.final for r in self.rows), Fraction(0)) + sum(c for _, _, c in self.pair_final)

    @property
    def conserved(self) -> bool:
        return self.total == self.rho

    def final(self, v: int) -> Fraction:
        return self.rows[v].final


def discharge(g: Multigraph, h: Sequence[int], k: int, sets: SpecialSets | None = None) -> ChargeLedger:
    p = params(k)
    if sets is None:
        sets = special_sets(g, h)
    two_lam = 2 * p.lam + 1
    initial = [rho_vertex(p, h[v]) for v in g.vertices]
    charge = [Fraction(c) for c in initial]
    pair_charge = {}
    for u, v, s in g.edges:
        pair_charge[(u, v)] = Fraction(1 - s * two_lam)
        give = Fraction(s * two_lam - 1, 2)
        charge[u] -= give
        charge[v] -= give
        pair_charge[(u, v)] += 2 * give
    after = list(charge)
    inside = set(sets.s0_star)
    low = set(sets.low_set)
    for u, v, s in g.edges:
        if u in inside and v in inside and (u in low) != (v in low):
            taker, giver = (v, u) if u in low else (u, v)
            charge[taker] += p.alpha * s
            charge[giver] -= p.alpha * s
    rows = tuple(
        ChargeRow(v, h[v], g.degree(v), initial[v], after[v], charge[v], vertex_case(g, h, v, sets, p))
        for v in g.vertices
    )
    return ChargeLedger(
        k,
        rows,
        tuple((u, v, 1 - s * two_lam) for u, v, s in g.edges),
        tuple((u, v, int(pair_charge[(u, v)])) for u, v, _ in g.edges),
        sets,
        rho(g, h, p),
    )


def vertex_case(g: Multigraph, h: Sequence[int], v: int, sets: SpecialSets, p: PotentialParams) -> str | None:
    if v not in sets.s0_star:
        return None
    d = g.degree(v)
    if h[v] == d:
        return "L1" if h[v] <= p.k - 2 else "L2"
    if d < h[v] + 1:
        return None
    if d <= p.k - 1:
        return "N1"
    return "N2" if d == p.k else "N3"


# --- case bounds ----------------------------------------------------------------

@dataclass(frozen=True)
class CaseCheck:
    vertex: int
    case: str
    final: Fraction
    bound: Fraction
    holds: bool
    conclusion: bool  # the bound's closing inequality (< -1 or <= 0); True for L cases


def check_cases(g: Multigraph, ledger: ChargeLedger) -> list[CaseCheck]:
    p = params(ledger.k)
    k, lam, a = p.k, p.lam, p.alpha
    sets = ledger.sets
    inside = set(sets.s0_star)
    b0 = set(sets.b0)
    out = []
    for row in ledger.rows:
        if row.case is None:
            continue
        v, d = row.vertex, row.d
        if row.case == "N1":
            bound = lam * (row.h - d) - 1 + a * d
            closing = -lam - 1 + a * d
            conclusion = bound <= closing < -1
        elif row.case == "N2":
            bound = -lam + 1 + a * k
            conclusion = bound <= 0
        elif row.case == "N3":
            bound = (k - 1) * lam + 1 - d * lam + a * d
            conclusion = bound <= (-lam + 1 + a * k) - lam + a < -1
        else:
            dt = g.simple_degree(v)
            d_star = sum(g.mult(v, u) for u in g.neighbors(v) if u in inside)
            d_b0 = sum(g.mult(v, u) for u in g.neighbors(v) if u in b0)
            base = -1 if row.case == "L1" else 1
            bound = base - Fraction(d - dt, 2) - a * (d_star - d_b0)
            conclusion = True
        out.append(CaseCheck(v, row.case, row.final, Fraction(bound), row.final <= bound, conclusion))
    return out


@dataclass(frozen=True)
class ComponentCheck:
    vertices: tuple[int, ...]
    charge_sum: Fraction
    phi: Fraction
    hypotheses_hold: bool
    bound_holds: bool  # sum <= -phi + alpha
    strict_holds: bool | None  # sum < -1, asserted only under the hypotheses


@dataclass(frozen=True)
class ComponentReport:
    vacuous: bool
    components: tuple[ComponentCheck, ...]

    @property
    def ok(self) -> bool:
        return all(c.bound_holds and c.strict_holds is not False for c in self.components)


def component_sum_vs_phi(g: Multigraph, h: Sequence[int], ledger: ChargeLedger) -> ComponentReport:
    p = params(ledger.k)
    b0 = ledger.sets.b0
    if not b0:
        return ComponentReport(True, ())
    sub, back = g.induced(b0)
    checks = []
    for comp in sub.components():
        t, back2 = sub.induced(comp)
        verts = tuple(sorted(back[back2[i]] for i in range(t.n)))
        ht = [h[back[back2[i]]] for i in range(t.n)]
        res = phi(t, ht, p)
        total = sum((ledger.final(v) for v in verts), Fraction(0))
        ok = total <= -res.value + p.alpha
        strict = (total < -1) if res.hypotheses_hold else None
        checks.append(ComponentCheck(verts, total, res.value, res.hypotheses_hold, ok, strict))
    return ComponentReport(False, tuple(checks))


# --- dumps ----------------------------------------------------------------------

def ledger_text(ledger: ChargeLedger) -> str:
    head = ("v", "h", "d", "case", "initial", "after_pairs", "final")
    rows = [head] + [
        (str(r.vertex), str(r.h), str(r.d), r.case or "-", str(r.initial), str(r.after_pairs), str(r.final))
        for r in ledger.rows
    ]
    widths = [max(len(r[j]) for r in rows) for j in range(len(head))]
    lines = ["  ".join(c.rjust(w) for c, w in zip(r, widths)) for r in rows]
    lines.append(f"total {ledger.total}  rho {ledger.rho}  conserved {ledger.conserved}")
    return "\n".join(lines) + "\n"


def ledger_json(ledger: ChargeLedger) -> str:
    s = ledger.sets
    doc = {
        "k": ledger.k,
        "rho": ledger.rho,
        "total": str(ledger.total),
        "special_set": {"s0_star": list(s.s0_star), "x0_star": s.x0_star, "y0_star": s.y0_star,
                        "low": list(s.low_set), "b0": list(s.b0)},
        "vertices": [
            {"v": r.vertex, "h": r.h, "d": r.d, "case": r.case, "initial": str(r.initial),
             "after_pairs": str(r.after_pairs), "final": str(r.final)}
            for r in ledger.rows
        ],
        "pairs": [{"u": u, "v": v, "initial": c0, "final": c1}
                  for (u, v, c0), (_, _, c1) in zip(ledger.pair_initial, ledger.pair_final)],
    }
    return json.dumps(doc, indent=2, sort_keys=True) + "\n"
