"""Potential calculus for the DP-critical edge bound (k >= 5).

Every quantity here is an ``int`` or a ``fractions.Fraction``.
"""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

import numpy as np

from .multigraph import Multigraph, classify_gdp, excess


@dataclass(frozen=True)
class PotentialParams:
    k: int
    lam: int
    alpha: Fraction


def params(k: int) -> PotentialParams:
    if k < 5:
        raise ValueError(f"the potential is defined for k >= 5, got k={k}")
    lam = -((7 - k * k) // (2 * k - 7))  # ceil((k^2 - 7) / (2k - 7))
    return PotentialParams(k, lam, Fraction(k - 2, 2 * k - 7))


def _check_h(p: PotentialParams, hv: int) -> None:
    if not 0 <= hv <= p.k - 1:
        raise ValueError(f"h(v)={hv} outside 0..{p.k - 1}")


def rho_vertex(p: PotentialParams, hv: int) -> int:
    _check_h(p, hv)
    if hv == p.k - 1:
        return hv * p.lam + 1
    if hv >= 2:
        return hv * p.lam - 1
    return hv * p.lam - 2


def rho_pair(p: PotentialParams, s: int) -> int:
    if s < 0:
        raise ValueError("multiplicity must be non-negative")
    return 0 if s == 0 else 1 - (2 * p.lam + 1) * s


def rho_local(p: PotentialParams, kind: str, value: int) -> int:
    if kind == "vertex":
        return rho_vertex(p, value)
    if kind == "pair":
        return rho_pair(p, value)
    raise ValueError(f"kind must be 'vertex' or 'pair', not {kind!r}")


def rho_set(g: Multigraph, h: Sequence[int], a: Iterable[int], p: PotentialParams) -> int:
    aset = set(a)
    total = sum(rho_vertex(p, h[v]) for v in aset)
    total += sum(rho_pair(p, s) for u, v, s in g.edges if u in aset and v in aset)
    return total


def rho(g: Multigraph, h: Sequence[int], p: PotentialParams) -> int:
    """rho_h(G)."""
    return rho_set(g, h, g.vertices, p)


def subset_potentials(g: Multigraph, h: Sequence[int], p: PotentialParams) -> np.ndarray:
    """rho of every vertex subset, indexed by bitmask (int64)."""
    masks = np.arange(1 << g.n, dtype=np.int64)
    member = ((masks[:, None] >> np.arange(g.n)) & 1).astype(np.int64)
    out = member @ np.array([rho_vertex(p, x) for x in h], dtype=np.int64)
    for u, v, s in g.edges:
        out += member[:, u] * member[:, v] * rho_pair(p, s)
    return out


def check_submodular(g: Multigraph, h: Sequence[int], u1: Iterable[int], u2: Iterable[int], p: PotentialParams) -> bool:
    a, b = set(u1), set(u2)
    return rho_set(g, h, a | b, p) + rho_set(g, h, a & b, p) <= rho_set(g, h, a, p) + rho_set(g, h, b, p)


def is_double_cycle(g: Multigraph) -> bool:
    return (g.n >= 3 and g.is_connected() and len(g.edges) == g.n
            and all(s == 2 for _, _, s in g.edges)
            and all(g.simple_degree(v) == 2 for v in g.vertices))


def is_complete_simple(g: Multigraph) -> bool:
    return g.is_simple and len(g.edges) == g.n * (g.n - 1) // 2 and g.n >= 1


def is_exceptional(g: Multigraph, k: int) -> bool:
    """Complete graphs always; K_2^4 and double cycles as well when k = 5."""
    if is_complete_simple(g):
        return True
    if k != 5:
        return False
    return g.edges == ((0, 1, 4),) and g.n == 2 or is_double_cycle(g)


# --- Phi_k ----------------------------------------------------------------------

@dataclass(frozen=True)
class PhiResult:
    value: Fraction
    sigma: int
    m: int
    below_top: int  # |V^-_{k-1}|
    at_top: int  # |V_{k-1}|
    lists_in_range: bool  # 3 <= h <= k-1
    lists_cover_degree: bool  # h >= d_T
    gdp_tree: bool
    no_bad_regular_block: bool

    @property
    def hypotheses_hold(self) -> bool:
        return self.lists_in_range and self.lists_cover_degree and self.gdp_tree and self.no_bad_regular_block


def phi(t: Multigraph, h: Sequence[int], p: PotentialParams) -> PhiResult:
    """alpha*sigma_h(T) + m(T) + |V^-_{k-1}(T)| - |V_{k-1}(T)|, with a report on
    whether T and h meet the hypotheses under which it exceeds 1 + alpha."""
    if not t.is_connected():
        raise ValueError("Phi_k is defined for connected T")
    k = p.k
    sigma = sum(h[v] - t.degree(v) for v in t.vertices)
    m = excess(t)
    below = sum(1 for v in t.vertices if h[v] < k - 1)
    top = sum(1 for v in t.vertices if h[v] == k - 1)
    cls = classify_gdp(t)
    regs = [b.regularity for b in cls.blocks]
    return PhiResult(
        value=p.alpha * sigma + m + below - top,
        sigma=sigma,
        m=m,
        below_top=below,
        at_top=top,
        lists_in_range=all(3 <= h[v] <= k - 1 for v in t.vertices),
        lists_cover_degree=all(h[v] >= t.degree(v) for v in t.vertices),
        gdp_tree=cls.is_gdp_tree,
        no_bad_regular_block=all(r not in (k - 1, k - 2) for r in regs if r is not None),
    )


def phi_scaled_grid(t: Multigraph, p: PotentialParams) -> tuple[np.ndarray, list[range]]:
    """(2k-7) * Phi_k(T) for every h with max(3, d(v)) <= h(v) <= k-1.

    Phi_k is a sum of per-vertex terms plus m(T), so the full table is an
    outer sum. Returns the integer array (one axis per vertex) and the h
    ranges of its axes.
    """
    k, den = p.k, 2 * p.k - 7
    num = p.alpha.numerator * (den // p.alpha.denominator)
    ranges = [range(max(3, t.degree(v)), k) for v in t.vertices]
    grid = np.full((), den * excess(t), dtype=np.int64)
    for v, r in zip(t.vertices, ranges):
        d = t.degree(v)
        terms = np.array([num * (x - d) + (den if x < k - 1 else -den) for x in r], dtype=np.int64)
        grid = np.add.outer(grid, terms)
    return grid, ranges


def complete_potential(p: PotentialParams, j: int) -> int:
    """rho of K_j with every h = k-1."""
    return j * ((p.k - 1) * p.lam + 1) + math.comb(j, 2) * rho_pair(p, 1)


def proper_subsets(vertices: Sequence[int]):
    vs = list(vertices)
    for r in range(1, len(vs)):
        yield from itertools.combinations(vs, r)
