"""Brute-force reference implementations.

Nothing here imports the search engine, the cover space, or the
normalisation code; the only shared piece is the ``Multigraph`` container.
"""
from __future__ import annotations

import itertools
from typing import Iterable, Sequence

import networkx as nx

from dpcolor.multigraph import Multigraph


def injections(a: int, b: int, maximal_only: bool = True) -> list[frozenset]:
    """Every matching between {0..a-1} and {0..b-1}; maximal means size min(a, b)."""
    out = []
    sizes = [min(a, b)] if maximal_only else range(min(a, b) + 1)
    for r in sizes:
        for left in itertools.combinations(range(a), r):
            for right in itertools.permutations(range(b), r):
                out.append(frozenset(zip(left, right)))
    return out


def raw_covers(g: Multigraph, sizes: Sequence[int], maximal_only: bool = True):
    """Every cover as a dict pair -> tuple of matchings, one per edge copy."""
    per_copy = []
    for u, v, s in g.edges:
        ms = injections(sizes[u], sizes[v], maximal_only)
        per_copy.extend([((u, v), ms)] * s)
    for pick in itertools.product(*(ms for _, ms in per_copy)):
        cov: dict = {}
        for ((u, v), _), m in zip(per_copy, pick):
            cov.setdefault((u, v), []).append(m)
        yield {p: tuple(ms) for p, ms in cov.items()}


def conflict_edges(cov: dict) -> set:
    out = set()
    for (u, v), ms in cov.items():
        for m in ms:
            for i, j in m:
                out.add(((u, i), (v, j)))
    return out


def transversals(sizes: Sequence[int], cov: dict) -> list[tuple[int, ...]]:
    bad = conflict_edges(cov)
    res = []
    for choice in itertools.product(*(range(s) for s in sizes)):
        if not any(((u, choice[u]), (v, choice[v])) in bad for (u, v) in cov):
            res.append(choice)
    return res


def has_transversal(sizes: Sequence[int], cov: dict) -> bool:
    bad = conflict_edges(cov)
    for choice in itertools.product(*(range(s) for s in sizes)):
        if not any(((u, choice[u]), (v, choice[v])) in bad for (u, v) in cov):
            return True
    return False


def dp_colorable(g: Multigraph, sizes: Sequence[int], maximal_only: bool = True) -> bool:
    return all(has_transversal(sizes, c) for c in raw_covers(g, sizes, maximal_only))


def canonical_form(sizes: Sequence[int], cov: dict) -> tuple:
    """Least edge list over every per-vertex relabelling of the lists."""
    best = None
    edges = sorted(conflict_edges(cov))
    for perms in itertools.product(*(itertools.permutations(range(s)) for s in sizes)):
        img = tuple(sorted(((u, perms[u][i]), (v, perms[v][j])) for (u, i), (v, j) in edges))
        if best is None or img < best:
            best = img
    return best


def cover_as_dict(cover) -> dict:
    return {p: tuple(ms) for p, ms in zip(cover.base.pairs, cover.matchings)}


def proper_colorings(g: Multigraph, c: int) -> int:
    return sum(
        all(col[u] != col[v] for u, v, _ in g.edges)
        for col in itertools.product(range(c), repeat=g.n)
    )


def list_colorable(g: Multigraph, lists: Sequence[Iterable]) -> bool:
    return any(
        all(col[u] != col[v] for u, v, _ in g.edges)
        for col in itertools.product(*(sorted(l) for l in lists))
    )


def chromatic_number(g: Multigraph) -> int:
    return next(c for c in range(g.n + 1) if proper_colorings(g, c) > 0 or g.n == 0)


def list_chromatic_number(g: Multigraph, palette: int) -> int:
    """Least c such that every assignment of c-subsets of a fixed palette colours G."""
    for c in range(1, palette + 1):
        subsets = list(itertools.combinations(range(palette), c))
        if all(list_colorable(g, ls) for ls in itertools.product(subsets, repeat=g.n)):
            return c
    return palette + 1


def is_gdp_tree_simple(nxg: nx.Graph) -> bool:
    """Connected, and every block is a complete graph or a cycle."""
    if nxg.number_of_nodes() == 0 or not nx.is_connected(nxg):
        return False
    if nxg.number_of_nodes() == 1:
        return True
    for comp in nx.biconnected_components(nxg):
        b = nxg.subgraph(comp)
        t = b.number_of_nodes()
        e = b.number_of_edges()
        if e == t * (t - 1) // 2:
            continue
        if e == t and all(d == 2 for _, d in b.degree()):
            continue
        return False
    return True


def rho_bruteforce(g: Multigraph, h: Sequence[int], a: Iterable[int], k: int) -> int:
    """Potential straight from the displayed definition."""
    lam = -(-(k * k - 7) // (2 * k - 7))
    a = set(a)
    total = 0
    for v in a:
        if h[v] == k - 1:
            total += h[v] * lam + 1
        elif 2 <= h[v] <= k - 2:
            total += h[v] * lam - 1
        else:
            total += h[v] * lam - 2
    for u in a:
        for v in a:
            if u < v and g.mult(u, v):
                total += 1 - (2 * lam + 1) * g.mult(u, v)
    return total
