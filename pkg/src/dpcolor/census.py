"""Small-graph generators shared by the test suite and the experiment scripts."""
from __future__ import annotations

import itertools
import random
from typing import Iterator

import networkx as nx

from .multigraph import Multigraph, build, classify_gdp


def atlas_graphs(max_n: int = 7, connected: bool = False) -> Iterator[Multigraph]:
    """Every simple graph on 1..max_n vertices up to isomorphism (max_n <= 7)."""
    if max_n > 7:
        raise ValueError("the graph atlas stops at 7 vertices")
    for nxg in nx.graph_atlas_g():
        n = nxg.number_of_nodes()
        if n == 0 or n > max_n:
            continue
        if connected and not nx.is_connected(nxg):
            continue
        yield build(n, [(u, v, 1) for u, v in nxg.edges()])


def labelled_multigraphs(n: int, max_mult: int) -> Iterator[Multigraph]:
    """Every multigraph on vertex set 0..n-1 with multiplicities at most max_mult."""
    pairs = list(itertools.combinations(range(n), 2))
    for mults in itertools.product(range(max_mult + 1), repeat=len(pairs)):
        yield build(n, [(u, v, s) for (u, v), s in zip(pairs, mults) if s])


def gdp_trees(max_n: int = 7, max_mult: int = 3) -> Iterator[Multigraph]:
    """GDP-trees whose skeletons come from the atlas: each block of a skeleton
    that is complete or a cycle gets its own uniform multiplicity."""
    for sk in atlas_graphs(max_n, connected=True):
        cls = classify_gdp(sk)
        if not cls.is_gdp_tree:
            continue
        bl = [b for b in cls.blocks if len(b.vertices) > 1]
        for mults in itertools.product(range(1, max_mult + 1), repeat=len(bl)):
            edges = []
            for b, s in zip(bl, mults):
                vs = set(b.vertices)
                edges += [(u, v, s) for u, v, _ in sk.edges if u in vs and v in vs]
            yield build(sk.n, edges)


def random_connected_multigraph(rng: random.Random, max_n: int = 8, max_mult: int = 3) -> Multigraph:
    n = rng.randint(1, max_n)
    mult: dict[tuple[int, int], int] = {}
    order = list(range(n))
    rng.shuffle(order)
    for i in range(1, n):
        u, v = order[i], order[rng.randrange(i)]
        mult[(min(u, v), max(u, v))] = rng.randint(1, max_mult)
    if n > 1:
        for _ in range(rng.randint(0, n)):
            u, v = sorted(rng.sample(range(n), 2))
            mult[(u, v)] = min(max_mult, mult.get((u, v), 0) + 1)
    return build(n, [(u, v, s) for (u, v), s in mult.items()])


def random_h(rng: random.Random, g: Multigraph, k: int, low_bias: float = 0.5) -> list[int]:
    """List sizes in 0..k-1; with probability low_bias a vertex gets h = min(d, k-1)."""
    return [min(k - 1, g.degree(v)) if rng.random() < low_bias else rng.randint(0, k - 1) for v in g.vertices]
