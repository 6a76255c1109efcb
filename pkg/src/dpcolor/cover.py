"""DP-covers (H, L) of multigraphs.

Colours are ``(vertex, index)`` pairs: vertex ``v`` owns the list
``L(v) = {(v, 0), ..., (v, |L(v)| - 1)}``, so lists are disjoint and
independent by construction. For each adjacent pair ``u < v`` joined by ``s``
edges a cover stores ``s`` matchings, each a frozenset of ``(i, j)`` with
``i`` indexing ``L(u)`` and ``j`` indexing ``L(v)``. H is their union.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator, Mapping, Sequence

import networkx as nx

from .multigraph import Multigraph, Pair, complete, cycle

Matching = frozenset  # of (i, j) index pairs


@dataclass(frozen=True)
class Cover:
    base: Multigraph
    list_sizes: tuple[int, ...]
    # aligned with base.pairs; entry p holds base.mult(*pair) matchings
    matchings: tuple[tuple[Matching, ...], ...]

    @cached_property
    def _index(self) -> dict[Pair, int]:
        return {p: i for i, p in enumerate(self.base.pairs)}

    def matchings_of(self, u: int, v: int) -> tuple[Matching, ...]:
        """Matchings of the pair, oriented as (index in L(u), index in L(v))."""
        if u < v:
            return self.matchings[self._index[(u, v)]]
        return tuple(frozenset((j, i) for i, j in m) for m in self.matchings[self._index[(v, u)]])

    def union(self, u: int, v: int) -> frozenset:
        """E_H(L(u), L(v)) as index pairs oriented (u, v)."""
        if self.base.mult(u, v) == 0:
            return frozenset()
        return frozenset().union(*self.matchings_of(u, v))

    def is_h_cover(self, h: Sequence[int]) -> bool:
        return all(size >= hv for size, hv in zip(self.list_sizes, h))

    def h_graph(self) -> nx.Graph:
        """H as a networkx graph on ``(vertex, index)`` nodes tagged with ``vertex``."""
        hg = nx.Graph()
        for v, size in enumerate(self.list_sizes):
            for i in range(size):
                hg.add_node((v, i), vertex=v)
        for (u, v), ms in zip(self.base.pairs, self.matchings):
            for m in ms:
                hg.add_edges_from(((u, i), (v, j)) for i, j in m)
        return hg

    def h_component_sizes(self) -> list[int]:
        return sorted((len(c) for c in nx.connected_components(self.h_graph())), reverse=True)


def _check_matching(edges: Iterable[Sequence[int]], a: int, b: int, where: str) -> Matching:
    m = frozenset((int(i), int(j)) for i, j in edges)
    for i, j in m:
        if not (0 <= i < a and 0 <= j < b):
            raise ValueError(f"{where}: colour index ({i}, {j}) out of range for list sizes ({a}, {b})")
    if len({i for i, _ in m}) != len(m) or len({j for _, j in m}) != len(m):
        raise ValueError(f"{where}: edge set {sorted(m)} is not a matching")
    return m


def build_cover(
    g: Multigraph,
    list_sizes: Sequence[int],
    matchings: Mapping[Pair, Sequence[Iterable[Sequence[int]]]],
) -> Cover:
    """Validate and normalise a cover.

    ``matchings`` maps each adjacent pair to exactly ``mult(u, v)`` edge sets;
    a key ``(v, u)`` with ``v > u`` is read with its index pairs reversed.
    """
    sizes = tuple(int(x) for x in list_sizes)
    if len(sizes) != g.n:
        raise ValueError(f"expected {g.n} list sizes, got {len(sizes)}")
    if any(x < 0 for x in sizes):
        raise ValueError("list sizes must be non-negative")
    given: dict[Pair, list] = {}
    for (u, v), ms in matchings.items():
        u, v = int(u), int(v)
        key = (min(u, v), max(u, v))
        if key in given:
            raise ValueError(f"pair {key} given twice")
        ms = [list(m) for m in ms]
        if u > v:
            ms = [[(j, i) for i, j in m] for m in ms]
        given[key] = ms
    extra = set(given) - set(g.pairs)
    if extra:
        raise ValueError(f"matchings given for non-adjacent pairs {sorted(extra)}")
    out = []
    for u, v, s in g.edges:
        if (u, v) not in given:
            raise ValueError(f"no matchings given for pair ({u}, {v})")
        ms = given[(u, v)]
        if len(ms) != s:
            raise ValueError(f"pair ({u}, {v}) has multiplicity {s} but {len(ms)} matchings")
        out.append(tuple(_check_matching(m, sizes[u], sizes[v], f"pair ({u}, {v})") for m in ms))
    return Cover(g, sizes, tuple(out))


def is_transversal(cover: Cover, choice: Sequence[int]) -> bool:
    """True iff ``choice`` picks one colour per list and no two picks are adjacent in H."""
    if len(choice) != cover.base.n:
        return False
    if any(not (0 <= c < size) for c, size in zip(choice, cover.list_sizes)):
        return False
    for (u, v), ms in zip(cover.base.pairs, cover.matchings):
        if any((choice[u], choice[v]) in m for m in ms):
            return False
    return True


def blowup_cover(cover: Cover, q: int) -> Cover:
    """The q-blowup: a cover of base^q.

    Colour ``i`` of ``v`` becomes ``i*q .. i*q + q - 1``; every H-edge becomes
    a K_{q,q}, split into q matchings by cyclic shifts.
    """
    if q < 1:
        raise ValueError("q must be positive")
    out = []
    for ms in cover.matchings:
        new = []
        for m in ms:
            for r in range(q):
                new.append(frozenset((i * q + a, j * q + (a + r) % q) for i, j in m for a in range(q)))
        out.append(tuple(new))
    return Cover(cover.base.multiple(q), tuple(x * q for x in cover.list_sizes), tuple(out))


def cover_from_lists(g: Multigraph, lists: Sequence[Iterable] | Mapping[int, Iterable]) -> Cover:
    """Cover of a simple graph equivalent to list colouring with ``lists``.

    Abstract colours are compared as strings; vertex v's list is indexed in
    sorted string order. Each edge's matching joins equal colours.
    """
    if not g.is_simple:
        raise ValueError("list assignments are reduced to covers of simple graphs only")
    seq = [lists[v] for v in g.vertices]
    names = [sorted({str(c) for c in lst}) for lst in seq]
    pos = [{c: i for i, c in enumerate(lst)} for lst in names]
    matchings = {}
    for u, v in g.pairs:
        matchings[(u, v)] = [[(pos[u][c], pos[v][c]) for c in names[u] if c in pos[v]]]
    return build_cover(g, [len(lst) for lst in names], matchings)


def same_relabeling_class(a: Cover, b: Cover) -> bool:
    """Whether b arises from a by permuting colours inside each list."""
    if a.base != b.base or a.list_sizes != b.list_sizes:
        return False
    match = nx.algorithms.isomorphism.categorical_node_match("vertex", None)
    return nx.is_isomorphic(a.h_graph(), b.h_graph(), node_match=match)


# --- canonical non-colourable covers ----------------------------------------

def hard_cover(family: str, t: int, q: int = 1) -> Cover:
    """The non-colourable covers of C_{2t}^q, K_t^q and C_{2t+1}^q.

    even_cycle: a 2-cover of C_{2t} whose H is C_{4t}, blown up q times.
    clique:     t-1 disjoint copies of K_t over K_t, blown up.
    odd_cycle:  two disjoint copies of C_{2t+1} over C_{2t+1}, blown up.
    """
    if q < 1:
        raise ValueError("q must be positive")
    if family == "even_cycle":
        if t < 2:
            raise ValueError("even_cycle needs t >= 2 (cycle length 2t >= 4)")
        g = cycle(2 * t)
        ident = [(0, 0), (1, 1)]
        ms = {p: [ident] for p in g.pairs}
        ms[(0, 2 * t - 1)] = [[(0, 1), (1, 0)]]  # the one crossed edge closes C_{4t}
        base = build_cover(g, [2] * g.n, ms)
    elif family == "clique":
        if t < 1:
            raise ValueError("clique needs t >= 1")
        g = complete(t)
        base = build_cover(g, [t - 1] * t, {p: [[(i, i) for i in range(t - 1)]] for p in g.pairs})
    elif family == "odd_cycle":
        if t < 1:
            raise ValueError("odd_cycle needs t >= 1 (cycle length 2t+1 >= 3)")
        g = cycle(2 * t + 1)
        base = build_cover(g, [2] * g.n, {p: [[(0, 0), (1, 1)]] for p in g.pairs})
    else:
        raise ValueError(f"unknown family {family!r}")
    return blowup_cover(base, q) if q > 1 else base


def hard_instance(family: str, t: int, q: int = 1) -> tuple[Multigraph, tuple[int, ...]]:
    """The multigraph and list-size function that hard_cover(family, t, q) covers."""
    c = hard_cover(family, t, q)
    return c.base, c.list_sizes


# --- enumeration ------------------------------------------------------------

def all_matchings(a: int, b: int, maximal_only: bool = True) -> list[Matching]:
    """Matchings of K_{a,b} in a fixed order; maximal ones are the injections."""
    if maximal_only:
        if a <= b:
            return [frozenset(enumerate(p)) for p in itertools.permutations(range(b), a)]
        return [frozenset((i, j) for j, i in enumerate(p)) for p in itertools.permutations(range(a), b)]
    out = []
    for r in range(min(a, b) + 1):
        for left in itertools.combinations(range(a), r):
            for right in itertools.permutations(range(b), r):
                out.append(frozenset(zip(left, right)))
    return out


def _normalized_matchings(parent_size: int, child_size: int, maximal_only: bool) -> list[list[Pair]]:
    # Relabelling the child's list sends its matched colours to 0..r-1 in the
    # order of their partners; only the partner subset of the parent stays free.
    rs = [min(parent_size, child_size)] if maximal_only else range(min(parent_size, child_size) + 1)
    out = []
    for r in rs:
        for subset in itertools.combinations(range(parent_size), r):
            out.append([(subset[i], i) for i in range(r)])  # (parent index, child index)
    return out


def spanning_forest(g: Multigraph) -> dict[int, tuple[int, int]]:
    """child -> (parent, child) for a max-multiplicity spanning forest rooted at
    each component's least vertex."""
    parent = list(g.vertices)

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    tree = []
    for u, v, s in sorted(g.edges, key=lambda e: (-e[2], e[0], e[1])):
        ru, rv = find(u), find(v)
        if ru != rv:
            parent[ru] = rv
            tree.append((u, v))
    adj: dict[int, list[int]] = {v: [] for v in g.vertices}
    for u, v in tree:
        adj[u].append(v)
        adj[v].append(u)
    out = {}
    seen = set()
    for r in g.vertices:
        if r in seen:
            continue
        seen.add(r)
        queue = [r]
        for x in queue:
            for y in sorted(adj[x]):
                if y not in seen:
                    seen.add(y)
                    out[y] = (x, y)
                    queue.append(y)
    return out


@dataclass(frozen=True)
class PairOptions:
    pair: Pair
    options: tuple[tuple[Matching, ...], ...]
    unions: tuple[frozenset, ...]
    frozen: bool


class CoverSpace:
    """All h-covers of G with |L(v)| = h(v), one representative per distinct
    H-edge set on each pair, optionally restricted to maximal matchings and
    quotiented by per-vertex relabelling along a spanning forest.

    Covers are indexed by a choice of option per pair (in ``base.pairs``
    order); iteration is lexicographic in that index with the last pair
    varying fastest.
    """

    def __init__(self, g: Multigraph, h: Sequence[int], maximal_only: bool = True, tree_normalized: bool = True):
        if len(h) != g.n or any(x < 0 for x in h):
            raise ValueError("h must give a non-negative list size for every vertex")
        self.graph = g
        self.sizes = tuple(int(x) for x in h)
        self.maximal_only = maximal_only
        self.tree_normalized = tree_normalized
        tree = {}
        if tree_normalized:
            tree = {(min(p), max(p)): p[0] for p in spanning_forest(g).values()}
        cache: dict[tuple[int, int], list[Matching]] = {}
        pairs = []
        for u, v, s in g.edges:
            a, b = self.sizes[u], self.sizes[v]
            if (a, b) not in cache:
                cache[(a, b)] = all_matchings(a, b, maximal_only)
            base = cache[(a, b)]
            if (u, v) in tree:
                par = tree[(u, v)]
                if par == u:
                    firsts = [frozenset(m) for m in _normalized_matchings(a, b, maximal_only)]
                else:
                    firsts = [frozenset((c, p) for p, c in m) for m in _normalized_matchings(b, a, maximal_only)]
                combos = (
                    (f,) + tuple(base[i] for i in rest)
                    for f in firsts
                    for rest in itertools.combinations_with_replacement(range(len(base)), s - 1)
                )
            else:
                combos = (
                    tuple(base[i] for i in idx)
                    for idx in itertools.combinations_with_replacement(range(len(base)), s)
                )
            seen = {}
            for combo in combos:
                un = frozenset().union(*combo)
                if un not in seen:
                    seen[un] = combo
            pairs.append(PairOptions((u, v), tuple(seen.values()), tuple(seen), (u, v) in tree))
        self.pair_options: tuple[PairOptions, ...] = tuple(pairs)

    def __len__(self) -> int:
        total = 1
        for po in self.pair_options:
            total *= len(po.options)
        return total

    def cover(self, choice: Sequence[int]) -> Cover:
        ms = tuple(po.options[c] for po, c in zip(self.pair_options, choice))
        return Cover(self.graph, self.sizes, ms)

    def choices(self) -> Iterator[tuple[int, ...]]:
        return itertools.product(*(range(len(po.options)) for po in self.pair_options))

    def __iter__(self) -> Iterator[Cover]:
        for choice in self.choices():
            yield self.cover(choice)


def enumerate_covers(
    g: Multigraph, h: Sequence[int], maximal_only: bool = True, tree_normalized: bool = True
) -> Iterator[Cover]:
    """Stream every h-cover of G (lists of size exactly h) up to the enabled reductions."""
    return iter(CoverSpace(g, h, maximal_only, tree_normalized))
