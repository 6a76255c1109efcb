"""Loopless multigraphs with integer edge multiplicities.

Vertices are the integers ``0..n-1``. A multigraph is stored as a sorted tuple
of ``(u, v, multiplicity)`` triples with ``u < v``; every structural routine
below returns results in that canonical order so witnesses are reproducible.
"""
from __future__ import annotations

import itertools
from collections import defaultdict
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

import networkx as nx

Pair = tuple[int, int]


@dataclass(frozen=True)
class Multigraph:
    n: int
    edges: tuple[tuple[int, int, int], ...] = ()

    @cached_property
    def _mult(self) -> dict[Pair, int]:
        return {(u, v): s for u, v, s in self.edges}

    @cached_property
    def _adj(self) -> list[dict[int, int]]:
        adj: list[dict[int, int]] = [{} for _ in range(self.n)]
        for u, v, s in self.edges:
            adj[u][v] = s
            adj[v][u] = s
        return adj

    @property
    def vertices(self) -> range:
        return range(self.n)

    @property
    def pairs(self) -> tuple[Pair, ...]:
        return tuple((u, v) for u, v, _ in self.edges)

    @property
    def num_edges(self) -> int:
        """|E(G)|, counting parallel edges."""
        return sum(s for _, _, s in self.edges)

    @property
    def is_simple(self) -> bool:
        return all(s == 1 for _, _, s in self.edges)

    def mult(self, u: int, v: int) -> int:
        if u > v:
            u, v = v, u
        return self._mult.get((u, v), 0)

    def degree(self, v: int) -> int:
        return sum(self._adj[v].values())

    def simple_degree(self, v: int) -> int:
        return len(self._adj[v])

    def neighbors(self, v: int) -> list[int]:
        return sorted(self._adj[v])

    def degrees(self) -> tuple[int, ...]:
        return tuple(self.degree(v) for v in self.vertices)

    def components(self) -> list[list[int]]:
        seen = [False] * self.n
        comps = []
        for r in self.vertices:
            if seen[r]:
                continue
            seen[r] = True
            comp, stack = [], [r]
            while stack:
                x = stack.pop()
                comp.append(x)
                for y in self._adj[x]:
                    if not seen[y]:
                        seen[y] = True
                        stack.append(y)
            comps.append(sorted(comp))
        return comps

    def is_connected(self) -> bool:
        return self.n > 0 and len(self.components()) == 1

    def edges_between(self, a: Iterable[int], b: Iterable[int]) -> int:
        """|E_G(A, B)| for disjoint vertex sets."""
        bs = set(b)
        return sum(s for x in set(a) for y, s in self._adj[x].items() if y in bs)

    def with_edge(self, u: int, v: int, s: int = 1) -> Multigraph:
        return build(self.n, list(self.edges) + [(u, v, s)])

    def without_edge(self, u: int, v: int) -> Multigraph:
        """Delete one copy of the edge uv."""
        s = self.mult(u, v)
        if s == 0:
            raise ValueError(f"no edge between {u} and {v}")
        a, b = min(u, v), max(u, v)
        rest = [e for e in self.edges if (e[0], e[1]) != (a, b)]
        if s > 1:
            rest.append((a, b, s - 1))
        return build(self.n, rest)

    def induced(self, vertices: Iterable[int]) -> tuple[Multigraph, list[int]]:
        """Induced subgraph relabelled to 0..|A|-1; also returns new->old ids."""
        keep = sorted(set(vertices))
        index = {v: i for i, v in enumerate(keep)}
        edges = [(index[u], index[v], s) for u, v, s in self.edges if u in index and v in index]
        return build(len(keep), edges), keep

    def multiple(self, q: int) -> Multigraph:
        if q < 1:
            raise ValueError("multiplier must be positive")
        return Multigraph(self.n, tuple((u, v, s * q) for u, v, s in self.edges))

    def to_networkx(self) -> nx.Graph:
        """The skeleton as a networkx graph, with multiplicities as ``mult``."""
        g = nx.Graph()
        g.add_nodes_from(self.vertices)
        for u, v, s in self.edges:
            g.add_edge(u, v, mult=s)
        return g


def build(n: int, edges: Iterable[Sequence[int]]) -> Multigraph:
    """Normalise an edge list (``(u, v)`` or ``(u, v, multiplicity)``) into a Multigraph.

    Repeated pairs are summed. Loops, out-of-range endpoints and non-positive
    multiplicities raise ``ValueError``.
    """
    if n < 0:
        raise ValueError("vertex count must be non-negative")
    acc: dict[Pair, int] = defaultdict(int)
    for e in edges:
        if len(e) == 2:
            u, v, s = e[0], e[1], 1
        elif len(e) == 3:
            u, v, s = e
        else:
            raise ValueError(f"malformed edge {e!r}")
        u, v, s = int(u), int(v), int(s)
        if not (0 <= u < n and 0 <= v < n):
            raise ValueError(f"edge ({u}, {v}) has an endpoint outside 0..{n - 1}")
        if u == v:
            raise ValueError(f"loop at vertex {u}")
        if s < 1:
            raise ValueError(f"multiplicity of ({u}, {v}) must be >= 1, got {s}")
        acc[(min(u, v), max(u, v))] += s
    return Multigraph(n, tuple((u, v, s) for (u, v), s in sorted(acc.items())))


def skeleton(g: Multigraph) -> Multigraph:
    return Multigraph(g.n, tuple((u, v, 1) for u, v, _ in g.edges))


def excess(g: Multigraph) -> int:
    """m(G): the number of edges beyond the skeleton."""
    return g.num_edges - len(g.edges)


# --- constructors -----------------------------------------------------------

def complete(t: int, q: int = 1) -> Multigraph:
    return build(t, [(u, v, q) for u, v in itertools.combinations(range(t), 2)])


def cycle(n: int, q: int = 1) -> Multigraph:
    if n < 3:
        raise ValueError("a cycle needs at least 3 vertices")
    return build(n, [(i, (i + 1) % n, q) for i in range(n)])


def path(n: int) -> Multigraph:
    return build(n, [(i, i + 1) for i in range(n - 1)])


def blowup(g: Multigraph, q: int) -> Multigraph:
    """Replace each vertex by an independent q-set and each edge by K_{q,q}.

    Vertex ``v`` becomes ``v*q .. v*q + q - 1``.
    """
    if q < 1:
        raise ValueError("q must be positive")
    if not g.is_simple:
        raise ValueError("blowup is defined for simple graphs")
    edges = [(u * q + a, v * q + b) for u, v, _ in g.edges for a in range(q) for b in range(q)]
    return build(g.n * q, edges)


def make_family(kind: str, *args) -> Multigraph:
    """``clique_multiple(t, q)``, ``cycle_multiple(n, q)`` or ``blowup(G, q)``."""
    if kind == "clique_multiple":
        t, q = args
        if t < 1 or q < 1:
            raise ValueError("clique_multiple needs t >= 1 and q >= 1")
        return complete(t, q)
    if kind == "cycle_multiple":
        n, q = args
        if n < 3 or q < 1:
            raise ValueError("cycle_multiple needs n >= 3 and q >= 1")
        return cycle(n, q)
    if kind == "blowup":
        g, q = args
        return blowup(g, q)
    raise ValueError(f"unknown family {kind!r}")


def block_surgery(g: Multigraph, block: Iterable[int], u: int, u2: int) -> Multigraph:
    """F(B, u, u'): delete B, then join u and u' by one more edge.

    Surviving vertices keep their relative order and are renumbered 0..n-|B|-1.
    """
    b = set(block)
    if u in b or u2 in b:
        raise ValueError("u and u' must lie outside B")
    if u == u2:
        raise ValueError("u and u' must be distinct")
    for x in (u, u2):
        if not any(y in b for y in g.neighbors(x)):
            raise ValueError(f"vertex {x} has no neighbour in B")
    rest, old = g.induced(set(g.vertices) - b)
    new = {v: i for i, v in enumerate(old)}
    return rest.with_edge(new[u], new[u2])


# --- blocks -----------------------------------------------------------------

@dataclass(frozen=True)
class BlockDecomposition:
    blocks: tuple[tuple[int, ...], ...]
    cut_vertices: tuple[int, ...]
    # (block index, cut vertex) incidences of the block-cut tree
    block_cut_tree: tuple[tuple[int, int], ...]


def blocks(g: Multigraph) -> BlockDecomposition:
    """Blocks of every component. Isolated vertices are K_1 blocks; all copies
    of a parallel class sit in the block of their skeleton edge."""
    sk = g.to_networkx()
    found = [tuple(sorted(c)) for c in nx.biconnected_components(sk)]
    found += [(v,) for v in g.vertices if g.simple_degree(v) == 0]
    found.sort()
    cuts = tuple(sorted(nx.articulation_points(sk)))
    cutset = set(cuts)
    tree = tuple((i, c) for i, blk in enumerate(found) for c in blk if c in cutset)
    return BlockDecomposition(tuple(found), cuts, tree)


@dataclass(frozen=True)
class EdgeBlock:
    vertices: tuple[int, ...]
    is_cut_edge: bool
    pendent: bool
    # the cut edge (inside vertex, outside vertex) through which a pendent block hangs
    attachment: tuple[int, int] | None = None


@dataclass(frozen=True)
class EdgeBlockDecomposition:
    edge_blocks: tuple[EdgeBlock, ...]
    cut_edges: tuple[Pair, ...]


def cut_edges(g: Multigraph) -> tuple[Pair, ...]:
    """Bridges of the multigraph: skeleton bridges that carry a single edge."""
    sk = g.to_networkx()
    return tuple(sorted((min(u, v), max(u, v)) for u, v in nx.bridges(sk) if g.mult(u, v) == 1))


def edge_blocks(g: Multigraph) -> EdgeBlockDecomposition:
    """Maximal 2-edge-connected pieces, plus one K_2 edge-block per cut edge.

    A pair joined by two or more parallel edges is never a cut edge, so K_2^s
    with s >= 2 is an ordinary 2-edge-connected edge-block.
    """
    bridges = cut_edges(g)
    bset = set(bridges)
    rest = nx.Graph()
    rest.add_nodes_from(g.vertices)
    rest.add_edges_from(p for p in g.pairs if p not in bset)
    bridge_deg = defaultdict(int)
    for u, v in bridges:
        bridge_deg[u] += 1
        bridge_deg[v] += 1

    out = []
    for comp in nx.connected_components(rest):
        vs = tuple(sorted(comp))
        if len(vs) == 1 and bridge_deg[vs[0]] > 0:
            continue  # a lone vertex inside a tree part is covered by its cut edges
        incident = [(u, v) for u, v in bridges if (u in comp) != (v in comp)]
        pendent = len(incident) == 1
        attach = None
        if pendent:
            u, v = incident[0]
            attach = (u, v) if u in comp else (v, u)
        out.append(EdgeBlock(vs, False, pendent, attach))
    for u, v in bridges:
        leaf_u = g.simple_degree(u) == 1
        leaf_v = g.simple_degree(v) == 1
        # a cut edge hangs off the rest of the graph when exactly one end is a leaf
        out.append(EdgeBlock((u, v), True, leaf_u != leaf_v))
    out.sort(key=lambda b: (b.vertices, b.is_cut_edge))
    return EdgeBlockDecomposition(tuple(out), bridges)


# --- GDP / Gallai recognition ----------------------------------------------

GALLAI_TREE = "GallaiTree"
GDP_TREE_ONLY = "GdpTreeOnly"
NOT_GDP_TREE = "NotGdpTree"


@dataclass(frozen=True)
class BlockTag:
    vertices: tuple[int, ...]
    family: str | None  # "clique", "cycle" or None
    t: int
    s: int

    @property
    def regularity(self) -> int | None:
        if self.family == "clique":
            return self.s * (self.t - 1)
        if self.family == "cycle":
            return 2 * self.s
        return None


@dataclass(frozen=True)
class GdpClassification:
    components: tuple[tuple[tuple[int, ...], str], ...]
    blocks: tuple[BlockTag, ...]

    @property
    def is_gdp_forest(self) -> bool:
        return all(tag != NOT_GDP_TREE for _, tag in self.components)

    @property
    def is_gdp_tree(self) -> bool:
        return len(self.components) == 1 and self.is_gdp_forest

    @property
    def is_gallai_tree(self) -> bool:
        return len(self.components) == 1 and self.components[0][1] == GALLAI_TREE


def tag_block(g: Multigraph, vertices: Sequence[int]) -> BlockTag:
    vs = tuple(sorted(vertices))
    t = len(vs)
    if t == 1:
        return BlockTag(vs, "clique", 1, 1)
    mults = {g.mult(u, v) for u, v in itertools.combinations(vs, 2)} - {0}
    if len(mults) != 1:
        return BlockTag(vs, None, t, 0)
    (s,) = mults
    npairs = sum(1 for u, v in itertools.combinations(vs, 2) if g.mult(u, v))
    if npairs == t * (t - 1) // 2:
        return BlockTag(vs, "clique", t, s)
    # a 2-connected skeleton with t edges on t vertices is a cycle
    if t >= 4 and npairs == t:
        return BlockTag(vs, "cycle", t, s)
    return BlockTag(vs, None, t, s)


def classify_gdp(g: Multigraph) -> GdpClassification:
    tags = [tag_block(g, b) for b in blocks(g).blocks]
    comps = []
    for comp in g.components():
        cs = set(comp)
        mine = [tg for tg in tags if tg.vertices[0] in cs]
        if any(tg.family is None for tg in mine):
            label = NOT_GDP_TREE
        elif all(tg.s == 1 and (tg.family == "clique" or tg.t % 2 == 1) for tg in mine):
            label = GALLAI_TREE
        else:
            label = GDP_TREE_ONLY
        comps.append((tuple(comp), label))
    return GdpClassification(tuple(comps), tuple(tags))
