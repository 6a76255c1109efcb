"""Exact DP-colourability decisions at desk scale.

Two independent routes decide whether G is DP h-colourable:

* ``engine="enumerate"`` walks the normalised cover space and runs the
  backtracking transversal search on every cover.
* ``engine="search"`` tracks, for a partial choice of pair options, the
  boolean mask of candidate transversals still alive, and looks for a choice
  that kills all of them. A subtree is pruned when even the best option on
  every remaining pair cannot kill the survivors.

Both report the lexicographically first bad cover of the space, so their
certificates coincide.
"""
from __future__ import annotations

import itertools
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Iterator, Mapping, Sequence

import numpy as np

from .cover import Cover, CoverSpace, all_matchings, hard_cover, is_transversal, same_relabeling_class
from .multigraph import Multigraph

DEFAULT_MAX_COVERS = 10**7
DEFAULT_MAX_NODES = 10**8
# above this many candidate transversals the mask engine hands over to enumeration
MAX_CANDIDATES = 1 << 20


class BudgetExceeded(Exception):
    pass


@dataclass(frozen=True)
class Verdict:
    """``colorable`` is None when the budget ran out before a decision."""

    colorable: bool | None
    witness: tuple[int, ...] | None = None
    bad_cover: Cover | None = None
    covers_examined: int = 0
    nodes: int = 0

    @property
    def decided(self) -> bool:
        return self.colorable is not None


def as_sizes(g: Multigraph, h: int | Sequence[int] | Mapping[int, int]) -> tuple[int, ...]:
    if isinstance(h, int):
        return (h,) * g.n
    if isinstance(h, Mapping):
        return tuple(int(h[v]) for v in g.vertices)
    out = tuple(int(x) for x in h)
    if len(out) != g.n:
        raise ValueError(f"h has {len(out)} entries for {g.n} vertices")
    return out


# --- single cover -------------------------------------------------------------

def find_transversal(cover: Cover, max_nodes: int | None = DEFAULT_MAX_NODES) -> Verdict:
    """Backtracking with forward checking, vertices in natural order and
    colours ascending, so the first transversal found is the
    lexicographically least. Raises BudgetExceeded past ``max_nodes``."""
    g = cover.base
    n = g.n
    sizes = cover.list_sizes
    # forward[v][i]: (w, mask of L(w) killed by colour i of v) for later w
    forward: list[list[list[tuple[int, int]]]] = [[[] for _ in range(sizes[v])] for v in range(n)]
    for (u, v), ms in zip(g.pairs, cover.matchings):
        masks = [0] * sizes[u]
        for m in ms:
            for i, j in m:
                masks[i] |= 1 << j
        for i, mask in enumerate(masks):
            if mask:
                forward[u][i].append((v, mask))
    domains = [(1 << s) - 1 for s in sizes]
    if any(d == 0 for d in domains):
        return Verdict(False, nodes=0)
    choice = [0] * n
    nodes = 0

    def rec(v: int) -> bool:
        nonlocal nodes
        if v == n:
            return True
        dom = domains[v]
        while dom:
            low = dom & -dom
            dom ^= low
            i = low.bit_length() - 1
            nodes += 1
            if max_nodes is not None and nodes > max_nodes:
                raise BudgetExceeded
            saved = []
            ok = True
            for w, mask in forward[v][i]:
                saved.append((w, domains[w]))
                domains[w] &= ~mask
                if not domains[w]:
                    ok = False
                    break
            if ok and rec(v + 1):
                choice[v] = i
                return True
            for w, d in reversed(saved):
                domains[w] = d
        return False

    if rec(0):
        return Verdict(True, witness=tuple(choice), nodes=nodes)
    return Verdict(False, nodes=nodes)


# --- mask engine --------------------------------------------------------------

class _MaskSearch:
    def __init__(self, space: CoverSpace):
        self.space = space
        sizes = space.sizes
        n = len(sizes)
        ncand = math.prod(sizes)
        if n:
            cands = np.indices(sizes, dtype=np.int32).reshape(n, -1)
        else:
            cands = np.zeros((0, 1), dtype=np.int32)
        self.root = np.ones(ncand, dtype=bool)
        self.levels: list[int] = []  # indices into space.pair_options with >1 option
        self.kill: list[np.ndarray] = []
        for idx, po in enumerate(space.pair_options):
            u, v = po.pair
            tables = np.zeros((len(po.unions), sizes[u], sizes[v]), dtype=bool)
            for k, un in enumerate(po.unions):
                for i, j in un:
                    tables[k, i, j] = True
            kill = tables[:, cands[u], cands[v]] if ncand else np.zeros((len(po.unions), 0), dtype=bool)
            if len(po.unions) == 1:
                self.root &= ~kill[0]
            else:
                self.levels.append(idx)
                self.kill.append(kill)
        self.killf = [k.astype(np.float64) for k in self.kill]
        self.count = 0
        self.budget: int | None = None

    def _tick(self, amount: int = 1):
        self.count += amount
        if self.budget is not None and self.count > self.budget:
            raise BudgetExceeded

    def _full_choice(self, free: Sequence[int]) -> tuple[int, ...]:
        choice = [0] * len(self.space.pair_options)
        for lvl, c in zip(self.levels, free):
            choice[lvl] = c
        return tuple(choice)

    def bad_choices(self, first_options: Sequence[int] | None = None) -> Iterator[tuple[int, ...]]:
        """Yield every bad cover choice in lexicographic order."""
        for free in self._dfs(0, self.root, (), first_options):
            yield self._full_choice(free)

    def _dfs(self, level, alive, prefix, first_options=None):
        self._tick()
        nlev = len(self.levels)
        nalive = int(alive.sum())
        if nalive == 0:
            rest = [range(len(k)) for k in self.kill[level:]]
            if level < nlev and first_options is not None and level == 0:
                rest[0] = first_options
            for tail in itertools.product(*rest):
                yield prefix + tail
            return
        if level == nlev:
            return
        opts = range(len(self.kill[level])) if (level or first_options is None) else first_options
        af = alive.astype(np.float64)
        if level == nlev - 1:
            self._tick(len(opts))
            counts = self.killf[level] @ af
            for o in opts:
                if counts[o] == nalive:
                    yield prefix + (o,)
            return
        # union bound: the remaining pairs can kill at most this many survivors
        reach = sum(float((kf @ af).max()) for kf in self.killf[level:])
        if reach < nalive:
            return
        for o in opts:
            yield from self._dfs(level + 1, alive & ~self.kill[level][o], prefix + (o,))


def _chunk_first_bad(args):
    search, opts, budget = args
    search.count = 0
    search.budget = budget
    try:
        return ("ok", next(search.bad_choices(opts), None), search.count)
    except BudgetExceeded:
        return ("budget", None, search.count)


def _peel(g: Multigraph, sizes: Sequence[int]) -> list[int]:
    """Vertices left after repeatedly deleting v with h(v) > d(v).

    Any colouring of the rest extends to such a v, and any cover of the rest
    extends to G, so G is DP h-colourable iff the core is."""
    alive = set(g.vertices)
    changed = True
    while changed:
        changed = False
        for v in sorted(alive):
            d = sum(g.mult(v, w) for w in g.neighbors(v) if w in alive)
            if sizes[v] > d:
                alive.discard(v)
                changed = True
    return sorted(alive)


def _lift_cover(g: Multigraph, sizes: Sequence[int], core: Sequence[int], sub: Cover) -> Cover:
    """Extend a cover of G[core] to G, using the first maximal matching elsewhere."""
    pos = {v: i for i, v in enumerate(core)}
    ms = []
    for u, v, s in g.edges:
        if u in pos and v in pos:
            ms.append(sub.matchings_of(pos[u], pos[v]))
        else:
            ms.append((all_matchings(sizes[u], sizes[v])[0],) * s)
    return Cover(g, tuple(sizes), tuple(ms))


def _decide_space(space: CoverSpace, engine: str, max_covers, max_nodes, jobs: int) -> Verdict:
    if engine == "auto":
        total_opts = sum(len(po.options) for po in space.pair_options)
        engine = "search" if math.prod(space.sizes) * max(total_opts, 1) <= 50 * MAX_CANDIDATES else "enumerate"
    if engine == "enumerate":
        covers = nodes = 0
        for choice in space.choices():
            covers += 1
            if max_covers is not None and covers > max_covers:
                return Verdict(None, covers_examined=covers - 1, nodes=nodes)
            cover = space.cover(choice)
            left = None if max_nodes is None else max_nodes - nodes
            try:
                v = find_transversal(cover, left)
            except BudgetExceeded:
                return Verdict(None, covers_examined=covers, nodes=max_nodes)
            nodes += v.nodes
            if not v.colorable:
                return Verdict(False, bad_cover=cover, covers_examined=covers, nodes=nodes)
        return Verdict(True, covers_examined=covers, nodes=nodes)
    if engine != "search":
        raise ValueError(f"unknown engine {engine!r}")

    search = _MaskSearch(space)
    if jobs > 1 and search.levels:
        nopt = len(search.kill[0])
        bounds = np.linspace(0, nopt, min(jobs, nopt) + 1).astype(int)
        chunks = [list(range(a, b)) for a, b in zip(bounds[:-1], bounds[1:]) if b > a]
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_chunk_first_bad, [(search, c, max_covers) for c in chunks]))
        used = sum(r[2] for r in results)
        for status, bad, _ in results:
            if status == "budget":
                return Verdict(None, covers_examined=used)
            if bad is not None:
                return Verdict(False, bad_cover=space.cover(bad), covers_examined=used)
        return Verdict(True, covers_examined=used)

    search.budget = max_covers
    try:
        bad = next(search.bad_choices(), None)
    except BudgetExceeded:
        return Verdict(None, covers_examined=search.count)
    if bad is None:
        return Verdict(True, covers_examined=search.count)
    return Verdict(False, bad_cover=space.cover(bad), covers_examined=search.count)


def is_dp_h_colorable(
    g: Multigraph,
    h,
    *,
    maximal_only: bool = True,
    tree_normalized: bool = True,
    engine: str = "auto",
    reduce: bool = True,
    max_covers: int | None = DEFAULT_MAX_COVERS,
    max_nodes: int | None = DEFAULT_MAX_NODES,
    jobs: int = 1,
) -> Verdict:
    """Decide whether G has an (H, L)-colouring for every h-cover.

    On a negative answer ``bad_cover`` is the first non-colourable cover of
    the normalised space (of the peeled core, lifted back to G, when
    ``reduce`` removed vertices). ``colorable=None`` means the budget ran out.
    """
    sizes = as_sizes(g, h)
    if reduce:
        core = _peel(g, sizes)
        if not core:
            return Verdict(True)
        if len(core) < g.n:
            sub, _ = g.induced(core)
            v = _decide_space(
                CoverSpace(sub, [sizes[x] for x in core], maximal_only, tree_normalized),
                engine, max_covers, max_nodes, jobs,
            )
            if v.colorable is False:
                return Verdict(False, bad_cover=_lift_cover(g, sizes, core, v.bad_cover),
                               covers_examined=v.covers_examined, nodes=v.nodes)
            return v
    return _decide_space(CoverSpace(g, sizes, maximal_only, tree_normalized), engine, max_covers, max_nodes, jobs)


def is_dp_degree_colorable(g: Multigraph, **kw) -> Verdict:
    if not g.is_connected():
        raise ValueError("degree-colourability is checked on connected multigraphs")
    return is_dp_h_colorable(g, g.degrees(), **kw)


@dataclass(frozen=True)
class ChiResult:
    value: int | None
    undecided_at: int | None = None
    verdicts: tuple[Verdict, ...] = ()

    @property
    def exceeded(self) -> bool:
        return self.value is None and self.undecided_at is None


def chi_dp(g: Multigraph, max_k: int = 8, **kw) -> ChiResult:
    """Least k <= max_k with G DP k-colourable."""
    seen = []
    for k in range(1, max_k + 1):
        v = is_dp_h_colorable(g, k, **kw)
        seen.append(v)
        if v.colorable is None:
            return ChiResult(None, k, tuple(seen))
        if v.colorable:
            return ChiResult(k, None, tuple(seen))
    return ChiResult(None, None, tuple(seen))


# --- minimality ----------------------------------------------------------------

H_MINIMAL = "h_minimal"
CRITICAL = "critical"
COLORABLE = "colorable"
NONCOLORABLE_SUBGRAPH = "has_noncolorable_proper_subgraph"
NOT_K_COLORABLE = "not_k_colorable"
UNDECIDED = "undecided"


@dataclass(frozen=True)
class CriticalityReport:
    status: str
    bad_cover: Cover | None = None
    offending_subgraph: Multigraph | None = None
    deleted: tuple | None = None  # ("edge", u, v) or ("vertex", v)
    checks: int = 0

    @property
    def holds(self) -> bool:
        return self.status in (H_MINIMAL, CRITICAL)


def _proper_subgraphs(g: Multigraph, sizes: Sequence[int]):
    # every proper subgraph lies inside G minus one edge copy, or G minus an isolated vertex
    for u, v in g.pairs:
        yield ("edge", u, v), g.without_edge(u, v), tuple(sizes)
    if g.n > 1:
        for x in g.vertices:
            if g.simple_degree(x) == 0:
                sub, keep = g.induced(w for w in g.vertices if w != x)
                yield ("vertex", x), sub, tuple(sizes[w] for w in keep)


def is_h_minimal(g: Multigraph, h, **kw) -> CriticalityReport:
    sizes = as_sizes(g, h)
    top = is_dp_h_colorable(g, sizes, **kw)
    if top.colorable is None:
        return CriticalityReport(UNDECIDED, checks=1)
    if top.colorable:
        return CriticalityReport(COLORABLE, checks=1)
    checks = 1
    for what, sub, sub_h in _proper_subgraphs(g, sizes):
        checks += 1
        v = is_dp_h_colorable(sub, sub_h, **kw)
        if v.colorable is None:
            return CriticalityReport(UNDECIDED, top.bad_cover, sub, what, checks)
        if not v.colorable:
            return CriticalityReport(NONCOLORABLE_SUBGRAPH, v.bad_cover, sub, what, checks)
    return CriticalityReport(H_MINIMAL, top.bad_cover, checks=checks)


def is_dp_critical(g: Multigraph, k: int, **kw) -> CriticalityReport:
    """chi_DP(G) = k and every proper subgraph is DP (k-1)-colourable."""
    if k < 1:
        raise ValueError("k must be positive")
    rep = is_h_minimal(g, k - 1, **kw)
    if rep.status != H_MINIMAL:
        return rep
    up = is_dp_h_colorable(g, k, **kw)
    if up.colorable is None:
        return CriticalityReport(UNDECIDED, rep.bad_cover, checks=rep.checks + 1)
    if not up.colorable:
        return CriticalityReport(NOT_K_COLORABLE, up.bad_cover, checks=rep.checks + 1)
    return CriticalityReport(CRITICAL, rep.bad_cover, checks=rep.checks + 1)


# --- hard-cover characterisation ----------------------------------------------

@dataclass(frozen=True)
class Lemma31Report:
    family: str
    t: int
    q: int
    graph: Multigraph
    h: tuple[int, ...]
    covers_in_space: int
    bad_covers: int
    matching_hard_cover: int
    hard_cover_colorable: bool
    undecided: bool = False
    mismatches: tuple[Cover, ...] = field(default=(), repr=False)

    @property
    def passed(self) -> bool:
        return (not self.undecided and not self.hard_cover_colorable and self.bad_covers > 0
                and self.matching_hard_cover == self.bad_covers)


def verify_lemma31(family: str, t: int, q: int = 1, max_covers: int | None = DEFAULT_MAX_COVERS) -> Lemma31Report:
    """Enumerate every normalised cover of the family member with its tight
    list sizes and check the non-colourable ones are exactly relabellings of
    the canonical hard cover."""
    hard = hard_cover(family, t, q)
    g, sizes = hard.base, hard.list_sizes
    space = CoverSpace(g, sizes)
    search = _MaskSearch(space)
    search.budget = max_covers
    bad, mismatches, undecided = 0, [], False
    try:
        for choice in search.bad_choices():
            bad += 1
            c = space.cover(choice)
            if not same_relabeling_class(c, hard):
                mismatches.append(c)
    except BudgetExceeded:
        undecided = True
    hard_ok = find_transversal(hard).colorable
    return Lemma31Report(family, t, q, g, sizes, len(space), bad, bad - len(mismatches), bool(hard_ok),
                         undecided, tuple(mismatches))


__all__ = [
    "BudgetExceeded", "Verdict", "ChiResult", "CriticalityReport", "Lemma31Report",
    "find_transversal", "is_transversal", "is_dp_h_colorable", "is_dp_degree_colorable",
    "chi_dp", "is_h_minimal", "is_dp_critical", "verify_lemma31", "as_sizes",
]
