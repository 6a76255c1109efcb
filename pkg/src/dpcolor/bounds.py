"""Closed-form lower bounds on edge counts of critical graphs, and the comparison table."""
from __future__ import annotations

import csv
import io
from dataclasses import dataclass
from decimal import ROUND_DOWN, ROUND_HALF_EVEN, Decimal, localcontext
from fractions import Fraction
from typing import Callable, Sequence

from .multigraph import Multigraph
from .potential import is_complete_simple, is_double_cycle, params, rho


@dataclass(frozen=True)
class BoundSource:
    tag: str
    label: str
    min_k: int
    n_rule: str  # "k+2" or "ky" (n >= k, n != k+1)
    coefficient: Callable[[int], Fraction]
    additive: Callable[[int], Fraction]


def _rabern(k: int) -> Fraction:
    if k >= 7:
        return k - 1 + Fraction((k - 3) ** 2 * (2 * k - 3), k**4 - 2 * k**3 - 11 * k**2 + 28 * k - 14)
    if k == 6:
        return 5 + Fraction(93, 766)
    return k - 1 + Fraction(k - 3, k * k - 2 * k + 2)


def _lam(k: int) -> int:
    return params(k).lam


_ZERO = lambda k: Fraction(0)  # noqa: E731

SOURCES: dict[str, BoundSource] = {
    s.tag: s
    for s in (
        BoundSource("dirac", "Dirac", 4, "k+2", lambda k: Fraction(k - 1), lambda k: Fraction(k - 3, 2)),
        BoundSource("gallai", "Ga", 4, "k+2", lambda k: k - 1 + Fraction(k - 3, k * k - 3), _ZERO),
        BoundSource("krivelevich", "Kr", 4, "k+2", lambda k: k - 1 + Fraction(k - 3, k * k - 2 * k - 1), _ZERO),
        BoundSource("ks", "KS", 6, "k+2",
                    lambda k: k - 1 + 2 * (k - 3) / (k * k + 6 * k - 9 - Fraction(6, k - 2)), _ZERO),
        BoundSource("ky", "KY", 4, "ky", lambda k: k - 1 + Fraction(k - 3, k - 1),
                    lambda k: -Fraction(k * (k - 3), 2 * (k - 1))),
        BoundSource("rabern", "Ra", 4, "k+2", _rabern, _ZERO),
        BoundSource("dp_this_paper", "This paper", 5, "k+2",
                    lambda k: k - 1 + Fraction(1, _lam(k)), lambda k: Fraction(1, _lam(k))),
    )
}

TABLE_COLUMNS = ("gallai", "ky", "rabern", "dp_this_paper")


def source(tag: str) -> BoundSource:
    try:
        return SOURCES[tag]
    except KeyError:
        raise ValueError(f"unknown bound source {tag!r}; choose from {', '.join(SOURCES)}") from None


def _check_k(src: BoundSource, k: int) -> None:
    if k < src.min_k:
        raise ValueError(f"{src.tag} is valid for k >= {src.min_k}, got k={k}")


def avg_degree_coefficient(tag: str, k: int) -> Fraction:
    src = source(tag)
    _check_k(src, k)
    return src.coefficient(k)


def min_edges(tag: str, n: int, k: int) -> Fraction:
    src = source(tag)
    _check_k(src, k)
    if src.n_rule == "ky":
        if n < k or n == k + 1:
            raise ValueError(f"{tag} needs n >= k and n != k+1, got n={n}, k={k}")
    elif n < k + 2:
        raise ValueError(f"{tag} needs n >= k+2, got n={n}, k={k}")
    return src.coefficient(k) * Fraction(n, 2) + src.additive(k)


def dp_threshold(n: int, k: int) -> Fraction:
    """(k-1+1/lambda) n/2 + 1/lambda, without any range check on n."""
    lam = _lam(k)
    return (k - 1 + Fraction(1, lam)) * Fraction(n, 2) + Fraction(1, lam)


# --- rendering ------------------------------------------------------------------

ROUNDING = {"half_even": ROUND_HALF_EVEN, "truncate": ROUND_DOWN}


def render_decimal(x: Fraction, places: int = 4, rounding: str = "half_even") -> str:
    with localcontext() as ctx:
        ctx.prec = 50
        d = Decimal(x.numerator) / Decimal(x.denominator)
        return str(d.quantize(Decimal(1).scaleb(-places), rounding=ROUNDING[rounding]))


@dataclass(frozen=True)
class Table:
    columns: tuple[str, ...]
    rows: tuple[tuple[int, tuple[Fraction | None, ...]], ...]

    def cell(self, k: int, tag: str) -> Fraction | None:
        j = self.columns.index(tag)
        for kk, vals in self.rows:
            if kk == k:
                return vals[j]
        raise KeyError(k)

    def rendered(self, rounding: str = "half_even") -> list[list[str]]:
        header = ["k"] + [SOURCES[c].label for c in self.columns]
        out = [header]
        for k, vals in self.rows:
            out.append([str(k)] + ["" if v is None else render_decimal(v, 4, rounding) for v in vals])
        return out

    def to_text(self, rounding: str = "half_even") -> str:
        grid = self.rendered(rounding)
        widths = [max(len(r[j]) for r in grid) for j in range(len(grid[0]))]
        return "\n".join("  ".join(c.rjust(w) for c, w in zip(r, widths)).rstrip() for r in grid) + "\n"

    def to_csv(self, rounding: str = "half_even") -> str:
        buf = io.StringIO()
        csv.writer(buf, lineterminator="\n").writerows(self.rendered(rounding))
        return buf.getvalue()


def table1(ks: Sequence[int], columns: Sequence[str] = TABLE_COLUMNS) -> Table:
    """Average-degree coefficients; a cell is None where k is outside the source's range."""
    rows = []
    for k in ks:
        rows.append((k, tuple(SOURCES[c].coefficient(k) if k >= SOURCES[c].min_k else None for c in columns)))
    return Table(tuple(columns), tuple(rows))


# --- per-graph audit ------------------------------------------------------------

@dataclass(frozen=True)
class AuditReport:
    k: int
    n: int
    edges: int
    case: int | None  # 1 or 2 for exceptional graphs, 3 otherwise
    exceptional_kind: str | None
    threshold: Fraction
    meets_threshold: bool
    rho: int | None  # rho with h = k-1, simple graphs only
    rho_equivalence: bool | None  # (rho <= -2) == meets_threshold

    @property
    def consistent(self) -> bool:
        return self.case in (1, 2) or self.meets_threshold


def audit_graph(g: Multigraph, k: int) -> AuditReport:
    """Place G in the trichotomy for DP k-critical graphs.

    Does not decide criticality; that is the solver's job.
    """
    p = params(k)
    kind = None
    case = 3
    if is_complete_simple(g) and g.n == k:
        case, kind = 1, "K_k"
    elif k == 5 and g.n == 2 and g.edges == ((0, 1, 4),):
        case, kind = 2, "K_2^4"
    elif k == 5 and is_double_cycle(g):
        case, kind = 2, "double cycle"
    thr = dp_threshold(g.n, k)
    meets = g.num_edges >= thr
    r = eq = None
    if g.is_simple:
        r = rho(g, [k - 1] * g.n, p)
        eq = (r <= -2) == meets
    return AuditReport(k, g.n, g.num_edges, case, kind, thr, meets, r, eq)
