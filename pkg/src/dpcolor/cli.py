"""Command-line entry point: ``dpcolor <command> ...``.

Exit codes: 0 the property holds (or the value was computed), 1 it fails
(a certificate is reported), 2 usage or input error, 3 budget exhausted.
"""
from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from pathlib import Path
from typing import Sequence

from . import bounds as bnd
from .cover import cover_from_lists, hard_cover
from .discharging import UndefinedSpecialSet, check_cases, component_sum_vs_phi, discharge, ledger_json, ledger_text
from .formats import FormatError, VerdictRecord, dumps_cover, read_cover, read_graph
from .multigraph import classify_gdp
from .potential import params, phi, rho_set
from .solver import (
    CRITICAL,
    DEFAULT_MAX_COVERS,
    DEFAULT_MAX_NODES,
    H_MINIMAL,
    UNDECIDED,
    BudgetExceeded,
    chi_dp,
    find_transversal,
    is_dp_critical,
    is_dp_h_colorable,
    is_h_minimal,
    verify_lemma31,
)

OK, FAIL, USAGE, BUDGET = 0, 1, 2, 3


class UsageError(Exception):
    pass


def _ints(text: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


def _budget_opts(p: argparse.ArgumentParser) -> None:
    p.add_argument("--max-covers", type=int, default=DEFAULT_MAX_COVERS, help="cover budget (default 10^7)")
    p.add_argument("--max-nodes", type=int, default=DEFAULT_MAX_NODES, help="search-node budget (default 10^8)")
    p.add_argument("--jobs", type=int, default=1, help="worker processes for cover enumeration")


def _graph_opts(p: argparse.ArgumentParser, with_h: bool = True, with_k: bool = True) -> None:
    p.add_argument("--graph", required=True, help="graph6 file, or JSON multigraph (.json or starting with '{')")
    if with_h:
        g = p.add_mutually_exclusive_group()
        g.add_argument("--h", type=int, help="constant list size")
        g.add_argument("--h-file", help="JSON list of per-vertex list sizes")
    if with_k:
        p.add_argument("--k", type=int, help="colour count (default: max(h) + 1)")


def _parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="dpcolor", description="DP-colouring toolkit")
    ap.add_argument("--format", choices=("text", "json"), default="text")
    # also accepted after the command name
    fmt = argparse.ArgumentParser(add_help=False)
    fmt.add_argument("--format", choices=("text", "json"), default=argparse.SUPPRESS)
    sub = ap.add_subparsers(dest="command", required=True)

    def cmd(name: str, help: str) -> argparse.ArgumentParser:
        return sub.add_parser(name, help=help, parents=[fmt])

    p = cmd("solve", help="find a transversal of a cover file")
    p.add_argument("--cover", required=True)
    p.add_argument("--max-nodes", type=int, default=DEFAULT_MAX_NODES)

    p = cmd("dpcolor", help="decide DP h-colourability")
    _graph_opts(p, with_k=False)
    p.add_argument("--certificate", help="write the non-colourable cover here")
    _budget_opts(p)

    p = cmd("chidp", help="DP chromatic number")
    _graph_opts(p, with_h=False, with_k=False)
    p.add_argument("--max-k", type=int, default=8)
    _budget_opts(p)

    p = cmd("critical", help="DP k-criticality, or h-minimality with --h/--h-file")
    _graph_opts(p)
    p.add_argument("--certificate")
    _budget_opts(p)

    p = cmd("potential", help="rho of a vertex set (default: all vertices)")
    _graph_opts(p)
    p.add_argument("--set", type=_ints, help="comma-separated vertices")

    p = cmd("phi", help="Phi_k of a tree-like multigraph")
    _graph_opts(p)

    p = cmd("classify", help="block tags and GDP/Gallai status")
    _graph_opts(p, with_h=False, with_k=False)

    p = cmd("bounds", help="edge-count lower bounds")
    p.add_argument("--table", action="store_true")
    p.add_argument("--k", type=_ints, help="k value(s), comma-separated")
    p.add_argument("--source", choices=sorted(bnd.SOURCES))
    p.add_argument("--n", type=int)
    p.add_argument("--rounding", choices=sorted(bnd.ROUNDING), default="half_even")
    p.add_argument("--csv", action="store_true")

    p = cmd("audit", help="place a graph in the DP-critical trichotomy")
    _graph_opts(p, with_h=False)

    p = cmd("discharge", help="run the charge rules and check their bounds")
    _graph_opts(p)

    p = cmd("lemma31", help="check the hard-cover characterisation on one family member")
    p.add_argument("--family", required=True, choices=("even_cycle", "clique", "odd_cycle"))
    p.add_argument("--t", type=int, required=True)
    p.add_argument("--q", type=int, default=1)
    p.add_argument("--max-covers", type=int, default=DEFAULT_MAX_COVERS)
    p.add_argument("--certificate", help="write the hard cover here")

    p = cmd("listcover", help="turn a list assignment into a cover file")
    p.add_argument("--graph", required=True)
    p.add_argument("--lists", required=True, help="JSON list of per-vertex colour lists")
    p.add_argument("--output")
    return ap


# --- helpers --------------------------------------------------------------------

def _load_json_file(path: str):
    try:
        text = Path(path).read_text()
    except OSError as e:
        raise FormatError(e.strerror or str(e), path) from None
    try:
        return json.loads(text)
    except json.JSONDecodeError as e:
        raise FormatError(e.msg, path, e.lineno, e.colno) from None


def _graph_and_h(args, need_h: bool = True):
    g, h_doc = read_graph(args.graph)
    h = None
    if getattr(args, "h", None) is not None:
        h = (args.h,) * g.n
    elif getattr(args, "h_file", None):
        raw = _load_json_file(args.h_file)
        if not (isinstance(raw, list) and len(raw) == g.n and all(isinstance(x, int) and x >= 0 for x in raw)):
            raise FormatError(f"expected a list of {g.n} non-negative integers", args.h_file)
        h = tuple(raw)
    elif h_doc is not None:
        h = h_doc
    if need_h and h is None:
        k = getattr(args, "k", None)
        if k is None:
            raise UsageError("give --h, --h-file, an 'h' field in the graph file, or --k")
        h = (k - 1,) * g.n
    return g, h


def _k(args, h) -> int:
    if getattr(args, "k", None) is not None:
        return args.k
    if not h:
        raise UsageError("cannot infer k from an empty h; pass --k")
    return max(h) + 1


def _frac(x: Fraction) -> str:
    return str(x)


class Out:
    def __init__(self, fmt: str, command: str):
        self.fmt, self.command = fmt, command
        self.lines: list[str] = []

    def line(self, text: str = "") -> None:
        self.lines.append(text)

    def finish(self, status: str, detail: dict, certificate: str | None = None) -> None:
        if self.fmt == "json":
            sys.stdout.write(VerdictRecord(self.command, status, detail, certificate).to_json())
        else:
            sys.stdout.write("\n".join(self.lines) + ("\n" if self.lines else ""))


def _write_certificate(path: str | None, text: str) -> str | None:
    if path:
        Path(path).write_text(text)
    return path


# --- commands -------------------------------------------------------------------

def cmd_solve(args, out: Out) -> int:
    cover = read_cover(args.cover)
    v = find_transversal(cover, args.max_nodes)
    if v.colorable:
        out.line(f"colourable: witness {list(v.witness)}")
        out.finish("colorable", {"witness": list(v.witness), "nodes": v.nodes})
        return OK
    out.line("no transversal: the cover has no (H,L)-colouring")
    out.finish("not_colorable", {"nodes": v.nodes})
    return FAIL


def cmd_dpcolor(args, out: Out) -> int:
    g, h = _graph_and_h(args)
    v = is_dp_h_colorable(g, h, max_covers=args.max_covers, max_nodes=args.max_nodes, jobs=args.jobs)
    counters = {"covers_examined": v.covers_examined, "nodes": v.nodes}
    if v.colorable is None:
        out.line(f"undecided: budget exhausted after {v.covers_examined} covers")
        out.finish(UNDECIDED, counters)
        return BUDGET
    if v.colorable:
        out.line(f"DP h-colourable (h = {list(h)})")
        out.finish("colorable", counters)
        return OK
    cert = dumps_cover(v.bad_cover)
    path = _write_certificate(args.certificate, cert)
    comps = v.bad_cover.h_component_sizes()
    out.line(f"not DP h-colourable (h = {list(h)})")
    out.line(f"bad cover: H has {sum(comps)} vertices, component sizes {comps}")
    if path:
        out.line(f"certificate written to {path}")
    else:
        out.line(cert.rstrip())
    out.finish("not_colorable", {**counters, "h_component_sizes": comps,
                                 "bad_cover": None if path else json.loads(cert)}, path)
    return FAIL


def cmd_chidp(args, out: Out) -> int:
    g, _ = read_graph(args.graph)
    r = chi_dp(g, args.max_k, max_covers=args.max_covers, max_nodes=args.max_nodes, jobs=args.jobs)
    if r.value is None:
        msg = f"undecided at k={r.undecided_at}" if r.undecided_at else f"chi_DP > {args.max_k}"
        out.line(msg)
        out.finish(UNDECIDED, {"undecided_at": r.undecided_at, "max_k": args.max_k})
        return BUDGET
    out.line(f"chi_DP = {r.value}")
    out.finish("computed", {"chi_dp": r.value})
    return OK


def cmd_critical(args, out: Out) -> int:
    g, h_given = _graph_and_h(args, need_h=False)
    kw = dict(max_covers=args.max_covers, max_nodes=args.max_nodes, jobs=args.jobs)
    explicit_h = args.h is not None or args.h_file is not None
    if explicit_h or args.k is None:
        if h_given is None:
            raise UsageError("give --k for DP k-criticality, or --h/--h-file for h-minimality")
        rep = is_h_minimal(g, h_given, **kw)
        label = f"h-minimal (h = {list(h_given)})"
    else:
        rep = is_dp_critical(g, args.k, **kw)
        label = f"DP {args.k}-critical"
    detail = {"status": rep.status, "checks": rep.checks,
              "deleted": list(rep.deleted) if rep.deleted else None}
    if rep.status == UNDECIDED:
        out.line(f"undecided: budget exhausted ({rep.checks} checks)")
        out.finish(UNDECIDED, detail)
        return BUDGET
    if rep.holds:
        extra = ""
        if rep.status == CRITICAL and args.k >= 5:
            a = bnd.audit_graph(g, args.k)
            extra = f" (exceptional: {a.exceptional_kind})" if a.exceptional_kind else " (not exceptional)"
        out.line(label + extra)
        out.finish(rep.status, detail)
        return OK
    out.line(f"not {label}: {rep.status}")
    path = None
    if rep.bad_cover is not None and rep.status != H_MINIMAL:
        cert = dumps_cover(rep.bad_cover)
        path = _write_certificate(args.certificate, cert)
        where = f" after deleting {rep.deleted}" if rep.deleted else ""
        out.line(f"certificate: non-colourable cover{where}" + (f" written to {path}" if path else ""))
        if not path:
            out.line(cert.rstrip())
    out.finish(rep.status, detail, path)
    return FAIL


def cmd_potential(args, out: Out) -> int:
    g, h = _graph_and_h(args)
    p = params(_k(args, h))
    a = args.set if args.set is not None else list(g.vertices)
    if any(not 0 <= v < g.n for v in a):
        raise UsageError(f"--set vertices must lie in 0..{g.n - 1}")
    r = rho_set(g, h, a, p)
    out.line(f"rho = {r}  (k={p.k}, lambda={p.lam}, alpha={p.alpha})")
    out.finish("computed", {"rho": r, "k": p.k, "lambda": p.lam, "alpha": _frac(p.alpha), "set": sorted(set(a))})
    return OK


def cmd_phi(args, out: Out) -> int:
    g, h = _graph_and_h(args)
    p = params(_k(args, h))
    res = phi(g, h, p)
    exceeds = res.value > 1 + p.alpha
    out.line(f"Phi_k = {res.value}  (1 + alpha = {1 + p.alpha}, exceeds: {exceeds})")
    out.line(f"sigma_h = {res.sigma}, m = {res.m}, |V^-_(k-1)| = {res.below_top}, |V_(k-1)| = {res.at_top}")
    out.line(f"hypotheses: lists in 3..k-1 {res.lists_in_range}, h >= d {res.lists_cover_degree}, "
             f"GDP-tree {res.gdp_tree}, no (k-1)/(k-2)-regular block {res.no_bad_regular_block}")
    detail = {"phi": _frac(res.value), "exceeds": exceeds, "hypotheses_hold": res.hypotheses_hold}
    if res.hypotheses_hold and not exceeds:
        out.finish("fails", detail)
        return FAIL
    out.finish("computed", detail)
    return OK


def cmd_classify(args, out: Out) -> int:
    g, _ = read_graph(args.graph)
    c = classify_gdp(g)
    for verts, tag in c.components:
        out.line(f"component {list(verts)}: {tag}")
    for b in c.blocks:
        fam = "neither" if b.family is None else f"{b.family} t={b.t} s={b.s}"
        out.line(f"block {list(b.vertices)}: {fam}")
    out.finish("computed", {"components": [{"vertices": list(v), "tag": t} for v, t in c.components],
                            "blocks": [{"vertices": list(b.vertices), "family": b.family, "t": b.t, "s": b.s}
                                       for b in c.blocks]})
    return OK


def cmd_bounds(args, out: Out) -> int:
    if args.table:
        ks = args.k or [4, 5, 6, 7, 8, 9, 10, 15, 20]
        t = bnd.table1(ks)
        text = t.to_csv(args.rounding) if args.csv else t.to_text(args.rounding)
        out.lines.extend(text.rstrip("\n").split("\n"))
        out.finish("computed", {"rows": t.rendered(args.rounding)})
        return OK
    if not args.source or not args.k or len(args.k) != 1:
        raise UsageError("give --table, or --source with a single --k (and --n for an edge count)")
    k = args.k[0]
    try:
        coef = bnd.avg_degree_coefficient(args.source, k)
        edges = bnd.min_edges(args.source, args.n, k) if args.n is not None else None
    except ValueError as e:
        raise UsageError(str(e)) from None
    out.line(f"{args.source} k={k}: average degree >= {coef} ~ {bnd.render_decimal(coef, 4, args.rounding)}")
    if edges is not None:
        out.line(f"{args.source} n={args.n} k={k}: |E| >= {edges}")
    out.finish("computed", {"coefficient": _frac(coef), "min_edges": None if edges is None else _frac(edges)})
    return OK


def cmd_audit(args, out: Out) -> int:
    g, h = _graph_and_h(args, need_h=False)
    k = args.k if args.k is not None else (max(h) + 1 if h else None)
    if k is None:
        raise UsageError("give --k")
    try:
        a = bnd.audit_graph(g, k)
    except ValueError as e:
        raise UsageError(str(e)) from None
    if a.case in (1, 2):
        out.line(f"exceptional: {a.exceptional_kind} (case {a.case})")
    else:
        out.line(f"case 3 threshold {a.threshold}: |E| = {a.edges} {'meets' if a.meets_threshold else 'misses'} it")
    if a.rho is not None:
        out.line(f"rho (h = k-1) = {a.rho}; rho <= -2 agrees with threshold: {a.rho_equivalence}")
    out.finish("consistent" if a.consistent else "inconsistent",
               {"case": a.case, "exceptional": a.exceptional_kind, "threshold": _frac(a.threshold),
                "edges": a.edges, "meets_threshold": a.meets_threshold, "rho": a.rho})
    return OK if a.consistent else FAIL


def cmd_discharge(args, out: Out) -> int:
    g, h = _graph_and_h(args)
    k = _k(args, h)
    try:
        led = discharge(g, h, k)
    except UndefinedSpecialSet as e:
        out.line(f"special set undefined: {e}")
        out.finish("undefined", {})
        return FAIL
    cases = check_cases(g, led)
    comp = component_sum_vs_phi(g, h, led)
    ok = led.conserved and all(c.holds and c.conclusion for c in cases) and comp.ok
    if args.format == "json":
        sys.stdout.write(ledger_json(led))
        return OK if ok else FAIL
    out.lines.extend(ledger_text(led).rstrip("\n").split("\n"))
    for c in cases:
        out.line(f"case {c.case} at {c.vertex}: final {c.final} <= {c.bound}: {c.holds}")
    if comp.vacuous:
        out.line("low part of the special set is empty: component check vacuous")
    for c in comp.components:
        strict = "not asserted" if c.strict_holds is None else str(c.strict_holds)
        out.line(f"component {list(c.vertices)}: sum {c.charge_sum} <= -Phi + alpha: {c.bound_holds}; < -1: {strict}")
    out.finish("holds" if ok else "fails", {})
    return OK if ok else FAIL


def cmd_lemma31(args, out: Out) -> int:
    try:
        rep = verify_lemma31(args.family, args.t, args.q, args.max_covers)
    except ValueError as e:
        raise UsageError(str(e)) from None
    path = _write_certificate(args.certificate, dumps_cover(hard_cover(args.family, args.t, args.q)))
    detail = {"covers_in_space": rep.covers_in_space, "bad_covers": rep.bad_covers,
              "matching_hard_cover": rep.matching_hard_cover, "hard_cover_colorable": rep.hard_cover_colorable}
    if rep.undecided:
        out.line(f"undecided: budget exhausted ({rep.bad_covers} bad covers so far)")
        out.finish(UNDECIDED, detail, path)
        return BUDGET
    out.line(f"{args.family} t={args.t} q={args.q}: {rep.covers_in_space} normalised covers, "
             f"{rep.bad_covers} non-colourable, {rep.matching_hard_cover} relabel to the hard cover")
    out.line("holds" if rep.passed else "fails")
    out.finish("holds" if rep.passed else "fails", detail, path)
    return OK if rep.passed else FAIL


def cmd_listcover(args, out: Out) -> int:
    g, _ = read_graph(args.graph)
    lists = _load_json_file(args.lists)
    if not (isinstance(lists, list) and len(lists) == g.n and all(isinstance(x, list) for x in lists)):
        raise FormatError(f"expected a list of {g.n} colour lists", args.lists)
    try:
        cover = cover_from_lists(g, lists)
    except ValueError as e:
        raise UsageError(str(e)) from None
    text = dumps_cover(cover)
    if args.output:
        Path(args.output).write_text(text)
        out.line(f"cover written to {args.output}")
    else:
        out.lines.extend(text.rstrip("\n").split("\n"))
    out.finish("computed", {}, args.output)
    return OK


COMMANDS = {
    "solve": cmd_solve, "dpcolor": cmd_dpcolor, "chidp": cmd_chidp, "critical": cmd_critical,
    "potential": cmd_potential, "phi": cmd_phi, "classify": cmd_classify, "bounds": cmd_bounds,
    "audit": cmd_audit, "discharge": cmd_discharge, "lemma31": cmd_lemma31, "listcover": cmd_listcover,
}


def run(argv: Sequence[str] | None = None) -> int:
    ap = _parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as e:
        return USAGE if e.code not in (0, None) else OK
    out = Out(args.format, args.command)
    try:
        return COMMANDS[args.command](args, out)
    except FormatError as e:
        print(f"error: {e}", file=sys.stderr)
        return USAGE
    except (UsageError, ValueError) as e:
        print(f"error: {e}", file=sys.stderr)
        return USAGE
    except BudgetExceeded:
        print("budget exhausted", file=sys.stderr)
        return BUDGET


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
