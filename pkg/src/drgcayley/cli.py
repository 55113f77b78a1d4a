"""Command-line surface.

Verbs: build, metrics, drg-check, spectrum, derive, cayley, distance-sets,
quotient, is-cayley, feasibility, diffset, census.

Exit codes: 0 all checks pass; 1 a check or verdict failed (for is-cayley
and feasibility the negative verdict itself exits 1, so scripts can branch
on it); 2 usage error; 3 a search ran out of budget and the answer is
"unknown".

Output is deterministic for fixed flags.  The only vertex ordering is the
canonical one; --seed-order exists so callers can state that explicitly.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from . import catalog
from .cayley import (cayley_graph, coset_quotient, distance_sets)
from .cayleyness import is_cayley
from .drg import (check_distance_regular, gh_cayley_feasible,
                  gq_cayley_feasible, parse_array, render_array,
                  spectrum_numeric, spectrum_of_array)
from .designs import find_difference_set
from .graphs import (bipartite_double, complement, distance_i_graph,
                     antipodal_quotient, graph_metrics, halved_graph,
                     line_graph, parse_graph6, to_graph6)
from .groups import closure, construct_group, parse_connection_labels

_DERIVED = {
    "complement": lambda g, a: complement(g),
    "line-graph": lambda g, a: line_graph(g),
    "bipartite-double": lambda g, a: bipartite_double(g),
    "distance-i": lambda g, a: distance_i_graph(g, a.i),
    "halved": lambda g, a: halved_graph(g, a.part),
    "antipodal-quotient": lambda g, a: antipodal_quotient(g),
}


def _usage(msg: str) -> int:
    print(f"error: {msg}", file=sys.stderr)
    return 2


def _load_graph(args):
    """Resolve --name / --file / --g6 to a Graph."""
    picked = [x for x in (args.name, args.file, args.g6) if x]
    if len(picked) != 1:
        raise SystemExit(_usage("exactly one of --name, --file, --g6 required"))
    if args.name:
        return catalog.build(args.name, data_dir=args.data)
    if args.g6:
        return parse_graph6(args.g6.strip())
    text = sys.stdin.read() if args.file == "-" else Path(args.file).read_text()
    line = text.strip().splitlines()[0]
    return parse_graph6(line, name=Path(args.file).stem if args.file != "-" else "")


def _graph_source_flags(p) -> None:
    p.add_argument("--name", help="catalogued graph name (see `build --list`)")
    p.add_argument("--file", help="graph6 file, or - for stdin")
    p.add_argument("--g6", help="inline graph6 string")


def _emit_graph(g, fmt: str) -> int:
    if fmt == "graph6":
        print(to_graph6(g))
    elif fmt == "tsv":
        for u in range(g.n):
            for v in g.neighbors(u):
                if u < v:
                    print(f"{u}\t{v}")
    elif fmt == "json":
        print(json.dumps({"schema": 1, "name": g.name, "n": g.n,
                          "graph6": to_graph6(g),
                          "labels": g.labels or None}))
    else:
        return _usage(f"format {fmt!r} not supported for graph output")
    return 0


def _group_and_set(args):
    G = construct_group(args.group)
    s = parse_connection_labels(G, args.set)
    return G, s


# -- verb handlers ----------------------------------------------------------------

def _cmd_build(args) -> int:
    if args.list:
        for name in catalog.list_names():
            print(name)
        return 0
    if not args.graph:
        return _usage("build needs a graph name (or --list)")
    g = catalog.build(args.graph, data_dir=args.data)
    return _emit_graph(g, args.format or "graph6")


def _cmd_metrics(args) -> int:
    g = _load_graph(args)
    m = graph_metrics(g, with_table=False)
    degs = sorted(set(m.degrees))
    items = [("name", g.name or "-"), ("n", g.n),
             ("degrees", ",".join(map(str, degs))),
             ("connected", m.connected), ("bipartite", m.bipartite),
             ("diameter", m.diameter), ("girth", m.girth),
             ("odd_girth", m.odd_girth), ("even_girth", m.even_girth)]
    fmt = args.format or "tsv"
    if fmt == "json":
        print(json.dumps({"schema": 1, **{k: v for k, v in items}}))
    elif fmt == "md":
        print("| metric | value |")
        print("|---|---|")
        for k, v in items:
            print(f"| {k} | {v} |")
    elif fmt == "tsv":
        for k, v in items:
            print(f"{k}\t{v}")
    else:
        return _usage("metrics supports tsv, md, json")
    return 0


def _cmd_drg_check(args) -> int:
    g = _load_graph(args)
    r = check_distance_regular(g)
    fmt = args.format or "tsv"
    if fmt == "json":
        print(json.dumps({"schema": 1, "distance_regular": r.array is not None,
                          "array": render_array(r.array) if r.array else None,
                          "witness": r.witness}))
    else:
        if r.array is not None:
            print(f"distance-regular\t{render_array(r.array)}")
        else:
            x, y, i, kind, got, want = r.witness
            print(f"not distance-regular\t{kind}_{i} at pair ({x},{y}): "
                  f"{got} != {want}")
    return 0 if r.array is not None else 1


def _cmd_spectrum(args) -> int:
    fmt = args.format or "tsv"
    if args.array:
        evs = spectrum_of_array(parse_array(args.array))
        if fmt == "json":
            print(json.dumps({"schema": 1, "eigenvalues": [
                {"value": e.value, "rational": e.rational, "exact": e.exact}
                for e in evs]}))
        else:
            for e in evs:
                tag = str(e.exact) if e.rational else f"{e.value:.6f}"
                print(f"{tag}\t{'exact' if e.rational else 'numeric'}")
        return 0
    g = _load_graph(args)
    sp = spectrum_numeric(g)
    if fmt == "json":
        print(json.dumps({"schema": 1, "pairs": sp.as_pairs()}))
    else:
        for v, m in sp.as_pairs():
            print(f"{v:.6f}\t{m}")
    return 0


def _cmd_derive(args) -> int:
    g = _load_graph(args)
    if args.kind == "distance-i" and args.i is None:
        return _usage("derive distance-i needs --i")
    h = _DERIVED[args.kind](g, args)
    return _emit_graph(h, args.format or "graph6")


def _cmd_cayley(args) -> int:
    G, s = _group_and_set(args)
    g = cayley_graph(G, s, name=f"Cay({G.name})")
    connected = len(closure(G, s)) == G.n
    r = check_distance_regular(g) if connected else None
    fmt = args.format or "tsv"
    if fmt == "json":
        print(json.dumps({"schema": 1, "group": G.name, "n": g.n,
                          "set": [G.labels[x] for x in s],
                          "connected": connected,
                          "array": render_array(r.array) if r and r.array else None,
                          "graph6": to_graph6(g)}))
        return 0
    if fmt == "graph6":
        print(to_graph6(g))
        return 0
    print(f"group\t{G.name} (order {G.n})")
    print(f"set\t{','.join(G.labels[x] for x in s)}")
    print(f"connected\t{connected}")
    if r is not None:
        print(f"array\t{render_array(r.array) if r.array else 'not distance-regular'}")
    return 0


def _cmd_distance_sets(args) -> int:
    G, s = _group_and_set(args)
    ds = distance_sets(G, s)
    fmt = args.format or "tsv"
    if fmt == "json":
        print(json.dumps({"schema": 1, "group": G.name,
                          "sets": [[G.labels[x] for x in t] for t in ds.sets],
                          "n_d": [G.labels[x] for x in ds.n_d],
                          "n_d_is_subgroup": ds.n_d_is_subgroup}))
        return 0
    for i, t in enumerate(ds.sets):
        print(f"S_{i}\t{','.join(G.labels[x] for x in t)}")
    print(f"N_d subgroup\t{ds.n_d_is_subgroup}")
    return 0


def _cmd_quotient(args) -> int:
    G, s = _group_and_set(args)
    gens = parse_connection_labels(G, args.subgroup)
    sub = closure(G, gens)
    try:
        qm = coset_quotient(G, s, sub)
    except AssertionError as ex:
        print(f"check failed: {ex}", file=sys.stderr)
        return 1
    fmt = args.format or "tsv"
    if fmt == "json":
        print(json.dumps({"schema": 1, "parts": [len(p) for p in qm.parts],
                          "matrix": [list(r) for r in qm.entries],
                          "eigenvalues": qm.eigenvalues()}))
        return 0
    print(f"parts\t{len(qm.parts)} cosets of size {len(qm.parts[0])}")
    for row in qm.entries:
        print("\t".join(map(str, row)))
    print("eigenvalues\t" + ",".join(f"{v:.6f}" for v in qm.eigenvalues()))
    return 0


def _cmd_is_cayley(args) -> int:
    g = _load_graph(args)
    v = is_cayley(g, budget=args.budget)
    fmt = args.format or "tsv"
    if fmt == "json":
        out = {"schema": 1, "graph": g.name, "verdict": v.kind,
               "reason": v.reason}
        if v.group is not None:
            out["group_order"] = v.group.n
            out["connection_set"] = v.connection_set.labels()
        print(json.dumps(out))
    else:
        print(str(v))
        if v.kind == "yes":
            print(f"connection set\t{v.connection_set}")
    return {"yes": 0, "no": 1, "unknown": 3}[v.kind]


def _cmd_feasibility(args) -> int:
    fn = {"gq": gq_cayley_feasible, "gh": gh_cayley_feasible}[args.kind]
    f = fn(args.s)
    fmt = args.format or "tsv"
    if fmt == "json":
        print(json.dumps({"schema": 1, "kind": args.kind, "s": args.s,
                          "feasible": f.feasible, "reasons": list(f.reasons)}))
    else:
        print(str(f))
    return 0 if f.feasible else 1


def _cmd_diffset(args) -> int:
    G = construct_group(args.group) if args.group else construct_group(f"cyclic({args.v})")
    if G.n != args.v:
        return _usage(f"group order {G.n} != v = {args.v}")
    ds = find_difference_set(G, args.k, args.lam)
    fmt = args.format or "tsv"
    if ds is None:
        if fmt == "json":
            print(json.dumps({"schema": 1, "found": False}))
        else:
            print(f"no ({args.v},{args.k},{args.lam}) difference set over {G.name}")
        return 1
    labels = [G.labels[x] for x in ds.elements]
    if fmt == "json":
        print(json.dumps({"schema": 1, "found": True, "group": G.name,
                          "elements": labels, "params": list(ds.params)}))
    else:
        print(f"difference set\t{{{','.join(labels)}}}")
        print(f"params\t{ds.params}")
    return 0


def _cmd_census(args) -> int:
    threads = args.threads if args.threads is not None else os.cpu_count()
    rows = catalog.census(table=args.table, budget=args.budget,
                          data_dir=args.data, check_cayley=not args.no_cayley,
                          threads=threads)
    fmt = args.format or "tsv"
    if fmt == "md":
        print(catalog.render_census_md(rows))
    elif fmt == "json":
        print(json.dumps(catalog.render_census_json(rows)))
    elif fmt == "tsv":
        print(catalog.render_census_tsv(rows))
    else:
        return _usage("census supports tsv, md, json")
    failures = [r for r in rows if r.status not in ("OK", "feasibility-only")]
    if not failures:
        return 0
    for r in failures:
        print(f"FAILED {r.name}: {r.status}", file=sys.stderr)
    if all("exceeded budget" in (r.status + r.computed_cayley) for r in failures):
        return 3
    return 1


# -- parser -----------------------------------------------------------------------

def _common_flags(p) -> None:
    p.add_argument("--format", choices=["graph6", "tsv", "md", "json"],
                   help="output format (default depends on the verb)")
    p.add_argument("--budget", type=float, default=300.0,
                   help="seconds allowed per search (default 300)")
    p.add_argument("--threads", type=int, default=None,
                   help="worker threads for census rows (default: all cores)")
    p.add_argument("--data", default=None,
                   help="directory with graph6 assets "
                        "(default ./data, then $DRG_DATA, then packaged)")
    p.add_argument("--seed-order", choices=["canonical"], default="canonical",
                   help="vertex ordering; canonical is the only mode")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="drg-cayley",
        description="Construct and analyze the distance-regular graphs of "
                    "small valency, their Cayley witnesses, and non-Cayley "
                    "verdicts.",
        epilog="Exit codes: 0 pass, 1 check or verdict failed (an is-cayley "
               "'no' exits 1 by convention), 2 usage, 3 budget exceeded.")
    sub = ap.add_subparsers(dest="verb", required=True)

    p = sub.add_parser("build", help="construct a catalogued graph")
    p.add_argument("graph", nargs="?", help="name, e.g. heawood or 'k*5,5'")
    p.add_argument("--list", action="store_true", help="list known names")
    _common_flags(p)
    p.set_defaults(fn=_cmd_build)

    for verb, fn, blurb in (
            ("metrics", _cmd_metrics, "degrees, diameter, girth, parity"),
            ("drg-check", _cmd_drg_check, "verify distance-regularity"),
            ("is-cayley", _cmd_is_cayley, "exhaustive Cayley-graph decision")):
        p = sub.add_parser(verb, help=blurb)
        _graph_source_flags(p)
        _common_flags(p)
        p.set_defaults(fn=fn)

    p = sub.add_parser("spectrum", help="adjacency or array spectrum")
    _graph_source_flags(p)
    p.add_argument("--array", help="intersection array, e.g. '{4,2,2;1,1,2}'")
    _common_flags(p)
    p.set_defaults(fn=_cmd_spectrum)

    p = sub.add_parser("derive", help="derived graph operators")
    p.add_argument("kind", choices=sorted(_DERIVED))
    _graph_source_flags(p)
    p.add_argument("--i", type=int, help="distance for distance-i")
    p.add_argument("--part", type=int, default=0, choices=[0, 1],
                   help="color class for halved")
    _common_flags(p)
    p.set_defaults(fn=_cmd_derive)

    for verb, fn, blurb in (
            ("cayley", _cmd_cayley, "build Cay(G,S) from a group spec"),
            ("distance-sets", _cmd_distance_sets, "S_0..S_d and N_d")):
        p = sub.add_parser(verb, help=blurb)
        p.add_argument("--group", required=True,
                       help="group spec, e.g. 'dihedral(12)' or 'aw'")
        p.add_argument("--set", required=True,
                       help="comma-separated connection set labels")
        _common_flags(p)
        p.set_defaults(fn=fn)

    p = sub.add_parser("quotient", help="coset quotient matrix")
    p.add_argument("--group", required=True)
    p.add_argument("--set", required=True)
    p.add_argument("--subgroup", required=True,
                   help="generators of a normal subgroup, as labels")
    _common_flags(p)
    p.set_defaults(fn=_cmd_quotient)

    p = sub.add_parser("feasibility",
                       help="generalized polygon Cayley feasibility")
    p.add_argument("kind", choices=["gq", "gh"])
    p.add_argument("s", type=int)
    _common_flags(p)
    p.set_defaults(fn=_cmd_feasibility)

    p = sub.add_parser("diffset", help="search a (v,k,lambda) difference set")
    p.add_argument("v", type=int)
    p.add_argument("k", type=int)
    p.add_argument("lam", type=int)
    p.add_argument("--group", help="group spec (default cyclic(v))")
    _common_flags(p)
    p.set_defaults(fn=_cmd_diffset)

    p = sub.add_parser("census", help="re-check the catalogue tables")
    p.add_argument("--table", default="all", choices=["1", "2", "3", "4", "all"])
    p.add_argument("--no-cayley", action="store_true",
                   help="parameter checks only, skip Cayley verdicts")
    _common_flags(p)
    p.set_defaults(fn=_cmd_census)

    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.fn(args)
    except SystemExit as ex:
        return int(ex.code) if ex.code is not None else 0
    except (ValueError, FileNotFoundError) as ex:
        return _usage(str(ex))


if __name__ == "__main__":
    sys.exit(main())
