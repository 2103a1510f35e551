"""Command-line interface: build/export, analysis, census, reconstruction,
coloring, automorphism, selftest.

Output is deterministic: JSON keys are sorted, lists are in fixed orders,
and big integers are serialized as decimal strings.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import selftest as selftest_mod
from .automorphism import aut_order_via_classes, brute_aut_order, compare_aut
from .coloring import exact_chromatic, greedy_coloring
from .errors import ShiftGraphError, UsageError
from .graph import UnlabeledGraph, build_graph, finite_degree_census, infer_k, to_dot, to_json_dict
from .ordinal import parse_ordinal
from .pattern import parse_type
from .reconstruct import reconstruct
from .rng import shuffled_permutation
from .structure import check_bipartite_form, equivalence_classes, isolated_vertices, quotient


def _emit(args, payload) -> None:
    text = json.dumps(payload, sort_keys=True, separators=(",", ":")) + "\n"
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _emit_text(args, text: str) -> None:
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _load_graph_json(path: str) -> tuple[UnlabeledGraph, dict]:
    with open(path) as fh:
        data = json.load(fh)
    if "edges" not in data:
        raise UsageError("input JSON needs an 'edges' array")
    if "vertices" in data:
        num = len(data["vertices"])
    elif "num_vertices" in data:
        num = int(data["num_vertices"])
    else:
        raise UsageError("input JSON needs 'vertices' or 'num_vertices'")
    return UnlabeledGraph(num, [tuple(e) for e in data["edges"]]), data


def _cmd_build(args) -> int:
    g = build_graph(args.n, parse_type(args.type), max_vertices=args.budget_vertices)
    if args.format == "dot":
        _emit_text(args, to_dot(g))
    elif args.format == "text":
        _emit_text(args, f"G({g.n},{g.pattern}): {g.num_vertices} vertices, {g.num_edges()} edges\n")
    else:
        data = to_json_dict(g)
        if args.seed is not None:
            perm = shuffled_permutation(g.num_vertices, args.seed)
            data = {
                "n": g.n,
                "type": str(g.pattern),
                "num_vertices": g.num_vertices,
                "edges": sorted(sorted((perm[i], perm[j])) for i, j in g.edges()),
            }
        _emit(args, data)
    return 0


def _cmd_analyze(args) -> int:
    g = build_graph(args.n, parse_type(args.type), max_vertices=args.budget_vertices)
    part = equivalence_classes(g)
    q = quotient(g, part)
    payload = {
        "n": g.n,
        "type": str(g.pattern),
        "num_vertices": g.num_vertices,
        "num_edges": g.num_edges(),
        "isolated": [list(g.vertex(i)) for i in isolated_vertices(g)],
        "equivalence_classes": {
            "count": len(part.classes),
            "sizes": sorted((len(c) for c in part.classes), reverse=True),
        },
        "quotient": {
            "nodes": q.num_vertices,
            "isolated_nodes": len(q.isolated_nodes()),
            "components": len(q.components()),
        },
    }
    if str(g.pattern) == "132":
        rep = check_bipartite_form(g)
        payload["bipartite_form"] = {
            "violations": rep.violations,
            "pairs_checked": rep.pairs_checked,
            "stars": len(rep.stars),
        }
    _emit(args, payload)
    return 0


def _cmd_census(args) -> int:
    alpha = parse_ordinal(args.ground)
    pat = parse_type(args.type)
    ab = pat.sigma_split()
    if ab is None or ab[0] < 1:
        raise UsageError(f"census needs a sigma pattern with a >= 1, got {pat}")
    census = finite_degree_census(alpha, ab[0], ab[1], scope=args.scope)
    entries: dict[str, object] = {}
    tail = census.constant_tail()
    if tail is not None:
        start, val = tail
        for d in sorted(census.entries):
            if d < start:
                entries[str(d)] = str(census.entries[d])
        entries[f"{start}+"] = str(val)
    else:
        for d in sorted(census.entries):
            entries[str(d)] = str(census.entries[d])
    payload = {"ground": str(alpha), "type": str(pat), "scope": census.scope,
               "census": entries}
    try:
        payload["inferred_k"] = infer_k(census)
    except ShiftGraphError as e:
        payload["inferred_k_error"] = str(e)
    _emit(args, payload)
    return 0


def _cmd_reconstruct(args) -> int:
    pat = parse_type(args.type)
    g, _ = _load_graph_json(args.infile)
    if args.seed is not None:
        g = g.permuted(shuffled_permutation(g.num_vertices, args.seed))
    rep = reconstruct(g, pat)
    payload = {
        "n": rep.n,
        "type": str(pat),
        "labelings": len(rep.labelings),
        "block_sizes": [len(b) for b in rep.trace],
        "assignments": [
            {"orientation": lab.orientation,
             "vertices": [list(t) for t in lab.assignment]}
            for lab in rep.labelings
        ],
    }
    _emit(args, payload)
    return 0


def _cmd_chromatic(args) -> int:
    g = build_graph(args.n, parse_type(args.type), max_vertices=args.budget_vertices)
    if args.exact:
        res = exact_chromatic(g, time_budget=args.budget_seconds)
        payload = {
            "n": g.n,
            "type": str(g.pattern),
            "chi": res.chi,
            "lower": res.lower,
            "upper": res.upper,
            "proof": res.proof,
            "refuted_on": res.refuted_on,
            "injection_lower_bound": res.injection_bound,
            "witness": None if res.witness is None else list(res.witness.colors),
        }
    else:
        col = greedy_coloring(g, "degree_desc")
        payload = {
            "n": g.n,
            "type": str(g.pattern),
            "upper": col.num_colors,
            "witness": list(col.colors),
        }
    _emit(args, payload)
    return 0


def _cmd_aut(args) -> int:
    pat = parse_type(args.type)
    if args.compare:
        rep = compare_aut(args.n, pat, build_budget=args.budget_vertices)
        _emit(args, rep.to_dict())
        return 0
    g = build_graph(args.n, pat, max_vertices=args.budget_vertices)
    res = aut_order_via_classes(g)
    payload = {
        "n": g.n,
        "type": str(pat),
        "order_decimal": str(res.order),
        "factored": res.class_part.describe()
        + (f" x Q[{res.quotient_aut_order}]" if res.quotient_aut_order > 1 else ""),
        "quotient_aut_order": str(res.quotient_aut_order),
        "class_sizes": list(res.class_sizes),
    }
    if args.brute:
        payload["brute_order"] = str(brute_aut_order(g))
    _emit(args, payload)
    return 0


def _cmd_selftest(args) -> int:
    report = selftest_mod.run(quick=args.quick, corrupt=args.corrupt)
    for name, ok, detail in report.results:
        sys.stdout.write(f"SELFTEST {name}: {'PASS' if ok else 'FAIL'}{detail}\n")
    return 0 if report.ok else 1


def make_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="shiftgraphs",
                                description="Generalized shift graph toolkit")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, n=False, ground=False, typ=True, infile=False):
        if n:
            sp.add_argument("--n", type=int, required=True)
        if ground:
            sp.add_argument("--ground", required=True, help="ordinal literal, e.g. w+3")
        if typ:
            sp.add_argument("--type", required=True, help="pattern word, e.g. 132")
        if infile:
            sp.add_argument("--in", dest="infile", required=True)
        sp.add_argument("--out", default=None)
        sp.add_argument("--format", choices=["json", "dot", "text"], default="json")
        sp.add_argument("--seed", type=int, default=None)
        sp.add_argument("--budget-vertices", type=int, default=100_000)
        sp.add_argument("--budget-seconds", type=float, default=None)

    sp = sub.add_parser("build", help="materialize and export G(n, type)")
    common(sp, n=True)
    sp.set_defaults(func=_cmd_build)

    sp = sub.add_parser("analyze", help="structural report for G(n, type)")
    common(sp, n=True)
    sp.set_defaults(func=_cmd_analyze)

    sp = sub.add_parser("census", help="symbolic degree census over an ordinal ground")
    common(sp, ground=True)
    sp.add_argument("--scope", choices=["auto", "vertices", "classes"], default="auto")
    sp.set_defaults(func=_cmd_census)

    sp = sub.add_parser("reconstruct", help="recover n and labelings from adjacency JSON")
    common(sp, infile=True)
    sp.set_defaults(func=_cmd_reconstruct)

    sp = sub.add_parser("chromatic", help="chromatic number of G(n, type)")
    common(sp, n=True)
    group = sp.add_mutually_exclusive_group()
    group.add_argument("--exact", action="store_true", default=True)
    group.add_argument("--bounds", dest="exact", action="store_false")
    sp.set_defaults(func=_cmd_chromatic)

    sp = sub.add_parser("aut", help="automorphism group order of G(n, type)")
    common(sp, n=True)
    sp.add_argument("--compare", action="store_true")
    sp.add_argument("--brute", action="store_true")
    sp.set_defaults(func=_cmd_aut)

    sp = sub.add_parser("selftest", help="run the reduced property suite")
    sp.add_argument("--quick", action="store_true")
    sp.add_argument("--corrupt", action="store_true", help=argparse.SUPPRESS)
    sp.set_defaults(func=_cmd_selftest)
    return p


def main(argv=None) -> int:
    parser = make_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return 2 if e.code not in (0, None) else 0
    try:
        return args.func(args)
    except ShiftGraphError as e:
        sys.stdout.write(json.dumps(
            {"error": type(e).__name__, "message": str(e)},
            sort_keys=True, separators=(",", ":")) + "\n")
        return 1


if __name__ == "__main__":
    sys.exit(main())
