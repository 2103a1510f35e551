"""Reduced property suite runnable without pytest; nonzero exit on failure.

The corrupt flag flips one edge of the reconstruction input as a negative
control: the reconstruction suite must then fail.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import ceil, comb, log2

from .automorphism import aut_order_via_classes, brute_aut_order
from .coloring import (
    branch_colors_distinct,
    exact_chromatic,
    injection_certificate,
    partition_tree,
    properness_violation,
)
from .errors import ShiftGraphError
from .graph import UnlabeledGraph, build_graph, degree_closed_form, finite_degree_census, infer_k
from .ordinal import Ordinal
from .pattern import parse_type, sigma, swap_type, type_of_pair
from .reconstruct import reconstruct
from .rng import shuffled_permutation
from .structure import check_bipartite_form, isolated_vertices


@dataclass
class SelftestReport:
    results: list[tuple[str, bool, str]] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(r[1] for r in self.results)

    def add(self, name: str, ok: bool, detail: str = ""):
        self.results.append((name, ok, f" ({detail})" if detail else ""))


def _suite_types(rep: SelftestReport):
    ok = (
        str(type_of_pair((1, 5, 6), (3, 5, 8))) == "12312"
        and str(type_of_pair((1, 3, 5), (2, 4, 6))) == "121212"
        and str(sigma(1, 1)) == "132"
        and str(swap_type(parse_type("132"))) == "231"
    )
    rep.add("type-oracle", ok)


def _suite_degrees(rep: SelftestReport, quick: bool):
    n_max = 7 if quick else 9
    bad = 0
    for a, b in [(1, 1), (2, 1), (1, 2)]:
        pat = sigma(a, b)
        for n in range(a + b, n_max + 1):
            g = build_graph(n, pat)
            for i in range(g.num_vertices):
                pred = degree_closed_form(Ordinal.from_int(n), a, b, g.vertex(i))
                if pred.value != g.degree(i):
                    bad += 1
    rep.add("degree-closed-form", bad == 0, f"{bad} mismatches" if bad else "")


def _suite_isolated(rep: SelftestReport):
    ok = True
    for n in range(2, 10):
        ok = ok and len(isolated_vertices(build_graph(n, parse_type("132")))) == 1
    for n in range(5, 10):
        ok = ok and len(isolated_vertices(build_graph(n, parse_type("11322")))) == 4 * (n - 3)
    rep.add("isolated-counts", ok)


def _suite_bipartite(rep: SelftestReport, quick: bool):
    n_max = 7 if quick else 9
    ok = all(
        not check_bipartite_form(build_graph(n, parse_type("132"))).violations
        for n in range(3, n_max + 1)
    )
    rep.add("bipartite-form", ok)


def _suite_census(rep: SelftestReport):
    ok = True
    for k in range(0, 7):
        census = finite_degree_census(Ordinal.omega() + k, 1, 1, "vertices")
        for d in range(0, census.horizon + 1):
            want = min(d + 1, k) if k else 0
            ok = ok and census.count(d).value == want
        ok = ok and infer_k(census) == k
    rep.add("census-claim0", ok)


def _suite_reconstruct(rep: SelftestReport, quick: bool, corrupt: bool):
    combos = [(5, "132"), (6, "132")] if quick else [(5, "132"), (6, "132"), (6, "1332"), (7, "11322")]
    seeds = range(3 if quick else 10)
    ok = True
    detail = ""
    for n, tau_s in combos:
        pat = parse_type(tau_s)
        g = build_graph(n, pat)
        edges = list(g.edges())
        if corrupt:
            edges = edges[1:] + [(0, g.num_vertices - 1) if not g.adjacent(0, g.num_vertices - 1) else edges[0]]
        base = UnlabeledGraph(g.num_vertices, edges)
        for seed in seeds:
            perm = shuffled_permutation(g.num_vertices, seed)
            try:
                r = reconstruct(base.permuted(perm), pat)
                if r.n != n or not r.labelings:
                    ok = False
            except ShiftGraphError as e:
                ok = False
                detail = f"{tau_s} n={n} seed={seed}: {type(e).__name__}"
    rep.add("reconstruct-roundtrip", ok, detail)


def _suite_chromatic(rep: SelftestReport, quick: bool):
    n_max = 8 if quick else 10
    ok = True
    for n in range(2, n_max + 1):
        g = build_graph(n, parse_type("132"))
        res = exact_chromatic(g)
        if res.chi != max(1, ceil(log2(n))):
            ok = False
        if properness_violation(g, res.witness) is not None:
            ok = False
        if injection_certificate(g, res.witness).status != "Injective":
            ok = False
        if not branch_colors_distinct(partition_tree(g, res.witness)):
            ok = False
    rep.add("chromatic", ok)


def _suite_aut(rep: SelftestReport, quick: bool):
    n_max = 6 if quick else 7
    ok = True
    for tau_s in ["132", "1122", "11322"]:
        pat = parse_type(tau_s)
        for n in range(pat.width, n_max + 1):
            g = build_graph(n, pat)
            if brute_aut_order(g) != aut_order_via_classes(g).order:
                ok = False
    rep.add("aut-consistency", ok)


def _suite_trivial(rep: SelftestReport):
    ok = True
    for n in range(2, 8):
        g = build_graph(n, parse_type("12"))
        ok = ok and g.num_edges() == comb(n, 2)
        g = build_graph(n, parse_type("3"))
        ok = ok and g.num_vertices == n and g.num_edges() == 0
        g = build_graph(n, parse_type("33"))
        ok = ok and g.num_vertices == comb(n, 2) and g.num_edges() == 0
    rep.add("trivial-families", ok)


def run(quick: bool = False, corrupt: bool = False) -> SelftestReport:
    rep = SelftestReport()
    _suite_types(rep)
    _suite_degrees(rep, quick)
    _suite_isolated(rep)
    _suite_bipartite(rep, quick)
    _suite_census(rep)
    _suite_reconstruct(rep, quick, corrupt)
    _suite_chromatic(rep, quick)
    _suite_aut(rep, quick)
    _suite_trivial(rep)
    return rep
