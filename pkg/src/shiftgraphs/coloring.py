"""Chromatic numbers and the two finite lower-bound mechanisms.

The exact solver is a DSATUR-ordered branch and bound with clique seeding
and color-symmetry breaking.  Infeasibility of chi-1 is always established
by exhausting a search: for shift-graph inputs the refutation may run on a
ground-prefix-induced subgraph (itself a shift graph, so its infeasibility
transfers), which is what keeps the larger instances quick.

The injection certificate and the partition tree are the finite shadows of
the infinite chromatic arguments: a proper t-coloring of a 132 graph forces
an injection of the ground set into the subsets of [t] (hence 2^t >= n),
and the color-partition tree must carry pairwise distinct colors along
every branch.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from math import ceil, log2

from .errors import BudgetExceededError, WrongTypeError
from .graph import ShiftGraph, build_graph


@dataclass(frozen=True)
class Coloring:
    colors: tuple[int, ...]
    num_colors: int


def properness_violation(g, coloring: Coloring):
    """First monochromatic edge, or None if the coloring is proper."""
    c = coloring.colors
    for i in range(g.num_vertices):
        row = g.neighbors_mask(i) >> (i + 1) << (i + 1)
        while row:
            j = (row & -row).bit_length() - 1
            row &= row - 1
            if c[i] == c[j]:
                return (i, j)
    return None


def greedy_coloring(g, order: str = "colex") -> Coloring:
    """First-fit coloring; upper bound seed for the exact search."""
    if order == "colex":
        seq = range(g.num_vertices)
    elif order == "degree_desc":
        seq = sorted(range(g.num_vertices), key=lambda i: (-g.degree(i), i))
    else:
        raise WrongTypeError(f"unknown order {order!r}")
    colors = [-1] * g.num_vertices
    used = 0
    for v in seq:
        taken = 0
        row = g.neighbors_mask(v)
        while row:
            u = (row & -row).bit_length() - 1
            row &= row - 1
            if colors[u] >= 0:
                taken |= 1 << colors[u]
        c = 0
        while taken >> c & 1:
            c += 1
        colors[v] = c
        used = max(used, c + 1)
    return Coloring(tuple(colors), max(used, 1 if g.num_vertices else 0))


def greedy_max_clique(g) -> list[int]:
    order = sorted(range(g.num_vertices), key=lambda i: (-g.degree(i), i))
    clique: list[int] = []
    mask = ~0
    for v in order:
        if all(g.adjacent(v, u) for u in clique):
            clique.append(v)
            mask &= g.neighbors_mask(v)
    return clique


class _SearchBudget:
    def __init__(self, deadline: float | None, node_cap: int | None = None):
        self.deadline = deadline
        self.node_cap = node_cap
        self.nodes = 0

    def tick(self):
        self.nodes += 1
        if self.node_cap is not None and self.nodes > self.node_cap:
            raise BudgetExceededError("coloring search node cap exhausted")
        if self.deadline is not None and self.nodes % 4096 == 0:
            if time.monotonic() > self.deadline:
                raise BudgetExceededError("coloring search budget exhausted")


def find_coloring(g, t: int, budget: _SearchBudget | None = None) -> Coloring | None:
    """Proper t-coloring, or None after exhausting the search space.

    Backtracking over DSATUR order with colors capped at one above the
    number already used; a greedy clique is pre-colored (its vertices must
    receive distinct colors, so this loses no colorings up to renaming).
    """
    n = g.num_vertices
    if n == 0:
        return Coloring((), 0)
    if t < 1:
        return None
    clique = greedy_max_clique(g)
    if len(clique) > t:
        return None
    colors = [-1] * n
    forbidden = [0] * n  # bitmask of colors excluded by colored neighbors
    full = (1 << t) - 1
    for c, v in enumerate(clique):
        colors[v] = c
        row = g.neighbors_mask(v)
        while row:
            u = (row & -row).bit_length() - 1
            row &= row - 1
            forbidden[u] |= 1 << c
    uncolored = [i for i in range(n) if colors[i] < 0]
    if budget is None:
        budget = _SearchBudget(None)

    def pick() -> int | None:
        best = None
        best_key = None
        for v in uncolored:
            if colors[v] >= 0:
                continue
            sat = forbidden[v].bit_count()
            key = (-sat, -g.degree(v), v)
            if best_key is None or key < best_key:
                best, best_key = v, key
        return best

    def assign(v: int, c: int) -> list[int]:
        colors[v] = c
        touched = []
        bit = 1 << c
        row = g.neighbors_mask(v)
        while row:
            u = (row & -row).bit_length() - 1
            row &= row - 1
            if colors[u] < 0 and not forbidden[u] & bit:
                forbidden[u] |= bit
                touched.append(u)
        return touched

    def undo(v: int, c: int, touched: list[int]):
        colors[v] = -1
        bit = 1 << c
        for u in touched:
            forbidden[u] &= ~bit

    def solve(remaining: int, used: int) -> bool:
        budget.tick()
        if remaining == 0:
            return True
        v = pick()
        allowed = ~forbidden[v] & full
        cap = min(used + 1, t)
        allowed &= (1 << cap) - 1
        while allowed:
            c = (allowed & -allowed).bit_length() - 1
            allowed &= allowed - 1
            touched = assign(v, c)
            if solve(remaining - 1, max(used, c + 1)):
                return True
            undo(v, c, touched)
        return False

    used0 = len(clique)
    if solve(len(uncolored), used0):
        t_used = max(colors) + 1
        return Coloring(tuple(colors), t_used)
    return None


@dataclass
class ChromaticResult:
    chi: int | None
    lower: int
    upper: int
    witness: Coloring | None
    proof: str  # exhausted | clique_bound | budget_exceeded
    refuted_on: int | None = None  # ground size of the subgraph that refuted chi-1
    injection_bound: int | None = None  # reported for 132 inputs, never used to prune


def injection_lower_bound(n: int) -> int:
    """ceil(log2 n): a proper t-coloring of G(n,132) forces 2^t >= n."""
    return max(1, ceil(log2(n))) if n >= 2 else 1


_PREFIX_NODE_CAP = 200_000


def _refute_on_prefix(g, t: int, deadline: float | None) -> int | None:
    """Ground size of a proper induced prefix subgraph with no t-coloring.

    Induced subgraphs only lose colorings, so an infeasible G(n', tau) with
    n' < n proves G(n, tau) infeasible too.  Each prefix search is
    node-capped: a cap hit is merely inconclusive for that prefix.
    """
    if not isinstance(g, ShiftGraph):
        return None
    for np in range(g.width + 1, g.n):
        sub = build_graph(np, g.pattern)
        if sub.num_vertices >= g.num_vertices:
            break
        try:
            if find_coloring(sub, t, _SearchBudget(deadline, _PREFIX_NODE_CAP)) is None:
                return np
        except BudgetExceededError as e:
            if "node cap" not in str(e):
                raise
    return None


def exact_chromatic(g, time_budget: float | None = None) -> ChromaticResult:
    """Exact chromatic number with a proper witness and an optimality proof."""
    deadline = time.monotonic() + time_budget if time_budget else None
    budget = _SearchBudget(deadline)
    inj = None
    if isinstance(g, ShiftGraph) and str(g.pattern) == "132":
        inj = injection_lower_bound(g.n)
    if g.num_vertices == 0:
        return ChromaticResult(0, 0, 0, Coloring((), 0), "clique_bound", None, inj)
    candidates = [greedy_coloring(g, "colex"), greedy_coloring(g, "degree_desc")]
    if inj is not None:
        candidates.append(binary_msb_coloring(g))
    best = min(candidates, key=lambda c: c.num_colors)
    clique = greedy_max_clique(g)
    lower = max(1, len(clique))
    try:
        refuted_on = None
        t = best.num_colors - 1
        while t >= lower:
            scope = _refute_on_prefix(g, t, deadline)
            if scope is not None:
                refuted_on = scope
                break
            found = find_coloring(g, t, budget)
            if found is None:
                refuted_on = g.n if isinstance(g, ShiftGraph) else None
                break
            best = found
            t = found.num_colors - 1
        chi = best.num_colors
        if chi == lower and refuted_on is None:
            return ChromaticResult(chi, lower, chi, best, "clique_bound", None, inj)
        return ChromaticResult(chi, chi, chi, best, "exhausted", refuted_on, inj)
    except BudgetExceededError:
        return ChromaticResult(None, lower, best.num_colors, best, "budget_exceeded", None, inj)


def binary_msb_coloring(g: ShiftGraph) -> Coloring:
    """Explicit ceil(log2 n)-coloring of G(n,132): color (x,y) by the
    position of the highest bit where x and y differ."""
    if str(g.pattern) != "132":
        raise WrongTypeError("binary coloring applies to pattern 132")
    cols = []
    for i in range(g.num_vertices):
        x, y = g.vertex(i)
        cols.append((x ^ y).bit_length() - 1)
    t = max(cols) + 1 if cols else 0
    return Coloring(tuple(cols), max(t, 1))


@dataclass
class InjectionReport:
    mapping: dict[int, frozenset[int]]  # ground element -> up-edge color set
    status: str  # Injective | Collision
    collision: tuple[int, int] | None = None
    witness_pair: tuple[int, int] | None = None  # equal-colored adjacent vertex ids


def injection_certificate(g: ShiftGraph, coloring: Coloring) -> InjectionReport:
    """Check injectivity of x -> {colors of (x, y) : y > x} for a 132 graph.

    For a proper coloring this map is injective; on a collision the forced
    (or already improper) equal-colored adjacent pair is returned.
    """
    if str(g.pattern) != "132":
        raise WrongTypeError("injection certificate applies to pattern 132")
    f: dict[int, set[int]] = {x: set() for x in range(g.n)}
    for i in range(g.num_vertices):
        x, y = g.vertex(i)
        f[x].add(coloring.colors[i])
    frozen = {x: frozenset(s) for x, s in f.items()}
    by_set: dict[frozenset, int] = {}
    for x in range(g.n):
        if frozen[x] in by_set:
            x0 = by_set[frozen[x]]
            pair_id = g.index((x0, x))
            c0 = coloring.colors[pair_id]
            for y in range(x + 1, g.n):
                j = g.index((x, y))
                if coloring.colors[j] == c0:
                    return InjectionReport(frozen, "Collision", (x0, x), (pair_id, j))
            raise AssertionError("collision without witness contradicts f definition")
        by_set[frozen[x]] = x
    return InjectionReport(frozen, "Injective")


@dataclass
class PartitionTreeNode:
    pivot: int
    residual: tuple[int, ...]
    edge_color: int | None
    children: list["PartitionTreeNode"]


def partition_tree(g: ShiftGraph, coloring: Coloring) -> PartitionTreeNode:
    """Color-partition tree over the ground set of a 132 graph.

    Each node's residual is split by the color of (pivot, t); children pivot
    at the minimum of their part.  Proper colorings give pairwise distinct
    colors along every branch.
    """
    if str(g.pattern) != "132":
        raise WrongTypeError("partition tree applies to pattern 132")

    def expand(pivot: int, residual: tuple[int, ...], color: int | None) -> PartitionTreeNode:
        parts: dict[int, list[int]] = {}
        for t in residual:
            c = coloring.colors[g.index((pivot, t))]
            parts.setdefault(c, []).append(t)
        children = []
        for c in sorted(parts):
            sub = parts[c]
            children.append(expand(sub[0], tuple(sub[1:]), c))
        return PartitionTreeNode(pivot, residual, color, children)

    return expand(0, tuple(range(1, g.n)), None)


def branches(node: PartitionTreeNode, prefix=()):
    """Yield the color sequence of every root-to-leaf branch."""
    path = prefix if node.edge_color is None else prefix + (node.edge_color,)
    if not node.children:
        yield path
        return
    for ch in node.children:
        yield from branches(ch, path)


def branch_colors_distinct(root: PartitionTreeNode) -> bool:
    return all(len(b) == len(set(b)) for b in branches(root))


def tree_pivots(root: PartitionTreeNode) -> list[int]:
    out = [root.pivot]
    for ch in root.children:
        out.extend(tree_pivots(ch))
    return out
