"""Structural analyses: isolated points, neighbor-set equivalence, quotients,
complete-bipartite form checking, and side-conditioned co-clique search.

All operations work on vertex ids and accept anything exposing
num_vertices / neighbors_mask / adjacent (ShiftGraph, UnlabeledGraph,
QuotientGraph).
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import WrongTypeError
from .graph import ShiftGraph


def isolated_vertices(g) -> list[int]:
    return [i for i in range(g.num_vertices) if g.neighbors_mask(i) == 0]


def common_neighbors(g, u: int, v: int) -> list[int]:
    m = g.neighbors_mask(u) & g.neighbors_mask(v)
    out = []
    while m:
        out.append((m & -m).bit_length() - 1)
        m &= m - 1
    return out


@dataclass(frozen=True)
class BipartiteWitness:
    """Complete bipartite piece {(a,x)} x {(x,b)} centered at ground element x."""

    center: int
    left: tuple[int, ...]   # vertex ids ending at center
    right: tuple[int, ...]  # vertex ids starting at center


@dataclass
class BipartiteFormReport:
    violations: list[tuple[int, int]]
    stars: list[BipartiteWitness]
    pairs_checked: int


def check_bipartite_form(g: ShiftGraph) -> BipartiteFormReport:
    """Verify every pair with >= 2 common neighbors shares an endpoint.

    Complete bipartite subgraphs of a 132 graph can only be the two stars
    around a single ground element; any violating pair is returned.
    """
    if str(g.pattern) != "132":
        raise WrongTypeError("bipartite form check applies to pattern 132")
    violations = []
    checked = 0
    for u in range(g.num_vertices):
        row_u = g.neighbors_mask(u)
        for v in range(u + 1, g.num_vertices):
            checked += 1
            if (row_u & g.neighbors_mask(v)).bit_count() >= 2:
                a = g.vertex(u)
                b = g.vertex(v)
                if a[0] != b[0] and a[1] != b[1]:
                    violations.append((u, v))
    stars = []
    for x in range(g.n):
        left = tuple(
            i for i in range(g.num_vertices) if g.vertex(i)[1] == x
        )
        right = tuple(
            i for i in range(g.num_vertices) if g.vertex(i)[0] == x
        )
        if left and right:
            stars.append(BipartiteWitness(x, left, right))
    return BipartiteFormReport(violations, stars, checked)


@dataclass
class EquivalencePartition:
    """Maximal groups of mutually non-adjacent vertices with equal neighbor sets."""

    classes: list[tuple[int, ...]]
    class_of: list[int]


def equivalence_classes(g) -> EquivalencePartition:
    """Group vertices by identical neighbor sets.

    Equal neighbor sets force non-adjacency (a vertex is never its own
    neighbor), so grouping by adjacency row is exact.
    """
    by_row: dict[int, list[int]] = {}
    for i in range(g.num_vertices):
        by_row.setdefault(g.neighbors_mask(i), []).append(i)
    classes = sorted((tuple(v) for v in by_row.values()), key=lambda c: c[0])
    class_of = [0] * g.num_vertices
    for ci, cls in enumerate(classes):
        for i in cls:
            class_of[i] = ci
    return EquivalencePartition(classes, class_of)


class QuotientGraph:
    """Equivalence classes collapsed to single size-labeled nodes."""

    def __init__(self, sizes: list[int], rows: list[int], members: list[tuple[int, ...]]):
        self.sizes = sizes
        self._rows = rows
        self.members = members
        self.num_vertices = len(sizes)

    def neighbors_mask(self, i: int) -> int:
        return self._rows[i]

    def adjacent(self, i: int, j: int) -> bool:
        return bool(self._rows[i] >> j & 1)

    def degree(self, i: int) -> int:
        return self._rows[i].bit_count()

    def isolated_nodes(self) -> list[int]:
        return [i for i in range(self.num_vertices) if self._rows[i] == 0]

    def components(self) -> list[tuple[int, ...]]:
        seen = [False] * self.num_vertices
        comps = []
        for s in range(self.num_vertices):
            if seen[s]:
                continue
            comp = []
            stack = [s]
            seen[s] = True
            while stack:
                u = stack.pop()
                comp.append(u)
                row = self._rows[u]
                while row:
                    v = (row & -row).bit_length() - 1
                    row &= row - 1
                    if not seen[v]:
                        seen[v] = True
                        stack.append(v)
            comps.append(tuple(sorted(comp)))
        return comps


def quotient(g, partition: EquivalencePartition) -> QuotientGraph:
    """Collapse each class to one node; adjacency is inherited from any member."""
    sizes = [len(c) for c in partition.classes]
    rows = [0] * len(sizes)
    for ci, cls in enumerate(partition.classes):
        rep_row = g.neighbors_mask(cls[0])
        mask = 0
        while rep_row:
            j = (rep_row & -rep_row).bit_length() - 1
            rep_row &= rep_row - 1
            mask |= 1 << partition.class_of[j]
        rows[ci] = mask
    return QuotientGraph(sizes, rows, list(partition.classes))


def blow_up(q: QuotientGraph) -> "tuple[int, list[tuple[int, int]]]":
    """Inverse of quotient: expand nodes back into independent sets.

    Returns (num_vertices, edges) with vertices grouped per class in order;
    used to verify quotient + blow-up reconstructs the original graph.
    """
    offsets = []
    total = 0
    for s in q.sizes:
        offsets.append(total)
        total += s
    edges = []
    for i in range(q.num_vertices):
        for j in range(i + 1, q.num_vertices):
            if q.adjacent(i, j):
                for x in range(q.sizes[i]):
                    for y in range(q.sizes[j]):
                        edges.append((offsets[i] + x, offsets[j] + y))
    return total, edges


def _maximal_cliques(candidates: int, adj: list[int]):
    """Bron-Kerbosch with pivoting over bitset adjacency."""
    out = []

    def bk(r: int, p: int, x: int):
        if p == 0 and x == 0:
            out.append(r)
            return
        pool = p | x
        pivot = (pool & -pool).bit_length() - 1
        best = pivot
        best_cover = (p & adj[pivot]).bit_count()
        scan = pool
        while scan:
            u = (scan & -scan).bit_length() - 1
            scan &= scan - 1
            c = (p & adj[u]).bit_count()
            if c > best_cover:
                best, best_cover = u, c
        ext = p & ~adj[best]
        while ext:
            v_bit = ext & -ext
            v = v_bit.bit_length() - 1
            ext &= ext - 1
            bk(r | v_bit, p & adj[v], x & adj[v])
            p &= ~v_bit
            x |= v_bit
    bk(0, candidates, 0)
    return out


def compatibility_rows(g, region_mask: int, condition: str) -> dict[int, int]:
    """Pairwise-compatible relation for side-conditioned co-clique search.

    Two vertices are compatible when non-adjacent and their neighbor sets
    inside the region are disjoint (or equal, under equal_or_disjoint).
    """
    ids = _bits(region_mask)
    nbr = {i: g.neighbors_mask(i) & region_mask for i in ids}
    rows = {i: 0 for i in ids}
    allow_equal = condition == "equal_or_disjoint"
    if condition not in ("disjoint_neighbor_sets", "equal_or_disjoint"):
        raise WrongTypeError(f"unknown side condition {condition!r}")
    for ai, u in enumerate(ids):
        for v in ids[ai + 1:]:
            if g.adjacent(u, v):
                continue
            inter = nbr[u] & nbr[v]
            if inter == 0 or (allow_equal and nbr[u] == nbr[v]):
                rows[u] |= 1 << v
                rows[v] |= 1 << u
    return rows


def is_maximal_coclique(g, members_mask: int, region_mask: int) -> bool:
    """No vertex of the region outside the set is non-adjacent to all of it."""
    union_nbrs = 0
    m = members_mask
    while m:
        i = (m & -m).bit_length() - 1
        m &= m - 1
        union_nbrs |= g.neighbors_mask(i)
    outside = region_mask & ~members_mask
    return outside & ~union_nbrs == 0


def max_cocliques_with_side_condition(g, region, condition: str) -> list[tuple[int, ...]]:
    """All maximal co-cliques within region whose members pairwise satisfy
    the side condition; deterministic lexicographic order.

    Maximality is in the co-clique sense: no further region vertex can be
    added while staying independent.  Every such set is also maximal under
    the (stricter) pairwise compatibility relation, so enumerate those and
    filter.
    """
    region_mask = 0
    for i in region:
        region_mask |= 1 << i
    if region_mask == 0:
        return []
    rows = compatibility_rows(g, region_mask, condition)
    adj = [rows.get(i, 0) for i in range(g.num_vertices)]
    found = _maximal_cliques(region_mask, adj)
    kept = [m for m in found if is_maximal_coclique(g, m, region_mask)]
    return sorted(tuple(_bits(m)) for m in kept)


def _bits(mask: int) -> list[int]:
    out = []
    while mask:
        out.append((mask & -mask).bit_length() - 1)
        mask &= mask - 1
    return out
