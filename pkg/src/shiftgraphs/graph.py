"""Finite shift graphs and symbolic degree machinery.

`build_graph` materializes G(n, tau) on the C(n, k) width-k subsets of
{0..n-1} in colexicographic order, testing every pair directly against the
pattern (the definitional route; the closed-form degree predictions are
checked against it, never derived from it).  The census operations answer
degree questions over ordinal grounds analytically, without materializing
anything.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from math import comb

from .errors import (
    AmbiguousCensusError,
    BudgetExceededError,
    ElementOutOfGroundError,
    OutOfRangeError,
    UnsupportedError,
    WidthMismatchError,
    WidthTooLargeError,
)
from .ordinal import INFINITE, Count, Ordinal, below_count, decompose, tail_count
from .pattern import TypePattern, pair_matches

BITSET_CAP = 1 << 16
DEFAULT_VERTEX_BUDGET = 100_000


def rank(v: tuple[int, ...]) -> int:
    """Colex rank of a sorted k-subset; independent of the ground size."""
    return sum(comb(c, j + 1) for j, c in enumerate(v))


def unrank(i: int, n: int, k: int) -> tuple[int, ...]:
    """The k-subset of {0..n-1} with colex rank i."""
    if not 0 <= i < comb(n, k):
        raise OutOfRangeError(f"rank {i} out of range for C({n},{k})")
    out = [0] * k
    while k > 0:
        n -= 1
        while comb(n, k) > i:
            n -= 1
        i -= comb(n, k)
        k -= 1
        out[k] = n
    return tuple(out)


class UnlabeledGraph:
    """Plain adjacency-only graph; the input form for reconstruction."""

    def __init__(self, num_vertices: int, edges):
        self.num_vertices = num_vertices
        rows = [0] * num_vertices
        for i, j in edges:
            if i == j or not (0 <= i < num_vertices and 0 <= j < num_vertices):
                raise OutOfRangeError(f"bad edge ({i},{j})")
            rows[i] |= 1 << j
            rows[j] |= 1 << i
        self._rows = rows

    def neighbors_mask(self, i: int) -> int:
        return self._rows[i]

    def adjacent(self, i: int, j: int) -> bool:
        return bool(self._rows[i] >> j & 1)

    def degree(self, i: int) -> int:
        return self._rows[i].bit_count()

    def edges(self):
        for i in range(self.num_vertices):
            row = self._rows[i] >> (i + 1) << (i + 1)
            while row:
                j = (row & -row).bit_length() - 1
                yield (i, j)
                row &= row - 1

    def permuted(self, perm: list[int]) -> "UnlabeledGraph":
        """Relabel: vertex i becomes perm[i]."""
        return UnlabeledGraph(
            self.num_vertices, [(perm[i], perm[j]) for i, j in self.edges()]
        )


class ShiftGraph:
    """Materialized G(n, pattern) with colex vertex indexing."""

    def __init__(self, n: int, pattern: TypePattern, vertices, rows=None, adj=None):
        self.n = n
        self.pattern = pattern
        self.width = pattern.width
        self._verts = vertices
        self.num_vertices = len(vertices)
        self._rows = rows
        self._adj = adj

    def vertex(self, i: int) -> tuple[int, ...]:
        return self._verts[i]

    def vertices(self):
        return list(self._verts)

    def index(self, v) -> int:
        r = rank(tuple(v))
        if not 0 <= r < self.num_vertices or self._verts[r] != tuple(v):
            raise OutOfRangeError(f"{v!r} is not a vertex of this graph")
        return r

    def neighbors_mask(self, i: int) -> int:
        if self._rows is not None:
            return self._rows[i]
        m = 0
        for j in self._adj[i]:
            m |= 1 << j
        return m

    def neighbors(self, i: int) -> list[int]:
        if self._adj is not None:
            return list(self._adj[i])
        out = []
        row = self._rows[i]
        while row:
            out.append((row & -row).bit_length() - 1)
            row &= row - 1
        return out

    def adjacent(self, i: int, j: int) -> bool:
        if self._rows is not None:
            return bool(self._rows[i] >> j & 1)
        return j in self._adj[i]

    def degree(self, i: int) -> int:
        if self._rows is not None:
            return self._rows[i].bit_count()
        return len(self._adj[i])

    def num_edges(self) -> int:
        return sum(self.degree(i) for i in range(self.num_vertices)) // 2

    def edges(self):
        for i in range(self.num_vertices):
            for j in self.neighbors(i):
                if j > i:
                    yield (i, j)

    def to_unlabeled(self) -> UnlabeledGraph:
        return UnlabeledGraph(self.num_vertices, list(self.edges()))


def build_graph(
    n: int,
    pattern: TypePattern,
    max_vertices: int = DEFAULT_VERTEX_BUDGET,
    bitset_cap: int = BITSET_CAP,
) -> ShiftGraph:
    """Materialize G(n, pattern) by testing every vertex pair."""
    k = pattern.width
    if n < k:
        raise WidthTooLargeError(f"pattern width {k} exceeds ground size {n}")
    v_count = comb(n, k)
    if v_count > max_vertices:
        raise BudgetExceededError(f"C({n},{k}) = {v_count} exceeds budget {max_vertices}")
    verts = sorted(combinations(range(n), k), key=lambda t: t[::-1])
    if v_count <= bitset_cap:
        rows = [0] * v_count
        for i in range(v_count):
            vi = verts[i]
            for j in range(i + 1, v_count):
                if pair_matches(vi, verts[j], pattern):
                    rows[i] |= 1 << j
                    rows[j] |= 1 << i
        return ShiftGraph(n, pattern, verts, rows=rows)
    adj = [set() for _ in range(v_count)]
    for i in range(v_count):
        vi = verts[i]
        for j in range(i + 1, v_count):
            if pair_matches(vi, verts[j], pattern):
                adj[i].add(j)
                adj[j].add(i)
    return ShiftGraph(n, pattern, verts, adj=[frozenset(s) for s in adj])


def to_json_dict(g: ShiftGraph) -> dict:
    return {
        "n": g.n,
        "type": str(g.pattern),
        "vertices": [list(v) for v in g.vertices()],
        "edges": [list(e) for e in sorted(g.edges())],
    }


def to_dot(g: ShiftGraph) -> str:
    lines = ["graph shiftgraph {"]
    for i in range(g.num_vertices):
        label = "(" + ",".join(str(c) for c in g.vertex(i)) + ")"
        lines.append(f'  {i} [label="{label}"];')
    for i, j in sorted(g.edges()):
        lines.append(f"  {i} -- {j};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def _as_ordinal(x) -> Ordinal:
    return x if isinstance(x, Ordinal) else Ordinal.from_int(x)


def degree_closed_form(alpha: Ordinal, a: int, b: int, v) -> Count:
    """Degree of v in G(alpha, sigma_{a,b}) from the two endpoint counts.

    The down-neighbors replace v's top block below its minimum, the
    up-neighbors shift past its maximum, so the degree is
    C(|below first|, a) + C(|between last and alpha|, a).
    """
    if a < 1:
        raise UnsupportedError("degree closed form needs a >= 1")
    if len(v) != a + b:
        raise WidthMismatchError(f"vertex width {len(v)} != a+b = {a + b}")
    elems = [_as_ordinal(x) for x in v]
    for lo, hi in zip(elems, elems[1:]):
        if not lo < hi:
            raise ElementOutOfGroundError(f"vertex {v!r} is not strictly increasing")
    for x in elems:
        if not x < alpha:
            raise ElementOutOfGroundError(f"element {x} not below ground {alpha}")
    return below_count(elems[0]).binomial(a) + tail_count(alpha, elems[-1]).binomial(a)


@dataclass
class DegreeCensus:
    """Counts of vertices (or (first,last) classes) per finite degree.

    `entries` is complete for all degrees <= horizon; degrees absent from it
    have count zero.  `complete` marks a finite ground, where the entries
    cover every vertex of the graph.
    """

    entries: dict[int, Count]
    scope: str  # "vertices" | "classes"
    a: int
    width: int
    complete: bool
    horizon: int
    ground: Ordinal = field(default_factory=Ordinal)

    def count(self, d: int) -> Count:
        if d > self.horizon and not self.complete:
            raise OutOfRangeError(f"degree {d} beyond census horizon {self.horizon}")
        return self.entries.get(d, Count(0))

    def constant_tail(self) -> tuple[int, Count] | None:
        """(start, value) if counts are constant from start to the horizon."""
        if self.complete or self.horizon < 1:
            return None
        tail_val = self.entries.get(self.horizon, Count(0))
        start = self.horizon
        for d in range(self.horizon - 1, -1, -1):
            if self.entries.get(d, Count(0)) == tail_val:
                start = d
            else:
                break
        if start == self.horizon:
            return None
        return start, tail_val


def auto_scope(a: int, b: int) -> str:
    """Vertex counting is informative only when there are no free middles."""
    return "vertices" if a + b <= 2 else "classes"


def finite_degree_census(
    alpha: Ordinal,
    a: int,
    b: int,
    scope: str = "auto",
    max_first: int = 20,
) -> DegreeCensus:
    """Census of finite degrees in G(alpha, sigma_{a,b}), computed analytically.

    Finite-degree vertices have a finite first coordinate n and a last
    coordinate m places below alpha; the census walks those (n, m) pairs and
    weighs each by its number of vertices (or by one per class).
    """
    if a < 1:
        raise UnsupportedError("census requires a >= 1")
    w = a + b
    if scope == "auto":
        scope = auto_scope(a, b)
    if scope not in ("vertices", "classes"):
        raise UnsupportedError(f"unknown scope {scope!r}")
    limit, k = decompose(alpha)
    entries: dict[int, Count] = {}

    def bump(d: int, c: Count):
        entries[d] = entries.get(d, Count(0)) + c

    if limit.is_zero:
        n_ground = k
        for first in range(n_ground):
            for m in range(n_ground - first):
                last = n_ground - 1 - m
                if last < first:
                    continue
                if w == 1:
                    if last != first:
                        continue
                    mult = 1
                else:
                    gap = last - first - 1
                    if gap < w - 2:
                        continue
                    mult = comb(gap, w - 2)
                d = comb(first, a) + comb(m, a)
                bump(d, Count(1) if scope == "classes" else Count(mult))
        horizon = max(entries) if entries else 0
        return DegreeCensus(entries, scope, a, w, True, horizon, alpha)

    horizon = comb(max_first + 1, a) - 1
    if w == 1:
        # First and last coincide; no element is both finite and in the tail.
        return DegreeCensus({}, scope, a, w, False, horizon, alpha)
    for first in range(max_first + 1):
        for m in range(k):
            d = comb(first, a) + comb(m, a)
            if d > horizon:
                continue
            if scope == "classes" or w == 2:
                bump(d, Count(1))
            else:
                bump(d, INFINITE)
    return DegreeCensus(entries, scope, a, w, False, horizon, alpha)


def _finite_class_count(n: int, w: int) -> int:
    """Number of nonempty (first, last) classes in G(n, sigma) of width w."""
    total = 0
    for first in range(n):
        for last in range(first, n):
            if w == 1:
                total += last == first
            else:
                total += last > first and last - first - 1 >= w - 2
    return total


def infer_k(census: DegreeCensus, stable_windows: int = 3) -> int:
    """Recover the finite tail k of the ground ordinal from its census.

    Over an infinite ground the counts in each degree window
    [C(n,a), C(n+1,a)) eventually sum to exactly k; for a = 1 the windows are
    single degrees and this is the claim that k is the stable vertex count.
    Over a finite ground the census is complete and k is the ground size,
    recovered from the total mass.
    """
    a = census.a
    w = census.width
    if census.complete:
        total = Count(0)
        for c in census.entries.values():
            total = total + c
        if total.is_infinite:
            raise AmbiguousCensusError("complete census cannot be infinite")
        t = total.value
        if census.scope == "vertices":
            for n in range(w, w + 10_000):
                if comb(n, w) == t:
                    return n
                if comb(n, w) > t:
                    break
            if t == 0:
                return 0
            raise AmbiguousCensusError(f"total {t} is not C(n,{w}) for any n")
        for n in range(w, w + 10_000):
            classes = _finite_class_count(n, w)
            if classes == t:
                return n
            if classes > t:
                break
        if t == 0:
            return 0
        raise AmbiguousCensusError(f"total {t} matches no finite ground")

    for c in census.entries.values():
        if c.is_infinite:
            raise AmbiguousCensusError(
                "vertex-scope census over an infinite ground with free middle "
                "coordinates; use class scope"
            )
    sums = []
    n = a
    while comb(n + 1, a) - 1 <= census.horizon:
        lo, hi = comb(n, a), comb(n + 1, a)
        sums.append(sum(census.entries.get(d, Count(0)).value for d in range(lo, hi)))
        n += 1
    if len(sums) < stable_windows:
        raise AmbiguousCensusError("census horizon too small to stabilize")
    tail = sums[-stable_windows:]
    if any(s != tail[0] for s in tail):
        raise AmbiguousCensusError(f"window sums did not stabilize: {sums[-6:]}")
    return tail[0]
