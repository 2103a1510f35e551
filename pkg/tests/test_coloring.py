from itertools import product
from math import ceil, log2

import pytest

from shiftgraphs import (
    binary_msb_coloring,
    exact_chromatic,
    find_coloring,
    greedy_coloring,
    injection_certificate,
    injection_lower_bound,
    parse_type,
    partition_tree,
)
from shiftgraphs.coloring import (
    Coloring,
    branch_colors_distinct,
    branches,
    greedy_max_clique,
    properness_violation,
    tree_pivots,
)
from shiftgraphs.errors import WrongTypeError


def test_greedy_examples(graph):
    assert greedy_coloring(graph(2, "132")).num_colors == 1
    g4 = graph(4, "132")
    c = greedy_coloring(g4)
    assert c.num_colors <= 3 and properness_violation(g4, c) is None
    k4 = graph(4, "12")
    assert greedy_coloring(k4).num_colors == 4


def test_exact_small_brute_oracle(graph):
    # independent oracle: enumerate all colorings outright
    g = graph(4, "132")
    assert not _any_proper(g, 1)
    assert _any_proper(g, 2)
    assert exact_chromatic(g).chi == 2
    g5 = graph(5, "132")
    assert not _any_proper(g5, 2)
    assert _any_proper(g5, 3)
    assert exact_chromatic(g5).chi == 3


def _any_proper(g, t):
    for assign in product(range(t), repeat=g.num_vertices):
        if properness_violation(g, Coloring(assign, t)) is None:
            return True
    return False


def test_exact_chromatic_132_formula(graph):
    for n in range(2, 13):
        res = exact_chromatic(graph(n, "132"))
        assert res.chi == max(1, ceil(log2(n)))
        assert properness_violation(graph(n, "132"), res.witness) is None
        assert res.witness.num_colors == res.chi


def test_exact_chromatic_complete(graph):
    res = exact_chromatic(graph(5, "12"))
    assert res.chi == 5 and res.proof == "clique_bound"


def test_monotonicity(graph):
    prev = 0
    for n in range(2, 11):
        chi = exact_chromatic(graph(n, "132")).chi
        assert chi >= prev
        prev = chi


def test_find_coloring_unsat_when_injection_forces(graph):
    for n in range(3, 13):
        g = graph(n, "132")
        t = 1
        while (1 << t) < n:
            assert find_coloring(g, t) is None, (n, t)
            t += 1


def test_binary_msb_coloring(graph):
    for n in [2, 5, 8, 13, 16]:
        g = graph(n, "132")
        c = binary_msb_coloring(g)
        assert properness_violation(g, c) is None
        assert c.num_colors == max(1, ceil(log2(n)))
    with pytest.raises(WrongTypeError):
        binary_msb_coloring(graph(5, "1122"))


def test_injection_lower_bound_values():
    assert injection_lower_bound(2) == 1
    assert injection_lower_bound(5) == 3
    assert injection_lower_bound(16) == 4


def test_injection_certificate_proper(graph):
    g = graph(8, "132")
    res = exact_chromatic(g)
    rep = injection_certificate(g, res.witness)
    assert rep.status == "Injective"
    assert len({rep.mapping[x] for x in range(8)}) == 8
    assert all(rep.mapping[x] <= frozenset(range(res.chi)) for x in range(8))


def test_injection_certificate_trivial(graph):
    g = graph(2, "132")
    rep = injection_certificate(g, Coloring((0,), 1))
    assert rep.status == "Injective"


def test_injection_certificate_collision(graph):
    g = graph(5, "132")
    rep = injection_certificate(g, Coloring((0,) * g.num_vertices, 1))
    assert rep.status == "Collision"
    i, j = rep.witness_pair
    assert g.adjacent(i, j)


def test_partition_tree_structure(graph):
    g = graph(4, "132")
    res = exact_chromatic(g)
    root = partition_tree(g, res.witness)
    assert root.pivot == 0
    assert sorted(tree_pivots(root)) == list(range(4))
    assert branch_colors_distinct(root)
    assert max(len(b) for b in branches(root)) <= res.chi


def test_partition_tree_branch_length(graph):
    g = graph(8, "132")
    res = exact_chromatic(g)
    root = partition_tree(g, res.witness)
    assert branch_colors_distinct(root)
    # width bound: 3 colors cannot split 7 elements in one level
    assert max(len(b) for b in branches(root)) >= 2


def test_partition_tree_repeats_on_improper(graph):
    g = graph(3, "132")
    root = partition_tree(g, Coloring((0, 0, 0), 1))
    assert not branch_colors_distinct(root)


def test_partition_tree_residuals_nest(graph):
    g = graph(7, "132")
    root = partition_tree(g, exact_chromatic(g).witness)

    def walk(node):
        for ch in node.children:
            assert set(ch.residual) < set(node.residual)
            assert ch.pivot == min(set(node.residual) - (set(node.residual) - {ch.pivot} - set(ch.residual)) | {ch.pivot})
            walk(ch)

    # children partition the parent residual
    def check_partition(node):
        union = []
        for ch in node.children:
            union.extend([ch.pivot, *ch.residual])
            check_partition(ch)
        if node.children:
            assert sorted(union) == sorted(node.residual)

    check_partition(root)
    walk(root)


def test_greedy_max_clique(graph):
    g = graph(6, "12")
    assert len(greedy_max_clique(g)) == 6
    assert len(greedy_max_clique(graph(8, "132"))) == 2
