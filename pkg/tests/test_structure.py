from math import comb

import pytest

from shiftgraphs import (
    check_bipartite_form,
    common_neighbors,
    equivalence_classes,
    isolated_vertices,
    max_cocliques_with_side_condition,
    parse_type,
    quotient,
)
from shiftgraphs.errors import WrongTypeError
from shiftgraphs.graph import UnlabeledGraph
from shiftgraphs.structure import blow_up


def verts(g, ids):
    return sorted(g.vertex(i) for i in ids)


def test_isolated_132(graph):
    g = graph(6, "132")
    assert verts(g, isolated_vertices(g)) == [(0, 5)]
    for n in range(2, 10):
        gn = graph(n, "132")
        assert verts(gn, isolated_vertices(gn)) == [(0, n - 1)]


def test_isolated_11322(graph):
    g = graph(8, "11322")
    assert len(isolated_vertices(g)) == 20
    assert len(isolated_vertices(graph(4, "12"))) == 0


def test_common_neighbors_examples(graph):
    g = graph(6, "132")
    cn = common_neighbors(g, g.index((0, 2)), g.index((1, 2)))
    assert verts(g, cn) == [(2, 3), (2, 4), (2, 5)]
    cn = common_neighbors(g, g.index((0, 1)), g.index((2, 3)))
    assert verts(g, cn) == [(1, 2)]
    cn = common_neighbors(g, g.index((0, 1)), g.index((0, 2)))
    assert cn == []


def test_bipartite_form_clean(graph):
    for n in range(3, 10):
        rep = check_bipartite_form(graph(n, "132"))
        assert rep.violations == []
    with pytest.raises(WrongTypeError):
        check_bipartite_form(graph(5, "1122"))


def test_bipartite_form_stars(graph):
    g = graph(6, "132")
    rep = check_bipartite_form(g)
    by_center = {s.center: s for s in rep.stars}
    # star at 2: left = vertices ending at 2, right = vertices starting at 2
    s = by_center[2]
    assert verts(g, s.left) == [(0, 2), (1, 2)]
    assert verts(g, s.right) == [(2, 3), (2, 4), (2, 5)]
    for u in s.left:
        for v in s.right:
            assert g.adjacent(u, v)


def test_equivalence_classes_132_all_singletons(graph):
    g = graph(8, "132")
    part = equivalence_classes(g)
    assert all(len(c) == 1 for c in part.classes)


def test_equivalence_classes_33_single_class(graph):
    g = graph(5, "33")
    part = equivalence_classes(g)
    assert len(part.classes) == 1
    assert len(part.classes[0]) == comb(5, 2)


def test_equivalence_classes_11322_criterion(graph):
    # Thm 5.5 shape: same class iff firsts match (or both in {0,1}) and
    # lasts match (or both in {n-1,n-2})
    n = 8
    g = graph(n, "11322")
    part = equivalence_classes(g)

    def signature(v):
        first = -1 if v[0] in (0, 1) else v[0]
        last = -2 if v[2] in (n - 1, n - 2) else v[2]
        return first, last

    for cls in part.classes:
        sigs = {signature(g.vertex(i)) for i in cls}
        assert len(sigs) == 1
    assert len({signature(g.vertex(i)) for i in range(g.num_vertices)}) == len(part.classes)


def test_classes_have_identical_rows(graph):
    g = graph(7, "11322")
    part = equivalence_classes(g)
    for cls in part.classes:
        rows = {g.neighbors_mask(i) for i in cls}
        assert len(rows) == 1
        for i in cls:
            for j in cls:
                assert i == j or not g.adjacent(i, j)


def test_quotient_isolated_nodes(graph):
    g = graph(8, "11322")
    q = quotient(g, equivalence_classes(g))
    assert len(q.isolated_nodes()) == 1
    g7 = graph(7, "11322")
    q7 = quotient(g7, equivalence_classes(g7))
    assert len(q7.isolated_nodes()) == 1
    comps = [c for c in q7.components() if len(c) > 1]
    assert len(comps) == 2  # the extra component at n = 7


def test_quotient_of_rigid_graph_is_identity(graph):
    g = graph(4, "12")
    q = quotient(g, equivalence_classes(g))
    assert q.num_vertices == g.num_vertices
    assert sorted(q.sizes) == [1] * g.num_vertices


def test_quotient_blow_up_round_trip(graph):
    for n, pat in [(6, "132"), (7, "11322"), (6, "1332")]:
        g = graph(n, pat)
        part = equivalence_classes(g)
        q = quotient(g, part)
        total, edges = blow_up(q)
        assert total == g.num_vertices
        # identify blown-up vertices with original ids per class order
        ids = [i for cls in part.classes for i in cls]
        mapped = {tuple(sorted((ids[x], ids[y]))) for x, y in edges}
        assert mapped == set(map(tuple, map(sorted, g.edges())))


def test_max_cocliques_132_exactly_two_families(graph):
    g = graph(6, "132")
    found = max_cocliques_with_side_condition(
        g, range(g.num_vertices), "disjoint_neighbor_sets"
    )
    as_verts = [verts(g, ids) for ids in found]
    fam_first = sorted((0, b) for b in range(1, 6))
    fam_last = sorted((b, 5) for b in range(5))
    assert sorted(map(tuple, as_verts)) == sorted([tuple(fam_first), tuple(fam_last)])


def test_max_cocliques_11322_initial_block(graph):
    g = graph(6, "11322")
    found = max_cocliques_with_side_condition(
        g, range(g.num_vertices), "equal_or_disjoint"
    )
    families = [set(verts(g, ids)) for ids in found]
    merged_low = {v for v in (g.vertex(i) for i in range(g.num_vertices)) if v[0] in (0, 1)}
    merged_high = {v for v in (g.vertex(i) for i in range(g.num_vertices)) if v[2] in (4, 5)}
    assert merged_low in families
    assert merged_high in families


def test_max_cocliques_empty_region(graph):
    assert max_cocliques_with_side_condition(graph(6, "132"), [], "disjoint_neighbor_sets") == []


def test_max_cocliques_on_plain_graph():
    # members must be pairwise non-adjacent AND neighbor-set disjoint
    g = UnlabeledGraph(5, [(0, 1), (1, 2), (2, 3), (3, 4)])
    found = max_cocliques_with_side_condition(g, range(5), "disjoint_neighbor_sets")
    assert (0, 3) in found or (1, 4) in found
    for ids in found:
        for i in ids:
            for j in ids:
                assert i == j or not g.adjacent(i, j)
