"""Exhaustive small-graph enumeration and sparse witness search."""
import itertools

from hfree.classify import recognize_sparse_lh, sparse_case
from hfree.graphs import are_isomorphic, graph_from_edges, t_diamond
from hfree.smallgraphs import (
    find_sparse_witness,
    graphs_up_to,
    graphs_with_vertex_count,
    realizations,
)

# counts of graphs up to isomorphism on 1..6 vertices
COUNTS = [1, 2, 4, 11, 34, 156]


def test_enumeration_counts():
    for n, want in enumerate(COUNTS, start=1):
        assert len(graphs_with_vertex_count(n)) == want


def test_enumeration_is_isomorphism_free():
    graphs = graphs_with_vertex_count(4)
    for a, b in itertools.combinations(graphs, 2):
        assert not are_isomorphic(a, b)
    assert all(g.n == 4 for g in graphs)


def test_enumeration_is_complete_at_3():
    # every labeled 3-vertex graph matches one catalog entry
    catalog = graphs_with_vertex_count(3)
    pairs = [(0, 1), (0, 2), (1, 2)]
    for bits in itertools.product([0, 1], repeat=3):
        g = graph_from_edges(3, [p for p, b in zip(pairs, bits) if b])
        assert sum(are_isomorphic(g, c) for c in catalog) == 1


def test_graphs_up_to_ranges():
    assert len(list(graphs_up_to(4))) == 1 + 2 + 4 + 11
    assert len(list(graphs_up_to(4, n_min=3))) == 4 + 11
    assert [g.n for g in graphs_up_to(3)] == [1, 2, 2, 3, 3, 3, 3]


def test_realizations_of_degree_sequences():
    # (1,1,2): vertex 2 must be the path center, one labeled graph
    assert len(list(realizations((1, 1, 2)))) == 1
    # perfect matchings on 4 labeled vertices
    assert len(list(realizations((1, 1, 1, 1)))) == 3
    assert list(realizations((2, 2, 2))) == [
        graph_from_edges(3, [(0, 1), (0, 2), (1, 2)])
    ]
    assert list(realizations((3, 0, 0))) == []


def test_case3_witness():
    # smallest sparse two-degree graph with the single class edge down low
    w = find_sparse_witness(0, 1)
    assert w.n == 6 and w.m == 7
    shape = recognize_sparse_lh(w)
    assert shape is not None
    assert (shape.edges_in_high, shape.edges_in_low) == (0, 1)
    assert sparse_case(shape) == 3
    assert shape.low >= 2


def test_case2_non_tdiamond_witness():
    w = find_sparse_witness(1, 0, exclude_t_diamond=True)
    assert w.n == 8 and w.m == 11
    shape = recognize_sparse_lh(w)
    assert shape is not None
    assert (shape.edges_in_high, shape.edges_in_low) == (1, 0)
    assert sparse_case(shape) == 2
    for t in range(1, 8):
        assert not are_isomorphic(w, t_diamond(t))


def test_witness_search_is_deterministic():
    assert find_sparse_witness(0, 1) == find_sparse_witness(0, 1)
