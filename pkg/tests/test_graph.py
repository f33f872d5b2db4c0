import random

import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from perfectgraph import (
    Graph,
    InvalidInputError,
    complement,
    connected_components,
    cycle_graph,
    find_hole,
    induced_subgraph,
    is_bipartite,
    iter_holes,
    line_graph,
    shortest_path_between_sets,
)
from perfectgraph.generators import gnp
from perfectgraph.graph import (
    ANY,
    EVEN,
    ODD,
    complete_graph,
    disjoint_union,
    is_chordless_cycle,
    is_chordless_path,
    path_graph,
)

import oracles


@st.composite
def graphs(draw, max_n=8):
    n = draw(st.integers(0, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    chosen = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph.from_edges(n, [e for e, keep in zip(pairs, chosen) if keep])


def test_graph_rejects_bad_edges():
    with pytest.raises(InvalidInputError):
        Graph.from_edges(3, [(0, 0)])
    with pytest.raises(InvalidInputError):
        Graph.from_edges(3, [(0, 3)])


def test_encode_roundtrip():
    g = cycle_graph(7)
    assert Graph.decode(g.encode()) == g


def test_complement_examples():
    assert complement(complete_graph(3)) == Graph.empty(3)
    c6 = cycle_graph(6)
    assert complement(complement(c6)) == c6


@given(graphs())
def test_complement_is_involution_and_partitions_pairs(g):
    co = complement(g)
    assert complement(co) == g
    assert g.m + co.m == g.n * (g.n - 1) // 2


def test_induced_subgraph_examples():
    c5 = cycle_graph(5)
    assert induced_subgraph(c5, range(5))[0] == c5
    sub, origin = induced_subgraph(c5, [1, 2, 3])
    assert sub == path_graph(3) and origin == [1, 2, 3]
    assert induced_subgraph(complete_graph(5), [0, 2, 4])[0] == complete_graph(3)
    with pytest.raises(InvalidInputError):
        induced_subgraph(c5, [7])


def test_is_bipartite_examples():
    left, right = is_bipartite(cycle_graph(6))
    assert {left, right} == {frozenset({0, 2, 4}), frozenset({1, 3, 5})}
    assert is_bipartite(cycle_graph(5)) is None
    left, right = is_bipartite(Graph.empty(4))
    assert left | right == frozenset(range(4)) and not left & right


@given(graphs())
def test_is_bipartite_matches_networkx(g):
    res = is_bipartite(g)
    assert (res is not None) == nx.is_bipartite(oracles.to_nx(g))
    if res is not None:
        left, right = res
        assert all((u in left) != (v in left) for u, v in g.edges())


def test_find_hole_examples():
    c5 = cycle_graph(5)
    assert sorted(find_hole(c5, ODD, 4)) == [0, 1, 2, 3, 4]
    assert find_hole(complete_graph(4), ANY, 4) is None
    assert find_hole(complement(cycle_graph(7)), ODD, 4) is None
    # the brute-force enumerator agrees: the antihole's only holes are 4-holes
    assert all(len(h) == 4 for h in oracles.holes(complement(cycle_graph(7))))
    with pytest.raises(InvalidInputError):
        find_hole(c5, ANY, 3)


@settings(max_examples=150)
@given(graphs())
def test_iter_holes_matches_brute_force(g):
    found = [tuple(h) for h in iter_holes(g)]
    assert len(found) == len(set(frozenset(h) for h in found)), "hole reported twice"
    assert {frozenset(h) for h in found} == oracles.holes(g)
    for h in found:
        assert is_chordless_cycle(g, list(h))


@settings(max_examples=100)
@given(graphs())
def test_hole_parity_filters(g):
    odd = {frozenset(h) for h in iter_holes(g, parity=ODD)}
    even = {frozenset(h) for h in iter_holes(g, parity=EVEN)}
    assert odd | even == {frozenset(h) for h in iter_holes(g)}
    assert all(len(h) % 2 for h in odd) and not any(len(h) % 2 for h in even)


def test_hole_canonical_start():
    for h in iter_holes(cycle_graph(8)):
        assert h[0] == min(h) and h[1] < h[-1]


def test_connected_components_examples():
    assert connected_components(cycle_graph(5)) == [frozenset(range(5))]
    two = disjoint_union(complete_graph(3), complete_graph(3))
    assert sorted(map(sorted, connected_components(two))) == [[0, 1, 2], [3, 4, 5]]
    assert sorted(map(sorted, connected_components(Graph.empty(3)))) == [[0], [1], [2]]


@given(graphs())
def test_components_match_networkx(g):
    ours = {frozenset(c) for c in connected_components(g)}
    theirs = {frozenset(c) for c in nx.connected_components(oracles.to_nx(g))}
    assert ours == theirs


def test_shortest_path_examples():
    assert shortest_path_between_sets(cycle_graph(6), {0}, {3}) in ([0, 1, 2, 3], [0, 5, 4, 3])
    assert shortest_path_between_sets(path_graph(2), {0}, {1}) == [0, 1]
    two = disjoint_union(complete_graph(3), complete_graph(3))
    assert shortest_path_between_sets(two, {0}, {4}) is None
    with pytest.raises(InvalidInputError):
        shortest_path_between_sets(cycle_graph(4), set(), {1})


@settings(max_examples=100)
@given(graphs(), st.data())
def test_shortest_path_is_shortest_and_chordless(g, data):
    if g.n < 2:
        return
    src = data.draw(st.sets(st.integers(0, g.n - 1), min_size=1, max_size=2))
    dst = data.draw(st.sets(st.integers(0, g.n - 1), min_size=1, max_size=2).filter(lambda s: not s & src))
    path = shortest_path_between_sets(g, src, dst)
    h = oracles.to_nx(g)
    lengths = [nx.shortest_path_length(h, s, t) for s in src for t in dst if nx.has_path(h, s, t)]
    if not lengths:
        assert path is None
        return
    assert path[0] in src and path[-1] in dst
    assert len(path) - 1 == min(lengths)
    assert is_chordless_path(g, path)


def test_line_graph_matches_networkx():
    rng = random.Random(3)
    for _ in range(30):
        root = gnp(7, 0.4, rng)
        lg, edges = line_graph(root)
        theirs = nx.line_graph(oracles.to_nx(root))
        assert lg.m == theirs.number_of_edges() and lg.n == theirs.number_of_nodes()
        for i, j in lg.edges():
            assert set(edges[i]) & set(edges[j])
