import random
from itertools import combinations

import pytest

from perfectgraph import (
    Graph,
    InvalidInputError,
    chromatic_number,
    clique_number,
    complement,
    cycle_graph,
    find_six_join,
    find_two_join,
    is_perfect,
    perfect_color,
    replicate,
    replicate_minus_edge,
    six_join_blocks,
    two_join_blocks,
)
from perfectgraph.decompose import (
    EVEN,
    ODD,
    PAIR,
    BlockColoring,
    block_coloring,
    combine_colorings,
)
from perfectgraph.generators import glue_two_join, gnp, random_two_join_composition
from perfectgraph.graph import complete_graph, path_graph
from perfectgraph.structures import TwoJoin

import oracles
from test_structures import SIX_JOIN_EXAMPLE


def subpath_two_join(n: int) -> TwoJoin:
    """Split the n-cycle 0..n-1 into the paths 0..k-1 and k..n-1."""
    k = n // 2
    return TwoJoin(frozenset(range(k)), frozenset(range(k, n)), frozenset({0}), frozenset({k - 1}),
                   frozenset({n - 1}), frozenset({k}))


# ---------------------------------------------------------------------------
# blocks


@pytest.mark.parametrize("n", [6, 8, 10])
def test_even_hole_blocks_are_holes_of_the_same_length(n):
    g = cycle_graph(n)
    pair = two_join_blocks(g, subpath_two_join(n))
    side_edges = n // 2 - 1
    assert pair.path_parity == (ODD if side_edges % 2 else EVEN)
    for blk in (pair.g1, pair.g2):
        assert oracles.holes(blk.graph) == {frozenset(range(n))}


@pytest.mark.parametrize("n", [7, 9])
def test_odd_hole_blocks(n):
    # the marker of a path side is the whole side, so each block is the hole again;
    # the two sides of an odd hole have paths of different parity
    g = cycle_graph(n)
    pair = two_join_blocks(g, subpath_two_join(n))
    assert {pair.g1.kind, pair.g2.kind} == {ODD, EVEN}
    assert pair.path_parity == "mixed"
    for blk in (pair.g1, pair.g2):
        assert oracles.holes(blk.graph) == {frozenset(range(n))}


def test_disconnected_side_gives_pair_marker():
    s1 = path_graph(3)
    s2 = Graph.from_edges(4, [(0, 1), (2, 3)])  # A2={0} and B2={2} in different components
    g, tj = glue_two_join(s1, {0}, {2}, s2, {0}, {2})
    pair = two_join_blocks(g, tj)
    assert pair.g1.kind == PAIR and pair.g1.graph.n == len(tj.v1) + 2
    assert pair.path_parity == "none"


def test_two_join_blocks_rejects_invalid():
    with pytest.raises(InvalidInputError):
        two_join_blocks(cycle_graph(6), TwoJoin(frozenset({0, 1, 2}), frozenset({3, 4, 5}),
                                                frozenset({0}), frozenset({1}), frozenset({5}), frozenset({3})))


# ---------------------------------------------------------------------------
# replication


def test_replicate_examples():
    assert replicate(complete_graph(2), 0, 2) == complete_graph(3)
    r = replicate(cycle_graph(5), 0, 2)
    assert r.n == 6 and clique_number(r) == 3
    assert replicate(cycle_graph(5), 2, 1) == cycle_graph(5)
    with pytest.raises(InvalidInputError):
        replicate(cycle_graph(5), 5, 2)
    with pytest.raises(InvalidInputError):
        replicate(cycle_graph(5), 0, 0)


def test_replicate_makes_true_twins():
    g = gnp(7, 0.5, random.Random(1))
    r = replicate(g, 3, 3)
    for w in (7, 8):
        assert r.has_edge(3, w)
        assert {x for x in range(r.n) if r.has_edge(w, x)} - {3} == \
            {x for x in range(r.n) if r.has_edge(3, x)} - {w}


def test_replicate_minus_edge_examples():
    r = replicate_minus_edge(complete_graph(2), 0, 1)
    assert r == Graph.from_edges(3, [(0, 1), (1, 2)])  # path v'-v-u
    r = replicate_minus_edge(cycle_graph(6), 0, 1)
    assert r.n == 7 and is_perfect(r) and oracles.is_perfect(r)
    with pytest.raises(InvalidInputError):
        replicate_minus_edge(complete_graph(3), 0, 1)  # common neighbour
    with pytest.raises(InvalidInputError):
        replicate_minus_edge(cycle_graph(6), 0, 2)  # not an edge


def test_replication_preserves_perfection_on_small_graphs():
    rng = random.Random(8)
    checked = 0
    while checked < 60:
        g = gnp(rng.randint(3, 6), rng.uniform(0.3, 0.7), rng)
        if not oracles.is_perfect(g):
            continue
        checked += 1
        v = rng.randrange(g.n)
        assert oracles.is_perfect(replicate(g, v, 2))
        for u, w in g.edges():
            if not g.adj[u] & g.adj[w]:
                assert is_perfect(replicate_minus_edge(g, u, w))


# ---------------------------------------------------------------------------
# block colourings


def _find_block(par: str, a: int, b: int, omega: int):
    for seed in range(5000):
        rng = random.Random(f"block-{par}-{seed}")
        g, tj, pair = random_two_join_composition(rng, max_block=8, parity=par)
        if clique_number(g) != omega:
            continue
        for blk, side_a, side_b in ((pair.g1, tj.a1, tj.b1), (pair.g2, tj.a2, tj.b2)):
            if oracles.omega(g, side_a) == a and oracles.omega(g, side_b) == b:
                return blk
    raise AssertionError("no such block in the sample")


@pytest.mark.parametrize("par,a,b,overlap", [
    (ODD, 1, 1, 0),
    (ODD, 2, 2, 1),
    (EVEN, 1, 2, 1),
    (EVEN, 2, 1, 1),
])
def test_block_coloring_overlap_examples(par, a, b, overlap):
    blk = _find_block(par, a, b, 3)
    bc = block_coloring(blk, 3)
    assert (bc.a, bc.b, bc.kind) == (a, b, par)
    assert len(bc.ca) == a and len(bc.cb) == b
    assert len(bc.ca & bc.cb) == overlap == bc.expected_overlap()
    # the side colouring is proper on the side
    for u, v in combinations(bc.colors, 2):
        if blk.graph.has_edge(*blk.local([u, v])):
            assert bc.colors[u] != bc.colors[v]


def test_block_coloring_rejects_small_omega():
    g, tj, pair = random_two_join_composition(random.Random(3), max_block=8, parity=ODD)
    with pytest.raises(InvalidInputError):
        block_coloring(pair.g1, clique_number(pair.g1.graph) - 1)


@pytest.mark.parametrize("par", [ODD, EVEN, "none"])
def test_block_colorings_on_random_compositions(par):
    rng = random.Random(f"compose-{par}")
    for _ in range(40):
        g, tj, pair = random_two_join_composition(rng, max_block=9, parity=par)
        omega = clique_number(g)
        c1, c2 = block_coloring(pair.g1, omega), block_coloring(pair.g2, omega)
        for c in (c1, c2):
            if c.expected_overlap() is not None:
                assert len(c.ca & c.cb) == c.expected_overlap()
        col = combine_colorings(c1, c2, tj, omega, g)
        assert col.is_proper(g) and col.k == omega == chromatic_number(g)[0]


def test_combine_odd_blocks_with_singleton_ends():
    # omega 3, odd markers, a = b = 1 on both sides
    for seed in range(5000):
        rng = random.Random(f"unit-ends-{seed}")
        g, tj, pair = random_two_join_composition(rng, max_block=8, parity=ODD)
        if clique_number(g) != 3:
            continue
        c1, c2 = block_coloring(pair.g1, 3), block_coloring(pair.g2, 3)
        if (c1.a, c1.b, c2.a, c2.b) == (1, 1, 1, 1):
            col = combine_colorings(c1, c2, tj, 3, g)
            assert col.k == 3 and col.is_proper(g) and oracles.chi(g) == 3
            return
    raise AssertionError("no such composition in the sample")


def test_combine_c6_from_paths():
    g, tj = glue_two_join(path_graph(3), {0}, {2}, path_graph(3), {0}, {2})
    assert g.m == 6 and all(g.degree(v) == 2 for v in range(6))
    pair = two_join_blocks(g, tj)
    col = combine_colorings(block_coloring(pair.g1, 2), block_coloring(pair.g2, 2), tj, 2, g)
    assert col.k == 2 and col.is_proper(g)


def test_combine_rejects_mismatched_parities():
    tj = subpath_two_join(6)
    odd = BlockColoring({0: 0, 1: 1, 2: 0}, frozenset({0}), frozenset({0}), 1, 1, 2, ODD)
    even = BlockColoring({3: 0, 4: 1, 5: 0}, frozenset({0}), frozenset({0}), 1, 1, 2, EVEN)
    with pytest.raises(InvalidInputError):
        combine_colorings(odd, even, tj, 2, cycle_graph(6))


# ---------------------------------------------------------------------------
# 6-join blocks


def test_six_join_blocks_example():
    sj = find_six_join(SIX_JOIN_EXAMPLE)
    gx, gy = six_join_blocks(SIX_JOIN_EXAMPLE, sj)
    assert gx.n == len(frozenset().union(*sj.x)) + 3
    assert gy.n == len(frozenset().union(*sj.y)) + 3
    assert is_perfect(SIX_JOIN_EXAMPLE) and is_perfect(gx) and is_perfect(gy)


def test_six_join_blocks_rejects_invalid():
    sj = find_six_join(SIX_JOIN_EXAMPLE)
    with pytest.raises(InvalidInputError):
        six_join_blocks(cycle_graph(8), sj)


# ---------------------------------------------------------------------------
# pipeline


def test_perfect_color_bipartite_goes_through_basic():
    pc = perfect_color(cycle_graph(6))
    assert pc.coloring.k == 2 and pc.tree.kind == "basic"


def test_perfect_color_uses_two_joins():
    rng = random.Random("pipeline")
    seen = 0
    for _ in range(60):
        g, _, _ = random_two_join_composition(rng, max_block=9)
        pc = perfect_color(g, verify=False)
        assert pc.coloring.is_proper(g) and pc.coloring.k == chromatic_number(g)[0]
        seen += pc.tree.count("two_join")
    assert seen > 0


def test_perfect_color_oracle_fallback():
    # a perfect graph that is neither basic nor 2-join decomposable
    rng = random.Random(17)
    for _ in range(2000):
        g = gnp(7, 0.5, rng)
        if is_perfect(g) and find_two_join(g) is None and find_two_join(complement(g)) is None:
            pc = perfect_color(g)
            if pc.tree.kind == "oracle":
                assert pc.coloring.k == clique_number(g) and pc.coloring.is_proper(g)
                return
    raise AssertionError("no oracle-route graph sampled")


def test_perfect_color_rejects_imperfect():
    with pytest.raises(InvalidInputError):
        perfect_color(cycle_graph(5))
