"""Brute-force reference implementations used only by the tests.

Everything here works from plain edge sets and exhaustive enumeration, so
it shares no code path with the library beyond ``Graph.edges``.
"""

from __future__ import annotations

from itertools import combinations, product

import networkx as nx


def edge_set(g) -> set[frozenset[int]]:
    return {frozenset(e) for e in g.edges()}


def to_nx(g) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges())
    return h


def induces_cycle(edges: set, verts) -> bool:
    verts = list(verts)
    if len(verts) < 3:
        return False
    vs = set(verts)
    deg = {v: 0 for v in verts}
    for e in edges:
        if e <= vs:
            for x in e:
                deg[x] += 1
    if any(d != 2 for d in deg.values()):
        return False
    # connected?
    seen, stack = {verts[0]}, [verts[0]]
    while stack:
        x = stack.pop()
        for y in vs:
            if y not in seen and frozenset((x, y)) in edges:
                seen.add(y)
                stack.append(y)
    return seen == vs


def holes(g, min_length: int = 4) -> set[frozenset[int]]:
    """Vertex sets of all chordless cycles of length >= min_length."""
    es = edge_set(g)
    out = set()
    for k in range(max(4, min_length), g.n + 1):
        for s in combinations(range(g.n), k):
            if induces_cycle(es, s):
                out.add(frozenset(s))
    return out


def is_clique(es, s) -> bool:
    return all(frozenset(p) in es for p in combinations(s, 2))


def is_stable(es, s) -> bool:
    return not any(frozenset(p) in es for p in combinations(s, 2))


def omega(g, within=None) -> int:
    es = edge_set(g)
    verts = list(range(g.n)) if within is None else list(within)
    best = 0
    for k in range(1, len(verts) + 1):
        if any(is_clique(es, s) for s in combinations(verts, k)):
            best = k
        else:
            break
    return best


def alpha(g) -> int:
    es = edge_set(g)
    best = 0
    for k in range(1, g.n + 1):
        if any(is_stable(es, s) for s in combinations(range(g.n), k)):
            best = k
        else:
            break
    return best


def chi(g, within=None) -> int:
    verts = list(range(g.n)) if within is None else list(within)
    if not verts:
        return 0
    es = [tuple(e) for e in edge_set(g) if set(e) <= set(verts)]
    pos = {v: i for i, v in enumerate(verts)}
    for k in range(1, len(verts) + 1):
        # fix the first vertex's colour to cut symmetry
        for rest in product(range(k), repeat=len(verts) - 1):
            col = (0,) + rest
            if all(col[pos[u]] != col[pos[v]] for u, v in es):
                return k
    return len(verts)


def is_perfect(g) -> bool:
    for k in range(1, g.n + 1):
        for s in combinations(range(g.n), k):
            if chi(g, s) != omega(g, s):
                return False
    return True


def two_join_partitions(g) -> set[frozenset[int]]:
    """Sides V1 (the one holding vertex 0) of every partition admitting a
    2-join, straight from the definition."""
    n = g.n
    es = edge_set(g)
    nb = {v: {u for u in range(n) if frozenset((u, v)) in es} for v in range(n)}
    out = set()
    rest = list(range(1, n))
    for k in range(2, n - 2):
        for extra in combinations(rest, k):
            v1 = {0, *extra}
            v2 = set(range(n)) - v1
            if len(v2) < 3:
                continue
            if _admits(nb, v1, v2) and _admits(nb, v2, v1):
                out.add(frozenset(v1))
    return out


def _admits(nb, v1, v2) -> bool:
    shapes = {}
    for x in v1:
        s = frozenset(nb[x] & v2)
        if s:
            shapes.setdefault(s, set()).add(x)
    if len(shapes) != 2:
        return False
    (na, xa), (nbb, xb) = shapes.items()
    if na & nbb:
        return False
    # the matched sides must see exactly xa / xb back
    return all(nb[y] & v1 == xa for y in na) and all(nb[y] & v1 == xb for y in nbb)


def is_line_graph(g) -> bool:
    try:
        nx.inverse_line_graph(to_nx(g))
        return True
    except nx.NetworkXError:
        return False
