"""Simple undirected graphs on dense integer vertices, stored as bitsets.

Vertex ``v``'s neighbourhood is the Python int ``adj[v]`` whose bit ``u`` is
set iff ``uv`` is an edge. Graphs are immutable once built.
"""

from __future__ import annotations

from collections import deque
from typing import Iterable, Iterator

from .errors import InvalidInputError

ODD, EVEN, ANY = "odd", "even", "any"


def bits(mask: int) -> Iterator[int]:
    """Yield the indices of the set bits of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def lowest(mask: int) -> int:
    return (mask & -mask).bit_length() - 1


def submasks_increasing(mask: int) -> Iterator[int]:
    """All submasks of ``mask`` (including 0 and ``mask``) in increasing order."""
    sub = 0
    while True:
        yield sub
        if sub == mask:
            return
        sub = (sub - mask) & mask


class Graph:
    __slots__ = ("n", "adj")

    def __init__(self, n: int, adj: Iterable[int]):
        adj = tuple(adj)
        if len(adj) != n:
            raise InvalidInputError(f"expected {n} adjacency rows, got {len(adj)}")
        full = (1 << n) - 1
        for v, row in enumerate(adj):
            if row & ~full:
                raise InvalidInputError(f"vertex {v} has a neighbour outside [0, {n})")
            if row >> v & 1:
                raise InvalidInputError(f"self-loop at vertex {v}")
            for u in bits(row):
                if not adj[u] >> v & 1:
                    raise InvalidInputError(f"asymmetric adjacency between {v} and {u}")
        self.n = n
        self.adj = adj

    @classmethod
    def _trusted(cls, n: int, adj: tuple[int, ...]) -> "Graph":
        g = object.__new__(cls)
        g.n = n
        g.adj = adj
        return g

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        adj = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise InvalidInputError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise InvalidInputError(f"self-loop at vertex {u}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return cls._trusted(n, tuple(adj))

    @classmethod
    def empty(cls, n: int) -> "Graph":
        return cls._trusted(n, (0,) * n)

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    @property
    def m(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in bits(self.adj[u] >> (u + 1) << (u + 1))]

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def neighbors(self, v: int) -> list[int]:
        return list(bits(self.adj[v]))

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def max_degree(self) -> int:
        return max((row.bit_count() for row in self.adj), default=0)

    def is_clique(self, mask: int) -> bool:
        return all(self.adj[v] | (1 << v) | ~mask == -1 for v in bits(mask))

    def is_stable(self, mask: int) -> bool:
        return all(not (self.adj[v] & mask) for v in bits(mask))

    def encode(self) -> str:
        """Plain-text encoding ``n:u-v,u-v,...`` used in error payloads."""
        return f"{self.n}:" + ",".join(f"{u}-{v}" for u, v in self.edges())

    @classmethod
    def decode(cls, text: str) -> "Graph":
        head, _, body = text.partition(":")
        edges = [tuple(map(int, e.split("-"))) for e in body.split(",") if e]
        return cls.from_edges(int(head), edges)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Graph) and self.n == other.n and self.adj == other.adj

    def __hash__(self) -> int:
        return hash((self.n, self.adj))

    def __repr__(self) -> str:
        return f"Graph({self.encode()})"


def complement(g: Graph) -> Graph:
    full = g.full_mask
    return Graph._trusted(g.n, tuple(full & ~row & ~(1 << v) for v, row in enumerate(g.adj)))


def induced_mask(g: Graph, mask: int) -> tuple[Graph, list[int]]:
    verts = list(bits(mask))
    pos = {v: i for i, v in enumerate(verts)}
    adj = []
    for v in verts:
        row = 0
        for u in bits(g.adj[v] & mask):
            row |= 1 << pos[u]
        adj.append(row)
    return Graph._trusted(len(verts), tuple(adj)), verts


def induced_subgraph(g: Graph, s: Iterable[int]) -> tuple[Graph, list[int]]:
    """Return ``G(S)`` reindexed to ``0..|S|-1`` and the map back to ``g``.

    ``index_map[i]`` is the vertex of ``g`` that became vertex ``i``; vertices
    keep their relative order.
    """
    mask = 0
    for v in s:
        if not 0 <= v < g.n:
            raise InvalidInputError(f"vertex {v} out of range for n={g.n}")
        mask |= 1 << v
    return induced_mask(g, mask)


def components_mask(adj: tuple[int, ...], mask: int) -> list[int]:
    """Connected components of the subgraph induced by ``mask``, as masks,
    ordered by smallest vertex."""
    comps = []
    rest = mask
    while rest:
        seen = rest & -rest
        frontier = seen
        while frontier:
            v = lowest(frontier)
            frontier ^= 1 << v
            new = adj[v] & rest & ~seen
            seen |= new
            frontier |= new
        comps.append(seen)
        rest &= ~seen
    return comps


def is_connected_mask(adj: tuple[int, ...], mask: int) -> bool:
    if not mask:
        return True
    seen = mask & -mask
    frontier = seen
    while frontier:
        v = lowest(frontier)
        frontier ^= 1 << v
        new = adj[v] & mask & ~seen
        seen |= new
        frontier |= new
    return seen == mask


def anticomponents_mask(adj: tuple[int, ...], mask: int) -> list[int]:
    """Components of the complement of the subgraph induced by ``mask``."""
    co = [0] * len(adj)
    for v in bits(mask):
        co[v] = mask & ~adj[v] & ~(1 << v)
    return components_mask(tuple(co), mask)


def connected_components(g: Graph) -> list[frozenset[int]]:
    return [frozenset(bits(c)) for c in components_mask(g.adj, g.full_mask)]


def is_bipartite(g: Graph) -> tuple[frozenset[int], frozenset[int]] | None:
    """Two-colour ``g`` by BFS. Each component's smallest vertex goes left,
    so edgeless graphs put everything on the left."""
    side = [-1] * g.n
    for root in range(g.n):
        if side[root] >= 0:
            continue
        side[root] = 0
        queue = deque([root])
        while queue:
            v = queue.popleft()
            for u in bits(g.adj[v]):
                if side[u] < 0:
                    side[u] = 1 - side[v]
                    queue.append(u)
                elif side[u] == side[v]:
                    return None
    left = frozenset(v for v in range(g.n) if side[v] == 0)
    return left, frozenset(range(g.n)) - left


def _parity_ok(length: int, parity: str) -> bool:
    if parity == ANY:
        return True
    return (length % 2 == 1) == (parity == ODD)


def iter_holes(g: Graph, min_length: int = 4, parity: str = ANY, within: int | None = None) -> Iterator[list[int]]:
    """Enumerate every chordless cycle of length >= ``min_length`` once.

    A cycle is reported starting at its smallest vertex ``s``, walking first
    towards the smaller of ``s``'s two cycle neighbours.
    """
    if parity not in (ODD, EVEN, ANY):
        raise InvalidInputError(f"unknown parity {parity!r}")
    adj = g.adj
    allowed = g.full_mask if within is None else within
    min_length = max(min_length, 4)
    for s in bits(allowed):
        higher = allowed & ~((2 << s) - 1)
        ns = adj[s]
        for p1 in bits(ns & higher):
            # block: s plus closed neighbourhoods of the interior path vertices
            stack = [([s, p1], 1 << s)]
            while stack:
                path, block = stack.pop()
                last = path[-1]
                cands = adj[last] & higher & ~block & ~(1 << last)
                if not cands:
                    continue
                next_block = block | adj[last] | (1 << last)
                for w in bits(cands):
                    if ns >> w & 1:
                        if len(path) >= 3 and w > p1:
                            length = len(path) + 1
                            if length >= min_length and _parity_ok(length, parity):
                                yield path + [w]
                    else:
                        stack.append((path + [w], next_block))


def find_hole(g: Graph, parity: str = ANY, min_length: int = 4) -> list[int] | None:
    """First hole in canonical enumeration order matching the request."""
    if min_length < 4:
        raise InvalidInputError("holes have length at least 4")
    for hole in iter_holes(g, min_length, parity):
        return hole
    return None


def is_chordless_cycle(g: Graph, cycle: list[int]) -> bool:
    k = len(cycle)
    if k < 3 or len(set(cycle)) != k:
        return False
    mask = mask_of(cycle)
    for i, v in enumerate(cycle):
        want = (1 << cycle[i - 1]) | (1 << cycle[(i + 1) % k])
        if g.adj[v] & mask != want:
            return False
    return True


def is_chordless_path(g: Graph, path: list[int]) -> bool:
    k = len(path)
    if k == 0 or len(set(path)) != k:
        return False
    mask = mask_of(path)
    for i, v in enumerate(path):
        want = 0
        if i > 0:
            want |= 1 << path[i - 1]
        if i + 1 < k:
            want |= 1 << path[i + 1]
        if g.adj[v] & mask != want:
            return False
    return True


def shortest_path_between_sets(g: Graph, from_: Iterable[int], to: Iterable[int]) -> list[int] | None:
    """Shortest path from ``from_`` to ``to`` whose interior avoids both sets.

    Among shortest paths the lexicographically smallest vertex sequence wins.
    """
    src, dst = mask_of(from_), mask_of(to)
    if not src or not dst:
        raise InvalidInputError("endpoint sets must be nonempty")
    if src & dst:
        raise InvalidInputError("endpoint sets must be disjoint")
    if (src | dst) & ~g.full_mask:
        raise InvalidInputError("endpoint vertex out of range")
    interior = g.full_mask & ~(src | dst)
    dist = [-1] * g.n
    queue = deque()
    for t in bits(dst):
        dist[t] = 0
        queue.append(t)
    while queue:
        v = queue.popleft()
        for u in bits(g.adj[v] & interior):
            if dist[u] < 0:
                dist[u] = dist[v] + 1
                queue.append(u)
    best, start = None, None
    for s in bits(src):
        d = min((dist[w] for w in bits(g.adj[s] & (interior | dst)) if dist[w] >= 0), default=None)
        if d is not None and (best is None or d + 1 < best):
            best, start = d + 1, s
    if start is None:
        return None
    path = [start]
    cur_d = best
    cur = start
    while cur_d > 0:
        cur_d -= 1
        cur = next(w for w in bits(g.adj[cur] & (interior | dst)) if dist[w] == cur_d)
        path.append(cur)
    return path


def cycle_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def path_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def complete_graph(n: int) -> Graph:
    full = (1 << n) - 1
    return Graph._trusted(n, tuple(full & ~(1 << v) for v in range(n)))


def complete_bipartite(p: int, q: int) -> Graph:
    return Graph.from_edges(p + q, [(i, p + j) for i in range(p) for j in range(q)])


def line_graph(root: Graph) -> tuple[Graph, list[tuple[int, int]]]:
    """Line graph of ``root`` with vertex ``i`` standing for ``edges[i]``."""
    edges = root.edges()
    at = [0] * root.n
    for i, (u, v) in enumerate(edges):
        at[u] |= 1 << i
        at[v] |= 1 << i
    adj = tuple((at[u] | at[v]) & ~(1 << i) for i, (u, v) in enumerate(edges))
    return Graph._trusted(len(edges), adj), edges


def disjoint_union(a: Graph, b: Graph) -> Graph:
    return Graph._trusted(a.n + b.n, a.adj + tuple(row << a.n for row in b.adj))
