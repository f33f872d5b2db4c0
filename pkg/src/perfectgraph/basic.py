"""The four basic classes of perfect graphs: recognition and omega-colouring.

Bipartite graphs, line graphs of bipartite graphs, and the complements of
both. Colourings are built constructively: sides of a bipartition, Konig
edge colourings of a root, and clique covers from maximum matchings.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .coloring import Coloring, EdgeColoring
from .errors import InvalidInputError
from .graph import Graph, bits, complement, components_mask, is_bipartite, lowest

BIPARTITE = "bipartite"
COMPLEMENT_OF_BIPARTITE = "complement_of_bipartite"
LINE_OF_BIPARTITE = "line_of_bipartite"
COMPLEMENT_OF_LINE_OF_BIPARTITE = "complement_of_line_of_bipartite"
NOT_BASIC = "not_basic"

TAGS = (BIPARTITE, COMPLEMENT_OF_BIPARTITE, LINE_OF_BIPARTITE, COMPLEMENT_OF_LINE_OF_BIPARTITE)


@dataclass(frozen=True)
class LineRoot:
    """``root`` is a graph whose line graph is the input; vertex ``i`` of the
    input is the root edge ``edge_map[i]``."""

    root: Graph
    edge_map: tuple[tuple[int, int], ...]

    def reproduces(self, g: Graph) -> bool:
        if len(self.edge_map) != g.n or len(set(self.edge_map)) != g.n:
            return False
        if any(not self.root.has_edge(x, y) for x, y in self.edge_map):
            return False
        if len(self.edge_map) != self.root.m:
            return False
        for i, (a, b) in enumerate(self.edge_map):
            for j in range(i + 1, g.n):
                c, d = self.edge_map[j]
                share = a in (c, d) or b in (c, d)
                if share != g.has_edge(i, j):
                    return False
        return True


@dataclass(frozen=True)
class BasicClass:
    """Recognition result. For the complement tags the witness describes
    the complement of the input graph."""

    tag: str
    bipartition: tuple[frozenset[int], frozenset[int]] | None = None
    line_root: LineRoot | None = None
    membership: dict = field(default_factory=dict, compare=False)

    @property
    def is_basic(self) -> bool:
        return self.tag != NOT_BASIC


# ---------------------------------------------------------------------------
# matching


def maximum_bipartite_matching(g: Graph, left: frozenset[int]) -> dict[int, int]:
    """Maximum matching by augmenting paths; returns a symmetric mate map."""
    mate: dict[int, int] = {}

    def augment(u: int, seen: set[int]) -> bool:
        for w in bits(g.adj[u]):
            if w in seen:
                continue
            seen.add(w)
            if w not in mate or augment(mate[w], seen):
                mate[u] = w
                mate[w] = u
                return True
        return False

    for u in sorted(left):
        if u not in mate:
            augment(u, set())
    return mate


def konig_vertex_cover(g: Graph, left: frozenset[int], mate: dict[int, int]) -> frozenset[int]:
    """Minimum vertex cover from a maximum matching (Konig's construction)."""
    reach: set[int] = set()
    stack = [u for u in left if u not in mate]
    reach.update(stack)
    while stack:
        u = stack.pop()
        for w in bits(g.adj[u]):
            if w in reach:
                continue
            # left -> right along any edge, right -> left along the matching
            reach.add(w)
            back = mate.get(w)
            if back is not None and back not in reach:
                reach.add(back)
                stack.append(back)
    right = frozenset(range(g.n)) - left
    return frozenset((left - reach) | (right & reach))


def konig_edge_coloring(g: Graph) -> EdgeColoring:
    """Proper edge colouring of a bipartite graph with exactly max-degree
    colours, by flipping two-coloured alternating paths."""
    sides = is_bipartite(g)
    if sides is None:
        raise InvalidInputError("konig_edge_coloring needs a bipartite graph")
    delta = g.max_degree()
    edges = g.edges()
    at: list[dict[int, int]] = [{} for _ in range(g.n)]
    for u, v in edges:
        a = next(c for c in range(delta) if c not in at[u])
        b = next(c for c in range(delta) if c not in at[v])
        if a not in at[v]:
            at[u][a] = v
            at[v][a] = u
            continue
        # walk the a/b alternating path from v and swap its colours
        path = [v]
        x, c = v, a
        while c in at[x]:
            y = at[x][c]
            path.append(y)
            x, c = y, (b if c == a else a)
        cols = []
        for i in range(len(path) - 1):
            p, q = path[i], path[i + 1]
            cols.append(a if i % 2 == 0 else b)
        for (p, q), col in zip(zip(path, path[1:]), cols):
            del at[p][col]
            del at[q][col]
        for (p, q), col in zip(zip(path, path[1:]), cols):
            new = b if col == a else a
            at[p][new] = q
            at[q][new] = p
        at[u][a] = v
        at[v][a] = u
    colors = []
    for u, v in edges:
        colors.append(next(c for c, w in at[u].items() if w == v))
    return EdgeColoring(tuple(edges), tuple(colors), delta)


# ---------------------------------------------------------------------------
# line graph roots


def _krausz_component(g: Graph, comp: int) -> list[int] | None:
    """Partition the edges of one component into cliques so that every
    vertex lies in at most two of them. Returns the cliques as masks."""
    adj = g.adj
    cliques: list[int] = []
    member = {v: [] for v in bits(comp)}
    covered = {v: 0 for v in bits(comp)}

    def add(k: int) -> list[int] | None:
        for v in bits(k):
            if len(member[v]) >= 2 or covered[v] & k & ~(1 << v):
                return None
            if (adj[v] | (1 << v)) & k != k:
                return None
        idx = len(cliques)
        cliques.append(k)
        for v in bits(k):
            member[v].append(idx)
            covered[v] |= k & ~(1 << v)
        return [idx]

    def remove(idx: int) -> None:
        k = cliques.pop()
        assert idx == len(cliques)
        for v in bits(k):
            member[v].pop()
            covered[v] &= ~k

    def split_options(v: int) -> list[tuple[int, int]]:
        nb = adj[v]
        w = lowest(nb)
        opts = []
        for t in _clique_splits(adj, nb, w):
            opts.append((t, nb & ~t))
        opts.sort(key=lambda tr: -tr[0].bit_count())
        return opts

    def solve() -> bool:
        pending = [v for v in member if adj[v] & ~covered[v]]
        if not pending:
            return True
        forced = [v for v in pending if member[v]]
        if forced:
            v = forced[0]
            if len(member[v]) == 2:
                return False
            k = (adj[v] & ~covered[v]) | (1 << v)
            if add(k) is None:
                return False
            if solve():
                return True
            remove(len(cliques) - 1)
            return False
        v = pending[0]
        for t, r in split_options(v):
            placed = []
            ok = add(t | (1 << v)) is not None
            if ok:
                placed.append(len(cliques) - 1)
                if r:
                    ok = add(r | (1 << v)) is not None
                    if ok:
                        placed.append(len(cliques) - 1)
            if ok and solve():
                return True
            for idx in reversed(placed):
                remove(idx)
        return False

    return cliques if solve() else None


def _clique_splits(adj: tuple[int, ...], nb: int, w: int):
    """All (T) with w in T, T and nb-T both cliques."""
    # vertices of nb non-adjacent to each other must be on opposite sides:
    # 2-colour the complement of G[nb] component by component
    co = {v: nb & ~adj[v] & ~(1 << v) for v in bits(nb)}
    side: dict[int, int] = {}
    comps = []
    for root in bits(nb):
        if root in side:
            continue
        side[root] = 0
        members = [root]
        stack = [root]
        while stack:
            x = stack.pop()
            for y in bits(co[x]):
                if y not in side:
                    side[y] = 1 - side[x]
                    members.append(y)
                    stack.append(y)
                elif side[y] == side[x]:
                    return
        comps.append(members)
    wcomp = next(c for c in comps if w in c)
    others = [c for c in comps if w not in c]
    base = 0
    for x in wcomp:
        if side[x] == side[w]:
            base |= 1 << x
    for choice in range(1 << len(others)):
        t = base
        for i, c in enumerate(others):
            flip = choice >> i & 1
            for x in c:
                if side[x] == flip:
                    t |= 1 << x
        if _is_clique(adj, t) and _is_clique(adj, nb & ~t):
            yield t


def _is_clique(adj, mask: int) -> bool:
    return all((adj[v] | (1 << v)) & mask == mask for v in bits(mask))


def line_graph_root(g: Graph) -> LineRoot | None:
    """Root graph ``H`` with ``L(H) = g`` (identity on indices), or None.

    Each component is handled separately; by Whitney's theorem its root is
    unique up to isomorphism except for the triangle, for which the claw
    root is preferred (bipartite).
    """
    root_edges: list[tuple[int, int] | None] = [None] * g.n
    next_vertex = 0
    for comp in components_mask(g.adj, g.full_mask):
        if comp.bit_count() == 1:
            v = lowest(comp)
            root_edges[v] = (next_vertex, next_vertex + 1)
            next_vertex += 2
            continue
        cliques = _krausz_component(g, comp)
        if cliques is None:
            return None
        ids = list(range(next_vertex, next_vertex + len(cliques)))
        next_vertex += len(cliques)
        ends: dict[int, list[int]] = {v: [] for v in bits(comp)}
        for cid, k in zip(ids, cliques):
            for v in bits(k):
                ends[v].append(cid)
        for v in bits(comp):
            e = ends[v]
            if len(e) == 1:
                e.append(next_vertex)
                next_vertex += 1
            root_edges[v] = (min(e), max(e))
    root = Graph.from_edges(next_vertex, root_edges)
    result = LineRoot(root, tuple(root_edges))
    if not result.reproduces(g):
        return None
    return result


# ---------------------------------------------------------------------------
# recognition and colouring


def basic_membership(g: Graph) -> dict[str, object]:
    """Witness (or None) for each of the four classes."""
    co = complement(g)
    out: dict[str, object] = {}
    out[BIPARTITE] = is_bipartite(g)
    out[COMPLEMENT_OF_BIPARTITE] = is_bipartite(co)
    root = line_graph_root(g)
    out[LINE_OF_BIPARTITE] = root if root is not None and is_bipartite(root.root) else None
    coroot = line_graph_root(co)
    out[COMPLEMENT_OF_LINE_OF_BIPARTITE] = coroot if coroot is not None and is_bipartite(coroot.root) else None
    return out


def recognize_basic(g: Graph) -> BasicClass:
    member = basic_membership(g)
    flags = {tag: member[tag] is not None for tag in TAGS}
    for tag in TAGS:
        w = member[tag]
        if w is None:
            continue
        if tag in (BIPARTITE, COMPLEMENT_OF_BIPARTITE):
            return BasicClass(tag, bipartition=w, membership=flags)
        return BasicClass(tag, line_root=w, membership=flags)
    return BasicClass(NOT_BASIC, membership=flags)


def validate_basic(g: Graph, c: BasicClass) -> bool:
    target = complement(g) if c.tag in (COMPLEMENT_OF_BIPARTITE, COMPLEMENT_OF_LINE_OF_BIPARTITE) else g
    if c.tag in (BIPARTITE, COMPLEMENT_OF_BIPARTITE):
        if c.bipartition is None:
            return False
        left, right = c.bipartition
        if left & right or left | right != frozenset(range(g.n)):
            return False
        return all((u in left) != (v in left) for u, v in target.edges())
    if c.tag in (LINE_OF_BIPARTITE, COMPLEMENT_OF_LINE_OF_BIPARTITE):
        return c.line_root is not None and c.line_root.reproduces(target) and is_bipartite(c.line_root.root) is not None
    return False


def color_basic(g: Graph, c: BasicClass) -> Coloring:
    """Colour a basic graph with exactly omega(g) colours."""
    if c.tag == NOT_BASIC or not validate_basic(g, c):
        raise InvalidInputError(f"invalid basic-class witness for tag {c.tag}")
    if g.n == 0:
        return Coloring((), 0)
    if c.tag == BIPARTITE:
        left, right = c.bipartition
        return Coloring.from_classes(g.n, [s for s in (left, right) if s])
    if c.tag == COMPLEMENT_OF_BIPARTITE:
        # cliques of the complement: matched pairs and leftover singletons
        co = complement(g)
        left, _ = c.bipartition
        mate = maximum_bipartite_matching(co, left)
        classes = [{u, mate[u]} for u in sorted(left) if u in mate]
        classes += [{v} for v in range(g.n) if v not in mate]
        return Coloring.from_classes(g.n, classes)
    root = c.line_root
    if c.tag == LINE_OF_BIPARTITE:
        ec = konig_edge_coloring(root.root)
        color_of = dict(zip(ec.edges, ec.colors))
        return Coloring.from_labels([color_of[e] for e in root.edge_map])
    # complement of a line graph: stars of a minimum vertex cover of the root
    sides = is_bipartite(root.root)
    mate = maximum_bipartite_matching(root.root, sides[0])
    cover = konig_vertex_cover(root.root, sides[0], mate)
    labels = [x if x in cover else y for x, y in root.edge_map]
    return Coloring.from_labels(labels)
