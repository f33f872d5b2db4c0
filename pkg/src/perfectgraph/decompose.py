"""2-join blocks, replication, parity-controlled block colourings and the
recursive colouring pipeline for perfect graphs.

The block colouring follows a fixed replication recipe: every vertex of the
marker path is copied so that each path edge sits in a clique of exactly
omega vertices. Any proper omega-colouring of the replicated graph then
forces the colour sets of A and B to the sizes and overlap that the
combination step needs. Those sizes are asserted on every call.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable

from .basic import NOT_BASIC, color_basic, recognize_basic
from .coloring import Coloring
from .config import DEFAULT_LIMITS, Limits
from .errors import InternalInconsistencyError, InvalidInputError
from .graph import Graph, bits, components_mask, induced_subgraph, mask_of, shortest_path_between_sets
from .oracle import clique_number, clique_number_of, is_perfect, k_coloring
from .structures import SixJoin, TwoJoin, find_two_join

PAIR, ODD, EVEN, NONE = "pair", "odd", "even", "none"

Colorer = Callable[[Graph, int], "Coloring | None"]


# ---------------------------------------------------------------------------
# replication


def _replicate_adj(adj: list[int], v: int, copies: int) -> list[int]:
    """Append ``copies`` true twins of ``v`` to ``adj`` (in place); return them."""
    new = []
    for _ in range(copies):
        w = len(adj)
        closed = adj[v] | (1 << v)
        for u in bits(closed):
            adj[u] |= 1 << w
        adj.append(closed)
        new.append(w)
    return new


def replicate(g: Graph, v: int, k: int) -> Graph:
    """``v`` replicated ``k`` times: ``k`` copies in total, counting ``v``.

    New vertices get indices ``g.n .. g.n + k - 2``."""
    if not 0 <= v < g.n:
        raise InvalidInputError(f"vertex {v} out of range")
    if k < 1:
        raise InvalidInputError("replication count must be at least 1")
    adj = list(g.adj)
    _replicate_adj(adj, v, k - 1)
    return Graph._trusted(len(adj), tuple(adj))


def replicate_minus_edge(g: Graph, u: int, v: int) -> Graph:
    """Add a twin ``v'`` of ``v`` (index ``g.n``) and delete the edge ``u v'``."""
    if not (0 <= u < g.n and 0 <= v < g.n) or not g.has_edge(u, v):
        raise InvalidInputError(f"{u}-{v} is not an edge")
    if g.adj[u] & g.adj[v]:
        raise InvalidInputError(f"{u} and {v} have a common neighbour")
    adj = list(g.adj)
    (w,) = _replicate_adj(adj, v, 1)
    adj[u] &= ~(1 << w)
    adj[w] &= ~(1 << u)
    return Graph._trusted(len(adj), tuple(adj))


# ---------------------------------------------------------------------------
# blocks


@dataclass(frozen=True)
class Block:
    """One block of a 2-join, kept in the parent's vertex names.

    ``marker`` lists the stand-in vertices taken from the other side, ordered
    from its A-end to its B-end: a chordless path, or the pair ``(p, q)``.
    """

    graph: Graph
    origin: tuple[int, ...]  # block index -> parent vertex
    side: frozenset[int]
    a: frozenset[int]
    b: frozenset[int]
    marker: tuple[int, ...]
    kind: str  # PAIR, ODD or EVEN

    def local(self, vertices) -> list[int]:
        where = {p: i for i, p in enumerate(self.origin)}
        return [where[p] for p in vertices]


@dataclass(frozen=True)
class BlockPair:
    g1: Block
    g2: Block
    two_join: TwoJoin

    @property
    def path_parity(self) -> str:
        """``odd``/``even`` when both markers are paths of one parity,
        ``none`` when either block uses a pair. Mixed parities (possible only
        for non-Berge inputs) give ``mixed``."""
        k1, k2 = self.g1.kind, self.g2.kind
        if PAIR in (k1, k2):
            return NONE
        return k1 if k1 == k2 else "mixed"


def _block(g: Graph, side, a, b, other, other_a, other_b) -> Block:
    sub, _ = induced_subgraph(g, sorted(other))
    where = {p: i for i, p in enumerate(sorted(other))}
    local = shortest_path_between_sets(sub, [where[x] for x in other_a], [where[x] for x in other_b])
    order = sorted(other)
    if local is None:
        marker = (min(other_a), min(other_b))
        kind = PAIR
    else:
        marker = tuple(order[i] for i in local)
        kind = ODD if (len(marker) - 1) % 2 else EVEN
    verts = sorted(set(side) | set(marker))
    graph, origin = induced_subgraph(g, verts)
    return Block(graph, tuple(origin), frozenset(side), frozenset(a), frozenset(b), marker, kind)


def two_join_blocks(g: Graph, tj: TwoJoin) -> BlockPair:
    problems = tj.validate(g)
    if problems:
        raise InvalidInputError("not a 2-join of this graph: " + "; ".join(problems))
    g1 = _block(g, tj.v1, tj.a1, tj.b1, tj.v2, tj.a2, tj.b2)
    g2 = _block(g, tj.v2, tj.a2, tj.b2, tj.v1, tj.a1, tj.b1)
    return BlockPair(g1, g2, tj)


def six_join_blocks(g: Graph, sj: SixJoin) -> tuple[Graph, Graph]:
    """Blocks G_X (X plus one representative of each Y_1..Y_3) and G_Y."""
    problems = sj.validate(g)
    if problems:
        raise InvalidInputError("not a 6-join of this graph: " + "; ".join(problems))
    x_all = frozenset().union(*sj.x)
    y_all = frozenset().union(*sj.y)
    gx, _ = induced_subgraph(g, sorted(x_all | {min(sj.y[j]) for j in range(3)}))
    gy, _ = induced_subgraph(g, sorted(y_all | {min(sj.x[i]) for i in range(3)}))
    return gx, gy


# ---------------------------------------------------------------------------
# block colouring


@dataclass(frozen=True)
class BlockColoring:
    """Omega-colouring of one side of a 2-join, colours ``0..omega-1``."""

    colors: dict[int, int]  # parent vertex of the side -> colour
    ca: frozenset[int]
    cb: frozenset[int]
    a: int
    b: int
    omega: int
    kind: str
    multiplicity: dict[int, int] = field(default_factory=dict)  # parent vertex -> copies
    h_size: int = 0

    def expected_overlap(self) -> int | None:
        if self.kind == ODD:
            return max(0, self.a + self.b - self.omega)
        if self.kind == EVEN:
            return min(self.a, self.b)
        return None


def _oracle_colorer(h: Graph, k: int) -> Coloring | None:
    return k_coloring(h, k, limit=None)


def block_coloring(block: Block, omega: int, colorer: Colorer | None = None) -> BlockColoring:
    """Replicate the marker of ``block``, colour the result with ``omega``
    colours and read off the colouring of the block's own side."""
    colorer = colorer or _oracle_colorer
    g = block.graph
    a_loc, b_loc = block.local(sorted(block.a)), block.local(sorted(block.b))
    a = clique_number_of(g, mask_of(a_loc))
    b = clique_number_of(g, mask_of(b_loc))
    if omega < clique_number(g, limit=None):
        raise InvalidInputError("omega below the clique number of the block")
    path = block.local(block.marker)
    adj = list(g.adj)
    mult: dict[int, int] = {}
    groups: list[list[int]] = []  # consecutive cliques along the marker

    def rep(x: int, k: int) -> list[int]:
        if k < 1:
            raise InternalInconsistencyError("replication count below one",
                                             {"graph": g.encode(), "vertex": x, "count": k})
        mult[block.origin[x]] = k
        return [x] + _replicate_adj(adj, x, k - 1)

    kind = block.kind
    if kind == PAIR:
        p, q = path
        rep(p, omega - a)
        rep(q, omega - b)
    elif kind == ODD:
        m = len(path)  # 2k vertices
        x2k = path[-1]
        for i in range(1, m):  # 1-based i < 2k
            groups.append(rep(path[i - 1], omega - a if i % 2 else a))
        if a + b < omega:
            # twin of x_2k that misses x_{2k-1} (and its copies made above)
            (xp,) = _replicate_adj(adj, x2k, 1)
            for y in groups[-1]:
                adj[y] &= ~(1 << xp)
                adj[xp] &= ~(1 << y)
            extra = [xp] + _replicate_adj(adj, xp, omega - a - b - 1)
            last = rep(x2k, a)
            groups.append(last)
            sizes = [len(last) + len(extra) + b]
        else:
            last = rep(x2k, omega - b)
            groups.append(last)
            sizes = [len(last) + b]
    else:
        order = path
        sa, sb = a, b
        if a > b:
            order = path[::-1]
            sa, sb = b, a
        m = len(order)  # 2k + 1 vertices
        for i in range(1, m):
            groups.append(rep(order[i - 1], omega - sa if i % 2 else sa))
        last = rep(order[-1], omega - sb)
        groups.append(last)
        sizes = [len(last) + sb]

    h = Graph._trusted(len(adj), tuple(adj))
    if kind != PAIR:
        # every marker edge lies in an omega-clique, as do both ends
        first_end = (b if kind == EVEN and a > b else a) + len(groups[0])
        sizes += [first_end] + [len(x) + len(y) for x, y in zip(groups, groups[1:])]
        # the last marker edge is tight except in two cases of the recipe
        if kind == EVEN:
            sizes[-1] += abs(a - b)
        elif a + b >= omega:
            sizes[-1] += a + b - omega
        if any(s != omega for s in sizes):
            raise InternalInconsistencyError("marker clique sizes differ from omega",
                                             {"graph": g.encode(), "sizes": sizes, "omega": omega})
    if clique_number(h, limit=None) != omega:
        raise InternalInconsistencyError("replicated block has the wrong clique number",
                                         {"graph": g.encode(), "omega": omega})
    col = colorer(h, omega)
    if col is None:
        raise InvalidInputError("replicated block has no omega-colouring (block not perfect)")
    if not col.is_proper(h) or col.k > omega:
        raise InternalInconsistencyError("colourer returned an improper colouring", {"graph": h.encode()})
    colors = {block.origin[i]: col.colors[i] for i in range(g.n) if block.origin[i] in block.side}
    ca = frozenset(colors[v] for v in block.a)
    cb = frozenset(colors[v] for v in block.b)
    out = BlockColoring(colors, ca, cb, a, b, omega, kind, mult, h.n)
    want = out.expected_overlap()
    if len(ca) != a or len(cb) != b or (want is not None and len(ca & cb) != want):
        raise InternalInconsistencyError(
            "block colouring violates the colour-set contract",
            {"graph": g.encode(), "kind": kind, "a": a, "b": b, "omega": omega,
             "|C(A)|": len(ca), "|C(B)|": len(cb), "overlap": len(ca & cb), "expected": want})
    return out


# ---------------------------------------------------------------------------
# combination


def _relabel(pairs: list[tuple[frozenset[int], frozenset[int]]], omega: int) -> dict[int, int]:
    """Permutation of ``0..omega-1`` sending each source set onto its target.

    ``pairs`` holds (source, target) for the A and B colour sets; sources
    and targets must have matching sizes and matching overlap."""
    (sa, ta), (sb, tb) = pairs
    if len(sa) != len(ta) or len(sb) != len(tb) or len(sa & sb) != len(ta & tb):
        raise InternalInconsistencyError("colour sets cannot be relabelled onto their targets",
                                         {"sources": (sorted(sa), sorted(sb)), "targets": (sorted(ta), sorted(tb))})
    perm: dict[int, int] = {}
    rest_src = set(range(omega))
    rest_dst = set(range(omega))
    for src, dst in ((sa & sb, ta & tb), (sa - sb, ta - tb), (sb - sa, tb - ta)):
        for s, t in zip(sorted(src), sorted(dst)):
            perm[s] = t
        rest_src -= src
        rest_dst -= dst
    for s, t in zip(sorted(rest_src), sorted(rest_dst)):
        perm[s] = t
    return perm


def _avoiding(used: frozenset[int], banned: frozenset[int], omega: int) -> dict[int, int]:
    """Permutation of ``0..omega-1`` moving ``used`` off ``banned``."""
    free = [c for c in range(omega) if c not in banned]
    if len(used) > len(free):
        raise InternalInconsistencyError("not enough free colours", {"used": sorted(used), "banned": sorted(banned)})
    perm = dict(zip(sorted(used), free))
    rest_src = [c for c in range(omega) if c not in perm]
    rest_dst = [c for c in range(omega) if c not in set(perm.values())]
    perm.update(zip(rest_src, rest_dst))
    return perm


def combine_colorings(c1: BlockColoring, c2: BlockColoring, tj: TwoJoin, omega: int, g: Graph) -> Coloring:
    """Merge side colourings into an omega-colouring of ``g``."""
    if omega < c1.a + c2.a or omega < c1.b + c2.b:
        raise InvalidInputError("omega smaller than a1 + a2 or b1 + b2")
    colors: dict[int, int] = {}
    if PAIR in (c1.kind, c2.kind):
        # the side whose A, B are disconnected is fitted component by component
        keep, fit = (c1, c2) if c1.kind == PAIR else (c2, c1)
        fit_side, fit_a, fit_b = (tj.v2, tj.a2, tj.b2) if c1.kind == PAIR else (tj.v1, tj.a1, tj.b1)
        colors.update(keep.colors)
        for comp in components_mask(g.adj, mask_of(fit_side)):
            cv = set(bits(comp))
            on_a, on_b = cv & fit_a, cv & fit_b
            if on_a and on_b:
                raise InternalInconsistencyError("A and B share a component on the disconnected side",
                                                 {"graph": g.encode()})
            if on_a:
                perm = _avoiding(frozenset(fit.colors[v] for v in on_a), keep.ca, omega)
            elif on_b:
                perm = _avoiding(frozenset(fit.colors[v] for v in on_b), keep.cb, omega)
            else:
                perm = {c: c for c in range(omega)}
            for v in cv:
                colors[v] = perm[fit.colors[v]]
    else:
        if c1.kind != c2.kind:
            raise InvalidInputError(f"marker parities differ ({c1.kind} vs {c2.kind})")
        top = lambda k: frozenset(range(omega - k, omega))  # noqa: E731
        bottom = lambda k: frozenset(range(k))  # noqa: E731
        if c1.kind == ODD:
            t1 = ((c1.ca, bottom(c1.a)), (c1.cb, top(c1.b)))
            t2 = ((c2.ca, top(c2.a)), (c2.cb, bottom(c2.b)))
        else:
            t1 = ((c1.ca, bottom(c1.a)), (c1.cb, bottom(c1.b)))
            t2 = ((c2.ca, top(c2.a)), (c2.cb, top(c2.b)))
        for c, targets in ((c1, t1), (c2, t2)):
            perm = _relabel(list(targets), omega)
            for v, col in c.colors.items():
                colors[v] = perm[col]
    labels = [colors.get(v) for v in range(g.n)]
    if any(x is None for x in labels):
        raise InternalInconsistencyError("combined colouring misses vertices", {"graph": g.encode()})
    out = Coloring(tuple(labels), omega)
    if not out.is_proper(g):
        raise InternalInconsistencyError("combined colouring is not proper",
                                         {"graph": g.encode(), "two_join": repr(tj), "c1": repr(c1), "c2": repr(c2)})
    return out


# ---------------------------------------------------------------------------
# pipeline


@dataclass(frozen=True)
class DecompositionNode:
    """How one graph was coloured: ``basic``, ``two_join`` or ``oracle``."""

    kind: str
    n: int
    detail: dict = field(default_factory=dict)
    children: tuple["DecompositionNode", ...] = ()

    def count(self, kind: str) -> int:
        return (self.kind == kind) + sum(c.count(kind) for c in self.children)


@dataclass(frozen=True)
class PerfectColoring:
    coloring: Coloring
    omega: int
    tree: DecompositionNode


def _basic_or_oracle(g: Graph, omega: int) -> tuple[Coloring, DecompositionNode]:
    cls = recognize_basic(g)
    if cls.tag != NOT_BASIC:
        col = color_basic(g, cls)
        if col.k != omega:
            raise InternalInconsistencyError("basic colouring does not use omega colours",
                                             {"graph": g.encode(), "tag": cls.tag})
        return col, DecompositionNode("basic", g.n, {"tag": cls.tag})
    col = k_coloring(g, omega, limit=None)
    if col is None:
        raise InvalidInputError(f"graph {g.encode()} has no {omega}-colouring, so it is not perfect")
    return col, DecompositionNode("oracle", g.n)


def _pipeline(g: Graph, omega: int, recorder: list | None) -> tuple[Coloring, DecompositionNode]:
    if g.n == 0:
        return Coloring((), 0), DecompositionNode("basic", 0, {"tag": "empty"})
    cls = recognize_basic(g)
    if cls.tag == NOT_BASIC and g.n >= 6:
        tj = find_two_join(g)
        if tj is not None:
            pair = two_join_blocks(g, tj)
            if pair.g1.graph.n < g.n and pair.g2.graph.n < g.n and pair.path_parity != "mixed":
                nodes: list[DecompositionNode] = []

                def colorer(h: Graph, k: int) -> Coloring | None:
                    # recurse only on strictly smaller graphs, so the recursion ends
                    col, node = _pipeline(h, k, recorder) if h.n < g.n else _basic_or_oracle(h, k)
                    nodes.append(node)
                    return col

                c1 = block_coloring(pair.g1, omega, colorer)
                c2 = block_coloring(pair.g2, omega, colorer)
                if recorder is not None:
                    recorder.extend((c1, c2))
                col = combine_colorings(c1, c2, tj, omega, g)
                detail = {"sides": (len(tj.v1), len(tj.v2)), "parity": pair.path_parity,
                          "blocks": (pair.g1.graph.n, pair.g2.graph.n)}
                return col, DecompositionNode("two_join", g.n, detail, tuple(nodes))
    return _basic_or_oracle(g, omega)


def perfect_color(g: Graph, verify: bool = True, limits: Limits = DEFAULT_LIMITS,
                  recorder: list | None = None) -> PerfectColoring:
    """Colour a perfect graph with omega(g) colours.

    Order of attempts: basic class, then a 2-join whose blocks are both
    smaller (recursing through the replicated blocks), then the exact oracle.
    With ``verify`` the input is first checked for perfection. Block
    colourings are appended to ``recorder`` when given.
    """
    if verify:
        res = is_perfect(g, limit=limits.perfect)
        if not res:
            raise InvalidInputError(f"graph is not perfect; witness {sorted(res.witness)}")
    omega = clique_number(g, limit=None)
    col, tree = _pipeline(g, omega, recorder)
    if not col.is_proper(g) or col.k != omega:
        raise InternalInconsistencyError("pipeline colouring failed verification", {"graph": g.encode()})
    return PerfectColoring(col, omega, tree)
