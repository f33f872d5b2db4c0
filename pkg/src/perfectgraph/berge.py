"""Berge recognition by hole scans, the Wonderful Lemma as an executable
check, and decomposition reports for Berge, square-free Berge and
odd-hole-free graphs.

A report that finds none of a proved theorem's alternatives raises
:class:`InternalInconsistencyError` carrying the encoded graph.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .basic import (
    BIPARTITE,
    COMPLEMENT_OF_LINE_OF_BIPARTITE,
    LINE_OF_BIPARTITE,
    NOT_BASIC,
    basic_membership,
    recognize_basic,
)
from .config import DEFAULT_LIMITS, Limits, check_limit
from .errors import InternalInconsistencyError, InvalidInputError
from .graph import (
    ANY,
    ODD,
    Graph,
    bits,
    complement,
    find_hole,
    induced_mask,
    is_chordless_path,
    is_connected_mask,
    mask_of,
)
from .structures import (
    find_double_star_cutset,
    find_homogeneous_pair,
    find_skew_partition,
    find_star_cutset,
    find_two_join,
)


@dataclass(frozen=True)
class BergeResult:
    berge: bool
    witness: tuple[int, ...] | None = None  # odd hole of g or of its complement
    in_complement: bool = False

    def __bool__(self) -> bool:
        return self.berge


def is_berge(g: Graph, limit: int | None = DEFAULT_LIMITS.berge) -> BergeResult:
    """No odd hole in g and none in its complement (odd antihole in g)."""
    check_limit("Berge scan", g.n, limit)
    hole = find_hole(g, ODD, 5)
    if hole is not None:
        return BergeResult(False, tuple(hole), False)
    hole = find_hole(complement(g), ODD, 5)
    if hole is not None:
        return BergeResult(False, tuple(hole), True)
    return BergeResult(True)


def _require_berge(g: Graph, limit: int | None) -> None:
    res = is_berge(g, limit)
    if not res:
        where = "antihole" if res.in_complement else "hole"
        raise InvalidInputError(f"graph is not Berge: odd {where} {list(res.witness)}")


# ---------------------------------------------------------------------------
# Wonderful Lemma


@dataclass(frozen=True)
class WonderfulInstance:
    g: Graph
    s: frozenset[int]
    path: tuple[int, ...]  # u, u', ..., v', v

    def problems(self) -> list[str]:
        g, s, p = self.g, self.s, self.path
        out = []
        if set(p) & s or set(p) | s != set(range(g.n)) or len(set(p)) != len(p):
            out.append("S and V(P) do not partition V")
        if not s:
            out.append("S is empty")
        if len(p) < 4 or (len(p) - 1) % 2 == 0:
            out.append("P is not an odd path of length at least 3")
        if not is_chordless_path(g, list(p)):
            out.append("P is not a chordless path")
        u, v = p[0], p[-1]
        if any(not (g.has_edge(u, x) and g.has_edge(v, x)) for x in s):
            out.append("u or v not complete to S")
        co = complement(g)
        if s and not is_connected_mask(co.adj, mask_of(s)):
            out.append("complement of G(S) is disconnected")
        return out


@dataclass(frozen=True)
class WonderfulOutcome:
    complete_edges: tuple[tuple[int, int], ...]  # P-edges with both ends complete to S
    outcome_i: bool
    outcome_ii: bool
    outcome_iii: bool
    witness_ii: tuple[int, ...] | None = None
    witness_iii: tuple[int, int] | None = None

    @property
    def holds(self) -> tuple[str, ...]:
        return tuple(name for name, ok in (("i", self.outcome_i), ("ii", self.outcome_ii),
                                           ("iii", self.outcome_iii)) if ok)


def _odd_chordless_path(g: Graph, src: int, dst: int, allowed: int) -> tuple[int, ...] | None:
    """Depth-first search over chordless src..dst paths inside ``allowed``
    for one with an odd number of edges."""
    adj = g.adj
    stack = [(src,)]
    while stack:
        path = stack.pop()
        last = path[-1]
        for w in bits(adj[last] & allowed & ~mask_of(path)):
            if adj[w] & mask_of(path[:-1]):
                continue  # chord back into the path
            if w == dst:
                if len(path) % 2 == 1:
                    return path + (w,)
                continue
            stack.append(path + (w,))
    return None


def wonderful_check(inst: WonderfulInstance, limit: int | None = DEFAULT_LIMITS.berge) -> WonderfulOutcome:
    problems = inst.problems()
    if problems:
        raise InvalidInputError("not a valid instance: " + "; ".join(problems))
    g, s, p = inst.g, inst.s, inst.path
    _require_berge(g, limit)
    smask = mask_of(s)
    full_to_s = [v for v in p if g.adj[v] & smask == smask]
    edges = tuple((x, y) for x, y in zip(p, p[1:]) if x in full_to_s and y in full_to_s)
    out_i = len(edges) % 2 == 1
    out_ii, w_ii = False, None
    out_iii, w_iii = False, None
    if len(p) == 4:
        u1, v1 = p[1], p[2]
        co = complement(g)
        w_ii = _odd_chordless_path(co, u1, v1, smask | (1 << u1) | (1 << v1))
        out_ii = w_ii is not None
    else:
        interior = list(p[1:-1])
        for x in sorted(s):
            for y in sorted(s):
                if x < y and not g.has_edge(x, y):
                    verts = interior + [x, y]
                    if _induces_path(g, verts):
                        out_iii, w_iii = True, (x, y)
                        break
            if out_iii:
                break
    res = WonderfulOutcome(edges, out_i, out_ii, out_iii, w_ii, w_iii)
    if not res.holds:
        raise InternalInconsistencyError("no outcome of the Wonderful Lemma holds",
                                         {"graph": g.encode(), "S": sorted(s), "P": list(p)})
    return res


def _induces_path(g: Graph, verts: list[int]) -> bool:
    sub, _ = induced_mask(g, mask_of(verts))
    degs = sorted(sub.degree(v) for v in range(sub.n))
    if sub.m != sub.n - 1 or not is_connected_mask(sub.adj, sub.full_mask):
        return False
    return sub.n == 1 or degs[:2] == [1, 1] and all(d == 2 for d in degs[2:])


def wonderful_instances(g: Graph, limit: int | None = 9):
    """Every (S, P) split of a graph satisfying the hypothesis, one per
    vertex set of P (the path is reported from its smaller end)."""
    check_limit("Wonderful Lemma instance scan", g.n, limit)
    n, adj, full = g.n, g.adj, g.full_mask
    co = complement(g)
    for pm in range(1, 1 << n):
        size = pm.bit_count()
        if size < 4 or size % 2 or size == n:
            continue
        if not _is_path_mask(adj, pm):
            continue
        smask = full & ~pm
        ends = [v for v in bits(pm) if (adj[v] & pm).bit_count() == 1]
        if any(adj[e] & smask != smask for e in ends):
            continue
        if not is_connected_mask(co.adj, smask):
            continue
        path = _walk(adj, pm, min(ends))
        yield WonderfulInstance(g, frozenset(bits(smask)), tuple(path))


def _is_path_mask(adj, mask: int) -> bool:
    ends = 0
    for v in bits(mask):
        d = (adj[v] & mask).bit_count()
        if d == 1:
            ends += 1
        elif d != 2:
            return False
    return ends == 2 and is_connected_mask(adj, mask)


def _walk(adj, mask: int, start: int) -> list[int]:
    path, prev, cur = [start], -1, start
    while True:
        nxt = [w for w in bits(adj[cur] & mask) if w != prev]
        if not nxt:
            return path
        prev, cur = cur, nxt[0]
        path.append(cur)


# ---------------------------------------------------------------------------
# decomposition reports

BASIC, SKEW, HOMOGENEOUS, TWO_JOIN_G, TWO_JOIN_CO, NONE_FOUND = (
    "basic", "skew_partition", "homogeneous_pair", "two_join_in_G", "two_join_in_complement", "none_found")
DECOMPOSITION_CASES = (BASIC, SKEW, HOMOGENEOUS, TWO_JOIN_G, TWO_JOIN_CO)


@dataclass(frozen=True)
class DecompositionReport:
    case: str
    witness: object = None
    holds: dict[str, bool] = field(default_factory=dict)  # filled when every case is evaluated


def _decomposition_cases(g: Graph, limits: Limits):
    yield BASIC, lambda: (lambda c: c if c.tag != NOT_BASIC else None)(recognize_basic(g))
    yield SKEW, lambda: find_skew_partition(g, limits.skew)
    yield HOMOGENEOUS, lambda: find_homogeneous_pair(g, limits.homogeneous_pair)
    yield TWO_JOIN_G, lambda: find_two_join(g)
    yield TWO_JOIN_CO, lambda: find_two_join(complement(g))


def decomposition_report(g: Graph, limits: Limits = DEFAULT_LIMITS, all_cases: bool = False,
                         check_berge: bool = True) -> DecompositionReport:
    """First case in the order basic, skew partition, homogeneous pair,
    2-join, 2-join of the complement. ``all_cases`` evaluates every case."""
    if check_berge:
        _require_berge(g, limits.berge)
    first, witness, holds = NONE_FOUND, None, {}
    for case, run in _decomposition_cases(g, limits):
        w = run()
        holds[case] = w is not None
        if w is not None and first == NONE_FOUND:
            first, witness = case, w
            if not all_cases:
                break
    if first == NONE_FOUND:
        raise InternalInconsistencyError("Berge graph with no decomposition", {"graph": g.encode()})
    return DecompositionReport(first, witness, holds if all_cases else {})


@dataclass(frozen=True)
class TheoremReport:
    case: str
    witness: object = None


def _first_disjunct(g: Graph, cases, what: str) -> TheoremReport:
    for case, run in cases:
        w = run()
        if w is not None:
            return TheoremReport(case, w)
    raise InternalInconsistencyError(f"{what}: no alternative holds", {"graph": g.encode()})


def has_square(g: Graph) -> bool:
    """Whether g has a hole of length 4."""
    for u in range(g.n):
        for w in range(u + 1, g.n):
            if g.has_edge(u, w):
                continue
            common = g.adj[u] & g.adj[w]
            for x in bits(common):
                if common & ~g.adj[x] & ~(1 << x) & ~((2 << x) - 1):
                    return True
    return False


def square_free_report(g: Graph, limits: Limits = DEFAULT_LIMITS) -> TheoremReport:
    """Bipartite, line graph of a bipartite graph, 2-join, or star cutset."""
    _require_berge(g, limits.berge)
    if has_square(g):
        raise InvalidInputError("graph contains a 4-hole")
    member = basic_membership(g)
    return _first_disjunct(g, [
        (BIPARTITE, lambda: member[BIPARTITE]),
        (LINE_OF_BIPARTITE, lambda: member[LINE_OF_BIPARTITE]),
        ("two_join", lambda: find_two_join(g)),
        ("star_cutset", lambda: find_star_cutset(g, limits.star)),
    ], "square-free Berge decomposition")


def odd_hole_free_report(g: Graph, limits: Limits = DEFAULT_LIMITS) -> TheoremReport:
    """Bipartite, line graph of bipartite, its complement, double star cutset,
    or 2-join."""
    check_limit("odd hole scan", g.n, limits.berge)
    hole = find_hole(g, ODD, 5)
    if hole is not None:
        raise InvalidInputError(f"graph has the odd hole {hole}")
    member = basic_membership(g)
    return _first_disjunct(g, [
        (BIPARTITE, lambda: member[BIPARTITE]),
        (LINE_OF_BIPARTITE, lambda: member[LINE_OF_BIPARTITE]),
        (COMPLEMENT_OF_LINE_OF_BIPARTITE, lambda: member[COMPLEMENT_OF_LINE_OF_BIPARTITE]),
        ("double_star_cutset", lambda: find_double_star_cutset(g, limits.star)),
        ("two_join", lambda: find_two_join(g)),
    ], "odd-hole-free decomposition")


__all__ = [
    "ANY", "BergeResult", "is_berge", "WonderfulInstance", "WonderfulOutcome", "wonderful_check",
    "wonderful_instances", "DecompositionReport", "decomposition_report", "DECOMPOSITION_CASES",
    "TheoremReport", "square_free_report", "odd_hole_free_report", "has_square",
]
