"""Detection of the cutsets and partitions that cannot occur in minimally
imperfect graphs: 2-joins, 6-joins, skew partitions (with T-, U-, star and
double star refinements), star and double star cutsets, homogeneous pairs.

All searches are exhaustive at desk scale and enumerate candidates in
increasing bitmask order, so the returned witness is deterministic. Every
witness is re-checked by a validator that shares no code with its finder.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .config import DEFAULT_LIMITS, check_limit
from .errors import InternalInconsistencyError, InvalidInputError
from .graph import (
    Graph,
    anticomponents_mask,
    bits,
    components_mask,
    is_connected_mask,
    lowest,
    mask_of,
    submasks_increasing,
)

Vs = frozenset[int]


def _fs(mask: int) -> Vs:
    return frozenset(bits(mask))


def _complete(g: Graph, x: Vs, y: Vs) -> bool:
    return all(g.has_edge(u, v) for u in x for v in y)


def _anticomplete(g: Graph, x: Vs, y: Vs) -> bool:
    return not any(g.has_edge(u, v) for u in x for v in y)


def _components(g: Graph, s: Vs) -> list[Vs]:
    """Plain BFS, kept separate from the bitset helpers the finders use."""
    left = set(s)
    out = []
    while left:
        start = min(left)
        comp = {start}
        todo = [start]
        while todo:
            v = todo.pop()
            for u in g.neighbors(v):
                if u in left and u not in comp:
                    comp.add(u)
                    todo.append(u)
        left -= comp
        out.append(frozenset(comp))
    return out


# ---------------------------------------------------
# 2-join


@dataclass(frozen=True)
class TwoJoin:
    v1: Vs
    v2: Vs
    a1: Vs
    b1: Vs
    a2: Vs
    b2: Vs

    def validate(self, g: Graph) -> list[str]:
        p = []
        if self.v1 & self.v2 or self.v1 | self.v2 != frozenset(range(g.n)):
            p.append("V1, V2 do not partition V")
        if len(self.v1) < 3 or len(self.v2) < 3:
            p.append("a side has fewer than 3 vertices")
        for name, a, b, side in (("1", self.a1, self.b1, self.v1), ("2", self.a2, self.b2, self.v2)):
            if not a or not b or a & b or not (a | b) <= side:
                p.append(f"A{name}, B{name} not nonempty disjoint subsets of V{name}")
        if not _complete(g, self.a1, self.a2) or not _complete(g, self.b1, self.b2):
            p.append("missing A1-A2 or B1-B2 edge")
        for u in self.v1:
            for v in self.v2:
                allowed = (u in self.a1 and v in self.a2) or (u in self.b1 and v in self.b2)
                if g.has_edge(u, v) and not allowed:
                    p.append(f"extra crossing edge {u}-{v}")
        return p


def _two_join_for_side(g: Graph, v1: int) -> TwoJoin | None:
    v2 = g.full_mask & ~v1
    classes: dict[int, int] = {}
    for v in bits(v1):
        out = g.adj[v] & v2
        if out:
            classes[out] = classes.get(out, 0) | (1 << v)
            if len(classes) > 2:
                return None
    if len(classes) != 2:
        return None
    (x, xs), (y, ys) = classes.items()
    if x & y:
        return None
    if lowest(xs) > lowest(ys):
        (x, xs), (y, ys) = (y, ys), (x, xs)
    return TwoJoin(_fs(v1), _fs(v2), _fs(xs), _fs(ys), _fs(x), _fs(y))


def iter_two_joins(g: Graph, limit: int | None = DEFAULT_LIMITS.two_join):
    """Every 2-join by exhaustive side enumeration (V1 holds vertex 0).

    Exponential; kept as an independent cross-check for the seeded search.
    """
    check_limit("2-join enumeration", g.n, limit)
    n = g.n
    if n < 6:
        return
    rest = g.full_mask & ~1
    for extra in submasks_increasing(rest):
        v1 = extra | 1
        size = v1.bit_count()
        if size < 3 or n - size < 3:
            continue
        tj = _two_join_for_side(g, v1)
        if tj is not None:
            yield tj


def _seeded_side(g: Graph, a1: int, a2: int, b1: int, b2: int) -> int | None:
    """Smallest V1 containing a1, b1 for a 2-join with a_i in A_i, b_i in B_i.

    With the seeds fixed, a vertex placed in V1 is in A1, B1 or neither
    according to its adjacency to a2 and b2, and likewise in V2 with a1, b1.
    Every constraint then reads "x in V1 forces y in V1", so the least
    closed set containing the seeds decides the question.
    """
    adj, full = g.adj, g.full_mask
    na1, nb1, na2, nb2 = adj[a1], adj[b1], adj[a2], adj[b2]
    # roles available on side 2
    r2a = na1 & ~nb1
    r2b = nb1 & ~na1
    r2c = full & ~na1 & ~nb1
    only1 = na1 & nb1  # cannot live in V2
    only2 = na2 & nb2  # cannot live in V1
    seeds = (1 << a1) | (1 << b1) | only1
    side2 = (1 << a2) | (1 << b2) | only2
    if seeds & side2:
        return None

    def forbid(x: int) -> int:
        row = adj[x]
        if na2 >> x & 1:
            return (r2a & ~row) | ((r2b | r2c) & row)
        if nb2 >> x & 1:
            return (r2b & ~row) | ((r2a | r2c) & row)
        return row & (r2a | r2b | r2c)

    def close(start: int) -> int | None:
        v1 = start
        frontier = start
        while frontier:
            x = lowest(frontier)
            frontier ^= 1 << x
            new = forbid(x) & ~v1
            if new & side2:
                return None
            v1 |= new
            frontier |= new
        return v1

    v1 = close(seeds)
    if v1 is None or (full & ~v1).bit_count() < 3:
        return None
    if v1.bit_count() >= 3:
        return v1
    for z in bits(full & ~v1 & ~side2):
        grown = close(v1 | (1 << z))
        if grown is not None and (full & ~grown).bit_count() >= 3:
            return grown
    return None


def find_two_join(g: Graph, limit: int | None = None) -> TwoJoin | None:
    """First 2-join found from seed quadruples (a1, a2, b1, b2) in
    lexicographic order, with a1 the smallest of the four (every 2-join can
    be relabelled that way). Polynomial: O(m^2) seeds, O(n) closure each."""
    check_limit("2-join search", g.n, limit)
    n, adj = g.n, g.adj
    if n < 6:
        return None
    for a1 in range(n):
        for a2 in bits(adj[a1] >> (a1 + 1) << (a1 + 1)):
            for b1 in range(a1 + 1, n):
                if b1 == a2 or adj[b1] >> a2 & 1:
                    continue
                for b2 in bits(adj[b1] >> (a1 + 1) << (a1 + 1)):
                    if b2 == a2 or adj[a1] >> b2 & 1:
                        continue
                    v1 = _seeded_side(g, a1, a2, b1, b2)
                    if v1 is None:
                        continue
                    if not v1 & 1:
                        v1 = g.full_mask & ~v1
                    tj = _two_join_for_side(g, v1)
                    if tj is None:
                        raise InternalInconsistencyError("seeded 2-join side is not a 2-join", {"graph": g.encode()})
                    problems = tj.validate(g)
                    if problems:
                        raise InternalInconsistencyError("2-join finder returned an invalid witness: "
                                                         + "; ".join(problems), {"graph": g.encode()})
                    return tj
    return None


# ---------------------------------------------------
# 6-join


@dataclass(frozen=True)
class SixJoin:
    x: tuple[Vs, Vs, Vs, Vs]
    y: tuple[Vs, Vs, Vs, Vs]

    # cyclic order of the induced hole: x1 y1 x2 y2 x3 y3
    PATTERN = {(0, 0), (1, 0), (1, 1), (2, 1), (2, 2), (0, 2)}

    def validate(self, g: Graph) -> list[str]:
        p = []
        parts = list(self.x) + list(self.y)
        if any(not s for s in parts):
            p.append("empty part")
        union = frozenset().union(*parts)
        if union != frozenset(range(g.n)) or sum(len(s) for s in parts) != g.n:
            p.append("parts do not partition V")
        if p:
            return p
        for i in range(4):
            for j in range(4):
                want = (i, j) in self.PATTERN
                if want and not _complete(g, self.x[i], self.y[j]):
                    p.append(f"X{i + 1} not complete to Y{j + 1}")
                if not want and not _anticomplete(g, self.x[i], self.y[j]):
                    p.append(f"unexpected edge between X{i + 1} and Y{j + 1}")
        for side, name in ((self.x, "X"), (self.y, "Y")):
            for i in range(3):
                for j in range(i + 1, 3):
                    if not _anticomplete(g, side[i], side[j]):
                        p.append(f"{name}{i + 1} not anticomplete to {name}{j + 1}")
        return p


def _six_join_for_side(g: Graph, xm: int) -> SixJoin | None:
    ym = g.full_mask & ~xm
    groups: dict[int, int] = {}
    x4 = 0
    for v in bits(xm):
        out = g.adj[v] & ym
        if out:
            groups[out] = groups.get(out, 0) | (1 << v)
            if len(groups) > 3:
                return None
        else:
            x4 |= 1 << v
    if len(groups) != 3 or not x4:
        return None
    (s1, x1), (s2, x2), (s3, x3) = sorted(groups.items(), key=lambda kv: lowest(kv[1]))
    y1, y2, y3 = s1 & s2, s2 & s3, s1 & s3
    if not (y1 and y2 and y3) or s1 & s2 & s3:
        return None
    if s1 != y1 | y3 or s2 != y1 | y2 or s3 != y2 | y3:
        return None
    y4 = ym & ~(s1 | s2 | s3)
    if not y4:
        return None
    adj = g.adj
    for a, b in ((x1, x2), (x2, x3), (x1, x3), (y1, y2), (y2, y3), (y1, y3)):
        if any(adj[v] & b for v in bits(a)):
            return None
    return SixJoin((_fs(x1), _fs(x2), _fs(x3), _fs(x4)), (_fs(y1), _fs(y2), _fs(y3), _fs(y4)))


def find_six_join(g: Graph, limit: int | None = DEFAULT_LIMITS.six_join) -> SixJoin | None:
    check_limit("6-join search", g.n, limit)
    if g.n < 8:
        return None
    rest = g.full_mask & ~1
    for extra in submasks_increasing(rest):
        xm = extra | 1
        if xm.bit_count() < 4 or g.n - xm.bit_count() < 4:
            continue
        sj = _six_join_for_side(g, xm)
        if sj is not None:
            problems = sj.validate(g)
            if problems:
                raise InternalInconsistencyError("6-join finder returned an invalid witness: " + "; ".join(problems),
                                                 {"graph": g.encode()})
            return sj
    return None


# ---------------------------------------------------
# skew partitions


@dataclass(frozen=True)
class SkewPartition:
    a: Vs
    b: Vs
    c: Vs
    d: Vs

    @property
    def cutset(self) -> Vs:
        return self.a | self.b

    def validate(self, g: Graph) -> list[str]:
        p = []
        parts = (self.a, self.b, self.c, self.d)
        if any(not s for s in parts):
            p.append("empty part")
        if sum(map(len, parts)) != g.n or frozenset().union(*parts) != frozenset(range(g.n)):
            p.append("parts do not partition V")
        if not _complete(g, self.a, self.b):
            p.append("A not complete to B")
        if not _anticomplete(g, self.c, self.d):
            p.append("edge between C and D")
        return p


def iter_skew_partitions(g: Graph, limit: int | None = DEFAULT_LIMITS.skew):
    """One skew partition per cutset S = A u B whose complement is
    disconnected and whose removal disconnects g. A is the anticomponent of
    S holding min(S); C the component of g - S holding its smallest vertex."""
    check_limit("skew partition search", g.n, limit)
    n, adj, full = g.n, g.adj, g.full_mask
    if n < 4:
        return
    for s in range(3, 1 << n):
        size = s.bit_count()
        if size < 2 or n - size < 2:
            continue
        rest = full & ~s
        if is_connected_mask(adj, rest):
            continue
        anti = anticomponents_mask(adj, s)
        if len(anti) < 2:
            continue
        comps = components_mask(adj, rest)
        a = anti[0]
        c = comps[0]
        yield SkewPartition(_fs(a), _fs(s & ~a), _fs(c), _fs(rest & ~c))


def find_skew_partition(g: Graph, limit: int | None = DEFAULT_LIMITS.skew) -> SkewPartition | None:
    for sp in iter_skew_partitions(g, limit):
        problems = sp.validate(g)
        if problems:
            raise InternalInconsistencyError("skew partition finder returned an invalid witness: "
                                             + "; ".join(problems), {"graph": g.encode()})
        return sp
    return None


# cutset refinements ---------------------------------

STAR, DOUBLE_STAR, T_CUTSET, U_CUTSET, PLAIN_SKEW = "star", "double_star", "t_cutset", "u_cutset", "plain_skew"


@dataclass(frozen=True)
class CutsetKind:
    """``roles`` records which parts played A/B and C/D for T- and U-cutsets
    (for example ``"A,B|C,D"`` or ``"B,A|D,C"``)."""

    tag: str
    u: int | None = None
    v: int | None = None
    roles: str = ""


def classify_cutset(g: Graph, sp: SkewPartition) -> list[CutsetKind]:
    """Every refinement the skew partition admits, with all witness pairs.

    The partition's definition is symmetric under swapping A with B and C
    with D, so T- and U-cutsets are searched under each relabelling.
    ``double_star`` always applies (u in A, v in B); ``plain_skew`` is
    reported when none of star, T-cutset or U-cutset applies.
    """
    if sp.validate(g):
        raise InvalidInputError("classify_cutset: not a skew partition of g")
    found: list[CutsetKind] = []
    ab = sp.a | sp.b
    for x in sorted(ab):
        if all(g.has_edge(x, y) for y in ab if y != x):
            found.append(CutsetKind(STAR, x))
    found.append(CutsetKind(DOUBLE_STAR, min(sp.a), min(sp.b)))
    labelled = {"A": sp.a, "B": sp.b, "C": sp.c, "D": sp.d}
    for first, second in (("A", "B"), ("B", "A")):
        big_a, big_b = labelled[first], labelled[second]
        for host, other in (("C", "D"), ("D", "C")):
            hc, hd = labelled[host], labelled[other]
            roles = f"{first},{second}|{host},{other}"
            if host == "C":
                for u in sorted(hc):
                    for v in sorted(hd):
                        if all(g.has_edge(x, u) and g.has_edge(x, v) for x in big_a):
                            found.append(CutsetKind(T_CUTSET, u, v, roles))
            for u in sorted(hc):
                for v in sorted(hc):
                    if u == v:
                        continue
                    if all(g.has_edge(x, u) for x in big_a) and all(g.has_edge(y, v) for y in big_b):
                        found.append(CutsetKind(U_CUTSET, u, v, roles))
    if not any(k.tag in (STAR, T_CUTSET, U_CUTSET) for k in found):
        found.append(CutsetKind(PLAIN_SKEW))
    return found


def is_t_cutset(g: Graph, sp: SkewPartition, u: int, v: int) -> bool:
    return u in sp.c and v in sp.d and all(g.has_edge(x, u) and g.has_edge(x, v) for x in sp.a)


def is_u_cutset(g: Graph, sp: SkewPartition, u: int, v: int) -> bool:
    return (u in sp.c and v in sp.c and u != v and all(g.has_edge(x, u) for x in sp.a)
            and all(g.has_edge(y, v) for y in sp.b))


def find_t_cutset(g: Graph, limit: int | None = DEFAULT_LIMITS.skew) -> tuple[SkewPartition, CutsetKind] | None:
    return _find_kind(g, T_CUTSET, limit)


def find_u_cutset(g: Graph, limit: int | None = DEFAULT_LIMITS.skew) -> tuple[SkewPartition, CutsetKind] | None:
    return _find_kind(g, U_CUTSET, limit)


def _find_kind(g: Graph, tag: str, limit):
    for sp in iter_all_skew_partitions(g, limit):
        for kind in classify_cutset(g, sp):
            if kind.tag == tag:
                return sp, kind
    return None


def iter_all_skew_partitions(g: Graph, limit: int | None = DEFAULT_LIMITS.skew):
    """Every (A, B, C, D) split of every skew cutset, up to the A/B and C/D
    swaps. Exponential in the number of (anti)components."""
    for sp in iter_skew_partitions(g, limit):
        s = mask_of(sp.cutset)
        rest = g.full_mask & ~s
        anti = anticomponents_mask(g.adj, s)
        comps = components_mask(g.adj, rest)
        for a in _unions_with_first(anti):
            for c in _unions_with_first(comps):
                yield SkewPartition(_fs(a), _fs(s & ~a), _fs(c), _fs(rest & ~c))


def _unions_with_first(parts: list[int]):
    """Unions containing parts[0] but not all parts."""
    rest = parts[1:]
    for choice in range((1 << len(rest)) - 1):
        m = parts[0]
        for i, p in enumerate(rest):
            if choice >> i & 1:
                m |= p
        yield m


# Structural statements about odd holes and antiholes, as reusable predicates


def every_vertex_has_neighbor_in(g: Graph, xs: Vs, target: Vs) -> bool:
    return all(any(g.has_edge(x, t) for t in target) for x in xs)


def some_vertex_without_neighbor_in(g: Graph, xs: Vs, target: Vs) -> int | None:
    for x in sorted(xs):
        if not any(g.has_edge(x, t) for t in target):
            return x
    return None


def skew_neighbourhood_conclusion(g: Graph, sp: SkewPartition) -> bool:
    """If some vertex of A has no neighbour in C then every vertex of A has a
    neighbour in D and every vertex of B has a neighbour in C."""
    if some_vertex_without_neighbor_in(g, sp.a, sp.c) is None:
        return True
    return every_vertex_has_neighbor_in(g, sp.a, sp.d) and every_vertex_has_neighbor_in(g, sp.b, sp.c)


# ---------------------------------------------------
# star and double star cutsets


def _disconnects(g: Graph, s: int) -> bool:
    rest = g.full_mask & ~s
    return rest != 0 and not is_connected_mask(g.adj, rest)


def _submasks_of_size(mask: int, k: int):
    for combo in combinations(bits(mask), k):
        yield mask_of(combo)


def find_star_cutset(g: Graph, limit: int | None = DEFAULT_LIMITS.star) -> tuple[Vs, int] | None:
    """A smallest set S containing a centre v with S - v inside N(v) whose
    removal leaves at least two components. Sizes increase first, then
    centres by index, then subsets in lexicographic order."""
    check_limit("star cutset search", g.n, limit)
    for k in range(g.max_degree() + 1 if g.n else 0):
        for v in range(g.n):
            for t in _submasks_of_size(g.adj[v], k):
                s = t | (1 << v)
                if _disconnects(g, s):
                    return _fs(s), v
    return None


def find_double_star_cutset(g: Graph, limit: int | None = DEFAULT_LIMITS.star) -> tuple[Vs, int, int] | None:
    """A smallest disconnecting S with an edge uv in S and S inside
    N[u] | N[v]."""
    check_limit("double star cutset search", g.n, limit)
    edges = g.edges()
    pools = [((1 << u) | (1 << v), (g.adj[u] | g.adj[v]) & ~((1 << u) | (1 << v))) for u, v in edges]
    for k in range(max((p.bit_count() for _, p in pools), default=-1) + 1):
        for (u, v), (base, pool) in zip(edges, pools):
            for t in _submasks_of_size(pool, k):
                if _disconnects(g, t | base):
                    return _fs(t | base), u, v
    return None


def is_star_cutset(g: Graph, s: Vs, center: int) -> bool:
    if center not in s or any(x != center and not g.has_edge(x, center) for x in s):
        return False
    return len(_components(g, frozenset(range(g.n)) - s)) >= 2


def is_double_star_cutset(g: Graph, s: Vs, u: int, v: int) -> bool:
    if u not in s or v not in s or not g.has_edge(u, v):
        return False
    if any(x not in (u, v) and not (g.has_edge(x, u) or g.has_edge(x, v)) for x in s):
        return False
    return len(_components(g, frozenset(range(g.n)) - s)) >= 2


# ---------------------------------------------------
# homogeneous pairs


@dataclass(frozen=True)
class HomogeneousPair:
    a1: Vs
    a2: Vs
    b: Vs

    def validate(self, g: Graph, allow_empty: bool = False) -> list[str]:
        p = []
        if self.a1 & self.a2 or self.a1 & self.b or self.a2 & self.b:
            p.append("parts overlap")
        if self.a1 | self.a2 | self.b != frozenset(range(g.n)):
            p.append("parts do not cover V")
        if len(self.a1) + len(self.a2) < 3 or len(self.b) < 2:
            p.append("size condition fails")
        if not allow_empty and (not self.a1 or not self.a2):
            p.append("A1 or A2 empty")
        for x in self.b:
            for part in (self.a1, self.a2):
                hits = sum(1 for y in part if g.has_edge(x, y))
                if hits not in (0, len(part)):
                    p.append(f"vertex {x} splits a part")
        return p


def find_homogeneous_pair(g: Graph, limit: int | None = DEFAULT_LIMITS.homogeneous_pair,
                          allow_empty: bool = False) -> HomogeneousPair | None:
    """Search partitions (A1, A2, B) with |A1| + |A2| >= 3, |B| >= 2 and every
    B-vertex complete or anticomplete to each of A1 and A2.

    With ``allow_empty`` the pair may degenerate to a single homogeneous set
    (A2 empty). A1 is enumerated by increasing bitmask; the B-vertices that
    split A1 are forced into A2, and A2 then grows by increasing bitmask.
    """
    check_limit("homogeneous pair search", g.n, limit)
    n, adj, full = g.n, g.adj, g.full_mask
    if n < 5:
        return None
    for a1 in range(1, 1 << n):
        outside = full & ~a1
        forced = 0
        for x in bits(outside):
            hit = adj[x] & a1
            if hit and hit != a1:
                forced |= 1 << x
        free = outside & ~forced
        for extra in submasks_increasing(free):
            a2 = forced | extra
            if not a2 and not allow_empty:
                continue
            if a2 and lowest(a2) < lowest(a1):
                continue  # each unordered pair once, A1 holds the smaller vertex
            b = outside & ~a2
            if b.bit_count() < 2 or (a1 | a2).bit_count() < 3:
                continue
            if all((adj[x] & a2) in (0, a2) for x in bits(b)):
                hp = HomogeneousPair(_fs(a1), _fs(a2), _fs(b))
                problems = hp.validate(g, allow_empty)
                if problems:
                    raise InternalInconsistencyError("homogeneous pair finder returned an invalid witness: "
                                                     + "; ".join(problems), {"graph": g.encode()})
                return hp
    return None
