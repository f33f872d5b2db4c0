"""Wheels (a hole plus a centre with at least three neighbours on it) and
stretchers (two triangles linked by three chordless paths)."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations

from .config import DEFAULT_LIMITS, check_limit
from .errors import InternalInconsistencyError, InvalidInputError
from .graph import Graph, bits, is_chordless_cycle, is_chordless_path, iter_holes, mask_of

LINE, TWIN, UNIVERSAL, TRIANGLE_FREE, PROPER = "line", "twin", "universal", "triangle_free", "proper"
KINDS = (LINE, TWIN, UNIVERSAL, TRIANGLE_FREE, PROPER)


@dataclass(frozen=True)
class Wheel:
    hole: tuple[int, ...]
    center: int
    spokes: frozenset[int]
    kind: str

    @property
    def arity(self) -> int:
        return len(self.spokes)


def _spoke_edges(hole: tuple[int, ...], spokes: frozenset[int]) -> list[tuple[int, int]]:
    """Hole edges with both ends on the centre: each is one triangle."""
    k = len(hole)
    return [(hole[i], hole[(i + 1) % k]) for i in range(k)
            if hole[i] in spokes and hole[(i + 1) % k] in spokes]


def wheel_predicates(hole: tuple[int, ...], spokes: frozenset[int]) -> dict[str, bool]:
    triangles = _spoke_edges(hole, spokes)
    k = len(spokes)
    disjoint = len(triangles) == 2 and not set(triangles[0]) & set(triangles[1])
    return {
        UNIVERSAL: k == len(hole),
        LINE: k == 4 and len(triangles) == 2 and disjoint,
        TWIN: k == 3 and len(triangles) == 2,
        TRIANGLE_FREE: not triangles,
    }


def classify_wheel(g: Graph, hole: list[int] | tuple[int, ...], center: int) -> Wheel:
    hole = tuple(hole)
    if len(hole) < 4 or not is_chordless_cycle(g, list(hole)):
        raise InvalidInputError("wheel needs a hole of length at least 4")
    if center in hole:
        raise InvalidInputError("centre lies on the hole")
    spokes = frozenset(v for v in hole if g.has_edge(center, v))
    if len(spokes) < 3:
        raise InvalidInputError("centre has fewer than three neighbours on the hole")
    preds = wheel_predicates(hole, spokes)
    hits = [k for k in (UNIVERSAL, LINE, TWIN, TRIANGLE_FREE) if preds[k]]
    if len(hits) > 1:
        raise InternalInconsistencyError(f"wheel satisfies several kinds {hits}",
                                         {"graph": g.encode(), "hole": hole, "center": center})
    return Wheel(hole, center, spokes, hits[0] if hits else PROPER)


def find_wheels(g: Graph, kinds=KINDS, limit: int | None = DEFAULT_LIMITS.wheel) -> list[Wheel]:
    """All wheels of the requested kinds, sorted by (hole vertex set, centre)."""
    check_limit("wheel scan", g.n, limit)
    kinds = set(kinds)
    bad = kinds - set(KINDS)
    if bad:
        raise InvalidInputError(f"unknown wheel kinds {sorted(bad)}")
    out = []
    for hole in iter_holes(g):
        hm = mask_of(hole)
        for v in bits(g.full_mask & ~hm):
            if (g.adj[v] & hm).bit_count() >= 3:
                w = classify_wheel(g, hole, v)
                if w.kind in kinds:
                    out.append(w)
    out.sort(key=lambda w: (sorted(w.hole), w.center))
    return out


def has_proper_wheel(g: Graph, limit: int | None = DEFAULT_LIMITS.wheel) -> bool:
    check_limit("wheel scan", g.n, limit)
    for hole in iter_holes(g):
        hm = mask_of(hole)
        for v in bits(g.full_mask & ~hm):
            if (g.adj[v] & hm).bit_count() >= 3 and classify_wheel(g, hole, v).kind == PROPER:
                return True
    return False


# ---------------------------------------------------------------------------
# stretchers


@dataclass(frozen=True)
class Stretcher:
    triangles: tuple[tuple[int, int, int], tuple[int, int, int]]
    paths: tuple[tuple[int, ...], tuple[int, ...], tuple[int, ...]]

    def validate(self, g: Graph) -> list[str]:
        p = []
        (a1, a2, a3), (b1, b2, b3) = self.triangles
        tri_a, tri_b = {a1, a2, a3}, {b1, b2, b3}
        if len(tri_a | tri_b) != 6:
            p.append("triangles not vertex disjoint")
        for x, y in ((a1, a2), (a2, a3), (a1, a3), (b1, b2), (b2, b3), (b1, b3)):
            if not g.has_edge(x, y):
                p.append(f"triangle edge {x}-{y} missing")
        for i, path in enumerate(self.paths):
            if path[0] != self.triangles[0][i] or path[-1] != self.triangles[1][i]:
                p.append(f"path {i + 1} has wrong ends")
            if not is_chordless_path(g, list(path)):
                p.append(f"path {i + 1} is not a chordless path")
        if all(len(path) == 2 for path in self.paths):
            p.append("all paths have length one")
        verts = [set(path) for path in self.paths]
        for i in range(3):
            for j in range(i + 1, 3):
                if verts[i] & verts[j]:
                    p.append(f"paths {i + 1}, {j + 1} share a vertex")
                for x in verts[i]:
                    for y in verts[j]:
                        tri_edge = {x, y} <= tri_a or {x, y} <= tri_b
                        if g.has_edge(x, y) and not tri_edge:
                            p.append(f"cross edge {x}-{y}")
        return p


def _triangles(g: Graph) -> list[tuple[int, int, int]]:
    out = []
    for u in range(g.n):
        for v in bits(g.adj[u] >> (u + 1) << (u + 1)):
            for w in bits(g.adj[u] & g.adj[v] >> (v + 1) << (v + 1)):
                out.append((u, v, w))
    return out


def _end_paths(g: Graph, a: int, b: int, avoid: int) -> list[tuple[int, ...]]:
    """Chordless a..b paths whose interior avoids ``avoid`` and every
    neighbour of ``avoid``."""
    adj = g.adj
    out = []
    if adj[a] >> b & 1:
        out.append((a, b))
        return out  # any longer path would have the chord ab
    barred = avoid
    for x in bits(avoid):
        barred |= adj[x]
    allowed = g.full_mask & ~barred & ~(1 << a) & ~(1 << b)

    def grow(path: list[int], block: int) -> None:
        last = path[-1]
        for w in bits(adj[last] & allowed & ~block):
            if adj[w] >> b & 1:
                out.append(tuple(path + [w, b]))
            elif not adj[w] >> a & 1 or len(path) == 1:
                grow(path + [w], block | adj[last] | (1 << last) | (1 << w))

    grow([a], (1 << a) | (1 << b))
    # grow() only blocks a's neighbours after the first step; recheck
    return [p for p in out if is_chordless_path(g, list(p))]


def find_stretcher(g: Graph, limit: int | None = DEFAULT_LIMITS.stretcher) -> Stretcher | None:
    check_limit("stretcher scan", g.n, limit)
    tris = _triangles(g)
    adj = g.adj
    for ti, ta in enumerate(tris):
        for tb in tris[ti + 1:]:
            if set(ta) & set(tb):
                continue
            for perm in permutations(tb):
                if any(adj[ta[i]] >> perm[j] & 1 for i in range(3) for j in range(3) if i != j):
                    continue
                ends = mask_of(ta) | mask_of(tb)
                lists = []
                for i in range(3):
                    others = ends & ~(1 << ta[i]) & ~(1 << perm[i])
                    lists.append(_end_paths(g, ta[i], perm[i], others))
                    if not lists[-1]:
                        break
                else:
                    found = _combine(adj, lists)
                    if found is not None:
                        st = Stretcher((ta, tuple(perm)), found)
                        problems = st.validate(g)
                        if problems:
                            raise InternalInconsistencyError("stretcher finder returned an invalid witness: "
                                                             + "; ".join(problems), {"graph": g.encode()})
                        return st
    return None


def _combine(adj, lists):
    def interior(p):
        return mask_of(p[1:-1])

    def closed(m):
        out = m
        for x in bits(m):
            out |= adj[x]
        return out

    for p1 in lists[0]:
        i1 = interior(p1)
        c1 = closed(i1)
        for p2 in lists[1]:
            i2 = interior(p2)
            if i2 & c1:
                continue
            c12 = c1 | closed(i2)
            for p3 in lists[2]:
                if len(p1) == len(p2) == len(p3) == 2:
                    continue
                if interior(p3) & c12:
                    continue
                return p1, p2, p3
    return None
