"""Deterministic graph families and seeded random samplers."""

from __future__ import annotations

import random
from dataclasses import dataclass, field

from .errors import InvalidInputError
from .graph import Graph, complement, complete_bipartite, cycle_graph, line_graph, shortest_path_between_sets
from .structures import TwoJoin

KINDS = ("cycle", "antihole", "complete_bipartite", "random_bipartite", "line_of_random_bipartite",
         "complement_of", "replicate_in", "glue_two_join", "random_berge_rejection")


def gnp(n: int, p: float, rng: random.Random) -> Graph:
    return Graph.from_edges(n, [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p])


def random_bipartite(left: int, right: int, p: float, rng: random.Random) -> Graph:
    edges = [(u, left + v) for u in range(left) for v in range(right) if rng.random() < p]
    return Graph.from_edges(left + right, edges)


def glue_two_join(side1: Graph, a1, b1, side2: Graph, a2, b2) -> tuple[Graph, TwoJoin]:
    """Disjoint union of the sides with A1 complete to A2 and B1 complete to B2.

    Vertices of ``side2`` are shifted by ``side1.n``."""
    a1, b1, a2, b2 = (frozenset(s) for s in (a1, b1, a2, b2))
    for side, a, b in ((side1, a1, b1), (side2, a2, b2)):
        if side.n < 3:
            raise InvalidInputError("each side needs at least 3 vertices")
        if not a or not b or a & b or max(a | b) >= side.n or min(a | b) < 0:
            raise InvalidInputError("A and B must be nonempty disjoint vertex sets of their side")
    off = side1.n
    edges = list(side1.edges()) + [(u + off, v + off) for u, v in side2.edges()]
    edges += [(x, y + off) for x in a1 for y in a2] + [(x, y + off) for x in b1 for y in b2]
    g = Graph.from_edges(side1.n + side2.n, edges)
    shift = lambda s: frozenset(v + off for v in s)  # noqa: E731
    tj = TwoJoin(frozenset(range(off)), shift(range(side2.n)), a1, b1, shift(a2), shift(b2))
    return g, tj


def _random_side(rng: random.Random, lo: int, hi: int):
    n = rng.randint(lo, hi)
    g = gnp(n, rng.uniform(0.2, 0.8), rng)
    verts = list(range(n))
    rng.shuffle(verts)
    ka = rng.randint(1, max(1, min(3, n - 2)))
    kb = rng.randint(1, max(1, min(3, n - 1 - ka)))
    return g, frozenset(verts[:ka]), frozenset(verts[ka:ka + kb])


def _side_parity(g: Graph, a, b) -> str:
    path = shortest_path_between_sets(g, a, b)
    if path is None:
        return "none"
    return "odd" if (len(path) - 1) % 2 else "even"


PARITIES = ("odd", "even", "none")


def random_two_join_composition(rng: random.Random, max_block: int = 10, max_tries: int = 10_000,
                                parity: str | None = None):
    """Glue two random sides; keep the result when both blocks are perfect,
    have at most ``max_block`` vertices and agree on marker parity.

    ``parity`` restricts the marker kind (``odd``, ``even`` or ``none``,
    the last meaning at least one side has no A-B path). Sides are drawn
    until they fit, which keeps the rare even case affordable.

    Returns ``(graph, two_join, block_pair)``."""
    from .decompose import two_join_blocks
    from .oracle import is_perfect

    if parity is not None and parity not in PARITIES:
        raise InvalidInputError(f"parity must be one of {', '.join(PARITIES)}")

    def side(want: str | None):
        for _ in range(max_tries):
            s, a, b = _random_side(rng, 3, max_block - 2)
            if want is None or _side_parity(s, a, b) == want:
                return s, a, b
        raise InvalidInputError("no side with the requested parity within the try budget")

    for _ in range(max_tries):
        if parity == "none":
            first = rng.choice(PARITIES)
            wants = (first, "none") if rng.random() < 0.5 else ("none", first)
        else:
            wants = (parity, parity)
        s1, a1, b1 = side(wants[0])
        s2, a2, b2 = side(wants[1])
        g, tj = glue_two_join(s1, a1, b1, s2, a2, b2)
        pair = two_join_blocks(g, tj)
        if pair.path_parity == "mixed":
            continue
        if pair.g1.graph.n > max_block or pair.g2.graph.n > max_block:
            continue
        if is_perfect(pair.g1.graph) and is_perfect(pair.g2.graph):
            return g, tj, pair
    raise InvalidInputError("no perfect composition found within the try budget")


def random_berge(n: int, p: float, rng: random.Random, max_tries: int = 100_000) -> Graph:
    from .berge import is_berge

    for _ in range(max_tries):
        g = gnp(n, p, rng)
        if is_berge(g):
            return g
    raise InvalidInputError("rejection sampling found no Berge graph")


@dataclass(frozen=True)
class GeneratorRecipe:
    kind: str
    params: dict = field(default_factory=dict)
    seed: int = 0


def _get(params: dict, key: str, cast=int, default=None):
    if key not in params:
        if default is None:
            raise InvalidInputError(f"missing parameter {key!r}")
        return default
    try:
        return cast(params[key])
    except (TypeError, ValueError) as exc:
        raise InvalidInputError(f"bad value for {key!r}: {params[key]!r}") from exc


def generate(recipe: GeneratorRecipe) -> Graph:
    """Build the graph a recipe describes; same recipe, same graph."""
    kind, prm = recipe.kind, dict(recipe.params)
    rng = random.Random(f"{recipe.kind}-{recipe.seed}")
    if kind == "cycle":
        n = _get(prm, "n")
        if n < 3:
            raise InvalidInputError("cycle needs n >= 3")
        return cycle_graph(n)
    if kind == "antihole":
        n = _get(prm, "n")
        if n < 3:
            raise InvalidInputError("antihole needs n >= 3")
        return complement(cycle_graph(n))
    if kind == "complete_bipartite":
        p, q = _get(prm, "p"), _get(prm, "q")
        if p < 0 or q < 0:
            raise InvalidInputError("sizes must be nonnegative")
        return complete_bipartite(p, q)
    if kind in ("random_bipartite", "line_of_random_bipartite"):
        left, right = _get(prm, "left"), _get(prm, "right")
        dens = _get(prm, "p", float, 0.5)
        if left < 0 or right < 0 or not 0 <= dens <= 1:
            raise InvalidInputError("bad bipartite parameters")
        b = random_bipartite(left, right, dens, rng)
        return b if kind == "random_bipartite" else line_graph(b)[0]
    if kind == "complement_of":
        inner = prm.get("of")
        if not isinstance(inner, GeneratorRecipe):
            raise InvalidInputError("complement_of needs an inner recipe under 'of'")
        return complement(generate(inner))
    if kind == "replicate_in":
        from .decompose import replicate

        inner = prm.get("of")
        if not isinstance(inner, GeneratorRecipe):
            raise InvalidInputError("replicate_in needs an inner recipe under 'of'")
        base = generate(inner)
        return replicate(base, _get(prm, "v"), _get(prm, "k"))
    if kind == "glue_two_join":
        if "side1" in prm:
            s1, s2 = prm["side1"], prm["side2"]
            return glue_two_join(s1, prm["a1"], prm["b1"], s2, prm["a2"], prm["b2"])[0]
        return random_two_join_composition(rng, _get(prm, "max_block", int, 10),
                                           parity=prm.get("parity"))[0]
    if kind == "random_berge_rejection":
        n = _get(prm, "n")
        dens = _get(prm, "p", float, 0.5)
        if n < 0 or not 0 <= dens <= 1:
            raise InvalidInputError("bad sampling parameters")
        return random_berge(n, dens, rng)
    raise InvalidInputError(f"unknown generator kind {kind!r}; expected one of {', '.join(KINDS)}")
