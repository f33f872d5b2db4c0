"""Exact exponential-time solvers for clique, stability and chromatic numbers,
perfection, the Lovasz bound, and Gasparyan's incidence-matrix certificate.

These are the trust anchors every other module is checked against, so each
one is kept simple enough to audit by reading.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .coloring import Coloring
from .config import DEFAULT_LIMITS, check_limit
from .errors import InternalInconsistencyError, InvalidInputError
from .graph import Graph, bits, complement, induced_mask, lowest, mask_of

# ---------------------------------------------------------------------------
# cliques and stable sets


def _max_clique_mask(adj: tuple[int, ...], cand: int) -> int:
    best = 0
    best_size = 0

    def expand(r: int, r_size: int, p: int) -> None:
        nonlocal best, best_size
        if not p:
            if r_size > best_size:
                best, best_size = r, r_size
            return
        if r_size + p.bit_count() <= best_size:
            return
        # greedy colouring bound over p
        uncolored = p
        colors = 0
        while uncolored:
            colors += 1
            avail = uncolored
            while avail:
                v = lowest(avail)
                avail &= ~adj[v] & ~(1 << v)
                uncolored &= ~(1 << v)
        if r_size + colors <= best_size:
            return
        pivot = max(bits(p), key=lambda u: (adj[u] & p).bit_count())
        for v in bits(p & ~adj[pivot]):
            expand(r | (1 << v), r_size + 1, p & adj[v])
            p &= ~(1 << v)
            if r_size + p.bit_count() <= best_size:
                return

    expand(0, 0, cand)
    return best


def maximum_clique(g: Graph, limit: int | None = DEFAULT_LIMITS.clique) -> frozenset[int]:
    check_limit("clique search", g.n, limit)
    return frozenset(bits(_max_clique_mask(g.adj, g.full_mask)))


def clique_number(g: Graph, limit: int | None = DEFAULT_LIMITS.clique) -> int:
    return len(maximum_clique(g, limit))


def maximum_stable_set(g: Graph, limit: int | None = DEFAULT_LIMITS.clique) -> frozenset[int]:
    return maximum_clique(complement(g), limit)


def stability_number(g: Graph, limit: int | None = DEFAULT_LIMITS.clique) -> int:
    return len(maximum_stable_set(g, limit))


def clique_number_of(g: Graph, mask: int) -> int:
    """omega of the subgraph induced by ``mask`` (no size check)."""
    return _max_clique_mask(g.adj, mask).bit_count()


def all_maximum_cliques(g: Graph, size: int) -> list[int]:
    """Every clique of exactly ``size`` vertices, as masks."""
    out = []

    def grow(r: int, k: int, p: int) -> None:
        if k == size:
            out.append(r)
            return
        if k + p.bit_count() < size:
            return
        for v in bits(p):
            p &= ~(1 << v)
            grow(r | (1 << v), k + 1, p & g.adj[v])

    grow(0, 0, g.full_mask)
    return out


# ---------------------------------------------------------------------------
# colouring


def _dsatur_order_color(adj: tuple[int, ...], n: int, k: int, seed: list[int]) -> list[int] | None:
    """Backtracking k-colouring with DSATUR branching; ``seed`` is a clique
    whose vertices are pre-assigned colours 0, 1, ... ."""
    colors = [-1] * n
    forbid = [0] * n
    for c, v in enumerate(seed):
        colors[v] = c
        for u in bits(adj[v]):
            forbid[u] |= 1 << c
    uncolored = [v for v in range(n) if colors[v] < 0]
    used = len(seed)
    full = (1 << k) - 1

    def pick() -> int:
        best, best_key = -1, None
        for v in uncolored:
            if colors[v] >= 0:
                continue
            key = (forbid[v].bit_count(), adj[v].bit_count())
            if best_key is None or key > best_key:
                best, best_key = v, key
        return best

    def solve(remaining: int, used: int) -> bool:
        if remaining == 0:
            return True
        v = pick()
        avail = full & ~forbid[v]
        # symmetry: a fresh colour is only ever the next unused one
        avail &= (1 << min(used + 1, k)) - 1
        for c in bits(avail):
            colors[v] = c
            touched = []
            for u in bits(adj[v]):
                if colors[u] < 0 and not forbid[u] >> c & 1:
                    forbid[u] |= 1 << c
                    touched.append(u)
            if all(forbid[u] != full for u in touched) and solve(remaining - 1, max(used, c + 1)):
                return True
            for u in touched:
                forbid[u] &= ~(1 << c)
            colors[v] = -1
        return False

    if len(seed) > k:
        return None
    if solve(len(uncolored), used):
        return colors
    return None


def k_coloring(g: Graph, k: int, limit: int | None = DEFAULT_LIMITS.chromatic) -> Coloring | None:
    """A proper colouring with at most ``k`` colours, or None."""
    check_limit("colouring search", g.n, limit)
    if g.n == 0:
        return Coloring((), 0)
    if k <= 0:
        return None
    seed = sorted(maximum_clique(g, None))
    result = _dsatur_order_color(g.adj, g.n, k, seed)
    return None if result is None else Coloring.from_labels(result)


def _greedy_dsatur(g: Graph) -> list[int]:
    colors = [-1] * g.n
    forbid = [0] * g.n
    for _ in range(g.n):
        v = max((u for u in range(g.n) if colors[u] < 0),
                key=lambda u: (forbid[u].bit_count(), g.adj[u].bit_count()))
        c = lowest(~forbid[v])
        colors[v] = c
        for u in bits(g.adj[v]):
            forbid[u] |= 1 << c
    return colors


def chromatic_number(g: Graph, limit: int | None = DEFAULT_LIMITS.chromatic) -> tuple[int, Coloring]:
    """Exact chi with a witness colouring.

    Lower bound omega from a maximum clique (pre-coloured to break symmetry),
    upper bound from greedy DSATUR; every k in between is decided exactly.
    """
    check_limit("chromatic number", g.n, limit)
    if g.n == 0:
        return 0, Coloring((), 0)
    seed = sorted(maximum_clique(g, None))
    upper = Coloring.from_labels(_greedy_dsatur(g))
    for k in range(len(seed), upper.k):
        result = _dsatur_order_color(g.adj, g.n, k, seed)
        if result is not None:
            col = Coloring.from_labels(result)
            return col.k, col
    return upper.k, upper


# ---------------------------------------------------------------------------
# subset tables for the all-induced-subgraphs checks


def omega_table(adj: tuple[int, ...], n: int) -> list[int]:
    """``t[S]`` = clique number of the subgraph induced by bitmask ``S``."""
    t = [0] * (1 << n)
    for s in range(1, 1 << n):
        v = (s & -s).bit_length() - 1
        a = t[s ^ (1 << v)]
        b = 1 + t[s & adj[v]]
        t[s] = a if a > b else b
    return t


def _complement_adj(adj: tuple[int, ...], n: int) -> tuple[int, ...]:
    full = (1 << n) - 1
    return tuple(full & ~row & ~(1 << v) for v, row in enumerate(adj))


def _stable_sets_through(adj: tuple[int, ...], n: int) -> list[list[int]]:
    """For each vertex v, every stable set containing v (largest first)."""
    per: list[list[int]] = [[] for _ in range(n)]
    # enumerate stable sets whose smallest vertex is v, then distribute
    allsets: list[int] = []

    def grow(r: int, p: int) -> None:
        allsets.append(r)
        for v in bits(p):
            p &= ~(1 << v)
            grow(r | (1 << v), p & ~adj[v])

    for v in range(n):
        grow(1 << v, ((1 << n) - 1) & ~((2 << v) - 1) & ~adj[v])
    for s in allsets:
        for v in bits(s):
            per[v].append(s)
    for lst in per:
        lst.sort(key=lambda m: -m.bit_count())
    return per


@lru_cache(maxsize=None)
def _masks_by_size(n: int) -> tuple[tuple[int, ...], ...]:
    groups: list[list[int]] = [[] for _ in range(n + 1)]
    for s in range(1 << n):
        groups[s.bit_count()].append(s)
    return tuple(tuple(g) for g in groups)


@dataclass(frozen=True)
class PerfectionResult:
    perfect: bool
    witness: frozenset[int] | None = None

    def __bool__(self) -> bool:
        return self.perfect


def is_perfect(g: Graph, limit: int | None = DEFAULT_LIMITS.perfect) -> PerfectionResult:
    """Decide perfection by checking omega(H) = chi(H) on every induced H.

    Subgraphs are scanned by increasing size, then increasing bitmask, so the
    first violator is a minimum-size imperfect subgraph and is therefore
    minimally imperfect. When H is reached all its proper subgraphs are known
    perfect, so chi(H) = omega(H) iff some stable set I through a fixed vertex
    leaves omega(H - I) = omega(H) - 1.
    """
    check_limit("perfection check", g.n, limit)
    n, adj = g.n, g.adj
    omega = omega_table(adj, n)
    through = _stable_sets_through(adj, n)
    for size_group in _masks_by_size(n)[2:]:
        for s in size_group:
            target = omega[s] - 1
            v = (s & -s).bit_length() - 1
            for stable in through[v]:
                if stable & ~s == 0 and omega[s & ~stable] == target:
                    break
            else:
                return PerfectionResult(False, frozenset(bits(s)))
    return PerfectionResult(True)


def is_minimally_imperfect(g: Graph, limit: int | None = DEFAULT_LIMITS.perfect) -> bool:
    res = is_perfect(g, limit)
    return not res.perfect and len(res.witness) == g.n


def lovasz_violation(g: Graph, limit: int | None = DEFAULT_LIMITS.perfect) -> frozenset[int] | None:
    """Smallest-first induced subgraph H with |V(H)| > alpha(H) * omega(H)."""
    check_limit("Lovasz bound check", g.n, limit)
    n = g.n
    omega = omega_table(g.adj, n)
    alpha = omega_table(_complement_adj(g.adj, n), n)
    for size, group in enumerate(_masks_by_size(n)):
        for s in group:
            if size > alpha[s] * omega[s]:
                return frozenset(bits(s))
    return None


def lovasz_bound_holds(g: Graph, limit: int | None = DEFAULT_LIMITS.perfect) -> bool:
    return lovasz_violation(g, limit) is None


# ---------------------------------------------------------------------------
# Gasparyan certificate


@dataclass(frozen=True)
class GasparyanCertificate:
    stable_sets: tuple[frozenset[int], ...]
    cliques: tuple[frozenset[int], ...]
    alpha: int
    omega: int
    n: int

    def matrix_a(self) -> np.ndarray:
        return _incidence(self.stable_sets, self.n)

    def matrix_b(self) -> np.ndarray:
        return _incidence(self.cliques, self.n)

    def product(self) -> np.ndarray:
        return self.matrix_a() @ self.matrix_b().T

    def verify(self, g: Graph) -> list[str]:
        """Independent re-check; returns a list of failures (empty = valid)."""
        problems = []
        rows = self.alpha * self.omega + 1
        if len(self.stable_sets) != rows or len(self.cliques) != rows:
            problems.append(f"expected {rows} rows")
        for i, a in enumerate(self.stable_sets):
            if not g.is_stable(mask_of(a)):
                problems.append(f"A_{i} is not stable")
        for i, b in enumerate(self.cliques):
            if len(b) != self.omega or not g.is_clique(mask_of(b)):
                problems.append(f"B_{i} is not an omega-clique")
        if not problems:
            k = len(self.stable_sets)
            expected = np.ones((k, k), dtype=int) - np.eye(k, dtype=int)
            if not np.array_equal(self.product(), expected):
                problems.append("A B^T != J - I")
        if g.n < rows:
            problems.append("n < alpha*omega + 1")
        return problems


def _incidence(sets, n: int) -> np.ndarray:
    m = np.zeros((len(sets), n), dtype=int)
    for i, s in enumerate(sets):
        m[i, sorted(s)] = 1
    return m


def gasparyan_certificate(g: Graph, limit: int | None = DEFAULT_LIMITS.perfect) -> GasparyanCertificate:
    """Build the alpha*omega + 1 stable sets and cliques for a minimally
    imperfect graph and check ``A B^T = J - I`` entrywise."""
    if not is_minimally_imperfect(g, limit):
        raise InvalidInputError("gasparyan_certificate needs a minimally imperfect graph")
    payload = {"graph": g.encode()}
    full = g.full_mask
    a0 = sorted(maximum_stable_set(g, None))
    alpha = len(a0)
    omega = clique_number(g, None)
    stable_sets = [frozenset(a0)]
    for s in a0:
        sub, verts = induced_mask(g, full & ~(1 << s))
        col = k_coloring(sub, omega, None)
        if col is None:
            raise InternalInconsistencyError(f"G - {s} is not omega-colourable", payload)
        for cls in col.classes():
            stable_sets.append(frozenset(verts[i] for i in cls))
    if len(stable_sets) != alpha * omega + 1:
        raise InternalInconsistencyError("wrong number of colour classes", payload)
    cliques = []
    for a in stable_sets:
        rest = full & ~mask_of(a)
        b = _max_clique_mask(g.adj, rest)
        if b.bit_count() != omega:
            raise InternalInconsistencyError("G - A_i has no omega-clique", payload)
        cliques.append(frozenset(bits(b)))

    # every omega-clique meets all but exactly one A_i
    a_masks = [mask_of(a) for a in stable_sets]
    every = all_maximum_cliques(g, omega)
    for c in every:
        missed = sum(1 for a in a_masks if not a & c)
        if missed != 1:
            raise InternalInconsistencyError(f"omega-clique {sorted(bits(c))} misses {missed} stable sets", payload)
    # each vertex lies in exactly omega omega-cliques
    for v in range(g.n):
        count = sum(1 for c in every if c >> v & 1)
        if count != omega:
            raise InternalInconsistencyError(f"vertex {v} lies in {count} omega-cliques", payload)

    cert = GasparyanCertificate(tuple(stable_sets), tuple(cliques), alpha, omega, g.n)
    problems = cert.verify(g)
    if problems:
        raise InternalInconsistencyError("; ".join(problems), payload)
    return cert
