"""Acceptance suite: one test per criterion, each printing a PASS/FAIL line.

The lines are collected and repeated in the pytest terminal summary, so
they show up in a plain ``pytest`` run without ``-s``.
"""

from __future__ import annotations

import random
import time
from collections import Counter
from itertools import combinations

import networkx as nx
import numpy as np

from perfectgraph import (
    Graph,
    chromatic_number,
    clique_number,
    color_basic,
    complement,
    cycle_graph,
    decomposition_report,
    find_homogeneous_pair,
    find_six_join,
    find_skew_partition,
    find_t_cutset,
    find_two_join,
    find_u_cutset,
    gasparyan_certificate,
    is_berge,
    is_minimally_imperfect,
    is_perfect,
    konig_edge_coloring,
    line_graph,
    lovasz_bound_holds,
    odd_hole_free_report,
    perfect_color,
    recognize_basic,
    replicate,
    replicate_minus_edge,
    square_free_report,
    stability_number,
    wonderful_check,
    wonderful_instances,
)
from perfectgraph.basic import LINE_OF_BIPARTITE
from perfectgraph.berge import DECOMPOSITION_CASES, has_square
from perfectgraph.decompose import block_coloring, combine_colorings
from perfectgraph.generators import gnp, random_berge, random_bipartite, random_two_join_composition
from perfectgraph.graph import ODD, find_hole

RESULTS: list[str] = []


def report(tag: str, ok: bool, detail: str, elapsed: float, budget: float | None = None) -> None:
    within = budget is None or elapsed < budget
    status = "PASS" if ok and within else "FAIL"
    limit = f" (budget {budget:.0f} s)" if budget is not None else ""
    line = f"[{tag}] {status}: {detail}; {elapsed:.1f} s{limit}"
    RESULTS.append(line)
    print(line)
    assert ok, line
    assert within, line


def graph_from_bits(n: int, code: int) -> Graph:
    pairs = list(combinations(range(n), 2))
    return Graph.from_edges(n, [p for i, p in enumerate(pairs) if code >> i & 1])


def population():
    """All 2^15 graphs on 6 vertices, then 10^4 seeded G(n, 1/2) samples at n = 7 and n = 8."""
    for code in range(1 << 15):
        yield graph_from_bits(6, code)
    for n in (7, 8):
        rng = random.Random(f"population-{n}")
        for _ in range(10_000):
            yield gnp(n, 0.5, rng)


ODD_HOLES = [cycle_graph(n) for n in (5, 7, 9, 11)]
ODD_ANTIHOLES = [complement(cycle_graph(n)) for n in (7, 9, 11)]


def test_ac01_odd_hole_facts():
    t = time.perf_counter()
    bad = []
    for g in ODD_HOLES:
        facts = (clique_number(g), chromatic_number(g)[0], bool(is_perfect(g)), is_minimally_imperfect(g))
        if facts != (2, 3, False, True):
            bad.append((g.n, facts))
    for g in ODD_ANTIHOLES:
        if not is_minimally_imperfect(g):
            bad.append(("anti", g.n))
    report("AC1", not bad, f"C5..C11 omega=2 chi=3 minimally imperfect, antiholes 7..11 minimally imperfect; "
                           f"mismatches {bad}", time.perf_counter() - t, 5)


def test_ac02_certificates():
    t = time.perf_counter()
    bad = []
    for g in ODD_HOLES + ODD_ANTIHOLES:
        cert = gasparyan_certificate(g)
        rows = cert.alpha * cert.omega + 1
        k = len(cert.stable_sets)
        product = cert.matrix_a() @ cert.matrix_b().T
        ok = (k == len(cert.cliques) == rows == g.n
              and cert.alpha == stability_number(g) and cert.omega == clique_number(g)
              and np.array_equal(product, np.ones((k, k), dtype=int) - np.eye(k, dtype=int))
              and cert.verify(g) == [])
        if not ok:
            bad.append(g.encode())
    report("AC2", not bad, f"7 certificates with alpha*omega+1 = n rows and A B^T = J - I; failures {bad}",
           time.perf_counter() - t, 5)


def test_ac03_perfect_graph_theorem():
    t = time.perf_counter()
    total, perfect, bad = 0, 0, []
    for g in population():
        p = bool(is_perfect(g))
        total += 1
        perfect += p
        if p != bool(is_perfect(complement(g))) or p != lovasz_bound_holds(g):
            bad.append(g.encode())
    report("AC3", not bad and total == (1 << 15) + 20_000,
           f"{total} graphs ({perfect} perfect): perfect(G) = perfect(co-G) = Lovasz bound; exceptions {len(bad)}",
           time.perf_counter() - t, 600)


def test_ac04_strong_perfect_graph_theorem():
    t = time.perf_counter()
    total, bad = 0, []
    for g in population():
        total += 1
        if bool(is_perfect(g)) != bool(is_berge(g)):
            bad.append(g.encode())
    report("AC4", not bad, f"{total} graphs: perfect iff Berge; exceptions {len(bad)}", time.perf_counter() - t)


def test_ac05_two_join_colouring():
    t = time.perf_counter()
    parities = ("odd", "even", "none")
    tally, routes, calls, bad = Counter(), Counter(), 0, []
    for i in range(1200):
        rng = random.Random(f"compose-{i}")
        g, tj, pair = random_two_join_composition(rng, max_block=10, parity=parities[i % 3])
        tally[pair.path_parity] += 1
        chi, _ = chromatic_number(g, limit=None)
        omega = clique_number(g, limit=None)
        # the pipeline, with every block colouring it makes recorded
        recorder: list = []
        pc = perfect_color(g, verify=False, recorder=recorder)
        routes[pc.tree.kind] += 1
        # the known 2-join, coloured block by block
        c1, c2 = block_coloring(pair.g1, omega), block_coloring(pair.g2, omega)
        direct = combine_colorings(c1, c2, tj, omega, g)
        for bc in recorder + [c1, c2]:
            calls += 1
            want = bc.expected_overlap()
            if len(bc.ca) != bc.a or len(bc.cb) != bc.b or (want is not None and len(bc.ca & bc.cb) != want):
                bad.append(("overlap", g.encode()))
        if not (pc.coloring.is_proper(g) and pc.coloring.k == chi == omega):
            bad.append(("pipeline", g.encode()))
        if not (direct.is_proper(g) and direct.k == chi):
            bad.append(("direct", g.encode()))
    n = sum(tally.values())
    report("AC5", not bad and n >= 1000,
           f"{n} compositions (parity {dict(tally)}, pipeline route {dict(routes)}), {calls} block colourings "
           f"with the expected A/B colour overlaps, all colourings proper with chi colours; failures {len(bad)}",
           time.perf_counter() - t, 300)


def test_ac06_replication():
    t = time.perf_counter()
    graphs = perfect_graphs = checks = 0
    bad = []
    for h in nx.graph_atlas_g():
        if not 1 <= h.number_of_nodes() <= 7:
            continue
        graphs += 1
        g = Graph.from_edges(h.number_of_nodes(), list(h.edges()))
        if not is_perfect(g):
            continue
        perfect_graphs += 1
        for v in range(g.n):
            for k in (1, 2, 3):
                checks += 1
                if not is_perfect(replicate(g, v, k)):
                    bad.append(("replicate", g.encode(), v, k))
        for u, w in g.edges():
            for a, b in ((u, w), (w, u)):
                if not g.adj[a] & g.adj[b]:
                    checks += 1
                    if not is_perfect(replicate_minus_edge(g, a, b)):
                        bad.append(("minus_edge", g.encode(), a, b))
    report("AC6", not bad, f"all {graphs} graphs on 1..7 vertices up to isomorphism, {perfect_graphs} perfect; "
                           f"{checks} replications stay perfect; exceptions {len(bad)}", time.perf_counter() - t)


def test_ac07_odd_obstructions_lack_structure():
    t = time.perf_counter()
    bad = []
    for n in (5, 7, 9, 11):
        for label, g in ((f"C{n}", cycle_graph(n)), (f"anti-C{n}", complement(cycle_graph(n)))):
            if find_skew_partition(g) is not None:
                bad.append((label, "skew"))
            if find_t_cutset(g) is not None or find_u_cutset(g) is not None:
                bad.append((label, "T/U"))
            if find_homogeneous_pair(g) is not None:
                bad.append((label, "homogeneous pair"))
            if find_six_join(g) is not None:
                bad.append((label, "6-join"))
            tj = find_two_join(g)
            # holes with at least 6 vertices split into two paths; antiholes never have one
            expect = label.startswith("C") and n >= 6
            if (tj is not None) != expect:
                bad.append((label, "2-join"))
            elif tj is not None and tj.validate(g):
                bad.append((label, "bad 2-join witness"))
    report("AC7", not bad, f"odd holes/antiholes 5..11: no skew partition, T/U-cutset, homogeneous pair or 6-join; "
                           f"2-joins exactly in C7, C9, C11; problems {bad}", time.perf_counter() - t, 600)


def test_ac08_konig():
    t = time.perf_counter()
    rng = random.Random("konig")
    bad, largest = [], 0
    for _ in range(1000):
        left, right = rng.randint(1, 15), rng.randint(1, 15)
        b = random_bipartite(left, right, rng.uniform(0.05, 0.6), rng)
        ec = konig_edge_coloring(b)
        if not ec.is_proper() or ec.k != b.max_degree():
            bad.append(("edge", b.encode()))
        lg, _ = line_graph(b)
        largest = max(largest, lg.n)
        cls = recognize_basic(lg)
        col = color_basic(lg, cls)
        if not col.is_proper(lg) or col.k != clique_number(lg, limit=None):
            bad.append(("line", b.encode()))
        if lg.n and not cls.membership[LINE_OF_BIPARTITE]:
            bad.append(("recognition", b.encode()))
    report("AC8", not bad, f"1000 bipartite graphs (<= 30 vertices): Delta edge colours; line graphs "
                           f"(up to {largest} vertices) coloured with omega colours; failures {len(bad)}",
           time.perf_counter() - t, 60)


def test_ac09_decomposition_sweep():
    t = time.perf_counter()
    rng = random.Random("decomposition")
    first, holds, bad = Counter(), Counter(), []
    for _ in range(10_000):
        g = random_berge(rng.randint(4, 9), rng.uniform(0.2, 0.8), rng)
        r = decomposition_report(g, all_cases=True, check_berge=False)
        first[r.case] += 1
        holds.update(k for k, v in r.holds.items() if v)
        if r.case not in DECOMPOSITION_CASES:
            bad.append(g.encode())
    report("AC9", not bad, f"10000 Berge graphs on 4..9 vertices: first case {dict(first)}; "
                           f"cases holding {dict(holds)}; none_found {len(bad)}", time.perf_counter() - t)


def test_ac10_wonderful_lemma():
    t = time.perf_counter()
    rng = random.Random("wonderful")
    instances, outcomes, samples = 0, Counter(), 0
    while instances < 300 or samples < 5000:
        g = random_berge(rng.randint(5, 9), rng.uniform(0.3, 0.8), rng)
        samples += 1
        for inst in wonderful_instances(g):
            out = wonderful_check(inst)  # raises if no outcome holds
            instances += 1
            outcomes.update(out.holds)
    report("AC10", instances >= 100, f"{samples} Berge graphs on 5..9 vertices gave {instances} instances; "
                                     f"outcomes holding {dict(outcomes)}; violations 0", time.perf_counter() - t)


def test_ac11_square_free_and_odd_hole_free():
    t = time.perf_counter()
    rng = random.Random("theorems")
    square_free, odd_free = Counter(), Counter()
    while sum(square_free.values()) < 1000:
        g = gnp(rng.randint(4, 9), rng.uniform(0.15, 0.6), rng)
        if has_square(g) or not is_berge(g):
            continue
        square_free[square_free_report(g).case] += 1
    while sum(odd_free.values()) < 1000:
        g = gnp(rng.randint(4, 9), rng.uniform(0.2, 0.8), rng)
        if find_hole(g, ODD, 5) is not None:
            continue
        odd_free[odd_hole_free_report(g).case] += 1
    report("AC11", True, f"square-free Berge {dict(square_free)}; odd-hole-free {dict(odd_free)}; "
                         f"no sample without a disjunct", time.perf_counter() - t)
