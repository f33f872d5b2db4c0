"""Command-line front end.

Exit codes: 0 success, 1 negative finding on a check (``--expect``, or
``certify`` on a graph that is not minimally imperfect), 2 bad input or a
resource bound hit, 3 internal inconsistency (a proved property failed).
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from concurrent.futures import ThreadPoolExecutor
from dataclasses import fields

from .basic import recognize_basic
from .berge import (
    decomposition_report,
    has_square,
    is_berge,
    odd_hole_free_report,
    square_free_report,
    wonderful_check,
    wonderful_instances,
)
from .config import DEFAULT_LIMITS, Limits
from .decompose import perfect_color
from .errors import InternalInconsistencyError, InvalidInputError, ParseError, PerfectGraphError, ResourceLimitError
from .generators import KINDS, GeneratorRecipe, generate, gnp, random_two_join_composition
from .graph import ANY, EVEN, ODD, Graph, complement, find_hole, iter_holes
from .io import EDGE_LIST, FORMATS, GraphDocument, emit, parse_graph, read_graph
from .oracle import (
    GasparyanCertificate,
    chromatic_number,
    clique_number,
    gasparyan_certificate,
    is_minimally_imperfect,
    is_perfect,
    lovasz_bound_holds,
    stability_number,
)
from .structures import classify_cutset, find_homogeneous_pair, find_six_join, find_skew_partition, find_two_join
from .wheels import find_stretcher, find_wheels

EXPECTATIONS = ("perfect", "imperfect", "berge", "not-berge", "minimally-imperfect")
THEOREMS = ("pgt", "spgt", "decomposition", "wonderful", "square-free", "odd-hole-free", "two-join")


class _Negative(Exception):
    """A check subcommand found the opposite of what was asked."""


# ---------------------------------------------------------------------------
# helpers


def _limits(args) -> Limits:
    kw = {f.name: getattr(args, f"limit_{f.name}", None) for f in fields(Limits)}
    return DEFAULT_LIMITS.with_overrides(**kw)


def _load(args) -> GraphDocument:
    if args.input is None:
        raise InvalidInputError("--in is required")
    if args.input == "-":
        return parse_graph(sys.stdin.read(), args.format or EDGE_LIST, source="<stdin>")
    return read_graph(args.input, args.format)


def _names(doc: GraphDocument, vs) -> list[str]:
    return [doc.name(v) for v in sorted(vs)]


def _record(record: str, /, **data) -> dict:
    return {"record": record, **data}


def _dump(records: list[dict], path: str | None) -> None:
    if path:
        with open(path, "w") as fh:
            for r in records:
                fh.write(json.dumps(r, sort_keys=True) + "\n")


def _try(fn, *a, **kw):
    """Run a bounded search; return (value, None) or (None, 'skipped: ...')."""
    try:
        return fn(*a, **kw), None
    except ResourceLimitError as exc:
        return None, f"skipped ({exc})"


# ---------------------------------------------------------------------------
# analyze


def analyze_records(doc: GraphDocument, limits: Limits) -> list[dict]:
    """Every computed property and detected structure, one record each."""
    g = doc.graph
    nm = lambda vs: _names(doc, vs)  # noqa: E731
    out: list[dict] = []
    omega = clique_number(g, limits.clique)
    alpha = stability_number(g, limits.clique)
    chi, _ = chromatic_number(g, limits.chromatic)
    perfect, note = _try(is_perfect, g, limits.perfect)
    summary = _record("summary", n=g.n, m=g.m, omega=omega, alpha=alpha, chi=chi)
    if perfect is None:
        summary["perfect"] = note
    else:
        summary["perfect"] = bool(perfect)
        if not perfect:
            summary["imperfect_witness"] = nm(perfect.witness)
            summary["minimally_imperfect"] = len(perfect.witness) == g.n
    berge, note = _try(is_berge, g, limits.berge)
    if berge is None:
        summary["berge"] = note
    else:
        summary["berge"] = bool(berge)
        if not berge:
            summary["odd_hole" if not berge.in_complement else "odd_antihole"] = [doc.name(v) for v in berge.witness]
    summary["basic_class"] = recognize_basic(g).tag
    out.append(summary)

    tj = find_two_join(g)
    if tj is not None:
        out.append(_record("two_join", V1=nm(tj.v1), V2=nm(tj.v2), A1=nm(tj.a1), B1=nm(tj.b1),
                           A2=nm(tj.a2), B2=nm(tj.b2)))
    tjc = find_two_join(complement(g))
    if tjc is not None:
        out.append(_record("two_join_in_complement", V1=nm(tjc.v1), V2=nm(tjc.v2), A1=nm(tjc.a1),
                           B1=nm(tjc.b1), A2=nm(tjc.a2), B2=nm(tjc.b2)))
    sp, note = _try(find_skew_partition, g, limits.skew)
    if note:
        out.append(_record("skew_partition", status=note))
    elif sp is not None:
        kinds = [{"tag": k.tag, "u": None if k.u is None else doc.name(k.u),
                  "v": None if k.v is None else doc.name(k.v), "roles": k.roles} for k in classify_cutset(g, sp)]
        out.append(_record("skew_partition", A=nm(sp.a), B=nm(sp.b), C=nm(sp.c), D=nm(sp.d), cutset_kinds=kinds))
    hp, note = _try(find_homogeneous_pair, g, limits.homogeneous_pair)
    if note:
        out.append(_record("homogeneous_pair", status=note))
    elif hp is not None:
        out.append(_record("homogeneous_pair", A1=nm(hp.a1), A2=nm(hp.a2), B=nm(hp.b)))
    sj, note = _try(find_six_join, g, limits.six_join)
    if note:
        out.append(_record("six_join", status=note))
    elif sj is not None:
        out.append(_record("six_join", X=[nm(s) for s in sj.x], Y=[nm(s) for s in sj.y]))
    wheels, note = _try(find_wheels, g, limit=limits.wheel)
    if note:
        out.append(_record("wheel", status=note))
    else:
        for w in wheels:
            out.append(_record("wheel", kind=w.kind, hole=[doc.name(v) for v in w.hole],
                               center=doc.name(w.center), spokes=nm(w.spokes)))
    st, note = _try(find_stretcher, g, limits.stretcher)
    if note:
        out.append(_record("stretcher", status=note))
    elif st is not None:
        out.append(_record("stretcher", triangles=[[doc.name(v) for v in t] for t in st.triangles],
                           paths=[[doc.name(v) for v in p] for p in st.paths]))
    return out


def _check_expect(expect: str | None, summary: dict) -> None:
    if expect is None:
        return
    ok = {
        "perfect": summary.get("perfect") is True,
        "imperfect": summary.get("perfect") is False,
        "berge": summary.get("berge") is True,
        "not-berge": summary.get("berge") is False,
        "minimally-imperfect": summary.get("minimally_imperfect") is True,
    }[expect]
    if not ok:
        raise _Negative(f"expected {expect}")


def cmd_analyze(args) -> int:
    doc = _load(args)
    records = analyze_records(doc, _limits(args))
    s = records[0]
    print(f"graph: n={s['n']} m={s['m']}")
    print(f"omega={s['omega']} alpha={s['alpha']} chi={s['chi']}")
    print(f"perfect: {s['perfect']}" + (f" (witness {s['imperfect_witness']})" if "imperfect_witness" in s else ""))
    if "minimally_imperfect" in s:
        print(f"minimally imperfect: {s['minimally_imperfect']}")
    line = f"berge: {s['berge']}"
    for key in ("odd_hole", "odd_antihole"):
        if key in s:
            line += f" ({key.replace('_', ' ')} {s[key]})"
    print(line)
    print(f"basic class: {s['basic_class']}")
    print("structures:")
    for r in records[1:]:
        print(json.dumps(r, sort_keys=True))
    if len(records) == 1:
        print("none")
    _dump(records, args.out)
    _check_expect(args.expect, s)
    return 0


# ---------------------------------------------------------------------------
# color, certify, holes, generate


def cmd_color(args) -> int:
    doc = _load(args)
    g = doc.graph
    limits = _limits(args)
    perfect, _ = _try(is_perfect, g, limits.perfect)
    if perfect is not None and not perfect:
        k, col = chromatic_number(g, limits.chromatic)
        print(f"imperfect graph (witness {_names(doc, perfect.witness)}); optimal colouring uses {k} colours")
        method = "oracle"
        if args.expect == "perfect":
            raise _Negative("graph is not perfect")
    else:
        pc = perfect_color(g, verify=False, limits=limits)
        col, k = pc.coloring, pc.omega
        method = pc.tree.kind
        trusted = "" if perfect is not None else " (perfection not verified: size above bound)"
        print(f"omega={k}; colouring with {col.k} colours via {method}{trusted}")
    lines = [f"{doc.name(v)} {col.colors[v] + 1}" for v in range(g.n)]
    print("\n".join(lines))
    if args.out:
        with open(args.out, "w") as fh:
            fh.write("\n".join(lines) + ("\n" if lines else ""))
    return 0


def format_certificate(cert: GasparyanCertificate, doc: GraphDocument) -> str:
    out = [f"n {cert.n}", f"alpha {cert.alpha}", f"omega {cert.omega}"]
    out += ["stable " + " ".join(_names(doc, a)) for a in cert.stable_sets]
    out += ["clique " + " ".join(_names(doc, b)) for b in cert.cliques]
    return "\n".join(out) + "\n"


def parse_certificate(text: str, doc: GraphDocument) -> GasparyanCertificate:
    index = {doc.name(v): v for v in range(doc.graph.n)}
    head: dict[str, int] = {}
    stable, cliques = [], []
    for lineno, raw in enumerate(text.splitlines(), 1):
        toks = raw.split("#", 1)[0].split()
        if not toks:
            continue
        key, rest = toks[0], toks[1:]
        if key in ("n", "alpha", "omega"):
            if len(rest) != 1 or not rest[0].isdigit():
                raise ParseError(f"'{key}' takes one count", lineno)
            head[key] = int(rest[0])
        elif key in ("stable", "clique"):
            try:
                s = frozenset(index[t] for t in rest)
            except KeyError as exc:
                raise ParseError(f"unknown vertex {exc.args[0]!r}", lineno) from None
            (stable if key == "stable" else cliques).append(s)
        else:
            raise ParseError(f"unknown line type {key!r}", lineno)
    missing = {"n", "alpha", "omega"} - set(head)
    if missing:
        raise ParseError(f"missing header lines: {', '.join(sorted(missing))}")
    return GasparyanCertificate(tuple(stable), tuple(cliques), head["alpha"], head["omega"], head["n"])


def cmd_certify(args) -> int:
    doc = _load(args)
    g = doc.graph
    limits = _limits(args)
    if args.check:
        with open(args.check) as fh:
            cert = parse_certificate(fh.read(), doc)
        problems = cert.verify(g)
        if cert.n != g.n:
            problems.append("certificate is for a different vertex count")
        if problems:
            print("certificate rejected:")
            for p in problems:
                print(f"  {p}")
            return 1
        print(f"certificate verified: {len(cert.stable_sets)} stable sets and cliques, A B^T = J - I")
        return 0
    if not is_minimally_imperfect(g, limits.perfect):
        print("graph is not minimally imperfect; no certificate")
        return 1
    cert = gasparyan_certificate(g, limits.perfect)
    text = format_certificate(cert, doc)
    print(text, end="")
    print(f"# verified: n = {cert.n} = alpha*omega + 1 = {cert.alpha * cert.omega + 1}, A B^T = J - I")
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    return 0


def cmd_holes(args) -> int:
    doc = _load(args)
    g = complement(doc.graph) if args.antiholes else doc.graph
    parity = {"odd": ODD, "even": EVEN, "any": ANY}[args.parity]
    count = 0
    for hole in iter_holes(g, args.min_length, parity):
        count += 1
        kind = "odd" if len(hole) % 2 else "even"
        print(f"{len(hole)} {kind}: " + " ".join(doc.name(v) for v in hole))
    what = "antiholes" if args.antiholes else "holes"
    print(f"{count} {what}")
    if args.expect == "none" and count:
        raise _Negative(f"found {what}")
    if args.expect == "some" and not count:
        raise _Negative(f"no {what}")
    return 0


def _parse_params(items: list[str]) -> dict:
    params = {}
    for item in items:
        if "=" not in item:
            raise InvalidInputError(f"parameter {item!r} is not key=value")
        k, v = item.split("=", 1)
        params[k] = v
    return params


def cmd_generate(args) -> int:
    params = _parse_params(args.param)
    if args.n is not None:
        params.setdefault("n", args.n)
    inner = params.pop("of", None)
    if inner is not None:
        params["of"] = GeneratorRecipe(inner, {k: v for k, v in params.items() if k == "n"}, args.seed)
    g = generate(GeneratorRecipe(args.kind, params, args.seed))
    text = emit(g, args.format or EDGE_LIST)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        print(text, end="")
    return 0


# ---------------------------------------------------------------------------
# sweep


def _sample(rng: random.Random, n: int) -> Graph:
    return gnp(n, 0.5, rng)


def _berge_sample(rng: random.Random, n: int, limits: Limits, pred=None) -> Graph:
    for _ in range(100_000):
        g = gnp(n, rng.uniform(0.2, 0.8), rng)
        if is_berge(g, limits.berge) and (pred is None or pred(g)):
            return g
    raise InvalidInputError("could not sample a qualifying graph")


def _sweep_one(theorem: str, n: int, seed: int, i: int, limits: Limits) -> dict:
    rng = random.Random(f"{seed}-{i}")
    if theorem == "pgt":
        g = _sample(rng, n)
        p = bool(is_perfect(g, limits.perfect))
        if p != bool(is_perfect(complement(g), limits.perfect)) or p != lovasz_bound_holds(g, limits.perfect):
            raise InternalInconsistencyError("perfect graph theorem check failed", {"graph": g.encode()})
        return {"perfect": p}
    if theorem == "spgt":
        g = _sample(rng, n)
        p = bool(is_perfect(g, limits.perfect))
        if p != bool(is_berge(g, limits.berge)):
            raise InternalInconsistencyError("perfect and Berge disagree", {"graph": g.encode()})
        return {"perfect": p}
    if theorem == "decomposition":
        g = _berge_sample(rng, n, limits)
        return {"case": decomposition_report(g, limits, check_berge=False).case}
    if theorem == "wonderful":
        g = _berge_sample(rng, n, limits)
        outcomes = [wonderful_check(inst, limits.berge).holds for inst in wonderful_instances(g)]
        return {"instances": len(outcomes), "outcomes": [list(o) for o in outcomes]}
    if theorem == "square-free":
        g = _berge_sample(rng, n, limits, lambda h: not has_square(h))
        return {"case": square_free_report(g, limits).case}
    if theorem == "odd-hole-free":
        for _ in range(100_000):
            g = gnp(n, rng.uniform(0.2, 0.8), rng)
            if find_hole(g, ODD, 5) is None:
                return {"case": odd_hole_free_report(g, limits).case}
        raise InvalidInputError("could not sample an odd-hole-free graph")
    if theorem == "two-join":
        g, tj, _ = random_two_join_composition(rng, max_block=max(n, 6))
        pc = perfect_color(g, verify=False, limits=limits)
        chi, _ = chromatic_number(g, None)
        if pc.coloring.k != chi:
            raise InternalInconsistencyError("pipeline colouring is not optimal", {"graph": g.encode()})
        return {"colors": chi, "route": pc.tree.kind}
    raise InvalidInputError(f"unknown theorem {theorem!r}")


def cmd_sweep(args) -> int:
    limits = _limits(args)
    if args.theorem is None:
        raise InvalidInputError("--theorem is required")
    if args.n is None or args.n < 1:
        raise InvalidInputError("--n must be a positive vertex count")
    if args.samples < 1:
        raise InvalidInputError("--samples must be positive")
    job = lambda i: _sweep_one(args.theorem, args.n, args.seed, i, limits)  # noqa: E731
    with ThreadPoolExecutor(max_workers=max(1, args.workers)) as pool:
        results = list(pool.map(job, range(args.samples)))
    tally: dict[str, int] = {}
    for r in results:
        key = json.dumps({k: v for k, v in r.items() if k not in ("outcomes", "instances")}, sort_keys=True)
        tally[key] = tally.get(key, 0) + 1
    print(f"theorem {args.theorem}: {args.samples} samples at n={args.n}, seed {args.seed}: all consistent")
    if args.theorem == "wonderful":
        print(f"instances checked: {sum(r['instances'] for r in results)}")
    for key in sorted(tally):
        print(f"  {tally[key]:6d}  {key}")
    if args.out:
        _dump([_record("sample", index=i, **r) for i, r in enumerate(results)], args.out)
    return 0


# ---------------------------------------------------------------------------
# entry point


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="perfectgraph", description="Perfect graph workbench.")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, needs_input=True):
        if needs_input:
            p.add_argument("--in", dest="input", help="graph file ('-' for stdin)")
        p.add_argument("--format", choices=FORMATS, help="input/output format (default: by file extension)")
        p.add_argument("--out", help="write machine-readable output here")
        for f in fields(Limits):
            p.add_argument(f"--limit-{f.name.replace('_', '-')}", dest=f"limit_{f.name}", type=int,
                           help=f"size bound for {f.name.replace('_', ' ')} searches (default {getattr(DEFAULT_LIMITS, f.name)})")

    p = sub.add_parser("analyze", help="invariants, perfection, Berge test and every detected structure")
    common(p)
    p.add_argument("--expect", choices=EXPECTATIONS, help="exit 1 unless the graph has this property")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("color", help="optimal colouring (decomposition pipeline for perfect graphs)")
    common(p)
    p.add_argument("--expect", choices=("perfect",))
    p.set_defaults(func=cmd_color)

    p = sub.add_parser("certify", help="emit or check the stable-set/clique certificate of a minimally imperfect graph")
    common(p)
    p.add_argument("--check", help="certificate file to verify against --in")
    p.set_defaults(func=cmd_certify)

    p = sub.add_parser("holes", help="list holes (or antiholes) with parity")
    common(p)
    p.add_argument("--parity", choices=("odd", "even", "any"), default="any")
    p.add_argument("--min-length", type=int, default=4)
    p.add_argument("--antiholes", action="store_true", help="list holes of the complement")
    p.add_argument("--expect", choices=("none", "some"))
    p.set_defaults(func=cmd_holes)

    p = sub.add_parser("generate", help="write a graph from a generator family")
    common(p, needs_input=False)
    p.add_argument("--kind", required=True, choices=KINDS)
    p.add_argument("--n", type=int)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--param", action="append", default=[], help="key=value generator parameter")
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("sweep", help="check a theorem on seeded random samples")
    common(p, needs_input=False)
    p.add_argument("--theorem", choices=THEOREMS)
    p.add_argument("--n", type=int)
    p.add_argument("--samples", type=int, default=100)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--workers", type=int, default=1)
    p.set_defaults(func=cmd_sweep)
    return parser


def cli_main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code == 0 else 2
    try:
        return args.func(args)
    except _Negative as exc:
        print(f"check failed: {exc}", file=sys.stderr)
        return 1
    except InternalInconsistencyError as exc:
        print(f"internal inconsistency: {exc}", file=sys.stderr)
        if exc.payload:
            print(json.dumps(exc.payload, sort_keys=True, default=str), file=sys.stderr)
        return 3
    except (PerfectGraphError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(cli_main())


if __name__ == "__main__":
    main()
