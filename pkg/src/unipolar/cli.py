"""Command line front end.

Subcommands: ``recognise`` (certificate JSON on stdout), ``solve`` (one of
clique / coloring / stable-set / clique-cover), ``gen`` (write a planted
instance), ``bench`` (wall-time scaling table), ``oracle-check`` (sweep
small graphs against the brute-force oracles).

Exit codes: 0 on success / recognized, 1 for a negative verdict or a
detected mismatch, 2 for input errors. Certificate JSON keys: verdict,
central, side_cliques, counters{adjacency_tests, absorptions}, wall_ms,
n, m; vertex indices are 0-based regardless of the input format. In --gsg
mode the counters sum both recognise runs, and for a co-unipolar verdict
central/side_cliques describe the complement's representation.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import statistics
import sys
import time
from typing import Optional

import numpy as np

from . import formats, oracle
from .generators import GenParams, gen_gnp, gen_gsg, gen_unipolar, perturb
from .graphs import Graph, complement, graph_from_edges, is_clique
from .optimizers import (
    solve_clique_cover,
    solve_coloring,
    solve_max_clique,
    solve_stable_set,
)
from .recognition import (
    IndepResult,
    Representation,
    VERDICT_BOTH,
    VERDICT_CO_UNIPOLAR,
    VERDICT_NEITHER,
    VERDICT_UNIPOLAR,
    _gsg_verdict,
    check_representation,
    recognise_counted,
)

EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_INPUT = 2

PROBLEMS = ("clique", "coloring", "stable-set", "clique-cover")


def _load_graph(path: str, fmt: str) -> Graph:
    with open(path, "r", encoding="utf-8") as fh:
        return formats.parse_graph(fh.read(), fmt)


def _graph_digest(g: Graph) -> str:
    h = hashlib.sha256()
    h.update(g.n.to_bytes(8, "little"))
    nbytes = (g.n + 7) // 8 or 1
    for v in range(g.n):
        h.update(g.row_mask(v).to_bytes(nbytes, "little"))
    return h.hexdigest()[:12]


def _rep_fields(rep: Optional[Representation]) -> tuple[list[int], list[list[int]]]:
    if rep is None:
        return [], []
    return list(rep.central), [list(s) for s in rep.sides]


def _certificate(verdict, rep, counters, wall_ms, g) -> dict:
    central, sides = _rep_fields(rep)
    return {
        "verdict": verdict,
        "central": central,
        "side_cliques": sides,
        "counters": {
            "adjacency_tests": counters[0],
            "absorptions": counters[1],
        },
        "wall_ms": wall_ms,
        "n": g.n,
        "m": g.edge_count,
    }


def _emit(doc: dict, path: Optional[str]) -> None:
    text = json.dumps(doc, indent=2)
    print(text)
    if path:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")


def cmd_recognise(args) -> int:
    try:
        g = _load_graph(args.file, args.format)
    except (OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    start = time.perf_counter()
    if args.gsg:
        rep, stats = recognise_counted(g)
        co_rep, co_stats = recognise_counted(complement(g))
        verdict = _gsg_verdict(rep, co_rep)
        shown = rep if rep is not None else co_rep
        counters = (
            stats.adjacency_tests + co_stats.adjacency_tests,
            stats.absorptions + co_stats.absorptions,
        )
        recognized = verdict != VERDICT_NEITHER
    else:
        rep, stats = recognise_counted(g)
        verdict = VERDICT_UNIPOLAR if rep is not None else "not-unipolar"
        shown = rep
        counters = (stats.adjacency_tests, stats.absorptions)
        recognized = rep is not None
    wall_ms = (time.perf_counter() - start) * 1e3
    try:
        _emit(_certificate(verdict, shown, counters, wall_ms, g), args.certificate)
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    return EXIT_OK if recognized else EXIT_NEGATIVE


def _solution_doc(problem: str, g: Graph, rep: Representation, on_complement: bool) -> dict:
    """Solve on the unipolar side; translate back when that side was the complement."""
    host = complement(g) if on_complement else g
    doc: dict = {"problem": problem, "n": g.n, "m": g.edge_count}
    if problem == "clique":
        res = solve_stable_set(host, rep) if on_complement else solve_max_clique(host, rep)
        doc["size"] = len(res)
        doc["vertices"] = list(res)
    elif problem == "stable-set":
        res = solve_max_clique(host, rep) if on_complement else solve_stable_set(host, rep)
        doc["size"] = len(res)
        doc["vertices"] = list(res)
    elif problem == "coloring":
        if on_complement:
            parts = solve_clique_cover(host, rep)
            color_of = [0] * g.n
            for idx, part in enumerate(parts):
                for v in part:
                    color_of[v] = idx
            doc["colors"] = len(parts)
            doc["color_of"] = color_of
        else:
            col = solve_coloring(host, rep)
            doc["colors"] = col.count
            doc["color_of"] = list(col.color_of)
    elif problem == "clique-cover":
        if on_complement:
            col = solve_coloring(host, rep)
            groups: dict[int, list[int]] = {}
            for v, c in enumerate(col.color_of):
                groups.setdefault(c, []).append(v)
            doc["count"] = col.count
            doc["cliques"] = [groups[c] for c in sorted(groups)]
        else:
            parts = solve_clique_cover(host, rep)
            doc["count"] = len(parts)
            doc["cliques"] = [list(p) for p in parts]
    else:
        raise ValueError(f"unknown problem {problem!r}")
    return doc


def cmd_solve(args) -> int:
    try:
        g = _load_graph(args.file, args.format)
    except (OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    rep, _ = recognise_counted(g)
    if rep is not None:
        doc = _solution_doc(args.problem, g, rep, on_complement=False)
    else:
        co_rep, _ = recognise_counted(complement(g))
        if co_rep is None:
            print("error: not a generalised split graph, no fast solver applies", file=sys.stderr)
            return EXIT_NEGATIVE
        doc = _solution_doc(args.problem, g, co_rep, on_complement=True)
    _emit(doc, None)
    return EXIT_OK


def cmd_gen(args) -> int:
    params = GenParams(
        n=args.n,
        seed=args.seed,
        central_fraction=args.central_fraction,
        side_mean=args.side_mean,
        p_cross=args.p_cross,
    )
    if args.gsg:
        g, cert = gen_gsg(params)
        verdict = cert.verdict
        rep = cert.representation if cert.representation is not None else cert.co_representation
    else:
        g, rep = gen_unipolar(params)
        verdict = VERDICT_UNIPOLAR
    try:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(formats.serialize_graph(g, args.format))
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    if args.certificate:
        doc = _certificate(verdict, rep, (0, 0), 0.0, g)
        try:
            with open(args.certificate, "w", encoding="utf-8") as fh:
                fh.write(json.dumps(doc, indent=2) + "\n")
        except OSError as exc:
            print(f"error: {exc}", file=sys.stderr)
            return EXIT_INPUT
    print(f"wrote {args.output}: n={g.n} m={g.edge_count} digest={_graph_digest(g)}")
    return EXIT_OK


def _derived_seed(*key) -> int:
    return int(np.random.SeedSequence(key).generate_state(1, np.uint64)[0])


def cmd_bench(args) -> int:
    sizes = args.sizes
    if sizes != sorted(sizes):
        print("error: sizes must be ascending", file=sys.stderr)
        return EXIT_INPUT
    rows = []
    for n in sizes:
        pos_times = []
        neg_times = []
        digest = hashlib.sha256()
        for i in range(args.reps):
            g, _ = gen_unipolar(GenParams(n=n, seed=_derived_seed(args.seed, n, i, 0)))
            digest.update(_graph_digest(g).encode())
            start = time.perf_counter()
            recognise_counted(g)
            pos_times.append((time.perf_counter() - start) * 1e3)
            bad = perturb(g, flips=n, seed=_derived_seed(args.seed, n, i, 1))
            digest.update(_graph_digest(bad).encode())
            start = time.perf_counter()
            recognise_counted(bad)
            neg_times.append((time.perf_counter() - start) * 1e3)
        rows.append((n, statistics.median(pos_times), statistics.median(neg_times), digest.hexdigest()[:12]))
    print(f"{'n':>7}  {'planted_ms':>12}  {'perturbed_ms':>13}  {'ratio_planted':>13}  {'ratio_perturbed':>15}  instances")
    prev = None
    for n, pos_ms, neg_ms, dig in rows:
        if prev is None:
            rp = rn = "-"
        else:
            rp = f"{pos_ms / prev[0]:.2f}"
            rn = f"{neg_ms / prev[1]:.2f}"
        print(f"{n:>7}  {pos_ms:>12.2f}  {neg_ms:>13.2f}  {rp:>13}  {rn:>15}  {dig}")
        prev = (pos_ms, neg_ms)
    return EXIT_OK


def _pair_order(n: int) -> list[tuple[int, int]]:
    return [(u, v) for u in range(n) for v in range(u + 1, n)]


def graph_from_code(n: int, code: int) -> Graph:
    """Labeled graph from the bits of ``code``, pairs in lexicographic order."""
    edges = [pair for k, pair in enumerate(_pair_order(n)) if (code >> k) & 1]
    return graph_from_edges(n, edges)


def _check_solvers(g: Graph, rep: Representation) -> Optional[str]:
    """Compare the four solvers against the oracles; None when all agree."""
    alpha = oracle.oracle_alpha(g)
    omega = oracle.oracle_omega(g)
    chi = oracle.oracle_chi(g)
    cover_num = oracle.oracle_cover(g)
    stable = solve_stable_set(g, rep)
    if len(stable) != alpha or g.to_matrix()[np.ix_(list(stable), list(stable))].any():
        return f"stable set {sorted(stable)} vs alpha={alpha}"
    clique = solve_max_clique(g, rep)
    if len(clique) != omega or not is_clique(g, clique):
        return f"clique {sorted(clique)} vs omega={omega}"
    col = solve_coloring(g, rep)
    if col.count != chi:
        return f"coloring used {col.count} colors vs chi={chi}"
    for u, v in g.edges():
        if col.color_of[u] == col.color_of[v]:
            return f"coloring not proper on edge ({u}, {v})"
    parts = solve_clique_cover(g, rep)
    if len(parts) != cover_num:
        return f"clique cover of {len(parts)} parts vs {cover_num}"
    seen = 0
    for part in parts:
        if not is_clique(g, part) or seen & part.mask:
            return "clique cover parts invalid"
        seen |= part.mask
    if seen != (1 << g.n) - 1:
        return "clique cover does not cover all vertices"
    return None


def _oracle_check_one(g: Graph, with_solvers: bool) -> Optional[str]:
    rep, _ = recognise_counted(g)
    expected = oracle.oracle_is_unipolar(g)
    if (rep is None) != (expected is None):
        return f"recognise said {'unipolar' if rep else 'not unipolar'}, oracle disagrees"
    if rep is not None and not check_representation(g, rep):
        return "recognise returned an invalid certificate"
    co = complement(g)
    co_rep, _ = recognise_counted(co)
    co_expected = oracle.oracle_is_unipolar(co)
    if (co_rep is None) != (co_expected is None):
        return "complement recognition disagrees with oracle"
    if co_rep is not None and not check_representation(co, co_rep):
        return "complement certificate invalid"
    if with_solvers and rep is not None:
        failure = _check_solvers(g, rep)
        if failure:
            return failure
    return None


def cmd_oracle_check(args) -> int:
    mismatches = 0
    first_bad: Optional[Graph] = None
    first_msg = ""
    for n in range(args.max_n + 1):
        checked = 0
        for code in range(1 << (n * (n - 1) // 2)):
            g = graph_from_code(n, code)
            msg = _oracle_check_one(g, not args.no_solvers)
            checked += 1
            if msg:
                mismatches += 1
                if first_bad is None:
                    first_bad, first_msg = g, msg
        print(f"n={n}: {checked} graphs, {mismatches} mismatches so far")
    ps = args.p
    for i in range(args.samples):
        p = ps[i % len(ps)]
        g = gen_gnp(args.sample_n, p, _derived_seed(args.seed, 999331, i))
        msg = _oracle_check_one(g, not args.no_solvers)
        if msg:
            mismatches += 1
            if first_bad is None:
                first_bad, first_msg = g, msg
    if args.samples:
        print(f"sampled n={args.sample_n}: {args.samples} graphs over p={ps}")
    if mismatches:
        print(f"FAIL: {mismatches} mismatches; first: {first_msg}", file=sys.stderr)
        sys.stderr.write(formats.serialize_dimacs(first_bad))
        return EXIT_NEGATIVE
    print("OK: recognition, certificates and solvers all match the oracles")
    return EXIT_OK


def _float_list(text: str) -> list[float]:
    return [float(x) for x in text.split(",") if x]


def _int_list(text: str) -> list[int]:
    return [int(x) for x in text.split(",") if x]


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="unipolar",
        description="Recognition and optimization for unipolar and generalised split graphs.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_rec = sub.add_parser("recognise", help="recognise a graph file, print a certificate")
    p_rec.add_argument("file")
    p_rec.add_argument("--format", choices=formats.FORMATS, default="dimacs")
    p_rec.add_argument("--gsg", action="store_true", help="also test the complement")
    p_rec.add_argument("--certificate", metavar="PATH", help="also write the certificate here")
    p_rec.set_defaults(func=cmd_recognise)

    p_solve = sub.add_parser("solve", help="solve an optimization problem on a recognized graph")
    p_solve.add_argument("file")
    p_solve.add_argument("--problem", choices=PROBLEMS, required=True)
    p_solve.add_argument("--format", choices=formats.FORMATS, default="dimacs")
    p_solve.set_defaults(func=cmd_solve)

    p_gen = sub.add_parser("gen", help="generate a planted instance")
    p_gen.add_argument("--n", type=int, required=True)
    p_gen.add_argument("--seed", type=int, default=0)
    p_gen.add_argument("--central-fraction", type=float, default=0.5)
    p_gen.add_argument("--side-mean", type=float, default=2.0)
    p_gen.add_argument("--p-cross", type=float, default=0.5)
    p_gen.add_argument("--gsg", action="store_true", help="flip a seeded coin for the complement side")
    p_gen.add_argument("--format", choices=formats.FORMATS, default="dimacs")
    p_gen.add_argument("-o", "--output", required=True)
    p_gen.add_argument("--certificate", metavar="PATH", help="write the planted certificate here")
    p_gen.set_defaults(func=cmd_gen)

    p_bench = sub.add_parser("bench", help="median recognise wall times over planted instances")
    p_bench.add_argument("--sizes", type=_int_list, default=[500, 1000, 2000])
    p_bench.add_argument("--reps", type=int, default=3)
    p_bench.add_argument("--seed", type=int, default=0)
    p_bench.set_defaults(func=cmd_bench)

    p_oc = sub.add_parser("oracle-check", help="sweep small graphs against brute-force oracles")
    p_oc.add_argument("--max-n", type=int, default=5)
    p_oc.add_argument("--samples", type=int, default=0)
    p_oc.add_argument("--sample-n", type=int, default=10)
    p_oc.add_argument("--p", type=_float_list, default=[0.2, 0.5, 0.8])
    p_oc.add_argument("--seed", type=int, default=1)
    p_oc.add_argument("--no-solvers", action="store_true", help="skip the solver cross-checks")
    p_oc.set_defaults(func=cmd_oracle_check)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    return args.func(args)


def console_main() -> None:
    sys.exit(main())


if __name__ == "__main__":
    console_main()
