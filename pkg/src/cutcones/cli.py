"""Command-line entry point.

Exit status: 0 on success, 1 when a check fails (or the LP oracle disagrees
with the combinatorial criterion), 2 on usage or parse errors. Data goes to
stdout, diagnostics to stderr.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import graphs, lp
from .adjacency import adjacent, certificate, verify_certificate
from .core import Sense, format_rational, optimal_cuts
from .io import (
    format_certificate,
    graph_to_csv,
    graph_to_dot,
    parse_instance,
    parse_vertex_list,
)
from .walker import local_search

EXIT_OK, EXIT_CHECK, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _positive(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}") from None
    if v < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {v}")
    return v


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="cutcones",
                                description="Cone partitions for min-cut and max-cut on K_n.")
    p.add_argument("--threads", type=_positive, default=1, help="worker processes for LP sweeps")
    p.add_argument("--cap-n", type=_positive, default=graphs.DEFAULT_CAP_N)
    p.add_argument("--cap-lp", type=_positive, default=graphs.DEFAULT_CAP_LP)
    p.add_argument("--cap-clique", type=_positive, default=graphs.DEFAULT_CAP_CLIQUE)
    sub = p.add_subparsers(dest="command", required=True)
    senses = [s.value for s in Sense]

    g = sub.add_parser("graph", help="build a cone-partition graph")
    g.add_argument("--n", type=int, required=True)
    g.add_argument("--sense", choices=senses, required=True)
    g.add_argument("--stats", action="store_true", help="degrees, diameter, clique number")
    g.add_argument("--export", choices=["dot", "csv", "json"])
    g.add_argument("--out", type=Path)

    a = sub.add_parser("adjacent", help="test adjacency of two cuts")
    a.add_argument("--n", type=int, required=True)
    a.add_argument("--x", required=True, help="comma-separated vertices")
    a.add_argument("--y", required=True, help="comma-separated vertices")
    a.add_argument("--sense", choices=senses, required=True)
    a.add_argument("--certify", action="store_true", help="print a certificate weight vector")
    a.add_argument("--oracle", action="store_true", help="cross-check with the LP oracle")

    m = sub.add_parser("membership", help="cuts whose cone contains the instance weights")
    m.add_argument("--instance", type=Path, required=True)
    m.add_argument("--sense", choices=senses, required=True)

    s = sub.add_parser("solve", help="optimize an instance")
    s.add_argument("--instance", type=Path, required=True)
    s.add_argument("--sense", choices=senses, required=True)
    s.add_argument("--method", choices=["brute", "walk"], default="brute")
    s.add_argument("--start", help="start cut for --method walk (default: {1})")

    w = sub.add_parser("walk", help="local search with the full step trace as JSON lines")
    w.add_argument("--instance", type=Path, required=True)
    w.add_argument("--sense", choices=senses, required=True)
    w.add_argument("--start", default="1")

    v = sub.add_parser("verify", help="check every theorem at this n")
    v.add_argument("--n", type=int, required=True)
    v.add_argument("--json", action="store_true")

    e = sub.add_parser("export-lp", help="dump the adjacency LP in plain text")
    e.add_argument("--n", type=int, required=True)
    e.add_argument("--x", required=True)
    e.add_argument("--y", required=True)
    e.add_argument("--sense", choices=senses, default="min")
    e.add_argument("--skeleton", action="store_true",
                   help="cut polytope edge LP (free weights) instead of the cone LP")
    e.add_argument("--out", type=Path)
    return p


def _emit(text: str, out: Path | None) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        out.write_text(text)
        print(f"wrote {out}", file=sys.stderr)


def _check_n(n: int, cap: int, what: str) -> None:
    if n < 2:
        raise UsageError(f"--n must be at least 2, got {n}")
    if n > cap:
        raise UsageError(f"--n {n} exceeds the {what} cap {cap}; pass a larger cap to override")


def cmd_graph(args) -> int:
    _check_n(args.n, args.cap_n, "graph")
    g = graphs.build_graph(args.n, args.sense, cap=args.cap_n)
    if args.export == "dot":
        _emit(graph_to_dot(g), args.out)
        return EXIT_OK
    if args.export == "csv":
        _emit(graph_to_csv(g), args.out)
        return EXIT_OK
    if args.export == "json" or args.stats:
        stats = graphs.graph_stats(g, clique_cap=args.cap_clique)
        if args.export == "json":
            _emit(stats.to_json() + "\n", args.out)
        else:
            lines = [f"K_{g.n} {g.sense.value}-cut cone partition graph",
                     f"vertices {stats.vertex_count}", f"edges {stats.edge_count}"]
            for k, degs in sorted(stats.degree_by_cardinality.items()):
                lines.append(f"degree k={k} {','.join(map(str, degs))}")
            lines.append(f"diameter {stats.diameter}")
            lines.append(f"clique number {stats.clique_number if stats.clique_number is not None else 'skipped'}")
            for c in stats.checks:
                lines.append(f"[{'PASS' if c.passed else 'FAIL'}] {c.claim}: "
                             f"expected {c.expected}, got {c.actual}")
            _emit("\n".join(lines) + "\n", args.out)
        return EXIT_OK if all(c.passed for c in stats.checks) else EXIT_CHECK
    _emit(f"vertices {len(g)}\nedges {g.edge_count}\n", args.out)
    return EXIT_OK


def cmd_adjacent(args) -> int:
    _check_n(args.n, args.cap_n, "graph")
    x, y = parse_vertex_list(args.x, args.n), parse_vertex_list(args.y, args.n)
    if x == y:
        raise UsageError(f"--x and --y are the same cut {x}")
    verdict = adjacent(x, y, args.sense)
    line = str(verdict)
    status = EXIT_OK
    if args.oracle:
        if args.n > args.cap_lp:
            raise UsageError(f"--oracle needs n <= LP cap {args.cap_lp}")
        ans = lp.oracle_solve(x, y, args.sense)
        if ans.adjacent == verdict.adjacent:
            line += "; oracle agrees"
        else:
            line += "; ORACLE DISAGREES"
            status = EXIT_CHECK
            print("oracle disagreement, adjacency LP follows:", file=sys.stderr)
            sys.stderr.write(lp.adjacency_lp(x, y, args.sense).to_text())
        line += f" (margin {format_rational(ans.margin)})"
    print(line)
    if args.certify:
        if not verdict.adjacent:
            print("no certificate: pair is not adjacent", file=sys.stderr)
        else:
            cert = certificate(x, y, args.sense)
            check = verify_certificate(cert)
            sys.stdout.write(format_certificate(cert))
            if not check:
                print(f"certificate FAILED verification: {check.detail}", file=sys.stderr)
                status = EXIT_CHECK
    return status


def cmd_membership(args) -> int:
    inst = parse_instance(args.instance)
    value, cuts = optimal_cuts(inst, args.sense)
    print(f"value {format_rational(value)}")
    for c in cuts:
        print(c)
    return EXIT_OK


def cmd_solve(args) -> int:
    inst = parse_instance(args.instance)
    if args.method == "brute":
        return cmd_membership(args)
    start = parse_vertex_list(args.start or "1", inst.n)
    trace = local_search(inst, start, args.sense)
    print(f"value {format_rational(trace.value)}")
    print(trace.terminal)
    print(f"steps {len(trace.steps)}", file=sys.stderr)
    return EXIT_OK


def cmd_walk(args) -> int:
    inst = parse_instance(args.instance)
    trace = local_search(inst, parse_vertex_list(args.start, inst.n), args.sense)
    sys.stdout.write(trace.to_jsonl())
    return EXIT_OK


def cmd_verify(args) -> int:
    _check_n(args.n, args.cap_n, "graph")
    report = graphs.verify_theorems(args.n, cap_n=args.cap_n, cap_lp=args.cap_lp,
                                    cap_clique=args.cap_clique, workers=args.threads)
    sys.stdout.write(report.to_json() + "\n" if args.json else report.to_text())
    return EXIT_OK if report.passed else EXIT_CHECK


def cmd_export_lp(args) -> int:
    _check_n(args.n, args.cap_n, "graph")
    x, y = parse_vertex_list(args.x, args.n), parse_vertex_list(args.y, args.n)
    if args.skeleton:
        prog = lp.skeleton_lp(x.mask, y.mask, args.n)
    else:
        if x == y:
            raise UsageError(f"--x and --y are the same cut {x}")
        prog = lp.adjacency_lp(x, y, args.sense)
    _emit(prog.to_text(), args.out)
    return EXIT_OK


COMMANDS = {
    "graph": cmd_graph,
    "adjacent": cmd_adjacent,
    "membership": cmd_membership,
    "solve": cmd_solve,
    "walk": cmd_walk,
    "verify": cmd_verify,
    "export-lp": cmd_export_lp,
}


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return COMMANDS[args.command](args)
    # ParseError, NotAdjacentError and CapExceeded are all ValueErrors
    except (UsageError, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
