"""Command line front end.

Directions and cluster ids are 1-based on the command line.  Exit codes:
0 when every check passes, 1 when any check fails, 2 on usage, input or
resource errors.
"""
from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import harness
from .cluster import cluster_monomial, enumerate_exchange_graph, list_cluster_variables, read_seed_file
from .errors import DivisionError, DomainError, ResourceError, StructuralError
from .laurent import coefficient_array, normalize, parse
from .reference import CASES

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


def _print_seed(seed, names=None):
    print("matrix:")
    for row in seed.matrix.rows:
        print("  " + " ".join(f"{v:>2}" for v in row))
    print("cluster:")
    for i, text in enumerate(seed.cluster_text(names), start=1):
        print(f"  x'{i} = {text}")


def _emit(report, output=None):
    text = report.render()
    sys.stdout.write(text)
    if output:
        Path(output).write_text(text)
    return EXIT_OK if report.passed else EXIT_FAIL


def cmd_mutate(args):
    seed, names = read_seed_file(args.seedfile)
    for k in args.directions:
        if not 1 <= k <= seed.rank:
            raise StructuralError(f"direction {k} out of range 1..{seed.rank}")
        seed = seed.mutate(k - 1)
    _print_seed(seed, names)
    return EXIT_OK


def cmd_enumerate(args):
    seed, names = read_seed_file(args.seedfile)
    graph = enumerate_exchange_graph(seed, node_limit=args.limit)
    for u, s in enumerate(graph.seeds, start=1):
        print(f"cluster {u}: ({', '.join(s.cluster_text(names))})")
    print(f"clusters: {len(graph)}")
    print(f"edges: {len(graph.edges)}")
    print(f"cluster_variables: {len(list_cluster_variables(graph))}")
    print(f"regular: {graph.is_regular()}")
    if args.dot:
        Path(args.dot).write_text(graph.to_dot(names))
    return EXIT_OK


def _report_checks(reports):
    for r in reports:
        print(r.to_record())


def cmd_expand(args):
    seed, names = read_seed_file(args.seedfile)
    graph = enumerate_exchange_graph(seed, node_limit=args.limit)
    if not 1 <= args.cluster <= len(graph):
        raise StructuralError(f"cluster id {args.cluster} out of range 1..{len(graph)}")
    try:
        exps = [int(v) for v in args.exponents.split(",")]
    except ValueError:
        raise DomainError(f"bad exponent list {args.exponents!r}") from None
    mono = cluster_monomial(graph.seeds[args.cluster - 1], exps)
    nf = normalize(mono)
    print(f"monomial: {nf.to_text(names)}")
    print(f"denominator_exponents: {nf.dvector}")
    arr = coefficient_array(nf.numerator)
    print(f"numerator_box: offsets={arr.offsets} shape={arr.shape}")
    reports = harness.check_laurent(mono)
    _report_checks(reports)
    ok = all(r.passed for r in reports[:2]) and reports[2 if args.unimodality == "uniform" else 3].passed
    return EXIT_OK if ok else EXIT_FAIL


def cmd_check(args):
    lines = [ln.split("#", 1)[0].strip() for ln in Path(args.laurentfile).read_text().splitlines()]
    exprs = [ln for ln in lines if ln]
    if not exprs:
        raise DomainError("no expression in input file")
    ok = True
    for text in exprs:
        p = parse(text)
        print(f"expression: {normalize(p).to_text()}")
        reports = harness.check_laurent(p)
        _report_checks(reports)
        pick = 2 if args.unimodality == "uniform" else 3
        ok &= all(r.passed for r in reports[:2]) and reports[pick].passed
    return EXIT_OK if ok else EXIT_FAIL


def cmd_verify_tables(args):
    return _emit(harness.verify_tables(args.case), args.output)


def cmd_verify_theorem(args):
    report = harness.verify_theorem(args.case, args.max_exponent, args.workers, args.unimodality)
    return _emit(report, args.output)


def cmd_counterexample(args):
    return _emit(harness.reproduce_counterexample(), args.output)


def cmd_verify_small_rank(args):
    return _emit(harness.verify_small_rank(args.type, args.max_exponent, args.unimodality),
                 args.output)


def cmd_scan_conjecture(args):
    seed, _ = read_seed_file(args.seedfile)
    report = harness.scan_conjecture(seed, args.max_exponent, args.limit, args.workers,
                                     args.unimodality)
    return _emit(report, args.output)


def cmd_verify_reduction(args):
    return _emit(harness.verify_reduction(), args.output)


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="clustermono", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    def unimodality(sp):
        sp.add_argument("--unimodality", choices=harness.UNIMODALITY_READINGS, default="uniform",
                        help="one peak per axis (uniform) or per fiber (fiberwise)")

    def output(sp):
        sp.add_argument("--output", "-o", help="also write the report here")

    sp = sub.add_parser("mutate", help="apply a word of mutations to a seed")
    sp.add_argument("seedfile")
    sp.add_argument("directions", nargs="+", type=int)
    sp.set_defaults(func=cmd_mutate)

    sp = sub.add_parser("enumerate", help="list the exchange graph of a seed")
    sp.add_argument("seedfile")
    sp.add_argument("--limit", type=int, default=10_000)
    sp.add_argument("--dot", help="write the graph in DOT format")
    sp.set_defaults(func=cmd_enumerate)

    sp = sub.add_parser("expand", help="expand and check one cluster monomial")
    sp.add_argument("seedfile")
    sp.add_argument("--cluster", type=int, required=True, help="cluster number from enumerate")
    sp.add_argument("--exponents", required=True, help="comma separated, e.g. 1,0,2")
    sp.add_argument("--limit", type=int, default=10_000)
    unimodality(sp)
    sp.set_defaults(func=cmd_expand)

    sp = sub.add_parser("check", help="check Laurent polynomials read from a file")
    sp.add_argument("laurentfile")
    unimodality(sp)
    sp.set_defaults(func=cmd_check)

    sp = sub.add_parser("verify-tables", help="compare a rank-3 case with its cluster table")
    sp.add_argument("case", choices=CASES)
    output(sp)
    sp.set_defaults(func=cmd_verify_tables)

    sp = sub.add_parser("verify-theorem", help="check all monomials of a rank-3 case")
    sp.add_argument("case", choices=CASES)
    sp.add_argument("--max-exponent", type=int, default=4)
    sp.add_argument("--workers", type=int, default=1)
    unimodality(sp)
    output(sp)
    sp.set_defaults(func=cmd_verify_theorem)

    sp = sub.add_parser("counterexample", help="product of log-concave factors that is not")
    output(sp)
    sp.set_defaults(func=cmd_counterexample)

    sp = sub.add_parser("verify-small-rank", help="rank 1 and 2 monomials, rank-3 variables")
    sp.add_argument("type", choices=("A1", "A2", "A3"))
    sp.add_argument("--max-exponent", type=int, default=6)
    unimodality(sp)
    output(sp)
    sp.set_defaults(func=cmd_verify_small_rank)

    sp = sub.add_parser("scan-conjecture", help="check all monomials of a seed up to a bound")
    sp.add_argument("seedfile")
    sp.add_argument("--max-exponent", type=int, default=2)
    sp.add_argument("--limit", type=int, default=10_000)
    sp.add_argument("--workers", type=int, default=1)
    unimodality(sp)
    output(sp)
    sp.set_defaults(func=cmd_scan_conjecture)

    sp = sub.add_parser("verify-reduction", help="sign and relabeling reductions in rank 3")
    output(sp)
    sp.set_defaults(func=cmd_verify_reduction)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (DomainError, StructuralError, ResourceError, DivisionError, OSError, SyntaxError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
