"""Command-line front end.

Exit codes: 0 success (or all reports pass), 1 verification failure,
2 usage or input error.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
from typing import Iterable, Sequence, TextIO

from . import constructors as con
from .constructors import ClassSpec
from .enumerate import MAX_N, connected_graphs, enumerate_class
from .errors import ZagrebError
from .g6 import decode_g6, encode_g6, iter_records
from .graph import Graph, classify_cut_edges
from .indices import ln_pi2, m1, m2, pi1, pi2
from .verify import SCHEMA, lemma_suite, verify_all

FAMILIES = {
    "cns": con.c_n_s,
    "cnp": con.c_n_p,
    "kns": con.k_n_s,
    "knp": con.k_n_p,
    "path": con.path,
    "cycle": con.cycle,
    "star": con.star,
    "complete": con.complete,
}


class UsageError(Exception):
    pass


def _emit(records: list[dict], fmt: str, out: TextIO) -> None:
    if fmt == "json":
        out.write(json.dumps({"schema": SCHEMA, "records": records}, indent=2) + "\n")
    elif fmt == "csv":
        if not records:
            return
        writer = csv.DictWriter(out, fieldnames=list(records[0]), lineterminator="\n")
        writer.writeheader()
        for r in records:
            writer.writerow({k: (" ".join(map(str, v)) if isinstance(v, list) else v) for k, v in r.items()})
    else:
        for r in records:
            out.write("  ".join(f"{k}={v}" for k, v in r.items()) + "\n")


def _graph_lines(args: argparse.Namespace) -> Iterable[str]:
    if args.input:
        with open(args.input, encoding="ascii") as fh:
            yield from fh.read().splitlines()
    elif args.graphs:
        yield from args.graphs
    else:
        yield from sys.stdin.read().splitlines()


def _index_record(g: Graph, with_ln: bool) -> dict:
    rec = {
        "g6": encode_g6(g),
        "n": g.n,
        "m": g.m,
        "M1": str(m1(g)),
        "M2": str(m2(g)),
        "PI1": str(pi1(g)),
        "PI2": str(pi2(g)),
    }
    if with_ln:
        rec["ln_PI2"] = f"{ln_pi2(g):.6f}"
    return rec


def cmd_indices(args: argparse.Namespace, out: TextIO) -> int:
    records = [_index_record(g, args.ln) for _, g in iter_records(_graph_lines(args))]
    _emit(records, args.format, out)
    return 0


def cmd_bridges(args: argparse.Namespace, out: TextIO) -> int:
    records = []
    for _, g in iter_records(_graph_lines(args)):
        rep = classify_cut_edges(g)
        records.append(
            {
                "g6": encode_g6(g),
                "bridges": [f"{a}-{b}" for a, b in rep.bridges],
                "pendent": [f"{a}-{b}" for a, b in rep.pendent],
                "internal": [f"{a}-{b}" for a, b in rep.internal],
                "blocks": [",".join(map(str, b)) for b in rep.blocks],
            }
        )
    _emit(records, args.format, out)
    return 0


def cmd_construct(args: argparse.Namespace, out: TextIO) -> int:
    fn = FAMILIES[args.family]
    if args.family in ("cns", "cnp", "kns", "knp"):
        if args.k is None:
            raise UsageError(f"family {args.family} needs --k")
        g = fn(ClassSpec(args.n, args.k))
    else:
        g = fn(args.n)
    if args.indices:
        _emit([_index_record(g, False)], args.format, out)
    else:
        out.write(encode_g6(g) + "\n")
    return 0


def cmd_enumerate(args: argparse.Namespace, out: TextIO) -> int:
    if args.k is None:
        graphs = list(connected_graphs(args.n, args.workers))
    else:
        graphs = list(enumerate_class(ClassSpec(args.n, args.k), args.workers))
    text = "".join(encode_g6(g) + "\n" for g in graphs)
    if args.output:
        with open(args.output, "w", encoding="ascii", newline="\n") as fh:
            fh.write(text)
    else:
        out.write(text)
    print(f"count {len(graphs)}", file=sys.stderr)
    return 0


def cmd_verify(args: argparse.Namespace, out: TextIO) -> int:
    summary = verify_all(args.n_max, args.workers)
    render = {"json": summary.to_json, "csv": summary.to_csv, "text": summary.to_text}[args.format]
    text = render()
    if args.output:
        with open(args.output, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    else:
        out.write(text)
    return 0 if summary.passed else 1


def cmd_lemmas(args: argparse.Namespace, out: TextIO) -> int:
    report = lemma_suite(args.seed, args.trials)
    out.write(report.to_json() if args.format == "json" else report.to_text())
    return 0 if report.passed else 1


def cmd_g6(args: argparse.Namespace, out: TextIO) -> int:
    if args.action == "encode":
        edges = []
        for token in args.items:
            a, _, b = token.partition("-")
            if not b:
                raise UsageError(f"edge {token!r} must look like u-v")
            edges.append((int(a), int(b)))
        out.write(encode_g6(Graph(args.n, edges)) + "\n")
    else:
        for item in args.items:
            g = decode_g6(item)
            out.write(json.dumps({"n": g.n, "edges": [list(e) for e in g.edges]}) + "\n")
    return 0


def _positive(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError("must be >= 1")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="multzagreb", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def graph_input(p):
        p.add_argument("graphs", nargs="*", help="graph6 records (default: read stdin)")
        p.add_argument("--input", help="graph6 file, one record per line")

    def fmt(p, default="text"):
        p.add_argument("--format", choices=("json", "csv", "text"), default=default)

    p = sub.add_parser("indices", help="M1, M2, PI1, PI2 of graph6 records")
    graph_input(p)
    fmt(p)
    p.add_argument("--ln", action="store_true", help="also print ln(PI2)")
    p.set_defaults(func=cmd_indices)

    p = sub.add_parser("bridges", help="cut edges and blocks of graph6 records")
    graph_input(p)
    fmt(p)
    p.set_defaults(func=cmd_bridges)

    p = sub.add_parser("construct", help="build a named graph")
    p.add_argument("family", choices=sorted(FAMILIES))
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int)
    p.add_argument("--indices", action="store_true", help="print indices instead of graph6")
    fmt(p)
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("enumerate", help="connected graphs (optionally with k bridges) as graph6")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int)
    p.add_argument("--workers", type=_positive, default=1)
    p.add_argument("--output")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("verify", help="exhaustively verify the four extremal theorems")
    p.add_argument("--n-max", type=int, default=MAX_N)
    p.add_argument("--workers", type=_positive, default=1)
    p.add_argument("--output")
    fmt(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("lemmas", help="run the transform direction suites")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--trials", type=_positive, default=200)
    fmt(p)
    p.set_defaults(func=cmd_lemmas)

    p = sub.add_parser("g6", help="encode or decode graph6")
    g6 = p.add_subparsers(dest="action", required=True)
    q = g6.add_parser("encode", help="edges u-v to a graph6 record")
    q.add_argument("--n", type=int, required=True)
    q.add_argument("items", nargs="*", metavar="EDGE")
    q.set_defaults(func=cmd_g6)
    q = g6.add_parser("decode", help="graph6 records to JSON edge lists")
    q.add_argument("items", nargs="+", metavar="RECORD")
    q.set_defaults(func=cmd_g6)
    return parser


def main(argv: Sequence[str] | None = None, out: TextIO | None = None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code else 0
    try:
        return args.func(args, out)
    except (ZagrebError, UsageError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
