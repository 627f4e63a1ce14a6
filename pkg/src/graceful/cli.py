"""Command line: build-label, verify, search, corpus, export-dot.

Exit status: 0 success / GRACEFUL, 1 verification FAIL, 2 usage or parse error.
"""
from __future__ import annotations

import argparse
import logging
import sys

from .atlas import AlphaBaseError
from .constructions import ConstructionSpec, Family
from .corpus import run_corpus, summary_table
from .graph import GraphError
from .io import (
    DocumentError,
    document_from_report,
    export_dot,
    parse_base,
    parse_graph,
    read_document,
    serialize,
    verify_document,
)
from .labelers import LabelingError, label
from .oracle import SearchBudget, Status, find_alpha, find_graceful

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


def _emit(text: str, out: str | None) -> None:
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def cmd_build_label(args) -> int:
    try:
        family = Family(args.family.upper())
        spec = ConstructionSpec(family, t=args.t, n=args.n)
        base = parse_base(args.base)
    except (ValueError, GraphError) as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    try:
        report = label(base, spec)
    except LabelingError as exc:
        print(f"labeling failed verification:\n{exc}", file=sys.stderr)
        return EXIT_FAIL
    except GraphError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    doc = document_from_report(report, args.base)
    _emit(serialize(doc), args.out)
    print(report.certificate.summary(), file=sys.stderr)
    return EXIT_OK if report.certificate.ok else EXIT_FAIL


def cmd_verify(args) -> int:
    try:
        doc = read_document(args.document)
        cert = verify_document(doc)
    except (OSError, DocumentError) as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    print(cert.report())
    return EXIT_OK if cert.ok else EXIT_FAIL


def cmd_search(args) -> int:
    try:
        g = parse_graph(args.graph)
        budget = SearchBudget(args.budget_nodes, args.budget_seconds)
    except (GraphError, ValueError) as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    out = (find_alpha if args.alpha else find_graceful)(g, budget)
    print(f"status {out.status.value}")
    print(f"nodes {out.nodes_expanded}")
    if out.status is Status.FOUND:
        if out.boundary is not None:
            print(f"boundary {out.boundary}")
        for v in g.vertices:
            print(f"v {v} {out.labeling[v]}")
    return EXIT_OK


def cmd_corpus(args) -> int:
    rows = run_corpus(args.out)
    sys.stdout.write(summary_table(rows))
    failed = [r for r in rows if r.verdict == "FAIL"]
    for r in failed:
        print(f"FAIL {r.entry.slug} {r.error}", file=sys.stderr)
    return EXIT_FAIL if failed else EXIT_OK


def cmd_export_dot(args) -> int:
    try:
        doc = read_document(args.document)
    except (OSError, DocumentError) as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    _emit(export_dot(doc), args.out)
    return EXIT_OK


def make_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="graceful", description=__doc__.splitlines()[0])
    p.add_argument("-v", "--verbose", action="store_true")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    b = sub.add_parser("build-label", help="build a compound graph and label it")
    b.add_argument("--family", required=True,
                   help="|".join(f.value for f in Family))
    b.add_argument("--base", required=True,
                   help="path:N, cycle:N, kmn:M,N, grid:M,N or g6:CODE:labels=...:low=...")
    b.add_argument("--t", type=int)
    b.add_argument("--n", type=int)
    b.add_argument("--out")
    b.set_defaults(func=cmd_build_label)

    v = sub.add_parser("verify", help="re-verify a labeled graph document")
    v.add_argument("document")
    v.set_defaults(func=cmd_verify)

    s = sub.add_parser("search", help="exhaustive search for a graceful labeling")
    s.add_argument("graph", help="path:N, cycle:N, kmn:M,N, grid:M,N, complete:N, g6:CODE, "
                                 "edges:0-1,1-2,... or an edge-list file")
    s.add_argument("--alpha", action="store_true", help="require an alpha labeling")
    s.add_argument("--budget-nodes", type=int, default=1_000_000)
    s.add_argument("--budget-seconds", type=float, default=60.0)
    s.set_defaults(func=cmd_search)

    c = sub.add_parser("corpus", help="generate and verify the default instance grid")
    c.add_argument("--out", required=True)
    c.set_defaults(func=cmd_corpus)

    d = sub.add_parser("export-dot", help="render a document as Graphviz DOT")
    d.add_argument("document")
    d.add_argument("--out")
    d.set_defaults(func=cmd_export_dot)
    return p


def main(argv: list[str] | None = None) -> int:
    args = make_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
