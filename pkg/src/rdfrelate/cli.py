"""``rdf-relate``: classify relations between N-Triples files.

Each input file is one graph whose id is the file stem; ``NAME=PATH`` sets
the id explicitly. Exit status is 0 on success, 1 when an input cannot be
read or parsed, 2 on usage errors.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .graph import build_graph
from .network import DuplicateGraphId, build_network, export_dot, export_json, export_tsv
from .ntriples import ParseError, TripleSet, parse_document
from .relationship import ClassificationMode, CyclicBlankNodeError
from .schema import InferenceConfig, IterationLimitExceeded

EXPORTERS = {"json": export_json, "dot": export_dot, "tsv": export_tsv}


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(2)


def make_parser() -> argparse.ArgumentParser:
    p = _Parser(
        prog="rdf-relate",
        description="Classify set-theoretic relationships between RDF graphs.",
    )
    p.add_argument("inputs", nargs="+", metavar="[NAME=]PATH", help="N-Triples file, one graph per file")
    p.add_argument("--mode", choices=["lenient", "strict"], default="lenient")
    p.add_argument("--infer", action="store_true", help="add RDFS-induced relations")
    p.add_argument("--schema", metavar="PATH", help="extra schema triples for inference")
    p.add_argument("--enable-domain", action="store_true", help="also apply the rdfs:domain rule")
    p.add_argument("--strict-ntriples", action="store_true", help="reject literal predicates")
    p.add_argument("--format", choices=sorted(EXPORTERS), default="json")
    p.add_argument("--out", metavar="PATH", help="write here instead of standard output")
    return p


def _split_input(spec: str) -> tuple[str, Path]:
    name, sep, path = spec.partition("=")
    if sep and name and path:
        return name, Path(path)
    return Path(spec).stem, Path(spec)


def _read(path: Path, doc_id: str, allow_literal_predicates: bool) -> TripleSet:
    with open(path, encoding="utf-8") as fh:
        return parse_document(fh, doc_id, allow_literal_predicates=allow_literal_predicates, source=str(path))


def run(argv=None) -> int:
    try:
        args = make_parser().parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2

    allow_literal_predicates = not args.strict_ntriples
    try:
        graphs = [
            build_graph(_read(path, name, allow_literal_predicates))
            for name, path in map(_split_input, args.inputs)
        ]
        infer = None
        if args.infer or args.schema:
            extra = _read(Path(args.schema), "schema", allow_literal_predicates) if args.schema else None
            infer = InferenceConfig(enable_domain=args.enable_domain, extra_schema=extra)
        net = build_network(graphs, ClassificationMode(args.mode), infer)
    except ParseError as exc:
        print(f"rdf-relate: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"rdf-relate: {exc.filename}: {exc.strerror}", file=sys.stderr)
        return 1
    except DuplicateGraphId as exc:
        print(f"rdf-relate: error: {exc}", file=sys.stderr)
        return 2
    except (CyclicBlankNodeError, IterationLimitExceeded) as exc:
        print(f"rdf-relate: {exc}", file=sys.stderr)
        return 1

    text = EXPORTERS[args.format](net)
    if args.out:
        with open(args.out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
