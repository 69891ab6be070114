"""Command-line front end: validate, classify, relate-all, mine, match.

Exit codes: 0 success, 1 usage error, 2 parse error, 3 total conflict or
frame too large, 4 store corruption.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import os
import sys
from fractions import Fraction

from . import belief, graphmodel, ntriples, patterns, relate

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_PARSE = 2
EXIT_BELIEF = 3
EXIT_STORE = 4

DEFAULT_SKOLEM_BASE = "http://skolem.invalid/"


class _UsageError(Exception):
    pass


class _CliParser(argparse.ArgumentParser):
    # argparse exits with 2 on bad usage; this tool reserves 2 for parse
    # errors.
    def error(self, message):
        raise _UsageError(message)


def _build_parser() -> argparse.ArgumentParser:
    parser = _CliParser(prog="rdflink", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", help="parse an N-Triples file and report errors")
    p.add_argument("file")

    p = sub.add_parser("classify", help="classify the relationship between two graphs")
    p.add_argument("file_a")
    p.add_argument("file_b")
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("relate-all", help="emit the pairwise link graph of a corpus")
    p.add_argument("files", nargs="+")
    p.add_argument("--out", required=True)
    p.add_argument("--format", choices=("json", "dot"), default="json")

    p = sub.add_parser("mine", help="run one mining session against a persisted store")
    p.add_argument("--store", required=True)
    p.add_argument("--add", required=True, metavar="FILE")

    p = sub.add_parser("match", help="belief-based match verdict for two graphs")
    p.add_argument("file_a")
    p.add_argument("file_b")
    p.add_argument("--threshold", type=float, default=0.5)
    p.add_argument("--scores", metavar="JSON")

    return parser


def _load_graph(path: str):
    """Parse and skolemize one document; blank-node labels get a scheme
    derived from the file content so repeated runs are reproducible and
    distinct documents never share skolem IRIs."""
    try:
        with open(path, "rb") as fh:
            raw = fh.read()
    except OSError as e:
        raise _UsageError(f"cannot read {path}: {e}")
    try:
        text = raw.decode("utf-8")
    except UnicodeDecodeError as e:
        print(f"{path}: not valid UTF-8: {e}", file=sys.stderr)
        raise SystemExit(EXIT_PARSE)
    g, errors = ntriples.scan_document(text)
    if errors:
        for err in errors:
            print(f"{path}: {err}", file=sys.stderr)
        raise SystemExit(EXIT_PARSE)
    digest = hashlib.sha256(raw).hexdigest()[:12]
    return graphmodel.reify_blank_nodes(g, f"{DEFAULT_SKOLEM_BASE}{digest}/")


def _report_to_dict(report: relate.RelationReport, table: graphmodel.SymbolTable) -> dict:
    return {
        "kind": report.kind.value,
        "witnesses": [
            {
                "components": w.components,
                "terms": sorted(ntriples.render_term(table.term_of(s)) for s in w.symbols),
            }
            for w in report.witnesses
        ],
        "violated": list(report.violated),
    }


def _cmd_validate(args) -> int:
    try:
        with open(args.file, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as e:
        raise _UsageError(f"cannot read {args.file}: {e}")
    except UnicodeDecodeError as e:
        print(f"{args.file}: not valid UTF-8: {e}", file=sys.stderr)
        return EXIT_PARSE
    g, errors = ntriples.scan_document(text)
    if errors:
        for err in errors:
            print(f"{args.file}: {err}", file=sys.stderr)
        return EXIT_PARSE
    print(f"{len(g)} triples")
    return EXIT_OK


def _cmd_classify(args) -> int:
    g1 = _load_graph(args.file_a)
    g2 = _load_graph(args.file_b)
    table = graphmodel.SymbolTable()
    report = relate.classify_pair(
        relate.component_sets(g1, table), relate.component_sets(g2, table), g1, g2
    )
    if args.json:
        print(json.dumps(_report_to_dict(report, table), indent=2))
    else:
        print(report.kind.value)
        for w in report.witnesses:
            terms = ", ".join(sorted(ntriples.render_term(table.term_of(s)) for s in w.symbols))
            print(f"  {w.components}: {terms}")
        if report.violated:
            print(f"  violated: {', '.join(report.violated)}")
    return EXIT_OK


def _dot_escape(name: str) -> str:
    return name.replace("\\", "\\\\").replace('"', '\\"')


def _linkgraph_dot(lg: relate.LinkGraph) -> str:
    lines = ["digraph relations {"]
    for node in lg.nodes:
        lines.append(f'  "{_dot_escape(node)}";')
    for edge in lg.edges:
        lines.append(
            f'  "{_dot_escape(edge.source)}" -> "{_dot_escape(edge.target)}" '
            f'[label="{edge.report.kind.value}" weight={edge.score}];'
        )
    lines.append("}")
    return "\n".join(lines) + "\n"


def _linkgraph_json(lg: relate.LinkGraph) -> str:
    payload = {
        "nodes": list(lg.nodes),
        "edges": [
            {"from": e.source, "to": e.target, "kind": e.report.kind.value, "score": e.score}
            for e in lg.edges
        ],
    }
    return json.dumps(payload, indent=2) + "\n"


def _cmd_relate_all(args) -> int:
    names = [os.path.basename(path) for path in args.files]
    if len(set(names)) != len(names):
        raise _UsageError("input file basenames must be distinct")
    table = graphmodel.SymbolTable()
    graphs = [(os.path.basename(path), _load_graph(path)) for path in sorted(args.files)]
    lg = relate.relate_all(graphs, table)
    text = _linkgraph_dot(lg) if args.format == "dot" else _linkgraph_json(lg)
    with open(args.out, "w", encoding="utf-8") as fh:
        fh.write(text)
    print(f"{len(lg.nodes)} graphs, {len(lg.edges)} relations -> {args.out}")
    return EXIT_OK


def _cmd_mine(args) -> int:
    if os.path.exists(args.store):
        store, state = patterns.load_store(args.store)
    else:
        store, state = patterns.SequenceStore.empty(), None
    g = _load_graph(args.add)
    try:
        result = patterns.run_session(store, state, g, source=os.path.basename(args.add))
    except patterns.EmptySequenceError:
        raise _UsageError(f"{args.add} holds no triples; nothing to mine")
    patterns.save_store(result.store, result.state, args.store)
    lam = Fraction(*result.state.lam)
    for p in result.patterns.patterns:
        print(f"pattern: {' '.join(map(str, p.symbols))} (r={p.count})")
    print(
        f"K1={result.state.k1} K2={result.state.k2} "
        f"lambda={lam.numerator}/{lam.denominator}"
    )
    return EXIT_OK


def _cmd_match(args) -> int:
    if not 0.0 < args.threshold <= 1.0:
        raise _UsageError("--threshold must be in (0, 1]")
    scoring = relate.ScoringConfig()
    if args.scores:
        try:
            scoring = relate.ScoringConfig.from_file(args.scores)
        except (OSError, ValueError) as e:
            raise _UsageError(f"bad scoring config: {e}")
    g1 = _load_graph(args.file_a)
    g2 = _load_graph(args.file_b)
    table = graphmodel.SymbolTable()
    result = belief.match_graphs(g1, g2, table, scoring, args.threshold)
    print(
        json.dumps(
            {
                "belief": result.belief,
                "threshold": result.threshold,
                "established": result.established,
                "conflictK": result.conflict,
            },
            indent=2,
        )
    )
    return EXIT_OK


_COMMANDS = {
    "validate": _cmd_validate,
    "classify": _cmd_classify,
    "relate-all": _cmd_relate_all,
    "mine": _cmd_mine,
    "match": _cmd_match,
}


def run(argv) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
        return _COMMANDS[args.command](args)
    except _UsageError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except SystemExit as e:
        return int(e.code) if e.code is not None else EXIT_OK
    except patterns.StoreCorruptError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_STORE
    except (belief.TotalConflictError, belief.FrameTooLargeError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_BELIEF


def main(argv=None) -> int:
    return run(sys.argv[1:] if argv is None else argv)


if __name__ == "__main__":
    sys.exit(main())
