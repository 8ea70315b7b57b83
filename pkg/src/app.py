"""Command-line frontend for the Circulant Symmetry Toolkit"""

import argparse
import logging
import sys
from typing import List, Optional

import config
from analytics.analyzer import SymmetryAnalyzer
from analytics.catalog import compare_with_golden, run_job
from analytics.corpus import verify_corpus
from core.autgroup import (AutomorphismOracle, enumerate_automorphisms, is_arc_transitive, is_vertex_transitive,
                           structural_order)
from core.circulant import GraphSource, parse_spec, resolve
from core.errors import CirculantToolkitError
from core.graph import named_graph
from core.twins import quotient_sequence
from export.export_engine import ExportEngine
from utils.helpers import setup_logging

EXIT_OK = 0
EXIT_MISMATCH = 1
EXIT_ERROR = 2

logger = logging.getLogger(__name__)


def _add_graph_arguments(parser: argparse.ArgumentParser):
    parser.add_argument("n", nargs="?", type=int, help="order of the circulant")
    parser.add_argument("tokens", nargs="*", help="connection set, e.g. ±1,±3,4 (pm1 and +-1 also accepted)")
    parser.add_argument("--graph", help="named graph: q3, icosahedron, envelope, petersen, crown:K, k:N, cycle:N")


def _add_output_arguments(parser: argparse.ArgumentParser):
    parser.add_argument("--json", action="store_true", help="emit JSON instead of a text summary")
    parser.add_argument("--out", help="write output to this file instead of stdout")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="circulant-toolkit",
        description=config.APP_DESCRIPTION,
        formatter_class=argparse.ArgumentDefaultsHelpFormatter,
    )
    parser.add_argument("--log-level", default=None, help="DEBUG, INFO, WARNING or ERROR")
    parser.add_argument("--version", action="version", version=f"%(prog)s {config.APP_VERSION}")
    commands = parser.add_subparsers(dest="command", required=True)

    analyze = commands.add_parser("analyze", help="full twin, co-twin, group and symmetry report")
    _add_graph_arguments(analyze)
    _add_output_arguments(analyze)
    analyze.add_argument("--verify", action="store_true", help="cross-check every claim with the oracle")
    analyze.add_argument("--mode", choices=config.SYMMETRY_CONFIG["available_modes"],
                         default=config.SYMMETRY_CONFIG["default_mode"], help="det/dist computation mode")
    analyze.add_argument("--dot", metavar="DIR", help="write the quotient chain as DOT files")

    chain = commands.add_parser("quotient-seq", help="iterated twin quotients")
    _add_graph_arguments(chain)
    _add_output_arguments(chain)
    chain.add_argument("--dot", metavar="DIR", help="write one DOT file per step")

    cotwin = commands.add_parser("cotwin", help="co-twin pairing and crown recognition")
    _add_graph_arguments(cotwin)
    _add_output_arguments(cotwin)

    autgroup = commands.add_parser("autgroup", help="automorphism group order, structure and orbits")
    _add_graph_arguments(autgroup)
    _add_output_arguments(autgroup)
    autgroup.add_argument("--limit", type=int, default=None,
                          help="list every automorphism when the group is at most this large")

    catalog = commands.add_parser("catalog", help="table reproductions and enumerations")
    catalog.add_argument("job", choices=config.CATALOG_CONFIG["jobs"])
    catalog.add_argument("--max-n", type=int, default=config.CATALOG_CONFIG["default_max_n"])
    catalog.add_argument("--format", choices=["csv", "json"], default="csv")
    catalog.add_argument("--golden", action="store_true", help="compare with the golden file for this job")
    catalog.add_argument("--out", help="write output to this file instead of stdout")

    corpus = commands.add_parser("verify-corpus", help="formula versus oracle over all small circulants")
    corpus.add_argument("--max-n", type=int, default=20)
    _add_output_arguments(corpus)
    return parser


def resolve_graph(args) -> GraphSource:
    if args.graph:
        if args.n is not None:
            raise ValueError("Give either --graph or <n> <tokens>, not both")
        return named_graph(args.graph)
    if args.n is None:
        raise ValueError("A graph is required: <n> <tokens> or --graph NAME")
    return parse_spec(args.n, args.tokens)


def _emit(engine: ExportEngine, text: str, out: Optional[str]):
    if out:
        engine.save_to_file(text, out)
    else:
        sys.stdout.write(text)


def cmd_analyze(args, engine: ExportEngine) -> int:
    source = resolve_graph(args)
    analyzer = SymmetryAnalyzer(mode=args.mode, verify=args.verify)
    document = analyzer.analyze(source, label=args.graph)
    data = document.to_dict()
    _emit(engine, engine.export_json(data) if args.json else engine.export_text(data), args.out)
    if args.dot:
        engine.write_dot_files(engine.export_chain_dot(quotient_sequence(source)), args.dot)
    return EXIT_OK if document.ok else EXIT_MISMATCH


def cmd_quotient_seq(args, engine: ExportEngine) -> int:
    source = resolve_graph(args)
    chain = quotient_sequence(source)
    if args.json:
        text = engine.export_json(chain.to_dict())
    else:
        lines = [f"{step.source_spec or f'G_{step.source.order}'} --{step.kind.value}, t={step.class_size}--> "
                 f"{step.quotient_spec or f'G_{step.quotient.order}'}" for step in chain.steps]
        lines.append(f"terminal order {chain.terminal.order}, {len(chain)} step(s)")
        text = "\n".join(lines) + "\n"
    _emit(engine, text, args.out)
    if args.dot:
        engine.write_dot_files(engine.export_chain_dot(chain), args.dot)
    return EXIT_OK


def cmd_cotwin(args, engine: ExportEngine) -> int:
    source = resolve_graph(args)
    section = SymmetryAnalyzer().cotwin_section(source)
    if args.json:
        text = engine.export_json({"cotwins": section})
    else:
        text = "\n".join(f"{key}: {value}" for key, value in section.items()) + "\n"
    _emit(engine, text, args.out)
    return EXIT_OK


def cmd_autgroup(args, engine: ExportEngine) -> int:
    source = resolve_graph(args)
    graph, _ = resolve(source)
    structure = structural_order(source)
    oracle = AutomorphismOracle(graph)
    data = {
        "group": structure.to_dict(),
        "oracle_order": oracle.group_order(),
        "generators": [list(g) for g in oracle.generators],
        "vertex_orbits": [list(o) for o in oracle.vertex_orbits()],
        "vertex_transitive": is_vertex_transitive(graph),
        "arc_transitive": is_arc_transitive(graph),
    }
    if args.limit is not None:
        data["automorphisms"] = enumerate_automorphisms(graph, limit=args.limit).to_dict()["elements"]
    if args.json:
        text = engine.export_json(data)
    else:
        text = (f"|Aut| = {structure.order} = {structure.render()} [{structure.provenance}], "
                f"oracle {data['oracle_order']}\n"
                f"orbits: {len(data['vertex_orbits'])}, arc-transitive: {data['arc_transitive']}\n")
    _emit(engine, text, args.out)
    return EXIT_OK if data["oracle_order"] == structure.order else EXIT_MISMATCH


def cmd_catalog(args, engine: ExportEngine) -> int:
    frame = run_job(args.job, args.max_n)
    text = engine.export_table_csv(frame) if args.format == "csv" else engine.export_table_json(frame, args.job)
    _emit(engine, text, args.out)
    if args.golden:
        golden = config.CATALOG_CONFIG["golden_files"].get(args.job)
        if golden is None:
            raise ValueError(f"No golden file for job '{args.job}'")
        comparison = compare_with_golden(frame, golden)
        if not comparison["match"]:
            logger.error(f"{args.job} differs from {golden}: {len(comparison['extra'])} extra, "
                         f"{len(comparison['missing'])} missing rows")
            return EXIT_MISMATCH
        logger.info(f"{args.job} matches {golden}")
    return EXIT_OK


def cmd_verify_corpus(args, engine: ExportEngine) -> int:
    summary = verify_corpus(args.max_n)
    if args.json:
        text = engine.export_json(summary.to_dict())
    else:
        text = engine.export_table_csv(summary.frame())
        text += f"graphs: {summary.graphs}, failures: {len(summary.failures)}\n"
        text += "".join(f"FAIL {f.graph_spec} {f.check}: {f.detail}\n" for f in summary.failures)
    _emit(engine, text, args.out)
    return EXIT_OK if summary.ok else EXIT_MISMATCH


COMMANDS = {
    "analyze": cmd_analyze,
    "quotient-seq": cmd_quotient_seq,
    "cotwin": cmd_cotwin,
    "autgroup": cmd_autgroup,
    "catalog": cmd_catalog,
    "verify-corpus": cmd_verify_corpus,
}


def main(argv: Optional[List[str]] = None) -> int:
    """Parse arguments, run one command and return its exit code"""
    args = build_parser().parse_args(argv)
    setup_logging(args.log_level.upper() if args.log_level else None)
    errors = config.validate_config()
    if errors:
        for error in errors:
            logger.error(f"Configuration error: {error}")
        return EXIT_ERROR

    engine = ExportEngine()
    try:
        return COMMANDS[args.command](args, engine)
    except (CirculantToolkitError, ValueError) as e:
        logger.error(f"{args.command} failed: {e}")
        sys.stdout.write(engine.export_error(e))
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
