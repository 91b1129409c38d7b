"""
trikit command line

    trikit check-rep ORDERS          validate orders, report the fan facts of a1
    trikit sigma2 ORDERS             graph of a representation
    trikit sigma3 ORDERS             triple system of a representation
    trikit realize GRAPH             representation of a triangulation
    trikit embed ORDERS              rotation system and faces of sigma2(R)
    trikit roundtrip GRAPH           realize, then compare sigma2 with the input
    trikit oracle search GRAPH       exhaustive search for small graphs
    trikit oracle gen --n N          random stacked triangulations

Exit codes: 0 success, 1 validation or property failure (witness on stderr),
2 parse or usage error.
"""

import argparse
import logging
import sys
from pathlib import Path
from typing import Callable, Dict, List, Optional

from trikit.construct.embedder import embed
from trikit.construct.realizer import realize
from trikit.core.config import (
    TrikitConfig,
    _config_to_dict,
    _validate_and_convert_config,
    get_version,
    load_trikit_config,
)
from trikit.core.constants import ExitCode, OutputFormat
from trikit.core.errors import FormatError, ReportedError, TrikitError
from trikit.core.pipeline import check_representation, load_triangulation, roundtrip
from trikit.core.schema import StandardRepresentation
from trikit.formats.documents import (
    FanReportDocument,
    GraphDocument,
    OrdersDocument,
    PartDocument,
    RoundtripDocument,
    TriplesDocument,
)
from trikit.formats.dot import emit_dot
from trikit.formats.text import emit_graph, emit_orders, emit_triangulation, emit_triples, parse_graph, parse_orders
from trikit.oracle.generator import generate_corpus
from trikit.oracle.search import search_representation
from trikit.planar.triangulation import faces
from trikit.representation.fans import PART_TITLES
from trikit.representation.orders import require_representation
from trikit.representation.sigma import sigma2, sigma3


logger = logging.getLogger(__name__)


class UsageError(TrikitError):
    """Flag combination the command cannot honour."""


def _read(path: str) -> str:
    try:
        return Path(path).read_text(encoding="utf-8")
    except OSError as e:
        raise FormatError(f"cannot read {path}: {e.strerror}")


def _load_representation(path: str) -> StandardRepresentation:
    return require_representation(parse_orders(_read(path)))


def _render_orders(rep: StandardRepresentation, fmt: str) -> str:
    if fmt == OutputFormat.JSON:
        return OrdersDocument.from_representation(rep).model_dump_json(indent=2) + "\n"
    if fmt == OutputFormat.DOT:
        raise UsageError("orders have no DOT rendering")
    return emit_orders(rep)


# === COMMANDS === #

def cmd_check_rep(args: argparse.Namespace, config: TrikitConfig) -> int:
    check = check_representation(parse_orders(_read(args.file)))
    fmt = config.output.format

    if fmt == OutputFormat.JSON:
        doc = FanReportDocument(valid=check.report is None)
        if check.report is not None:
            doc.message = check.report.message
            doc.witness = [str(x) for x in check.report.witness]
        else:
            doc.fan = list(check.fan.fan)
            doc.b = check.fan.b
            doc.parts = {
                k: PartDocument(title=PART_TITLES[k], holds=p.holds, vacuous=p.vacuous,
                                witness=[str(x) for x in p.witness])
                for k, p in check.fan.parts.items()
            }
            doc.commutes = check.commutation.equal if check.commutation is not None else None
        sys.stdout.write(doc.model_dump_json(indent=2) + "\n")
    elif fmt == OutputFormat.DOT:
        raise UsageError("check-rep has no DOT rendering")

    if check.report is not None:
        print(check.report.message, file=sys.stderr)
        return ExitCode.FAILURE

    if fmt == OutputFormat.TEXT:
        lines = [
            f"standard representation, apexes {' '.join(check.rep.apexes)}",
            f"fan of {check.rep.apexes[0]}: {' '.join(check.fan.fan)}",
            f"b = {check.fan.b}",
        ]
        for k in sorted(check.fan.parts):
            part = check.fan.parts[k]
            if not part.holds:
                verdict = f"FAILS, witness ({', '.join(map(str, part.witness))})"
            else:
                verdict = "holds (vacuous)" if part.vacuous else "holds"
            lines.append(f"part {k} ({PART_TITLES[k]}): {verdict}")
        if check.commutation is not None:
            if check.commutation.equal:
                lines.append(f"suppressing {check.commutation.b} commutes with contracting it into a1")
            else:
                lines.append(f"suppressing {check.commutation.b} does NOT commute with contraction")
        sys.stdout.write("\n".join(lines) + "\n")

    if not check.holds:
        failed = check.fan.failed_parts()
        if failed:
            witness = check.fan.parts[failed[0]].witness
            print(f"part {failed[0]} fails, witness ({', '.join(map(str, witness))})", file=sys.stderr)
        else:
            print("suppression and contraction disagree", file=sys.stderr)
        return ExitCode.FAILURE
    return ExitCode.OK


def cmd_sigma2(args: argparse.Namespace, config: TrikitConfig) -> int:
    rep = _load_representation(args.file)
    graph = sigma2(rep)
    fmt = config.output.format
    if fmt == OutputFormat.JSON:
        out = GraphDocument.from_graph(graph, rep.apexes).model_dump_json(indent=2) + "\n"
    elif fmt == OutputFormat.DOT:
        out = emit_dot(graph, rep.apexes)
    else:
        out = emit_graph(graph, rep.apexes)
    sys.stdout.write(out)
    return ExitCode.OK


def cmd_sigma3(args: argparse.Namespace, config: TrikitConfig) -> int:
    rep = _load_representation(args.file)
    triples = sigma3(rep)
    fmt = config.output.format
    if fmt == OutputFormat.JSON:
        out = TriplesDocument.from_triples(triples).model_dump_json(indent=2) + "\n"
    elif fmt == OutputFormat.DOT:
        raise UsageError("sigma3 has no DOT rendering")
    else:
        out = emit_triples(triples)
    sys.stdout.write(out)
    return ExitCode.OK


def cmd_realize(args: argparse.Namespace, config: TrikitConfig) -> int:
    tri = load_triangulation(parse_graph(_read(args.file)))
    rep = realize(tri, verify=config.verify)
    sys.stdout.write(_render_orders(rep, config.output.format))
    return ExitCode.OK


def cmd_embed(args: argparse.Namespace, config: TrikitConfig) -> int:
    rep = _load_representation(args.file)
    tri = embed(rep, verify=config.verify)
    face_set = faces(tri)
    fmt = config.output.format
    if fmt == OutputFormat.JSON:
        out = GraphDocument.from_triangulation(tri, face_set).model_dump_json(indent=2) + "\n"
    elif fmt == OutputFormat.DOT:
        out = emit_dot(tri.graph, tri.outer)
    else:
        out = emit_triangulation(tri, face_set)
    sys.stdout.write(out)
    return ExitCode.OK


def cmd_roundtrip(args: argparse.Namespace, config: TrikitConfig) -> int:
    tri = load_triangulation(parse_graph(_read(args.file)))
    result = roundtrip(tri, verify=config.verify)
    fmt = config.output.format
    if fmt == OutputFormat.JSON:
        doc = RoundtripDocument(
            equal=result.equal,
            edges=result.edges,
            missing=result.missing,
            extra=result.extra,
            orders=result.rep.as_lists(),
        )
        sys.stdout.write(doc.model_dump_json(indent=2) + "\n")
    elif fmt == OutputFormat.DOT:
        raise UsageError("roundtrip has no DOT rendering")
    else:
        sys.stdout.write(result.summary() + "\n")

    if not result.equal:
        edge = (result.missing or result.extra)[0]
        print(f"graphs differ, witness edge ({edge[0]}, {edge[1]})", file=sys.stderr)
        return ExitCode.FAILURE
    return ExitCode.OK


def cmd_oracle_search(args: argparse.Namespace, config: TrikitConfig) -> int:
    graph_file = parse_graph(_read(args.file))
    if graph_file.outer is None:
        raise FormatError("graph file has no outer line")
    rep = search_representation(
        graph_file.graph, graph_file.outer, cap=config.search.cap, workers=config.search.workers
    )
    if rep is None:
        print("no standard representation with these apexes", file=sys.stderr)
        return ExitCode.FAILURE
    sys.stdout.write(_render_orders(rep, config.output.format))
    return ExitCode.OK


def cmd_oracle_gen(args: argparse.Namespace, config: TrikitConfig) -> int:
    fmt = config.output.format
    if fmt == OutputFormat.DOT:
        raise UsageError("oracle gen writes graph files, not DOT")
    if args.n < 4:
        raise UsageError(f"--n must be at least 4, got {args.n}")
    seed, count = config.corpus.seed, config.corpus.count
    # file k of a batch is the same graph whatever --count is
    corpus = generate_corpus([args.n] * count, seed=seed)

    rendered = []
    for tri in corpus:
        if fmt == OutputFormat.JSON:
            rendered.append(GraphDocument.from_triangulation(tri).model_dump_json(indent=2) + "\n")
        else:
            rendered.append(emit_triangulation(tri))

    if args.out is None:
        sys.stdout.write("".join(rendered))
        return ExitCode.OK

    out_dir = Path(args.out)
    out_dir.mkdir(parents=True, exist_ok=True)
    suffix = ".json" if fmt == OutputFormat.JSON else ".txt"
    for k, text in enumerate(rendered):
        path = out_dir / f"stacked_n{args.n}_s{seed}_{k:03d}{suffix}"
        path.write_text(text, encoding="utf-8")
        logger.info(f"Wrote {path}")
    return ExitCode.OK


# === PARSER === #

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="trikit", description="Standard representations and planar triangulations")
    parser.add_argument("--version", action="version", version=f"trikit {get_version()}")
    parser.add_argument("--format", choices=OutputFormat.get_all_formats(), default=None,
                        help="output format (default: text, or the config file's)")
    parser.add_argument("--verbose", action="store_true", help="debug logging on stderr")
    parser.add_argument("--config", default=None, help="path to a trikit.config.json")

    sub = parser.add_subparsers(dest="command", required=True)

    def with_file(name: str, help_text: str, func: Callable) -> argparse.ArgumentParser:
        p = sub.add_parser(name, help=help_text)
        p.add_argument("file")
        p.set_defaults(func=func)
        return p

    with_file("check-rep", "validate an orders file and report the fan facts", cmd_check_rep)
    with_file("sigma2", "graph of a representation", cmd_sigma2)
    with_file("sigma3", "triple system of a representation", cmd_sigma3)
    for name, help_text, func in (
        ("realize", "standard representation of a triangulation", cmd_realize),
        ("embed", "planar embedding of a representation", cmd_embed),
        ("roundtrip", "realize a triangulation and compare sigma2 with it", cmd_roundtrip),
    ):
        p = with_file(name, help_text, func)
        p.add_argument("--verify", action="store_true", default=None, help="run the post-condition checks")

    oracle = sub.add_parser("oracle", help="brute-force search and corpus generation")
    oracle_sub = oracle.add_subparsers(dest="oracle_command", required=True)

    search = oracle_sub.add_parser("search", help="exhaustive representation search")
    search.add_argument("file")
    search.add_argument("--cap", type=int, default=None, help="largest vertex count searched")
    search.add_argument("--workers", type=int, default=None, help="worker processes")
    search.set_defaults(func=cmd_oracle_search)

    gen = oracle_sub.add_parser("gen", help="random stacked triangulations")
    gen.add_argument("--n", type=int, required=True, help="number of vertices (>= 4)")
    gen.add_argument("--seed", type=int, default=None)
    gen.add_argument("--count", type=int, default=None)
    gen.add_argument("--out", default=None, help="directory for the graph files (default: stdout)")
    gen.set_defaults(func=cmd_oracle_gen)

    return parser


def _apply_overrides(config: TrikitConfig, args: argparse.Namespace) -> TrikitConfig:
    """Command-line flags win over the config file."""
    overrides: Dict[str, Optional[object]] = vars(args)
    if overrides.get("format") is not None:
        config.output.format = overrides["format"]
    if overrides.get("verify") is not None:
        config.verify = overrides["verify"]
    if overrides.get("cap") is not None:
        config.search.cap = overrides["cap"]
    if overrides.get("workers") is not None:
        config.search.workers = overrides["workers"]
    if overrides.get("seed") is not None:
        config.corpus.seed = overrides["seed"]
    if overrides.get("count") is not None:
        config.corpus.count = overrides["count"]
    return _validate_and_convert_config(_config_to_dict(config))


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code) if e.code is not None else ExitCode.OK

    if args.verbose:
        logging.basicConfig(level=logging.DEBUG, format='%(levelname)s: %(message)s')

    try:
        config = _apply_overrides(load_trikit_config(config_path=args.config), args)
    except ValueError as e:
        print(f"trikit: {e}", file=sys.stderr)
        return ExitCode.USAGE

    try:
        return args.func(args, config)
    except (FormatError, UsageError) as e:
        print(f"trikit: {e}", file=sys.stderr)
        return ExitCode.USAGE
    except ReportedError as e:
        print(str(e), file=sys.stderr)
        if e.witness:
            print(f"witness: ({', '.join(map(str, e.witness))})", file=sys.stderr)
        return ExitCode.FAILURE
    except TrikitError as e:
        print(f"trikit: {e}", file=sys.stderr)
        return ExitCode.FAILURE


if __name__ == "__main__":
    sys.exit(main())
