"""
Command-line front end.

Every verb reads digraphs in the edge-list format, prints a human summary
(or JSON with ``--json``) on stdout and reports through its exit status:
0 success or yes, 1 no, 2 usage/format/domain errors, 3 capacity errors,
4 internal invariant violations.
"""

import argparse
import json
import logging
import sys
from pathlib import Path
from typing import Callable, Dict, List, Optional

from kellyminors import oracle, version
from kellyminors.decomposition import (
    KellyDecomposition,
    build_decomposition,
    validate_decomposition,
)
from kellyminors.digraph import Digraph, format_edge_list, read_edge_list, to_dot
from kellyminors.elimination import exact_kelly_width, recognize_partial_k
from kellyminors.exceptions import FormatError, KellyError
from kellyminors.extractor import STRATEGIES, extract, find_obstruction
from kellyminors.game import min_cops
from kellyminors.genlab import GenSpec, enumerate_all, write_corpus
from kellyminors.minor import WitnessScript, replay
from kellyminors.utils import JSON

logger = logging.getLogger(__name__)

YES = 0
NO = 1


def _graph_json(g: Digraph) -> Dict[str, JSON]:
    return {"vertices": list(g.vertices), "arcs": [list(arc) for arc in g.sorted_arcs]}


def _emit(args: argparse.Namespace, human: str, payload: Dict[str, JSON]):
    if args.json:
        print(json.dumps(payload, sort_keys=True))
    else:
        print(human)


def _write_dot(args: argparse.Namespace, g: Digraph):
    if not args.dot:
        return
    try:
        Path(args.dot).write_text(to_dot(g), encoding="utf-8")
    except OSError as exc:
        raise FormatError("Cannot write DOT output", exc) from exc


def _read_text(path: str) -> str:
    try:
        return Path(path).read_text(encoding="utf-8")
    except (OSError, UnicodeDecodeError) as exc:
        raise FormatError(f"Cannot read {path}", exc) from exc


def _width(args: argparse.Namespace) -> int:
    g = read_edge_list(args.file)
    result = exact_kelly_width(g)
    _write_dot(args, g)
    order = " ".join(map(str, result.ordering.order))
    _emit(
        args,
        f"kelly-width: {result.width}\nordering: {order}",
        {"kelly_width": result.width, "ordering": list(result.ordering.order)},
    )
    return YES


def _recognize(args: argparse.Namespace) -> int:
    g = read_edge_list(args.file)
    verdict = recognize_partial_k(g, args.k)
    if verdict.accepted:
        _write_dot(args, g)
        order = list(verdict.ordering.order)
        _emit(
            args,
            f"partial {args.k}-DAG: yes\nordering: {' '.join(map(str, order))}",
            {"k": args.k, "verdict": "yes", "ordering": order},
        )
        return YES

    core = verdict.residual.core
    _write_dot(args, core)
    _emit(
        args,
        f"partial {args.k}-DAG: no\nresidual core:\n{format_edge_list(core).rstrip()}",
        {"k": args.k, "verdict": "no", "residual_core": _graph_json(core)},
    )
    return NO


def _script_result(args: argparse.Namespace, heading: str, script: Optional[WitnessScript]) -> int:
    if script is None:
        _emit(args, f"{heading}: no", {"verdict": "no"})
        return NO
    _emit(
        args,
        f"{heading}: yes ({script.target}, {len(script)} steps)\n{script.dumps()}",
        {"verdict": "yes", "script": script.to_json()},
    )
    return YES


def _minor(args: argparse.Namespace) -> int:
    g = read_edge_list(args.file)
    _write_dot(args, g)
    if args.pattern:
        h, name = read_edge_list(args.pattern), "pattern"
    else:
        h, name = oracle.get_target(args.target), args.target
    verdict = oracle.contains_minor(g, h, target=name)
    return _script_result(args, f"{name} minor", verdict.script)


def _obstruct(args: argparse.Namespace) -> int:
    g = read_edge_list(args.file)
    _write_dot(args, g)
    script = find_obstruction(g, args.strategy)
    if script is None:
        _emit(
            args,
            "partial 1-DAG: yes; no obstruction",
            {"partial_1dag": True, "obstruction": None},
        )
        return YES
    _emit(
        args,
        f"partial 1-DAG: no; obstruction {script.target.upper()}\n{script.dumps()}",
        {"partial_1dag": False, "obstruction": script.target, "script": script.to_json()},
    )
    return NO


def _extract(args: argparse.Namespace) -> int:
    g = read_edge_list(args.file)
    _write_dot(args, g)
    script = extract(g, args.strategy)
    _emit(
        args,
        f"obstruction {script.target.upper()} ({len(script)} steps)\n{script.dumps()}",
        {"obstruction": script.target, "script": script.to_json()},
    )
    return YES


def _game(args: argparse.Namespace) -> int:
    g = read_edge_list(args.file)
    _write_dot(args, g)
    cops = min_cops(g)
    _emit(args, f"min cops: {cops}", {"min_cops": cops})
    return YES


def _decomp(args: argparse.Namespace) -> int:
    g = read_edge_list(args.file)
    _write_dot(args, g)
    if args.check:
        decomposition = KellyDecomposition.loads(_read_text(args.check))
    else:
        decomposition = build_decomposition(g, exact_kelly_width(g).ordering)

    report = validate_decomposition(g, decomposition)
    if not report.valid:
        _emit(
            args,
            f"decomposition: invalid\n{report.violation}",
            {"valid": False, "violation": str(report.violation)},
        )
        return NO
    _emit(
        args,
        f"decomposition: valid, width {report.width}\n{decomposition.dumps()}",
        {"valid": True, "width": report.width, "decomposition": decomposition.to_json()},
    )
    return YES


def _gen(args: argparse.Namespace) -> int:
    try:
        data = json.loads(_read_text(args.spec))
    except json.JSONDecodeError as exc:
        raise FormatError("Generator spec is not valid JSON", exc, line=exc.lineno) from exc
    try:
        spec = GenSpec(**data)
    except TypeError as exc:
        raise FormatError("Malformed generator spec", exc) from exc

    count = args.count if args.count is not None else int(data.get("count", 1))
    paths = write_corpus(spec, count, args.out)
    _emit(args, "\n".join(str(p) for p in paths), {"written": [str(p) for p in paths]})
    return YES


def _enumerate(args: argparse.Namespace) -> int:
    for index, g in enumerate(enumerate_all(args.n)):
        if args.json:
            print(json.dumps(_graph_json(g), sort_keys=True))
        else:
            print(f"# class {index}")
            print(format_edge_list(g).rstrip())
    return YES


def _verify(args: argparse.Namespace) -> int:
    g = read_edge_list(args.file)
    script = WitnessScript.loads(_read_text(args.script))
    result = replay(g, script)
    _write_dot(args, result.graph)
    verdict = "ok" if result.ok else "mismatch"
    _emit(
        args,
        f"replay: {verdict} ({script.target})",
        {
            "verdict": verdict,
            "isomorphic": result.isomorphic,
            "vertex_map_valid": result.vertex_map_valid,
            "result": _graph_json(result.graph),
        },
    )
    return YES if result.ok else NO


COMMANDS: Dict[str, Callable[[argparse.Namespace], int]] = {
    "width": _width,
    "recognize": _recognize,
    "minor": _minor,
    "obstruct": _obstruct,
    "extract": _extract,
    "game": _game,
    "decomp": _decomp,
    "gen": _gen,
    "enumerate": _enumerate,
    "verify": _verify,
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="print machine-readable JSON")
    common.add_argument("--dot", metavar="OUT", help="also write the relevant digraph as DOT")
    common.add_argument("-v", "--verbose", action="store_true", help="log debug output to stderr")

    parser = argparse.ArgumentParser(
        prog="kellyminors",
        description="Directed minors, Kelly-width and partial 1-DAG obstructions.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {version}")
    verbs = parser.add_subparsers(dest="verb", metavar="VERB")
    verbs.required = True

    def verb(name: str, help_text: str) -> argparse.ArgumentParser:
        return verbs.add_parser(name, parents=[common], help=help_text)

    sub = verb("width", "exact Kelly-width and an optimal elimination ordering")
    sub.add_argument("file")

    sub = verb("recognize", "greedy partial k-DAG recognition for k in {0, 1}")
    sub.add_argument("--k", type=int, choices=(0, 1), required=True)
    sub.add_argument("file")

    sub = verb("minor", "brute-force directed-minor containment")
    target = sub.add_mutually_exclusive_group(required=True)
    target.add_argument("--target", choices=oracle.CATALOG.names)
    target.add_argument("--pattern", metavar="PFILE")
    sub.add_argument("file")

    for name, help_text in (
        ("obstruct", "peel and extract a K3, N4 or M5 witness, if any"),
        ("extract", "extract a K3, N4 or M5 witness from a min out-degree 2 digraph"),
    ):
        sub = verb(name, help_text)
        sub.add_argument("--strategy", choices=STRATEGIES, default="cases")
        sub.add_argument("file")

    sub = verb("game", "minimum cops against an invisible inert robber")
    sub.add_argument("file")

    sub = verb("decomp", "build and validate a Kelly-decomposition")
    sub.add_argument("--check", metavar="DFILE", help="validate this decomposition instead")
    sub.add_argument("file")

    sub = verb("gen", "write a generated corpus")
    sub.add_argument("spec", help="JSON file with kind, n, k, seed, edge_prob")
    sub.add_argument("--count", type=int)
    sub.add_argument("--out", default=".")

    sub = verb("enumerate", "stream one digraph per isomorphism class")
    sub.add_argument("n", type=int)

    sub = verb("verify", "replay a witness script")
    sub.add_argument("file")
    sub.add_argument("script")

    return parser


def run(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2

    logging.basicConfig(
        level=logging.DEBUG if args.verbose else logging.WARNING,
        format="%(levelname)s: %(message)s",
        stream=sys.stderr,
    )
    oracle.configure()
    try:
        return COMMANDS[args.verb](args)
    except KellyError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.exit_code
    except Exception as exc:
        logger.debug("unexpected failure", exc_info=True)
        print(f"internal error: {exc!r}", file=sys.stderr)
        return KellyError.exit_code_for(exc)


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
