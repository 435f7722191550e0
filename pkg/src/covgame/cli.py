"""Command-line front end.

Exit codes: 0 = decision true / success, 1 = decision false, 2 = usage
or validation error, 3 = search budget exceeded. `-` reads the model
from standard input; machine-readable output under --json is stable
across runs for identical inputs.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import formats, oracle
from .errors import BudgetExceededError, CoverageError, FormatError
from .game_cover import (
    TesterStrategy,
    bounded_coverage_game,
    coverage_value_game,
    is_controllably_recurrent_game,
    max_coverage_game,
    min_cover_end_component,
    strategy_covers,
    verify_end_component_witness,
)
from .graph_cover import (
    bounded_coverage_graph,
    coverage_value_graph,
    is_controllably_recurrent_graph,
    max_coverage_graph,
    max_coverage_recurrent_graph,
)
from .model import (
    LabeledGameGraph,
    SystemAutomaton,
    compile_system,
    cover_of,
    mask_names,
    patch_self_loops,
    path_check,
    path_from_names,
)
from .reductions import (
    hampath_to_bounded,
    parse_dimacs,
    parse_edge_list,
    parse_qdimacs,
    qbf_to_game,
    sat_to_graph,
    vc_to_game,
)

# How large a game still gets an end-component certificate on a NO
# answer (the search is exponential in |V|).
CERTIFICATE_VERTEX_LIMIT = 16


def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise FormatError(f"cannot read {path}: {exc.strerror}") from None


def _load_model(args):
    model = formats.loads(_read_text(args.model), args.kind)
    patched: tuple[str, ...] = ()
    if args.patch_self_loops:
        model, patched = patch_self_loops(model)
    return model, patched


def _as_playable(model):
    """solve/bounded/recurrent/verify accept systems and compile them."""
    if isinstance(model, SystemAutomaton):
        return compile_system(model), True
    return model, False


def _emit(args, obj: dict, lines: list[str]) -> None:
    if args.json:
        print(json.dumps(obj, indent=2, sort_keys=True))
    else:
        for line in lines:
            print(line)


def _path_obj(g, path, m=None) -> dict:
    mask = cover_of(g, path)
    obj = {
        "kind": "path",
        "vertices": [g.names[v] for v in path],
        "covered": list(mask_names(g.ap, mask)),
        "steps": len(path) - 1,
    }
    if m is not None:
        obj["m"] = m
    return obj


def _strategy_obj(g, strategy: TesterStrategy, m: int) -> dict:
    obj = strategy.to_obj(g)
    obj["m"] = m
    return obj


def _ec_obj(g, ec, m: int) -> dict:
    return {
        "kind": "end-component",
        "vertices": [g.names[v] for v in ec.vertices],
        "props": list(mask_names(g.ap, ec.props)),
        "m": m,
    }


def _witness_lines(obj) -> list[str]:
    if obj is None:
        return []
    if obj["kind"] == "path":
        covered = ", ".join(obj["covered"]) or "(none)"
        return [
            "witness: " + " -> ".join(obj["vertices"]),
            f"covered: {covered} ({obj['steps']} steps)",
        ]
    if obj["kind"] == "strategy":
        lines = [f"strategy ({len(obj['entries'])} moves):"]
        for entry in obj["entries"]:
            covered = "{" + ",".join(entry["covered"]) + "}"
            extra = f" [{entry['remaining']} steps left]" if "remaining" in entry else ""
            lines.append(
                f"  at {entry['vertex']} with {covered}{extra} -> {entry['choose']}"
            )
        return lines
    vertices = ", ".join(obj["vertices"])
    props = ", ".join(obj["props"]) or "(none)"
    return [f"no-certificate: end component {{{vertices}}} covering only {props}"]


def _no_certificate(g, m):
    """End-component certificate for a NO answer on a recurrent game."""
    if not isinstance(g, LabeledGameGraph) or g.n > CERTIFICATE_VERTEX_LIMIT:
        return None
    recurrent, _ = is_controllably_recurrent_game(g)
    if not recurrent:
        return None
    try:
        ec, count = min_cover_end_component(g)
    except CoverageError:
        return None
    return _ec_obj(g, ec, m) if count < m else None


def _require_m(args) -> int:
    if args.m is None:
        raise FormatError("--m is required here")
    return args.m


def _cmd_solve(args) -> int:
    model, patched = _load_model(args)
    model, compiled = _as_playable(model)
    is_game = isinstance(model, LabeledGameGraph)
    out: dict = {"command": "solve", "kind": "game" if is_game else "graph"}
    if compiled:
        out["compiled"] = True
    if patched:
        out["patched"] = list(patched)
    lines: list[str] = []
    keep = not args.low_memory
    if args.value:
        if is_game:
            ans = coverage_value_game(model, want_strategy=keep)
            out["witness"] = (
                _strategy_obj(model, ans.strategy, ans.value) if ans.strategy else None
            )
        else:
            ans = coverage_value_graph(model, want_witness=keep)
            out["witness"] = (
                _path_obj(model, ans.witness, ans.value) if ans.witness else None
            )
        out["value"] = ans.value
        lines.append(f"value: {ans.value}")
        lines.extend(_witness_lines(out["witness"]))
        _emit(args, out, lines)
        return 0
    m = _require_m(args)
    out["m"] = m
    if is_game:
        ans = max_coverage_game(model, m, want_strategy=keep)
        witness = (
            _strategy_obj(model, ans.strategy, m) if ans.decision and ans.strategy else None
        )
    else:
        ans = max_coverage_graph(model, m, want_witness=keep)
        witness = _path_obj(model, ans.witness, m) if ans.decision and ans.witness else None
    out["decision"] = ans.decision
    out["witness"] = witness
    certificate = None if ans.decision else _no_certificate(model, m)
    out["certificate"] = certificate
    lines.append(f"decision: {'yes' if ans.decision else 'no'}")
    lines.extend(_witness_lines(witness))
    lines.extend(_witness_lines(certificate))
    _emit(args, out, lines)
    return 0 if ans.decision else 1


def _cmd_bounded(args) -> int:
    model, patched = _load_model(args)
    model, compiled = _as_playable(model)
    is_game = isinstance(model, LabeledGameGraph)
    m = _require_m(args)
    out: dict = {
        "command": "bounded",
        "kind": "game" if is_game else "graph",
        "m": m,
        "k": args.k,
    }
    if compiled:
        out["compiled"] = True
    if patched:
        out["patched"] = list(patched)
    keep = not args.low_memory
    if is_game:
        ans = bounded_coverage_game(
            model, m, args.k, low_memory=args.low_memory, want_strategy=keep
        )
        out["value"] = ans.value
        witness = (
            _strategy_obj(model, ans.strategy, m) if ans.decision and ans.strategy else None
        )
    else:
        ans = bounded_coverage_graph(model, m, args.k, want_witness=keep)
        witness = _path_obj(model, ans.witness, m) if ans.decision and ans.witness else None
        if witness is not None:
            out["steps_used"] = ans.steps_used
    out["decision"] = ans.decision
    out["witness"] = witness
    lines = [f"decision: {'yes' if ans.decision else 'no'}"]
    lines.extend(_witness_lines(witness))
    _emit(args, out, lines)
    return 0 if ans.decision else 1


def _cmd_recurrent(args) -> int:
    model, patched = _load_model(args)
    model, compiled = _as_playable(model)
    is_game = isinstance(model, LabeledGameGraph)
    if is_game:
        recurrent, stray = is_controllably_recurrent_game(model)
    else:
        recurrent, stray = is_controllably_recurrent_graph(model)
    out: dict = {
        "command": "recurrent",
        "kind": "game" if is_game else "graph",
        "recurrent": recurrent,
        "counterexample": None if stray is None else model.names[stray],
    }
    if compiled:
        out["compiled"] = True
    if patched:
        out["patched"] = list(patched)
    lines = [f"controllably recurrent: {'yes' if recurrent else 'no'}"]
    if stray is not None:
        lines.append(f"counterexample: {model.names[stray]} cannot be forced back")
    if recurrent and not is_game:
        out["value"] = max_coverage_recurrent_graph(model)
        lines.append(f"value (component fast path): {out['value']}")
    _emit(args, out, lines)
    return 0 if recurrent else 1


def _cmd_compile(args) -> int:
    model, patched = _load_model(args)
    if not isinstance(model, SystemAutomaton):
        raise FormatError("compile expects a system model")
    print(formats.dumps(compile_system(model)))
    return 0


def _cmd_gadget(args) -> int:
    text = _read_text(args.instance)
    if args.reduction == "sat":
        result = sat_to_graph(parse_dimacs(text))
    elif args.reduction == "qbf":
        result = qbf_to_game(parse_qdimacs(text))
    elif args.reduction == "vc":
        result = vc_to_game(parse_edge_list(text, directed=False))
    else:
        h = parse_edge_list(text, directed=True)
        start = args.start if args.start is not None else (h.vertices or ("?",))[0]
        result = hampath_to_bounded(h, start)
    print(json.dumps(result.to_obj(), indent=2, sort_keys=True))
    return 0


def _cmd_certify(args) -> int:
    model, _ = _load_model(args)
    model, _ = _as_playable(model)
    obj = json.loads(_read_text(args.witness))
    if isinstance(obj, dict) and "witness" in obj and isinstance(obj["witness"], dict):
        inner = obj["witness"]
    elif isinstance(obj, dict) and "certificate" in obj and isinstance(obj["certificate"], dict):
        inner = obj["certificate"]
    else:
        inner = obj
    if not isinstance(inner, dict) or "kind" not in inner:
        raise FormatError("witness file does not contain a checkable object")
    m = args.m if args.m is not None else inner.get("m")
    kind = inner["kind"]
    if kind == "path":
        path = path_from_names(model, inner.get("vertices", ()))
        valid = path_check(model, path)
        if valid and m is not None:
            valid = cover_of(model, path).bit_count() >= m
    elif kind == "strategy":
        if not isinstance(model, LabeledGameGraph):
            raise FormatError("a strategy witness needs a game model")
        if m is None:
            raise FormatError("certifying a strategy needs --m")
        strategy = TesterStrategy.from_obj(model, inner)
        valid = strategy_covers(model, strategy, m)
    elif kind == "end-component":
        if not isinstance(model, LabeledGameGraph):
            raise FormatError("an end-component certificate needs a game model")
        if m is None:
            raise FormatError("certifying an end component needs --m")
        vertices = path_from_names(model, inner.get("vertices", ()))
        valid = verify_end_component_witness(model, vertices, m)
    else:
        raise FormatError(f"unknown witness kind {kind!r}")
    out = {"command": "certify", "witness_kind": kind, "m": m, "valid": valid}
    _emit(args, out, [f"witness {'valid' if valid else 'INVALID'}"])
    return 0 if valid else 1


def _cmd_export_dot(args) -> int:
    model, _ = _load_model(args)
    sys.stdout.write(formats.to_dot(model))
    return 0


def _cmd_verify(args) -> int:
    model, _ = _load_model(args)
    model, compiled = _as_playable(model)
    m = _require_m(args)
    if isinstance(model, LabeledGameGraph):
        decision = oracle.brute_force_game(model, m, args.k)
        kind = "game"
    else:
        decision = oracle.brute_force_graph(model, m, args.k)
        kind = "graph"
    out = {
        "command": "verify",
        "kind": kind,
        "m": m,
        "k": args.k,
        "decision": decision,
    }
    if compiled:
        out["compiled"] = True
    _emit(args, out, [f"oracle decision: {'yes' if decision else 'no'}"])
    return 0 if decision else 1


def _parser() -> argparse.ArgumentParser:
    shared = argparse.ArgumentParser(add_help=False)
    shared.add_argument("--json", action="store_true", help="machine-readable output")
    shared.add_argument(
        "--kind",
        choices=formats.KINDS,
        default="auto",
        help="override model-kind inference",
    )
    shared.add_argument(
        "--patch-self-loops",
        action="store_true",
        help="add a self-loop to each sink before solving (recorded in the output)",
    )
    shared.add_argument(
        "--low-memory",
        action="store_true",
        help="frontier-only searches / unmemoized game tree; no witnesses",
    )
    shared.add_argument(
        "--seed",
        type=int,
        default=None,
        help="seed for randomized corpus generation (reserved; current commands are deterministic)",
    )

    parser = argparse.ArgumentParser(
        prog="covgame",
        description="coverage solvers for labeled graphs and game graphs",
    )
    sub = parser.add_subparsers(dest="subcommand", required=True)

    p = sub.add_parser("solve", parents=[shared], help="maximal coverage")
    p.add_argument("model", help="model file in interchange format, or -")
    p.add_argument("--m", type=int, default=None, help="coverage target")
    p.add_argument("--value", action="store_true", help="compute the exact value")
    p.set_defaults(func=_cmd_solve)

    p = sub.add_parser("bounded", parents=[shared], help="coverage within k steps")
    p.add_argument("model")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.set_defaults(func=_cmd_bounded)

    p = sub.add_parser("recurrent", parents=[shared], help="controllable recurrence")
    p.add_argument("model")
    p.set_defaults(func=_cmd_recurrent)

    p = sub.add_parser("compile", parents=[shared], help="system to tester/system game")
    p.add_argument("model")
    p.set_defaults(func=_cmd_compile)

    p = sub.add_parser("gadget", parents=[shared], help="hardness-reduction generators")
    p.add_argument("reduction", choices=("sat", "qbf", "vc", "hampath"))
    p.add_argument("instance", help="DIMACS / QDIMACS / edge-list file, or -")
    p.add_argument("--start", default=None, help="start vertex for hampath")
    p.set_defaults(func=_cmd_gadget)

    p = sub.add_parser("certify", parents=[shared], help="re-check a witness")
    p.add_argument("model")
    p.add_argument("--witness", required=True, help="witness JSON (or a solve output)")
    p.add_argument("--m", type=int, default=None)
    p.set_defaults(func=_cmd_certify)

    p = sub.add_parser("export-dot", parents=[shared], help="Graphviz export")
    p.add_argument("model")
    p.set_defaults(func=_cmd_export_dot)

    p = sub.add_parser("verify", parents=[shared], help="brute-force oracle spot check")
    p.add_argument("model")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--k", type=int, default=None)
    p.set_defaults(func=_cmd_verify)

    return parser


def main(argv=None) -> int:
    args = _parser().parse_args(argv)
    try:
        return args.func(args)
    except BudgetExceededError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except CoverageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except json.JSONDecodeError as exc:
        print(f"error: not valid JSON: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
