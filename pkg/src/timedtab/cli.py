"""Command-line front end: parse, dispatch, emit JSON or text, render SVG.

Exit codes: 0 success, 1 property or agreement failure, 2 input error.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from typing import Optional

from .errors import InvalidMoveError, TimedTabError
from .fuzz import FuzzConfig, run_fuzz, shrink_matrix, triple_agreement_failure
from .greene import DEFAULT_ORACLE_CAP, greene, greene_oracle
from .insertion import delete, insert, insertion_tableau
from .knuth import KnuthMove, apply_move, equivalent, normalize_with_trace
from .rsk import NonNegMatrix, rsk, rsk_inverse, rsk_recording, rsk_shadows
from .tableaux import GTPattern, RealPartition, TimedTableau, from_gt
from .viz import RenderSpec, render_tableau
from .words import TimedWord, duration_str, to_duration


def _read_input(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, "r", encoding="utf-8") as handle:
        return handle.read()


def _load_matrix(path: str) -> NonNegMatrix:
    text = _read_input(path)
    if text.lstrip().startswith("{"):
        return NonNegMatrix.from_json(text)
    return NonNegMatrix.from_csv(text)


def _tableau_payload(tab: TimedTableau) -> dict:
    return {
        "alphabet": tab.alphabet_size,
        "rows": tab.row_strings(),
        "reading_word": str(tab.reading_word()),
        "shape": [duration_str(p) for p in tab.shape().parts],
        "weight": [duration_str(x) for x in tab.weight()],
    }


def _pattern_payload(pattern: GTPattern) -> dict:
    return {"size": pattern.size, "rows": pattern.to_lists()}


def _render_text(payload, indent: int = 0) -> str:
    pad = "  " * indent
    lines = []
    if isinstance(payload, dict):
        for key, value in payload.items():
            if isinstance(value, (dict, list)) and value and not _is_flat(value):
                lines.append(f"{pad}{key}:")
                lines.append(_render_text(value, indent + 1))
            else:
                lines.append(f"{pad}{key}: {_flat(value)}")
    elif isinstance(payload, list):
        for value in payload:
            if isinstance(value, (dict, list)) and value and not _is_flat(value):
                lines.append(_render_text(value, indent + 1))
            else:
                lines.append(f"{pad}- {_flat(value)}")
    else:
        lines.append(f"{pad}{payload}")
    return "\n".join(lines)


def _is_flat(value) -> bool:
    if isinstance(value, list):
        return all(not isinstance(v, (dict, list)) for v in value)
    return False


def _flat(value) -> str:
    if isinstance(value, list):
        return "[" + ", ".join(str(v) for v in value) + "]"
    return str(value)


def _emit(args, payload: dict, out: Optional[str] = None) -> None:
    if getattr(args, "format", "json") == "json":
        text = json.dumps(payload, indent=2)
    else:
        text = _render_text(payload)
    target = out if out is not None else getattr(args, "output", None)
    if target:
        with open(target, "w", encoding="utf-8") as handle:
            handle.write(text + "\n")
    else:
        print(text)


def _parse_shape(text: str) -> RealPartition:
    parts = [p for p in text.replace(",", " ").split() if p]
    return RealPartition([to_duration(p) for p in parts])


def _aligned(tab: TimedTableau, word: TimedWord):
    n = max(tab.alphabet_size, word.alphabet_size)
    return (
        TimedTableau(tuple(r.with_alphabet(n) for r in tab.rows), n),
        word.with_alphabet(n),
    )


def cmd_ptab(args) -> int:
    word = TimedWord.from_text(args.word, args.n)
    if args.trace:
        tableau, trace = normalize_with_trace(word)
        payload = {
            "word": str(word),
            "tableau": _tableau_payload(tableau),
            "trace": [move.to_dict() for move in trace],
        }
    else:
        payload = {
            "word": str(word),
            "tableau": _tableau_payload(insertion_tableau(word)),
        }
    _emit(args, payload)
    return 0


def cmd_insert(args) -> int:
    tableau = TimedTableau.from_text(args.tableau, args.n)
    row = TimedWord.from_text(args.row, args.n)
    tableau, row = _aligned(tableau, row)
    _emit(args, {"tableau": _tableau_payload(insert(tableau, row))})
    return 0


def cmd_delete(args) -> int:
    tableau = TimedTableau.from_text(args.tableau, args.n)
    shape = _parse_shape(args.shape)
    row, remainder = delete(tableau, shape)
    _emit(
        args,
        {"row": str(row), "tableau": _tableau_payload(remainder)},
    )
    return 0


def cmd_greene(args) -> int:
    word = TimedWord.from_text(args.word, args.n)
    if args.oracle:
        value = greene_oracle(word, args.k, args.cap)
        method = "oracle"
    else:
        value = greene(word, args.k)
        method = "tableau"
    _emit(
        args,
        {
            "word": str(word),
            "k": args.k,
            "value": duration_str(value),
            "method": method,
        },
    )
    return 0


def cmd_knuth_equal(args) -> int:
    first = TimedWord.from_text(args.word1)
    second = TimedWord.from_text(args.word2)
    n = args.n or max(first.alphabet_size, second.alphabet_size)
    answer = equivalent(first.with_alphabet(n), second.with_alphabet(n))
    _emit(args, {"word1": str(first), "word2": str(second), "equivalent": answer})
    return 0


def cmd_knuth_trace(args) -> int:
    word = TimedWord.from_text(args.word, args.n)
    if args.replay:
        data = json.loads(_read_input(args.replay))
        moves = data["trace"] if isinstance(data, dict) else data
        current = word
        try:
            for index, move in enumerate(moves):
                current = apply_move(current, KnuthMove.from_dict(move))
        except InvalidMoveError as exc:
            print(f"invalid certificate at step {index}: {exc}", file=sys.stderr)
            return 1
        _emit(
            args,
            {"word": str(word), "result": str(current), "moves": len(moves)},
        )
        return 0
    tableau, trace = normalize_with_trace(word)
    _emit(
        args,
        {
            "word": str(word),
            "tableau": _tableau_payload(tableau),
            "trace": [move.to_dict() for move in trace],
        },
    )
    return 0


_ALGORITHMS = {
    "direct": rsk,
    "recording": rsk_recording,
    "shadows": rsk_shadows,
}


def cmd_rsk(args) -> int:
    matrix = _load_matrix(args.matrix)
    timing = {}
    outputs = {}
    names = list(_ALGORITHMS) if args.algo == "all" else [args.algo]
    for name in names:
        start = time.perf_counter()
        outputs[name] = _ALGORITHMS[name](matrix)
        timing[name] = time.perf_counter() - start
    if args.algo == "all":
        detail = triple_agreement_failure(matrix)
        if detail is not None:
            shrunk = shrink_matrix(
                matrix, lambda cand: triple_agreement_failure(cand) is not None
            )
            print(f"agreement failure: {detail}", file=sys.stderr)
            print(f"counterexample:\n{shrunk.to_csv()}", file=sys.stderr)
            return 1
    p, q = outputs[names[0]]
    payload = dict(matrix.to_json())
    payload.update(
        {
            "algo": args.algo,
            "P": _tableau_payload(p),
            "Q": _tableau_payload(q),
            "shape": [duration_str(x) for x in p.shape().parts],
            "timing": {name: round(value, 6) for name, value in timing.items()},
        }
    )
    if args.emit_gt:
        payload["gt_p"] = _pattern_payload(p.to_gt())
        payload["gt_q"] = _pattern_payload(q.to_gt())
    if args.render:
        base = args.output or "rsk"
        stem = base[:-5] if base.endswith(".json") else base
        render_tableau(p, f"{stem}.P.svg")
        render_tableau(q, f"{stem}.Q.svg")
    _emit(args, payload)
    return 0


def cmd_rsk_inverse(args) -> int:
    data = json.loads(_read_input(args.result))
    p = TimedTableau(
        tuple(TimedWord.from_text(r) for r in data["P"]["rows"]),
        data["P"]["alphabet"],
    )
    q = TimedTableau(
        tuple(TimedWord.from_text(r) for r in data["Q"]["rows"]),
        data["Q"]["alphabet"],
    )
    matrix = rsk_inverse(p, q)
    if args.format == "json":
        _emit(args, matrix.to_json())
    else:
        target = args.output
        if target:
            with open(target, "w", encoding="utf-8") as handle:
                handle.write(matrix.to_csv())
        else:
            sys.stdout.write(matrix.to_csv())
    return 0


def cmd_gt(args) -> int:
    if args.invert:
        text = args.input
        if not text.lstrip().startswith("["):
            text = _read_input(text)
        pattern = GTPattern.from_lists(json.loads(text))
        _emit(args, {"tableau": _tableau_payload(from_gt(pattern))})
        return 0
    tableau = TimedTableau.from_text(args.input, args.n)
    _emit(args, {"pattern": _pattern_payload(tableau.to_gt())})
    return 0


def cmd_viz(args) -> int:
    try:
        tableau = TimedTableau.from_text(args.input, args.n)
    except TimedTabError:
        tableau = insertion_tableau(TimedWord.from_text(args.input, args.n))
    spec = RenderSpec(
        pixels_per_unit=args.pixels_per_unit, row_height=args.row_height
    )
    render_tableau(tableau, args.output, spec)
    return 0


def cmd_fuzz(args) -> int:
    cfg = FuzzConfig(
        max_m=args.max_m, max_n=args.max_n, denom_bound=args.denom_bound
    )
    report = run_fuzz(seed=args.seed, cases=args.cases, cfg=cfg)
    if args.output:
        with open(args.output, "w", encoding="utf-8") as handle:
            handle.write(report.to_csv())
    if args.format == "json":
        print(json.dumps(report.to_json(), indent=2))
    else:
        print(report.to_text())
    return 0 if report.ok else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="timedtab",
        description="timed words, timed tableaux, and the real-matrix RSK correspondence",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, output=True):
        p.add_argument("--format", choices=("json", "text"), default="json")
        if output:
            p.add_argument("-o", "--output", default=None, help="write output to a file")

    p = sub.add_parser("ptab", help="insertion tableau of a word")
    p.add_argument("word")
    p.add_argument("--n", type=int, default=None, help="alphabet size")
    p.add_argument("--trace", action="store_true", help="include the rewrite certificate")
    common(p)
    p.set_defaults(func=cmd_ptab)

    p = sub.add_parser("insert", help="insert a row into a tableau")
    p.add_argument("tableau")
    p.add_argument("row")
    p.add_argument("--n", type=int, default=None)
    common(p)
    p.set_defaults(func=cmd_insert)

    p = sub.add_parser("delete", help="delete down to a given shape")
    p.add_argument("tableau")
    p.add_argument("shape", help="comma-separated target shape")
    p.add_argument("--n", type=int, default=None)
    common(p)
    p.set_defaults(func=cmd_delete)

    p = sub.add_parser("greene", help="k-th Greene invariant")
    p.add_argument("word")
    p.add_argument("k", type=int)
    p.add_argument("--n", type=int, default=None)
    p.add_argument("--oracle", action="store_true", help="use the exhaustive oracle")
    p.add_argument("--cap", type=int, default=DEFAULT_ORACLE_CAP)
    common(p)
    p.set_defaults(func=cmd_greene)

    p = sub.add_parser("knuth-equal", help="decide plactic equivalence")
    p.add_argument("word1")
    p.add_argument("word2")
    p.add_argument("--n", type=int, default=None)
    common(p)
    p.set_defaults(func=cmd_knuth_equal)

    p = sub.add_parser("knuth-trace", help="emit or replay a rewrite certificate")
    p.add_argument("word")
    p.add_argument("--n", type=int, default=None)
    p.add_argument("--replay", default=None, help="trace JSON file to replay")
    common(p)
    p.set_defaults(func=cmd_knuth_trace)

    p = sub.add_parser("rsk", help="RSK correspondence of a matrix file")
    p.add_argument("matrix", help="CSV or JSON matrix file, or - for stdin")
    p.add_argument(
        "--algo",
        choices=("direct", "recording", "shadows", "all"),
        default="direct",
    )
    p.add_argument("--emit-gt", action="store_true", help="include GT patterns")
    p.add_argument(
        "--render", action="store_true", help="write P/Q figures next to the output"
    )
    common(p)
    p.set_defaults(func=cmd_rsk)

    p = sub.add_parser("rsk-inverse", help="invert an rsk output file")
    p.add_argument("result", help="JSON produced by the rsk subcommand, or -")
    common(p)
    p.set_defaults(func=cmd_rsk_inverse)

    p = sub.add_parser("gt", help="Gelfand-Tsetlin pattern of a tableau")
    p.add_argument("input", help="tableau text, or pattern JSON with --invert")
    p.add_argument("--n", type=int, default=None)
    p.add_argument("--invert", action="store_true", help="rebuild a tableau from a pattern")
    common(p)
    p.set_defaults(func=cmd_gt)

    p = sub.add_parser("viz", help="render a tableau (or word) as SVG bands")
    p.add_argument("input")
    p.add_argument("--n", type=int, default=None)
    p.add_argument("--pixels-per-unit", type=float, default=120.0)
    p.add_argument("--row-height", type=float, default=28.0)
    p.add_argument("-o", "--output", required=True)
    p.set_defaults(func=cmd_viz)

    p = sub.add_parser("fuzz", help="run the seeded differential property suite")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--cases", type=int, default=100)
    p.add_argument("--max-m", type=int, default=5)
    p.add_argument("--max-n", type=int, default=5)
    p.add_argument("--denom-bound", type=int, default=10)
    common(p)
    p.set_defaults(func=cmd_fuzz)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except TimedTabError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (OSError, json.JSONDecodeError, KeyError) as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return 2


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
