"""Command-line front end.

Subcommands: invert, hat, unhat, check, beatty, construct-phi, simulate,
classify.  Inputs are files ("-" for stdin) in the text or JSON forms from
`formats`; all numbers are exact literals, never decimal floats.  Exit
codes: 0 success, 1 a requested verification failed, 2 unparsable or
invalid input, 3 a request outside an exactness horizon, 4 a meeting at
the origin voided the simulation's recorded sets.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from pathlib import Path
from typing import Any, Optional

from . import continuous, formats, runner, sequences
from .errors import (
    CollisionPresent,
    EmptyWindow,
    HorizonExceeded,
    IncompatibleRadicands,
    InfiniteValue,
    NonPositiveSlope,
    NonPositiveTime,
    NotNonDecreasing,
    NotPositive,
    NotSorted,
    OutsideImage,
    ParseError,
    UnsupportedPoint,
    ZeroDenominator,
)
from .sequences import INF, IntSet, NumberSequence, Tail

EXIT_OK = 0
EXIT_VERDICT = 1
EXIT_PARSE = 2
EXIT_HORIZON = 3
EXIT_COLLISION = 4

_INPUT_ERRORS = (
    ParseError,
    NotNonDecreasing,
    NotSorted,
    NotPositive,
    ZeroDenominator,
    IncompatibleRadicands,
    NonPositiveSlope,
    NonPositiveTime,
    InfiniteValue,
    UnsupportedPoint,
    OutsideImage,
)
_HORIZON_ERRORS = (HorizonExceeded, EmptyWindow)


def _read_input(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        return Path(path).read_text()
    except OSError as e:
        raise ParseError(f"cannot read {path}: {e}") from None


def _resolve_format(args: argparse.Namespace) -> str:
    fmt = args.format or os.environ.get("LAMO_FORMAT") or "text"
    if fmt not in ("text", "json", "csv"):
        raise ParseError(f"unknown output format {fmt!r}")
    return fmt


def _csv_rows(header: list[str], rows: list[list[Any]]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    w.writerows(rows)
    return buf.getvalue()


def _horizon_repr(h: sequences.ExtNat) -> Any:
    return "unbounded" if h is INF else h


def _render_values(v: sequences.ExtNat) -> str:
    return "inf" if v is INF else str(v)


def _sequence_payload(
    s: NumberSequence, fmt: str, limit: Optional[int], note_horizon: bool
) -> str:
    horizon = s.determined_horizon()
    shown = len(s.prefix)
    if limit is not None:
        if limit < 0:
            raise ParseError(f"--limit must be >= 0, got {limit}")
        shown = limit if horizon is INF else min(limit, int(horizon))
    values = [s.value_at(n) for n in range(1, shown + 1)]
    tail = s.tail if shown >= len(s.prefix) else Tail.unknown()
    if fmt == "json":
        obj = formats.sequence_to_json(NumberSequence(values, tail))
        obj["exact_through"] = _horizon_repr(horizon)
        return json.dumps(obj) + "\n"
    if fmt == "csv":
        return _csv_rows(["n", "value"], [[n + 1, _render_values(v)] for n, v in enumerate(values)])
    body = formats.render_sequence_text(NumberSequence(values, tail))
    if note_horizon:
        return f"# exact through: {_horizon_repr(horizon)}\n" + body
    return body


def _intset_payload(s: IntSet, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(formats.intset_to_json(s)) + "\n"
    if fmt == "csv":
        return _csv_rows(["element"], [[e] for e in s.elements])
    return formats.render_intset_text(s)


# -- subcommands ----------------------------------------------------------


def _cmd_invert(args: argparse.Namespace, fmt: str) -> tuple[str, int]:
    f = formats.parse_sequence(_read_input(args.input))
    g = sequences.invert(f)
    return _sequence_payload(g, fmt, args.limit, note_horizon=True), EXIT_OK


def _cmd_hat(args: argparse.Namespace, fmt: str) -> tuple[str, int]:
    f = formats.parse_sequence(_read_input(args.input))
    s = sequences.hat(f, args.K)
    return _intset_payload(s, fmt), EXIT_OK


def _cmd_unhat(args: argparse.Namespace, fmt: str) -> tuple[str, int]:
    s = formats.parse_intset(_read_input(args.input))
    f = sequences.from_set(s, complete=args.complete)
    return _sequence_payload(f, fmt, args.limit, note_horizon=False), EXIT_OK


def _cmd_check(args: argparse.Namespace, fmt: str) -> tuple[str, int]:
    f = formats.parse_sequence(_read_input(args.f))
    g = formats.parse_sequence(_read_input(args.g))
    witness = sequences.grid_witness(f, g, args.M, args.N)
    verdict = sequences.check_complementary(
        sequences.hat(f, args.K), sequences.hat(g, args.K), args.K
    )
    ok = witness is None and verdict.ok
    code = EXIT_OK if ok else EXIT_VERDICT
    if fmt == "json":
        obj = {
            "grid": {
                "window": [args.M, args.N],
                "ok": witness is None,
                "witness": None
                if witness is None
                else {"m": witness[0], "n": witness[1], "kind": witness[2]},
            },
            "complementary": {
                "window": args.K,
                "verdict": verdict.kind,
                "witness": verdict.witness,
            },
            "ok": ok,
        }
        return json.dumps(obj) + "\n", code
    if fmt == "csv":
        rows = [
            ["grid", "pass" if witness is None else "fail",
             "" if witness is None else f"m={witness[0]} n={witness[1]} {witness[2]}"],
            ["complementary", verdict.kind,
             "" if verdict.witness is None else str(verdict.witness)],
        ]
        return _csv_rows(["check", "result", "witness"], rows), code
    lines = []
    if witness is None:
        lines.append(f"mutual-inverse {args.M}x{args.N}: pass")
    else:
        m, n, kind = witness
        lines.append(f"mutual-inverse {args.M}x{args.N}: fail at m={m} n={n} ({kind})")
    lines.append(f"complementary [1,{args.K}]: {verdict}")
    return "\n".join(lines) + "\n", code


def _cmd_beatty(args: argparse.Namespace, fmt: str) -> tuple[str, int]:
    lam = formats.parse_exact(args.lam)
    a, b = continuous.beatty_pair(lam, args.K)
    verdict = sequences.check_complementary(a, b, args.K)
    avoid = continuous.lattice_avoidance(continuous.LinearMap(lam), args.K)
    if fmt == "json":
        obj = {
            "A": formats.intset_to_json(a),
            "B": formats.intset_to_json(b),
            "verdict": verdict.kind,
            "witness": verdict.witness,
            "avoidance": {
                "holds": avoid.holds,
                "violation": avoid.violation,
                "checked_through": avoid.checked_through,
            },
        }
        return json.dumps(obj) + "\n", EXIT_OK
    if fmt == "csv":
        rows = [["A", e] for e in a.elements] + [["B", e] for e in b.elements]
        return _csv_rows(["set", "element"], rows), EXIT_OK
    lines = [
        f"A: {a}",
        f"B: {b}",
        f"complementary [1,{args.K}]: {verdict}",
        f"lattice avoidance n<={args.K}: {avoid}",
    ]
    return "\n".join(lines) + "\n", EXIT_OK


def _cmd_construct_phi(args: argparse.Namespace, fmt: str) -> tuple[str, int]:
    f = formats.parse_sequence(_read_input(args.input))
    phi = continuous.construct_phi(f)
    obj = formats.map_to_json(phi)
    if fmt == "csv":
        rows = [[t, v] for t, v in obj["anchors"]]
        rows.append(["tail", obj["tail"]["kind"]])
        if "limit" in obj["tail"]:
            rows.append(["limit", obj["tail"]["limit"]])
        return _csv_rows(["t", "value"], rows), EXIT_OK
    indent = 2 if fmt == "text" else None
    return json.dumps(obj, indent=indent) + "\n", EXIT_OK


def _read_map(arg: str) -> continuous.MonotoneMap:
    text = arg if arg.lstrip().startswith("{") else _read_input(arg)
    return formats.parse_map(text)


def _cmd_simulate(args: argparse.Namespace, fmt: str) -> tuple[str, int]:
    phi = _read_map(args.map)
    horizon = formats.parse_exact(args.T)
    log = runner.simulate(phi, horizon)
    trace = formats.events_to_jsonl(log)
    collisions = log.collisions()
    if collisions:
        t = collisions[0].time
        if fmt == "json":
            obj = {
                "events": [formats.event_to_json(e.time, e.kind, e.count) for e in log.events],
                "collision_at": t.literal(),
            }
            return json.dumps(obj) + "\n", EXIT_COLLISION
        if fmt == "csv":
            rows = [[e.time.literal(), e.kind, e.count] for e in log.events]
            return _csv_rows(["t", "kind", "count"], rows), EXIT_COLLISION
        return trace + f"collision at t={t}\n", EXIT_COLLISION
    s_x, s_y = runner.recorded_sets(log)
    h = s_x.horizon
    if h >= 1:
        alg_y, alg_x = continuous.corollary_sets(phi, h)
    else:
        alg_y, alg_x = IntSet((), 0), IntSet((), 0)
    agree = s_x == alg_x and s_y == alg_y
    code = EXIT_OK if agree else EXIT_VERDICT
    if fmt == "json":
        obj = {
            "events": [formats.event_to_json(e.time, e.kind, e.count) for e in log.events],
            "recorded": {"S_X": formats.intset_to_json(s_x), "S_Y": formats.intset_to_json(s_y)},
            "algebraic": {"S_X": formats.intset_to_json(alg_x), "S_Y": formats.intset_to_json(alg_y)},
            "agree": agree,
        }
        return json.dumps(obj) + "\n", code
    if fmt == "csv":
        rows = [[e.time.literal(), e.kind, e.count] for e in log.events]
        return _csv_rows(["t", "kind", "count"], rows), code
    lines = [
        f"recorded S_X: {s_x}",
        f"recorded S_Y: {s_y}",
        f"algebraic S_X: {alg_x}",
        f"algebraic S_Y: {alg_y}",
        f"agree: {'yes' if agree else 'NO'}",
    ]
    return trace + "\n".join(lines) + "\n", code


def _cmd_classify(args: argparse.Namespace, fmt: str) -> tuple[str, int]:
    f = formats.parse_sequence(_read_input(args.input))
    cls = sequences.classify(f)
    if fmt == "json":
        return json.dumps({"class": cls}) + "\n", EXIT_OK
    if fmt == "csv":
        return _csv_rows(["class"], [[cls]]), EXIT_OK
    return cls + "\n", EXIT_OK


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="lamo",
        description="Inverse sequence pairs, the integer sets they induce, and the"
        " two-runner event simulation that cross-checks them.",
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json", "csv"), default=None,
                        help="output format (default: $LAMO_FORMAT or text)")
    common.add_argument("--limit", type=int, default=None, metavar="N",
                        help="cap on printed sequence terms")
    common.add_argument("--output", default=None, metavar="PATH",
                        help="write the report to PATH instead of stdout")

    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("invert", parents=[common],
                       help="counting inverse g(n) = |{m : f(m) < n}|")
    p.add_argument("input", help="sequence file, '-' for stdin")
    p.set_defaults(fn=_cmd_invert)

    p = sub.add_parser("hat", parents=[common],
                       help="the set {n + f(n)} on [1, K]")
    p.add_argument("input", help="sequence file")
    p.add_argument("K", type=int, help="window bound")
    p.set_defaults(fn=_cmd_hat)

    p = sub.add_parser("unhat", parents=[common],
                       help="the sequence s_n - n of a set")
    p.add_argument("input", help="set file")
    p.add_argument("--complete", action="store_true",
                   help="the set lists every element, not just a window")
    p.set_defaults(fn=_cmd_unhat)

    p = sub.add_parser("check", parents=[common],
                       help="mutual-inverse grid and hat-set complementarity")
    p.add_argument("f", help="sequence file")
    p.add_argument("g", help="sequence file")
    p.add_argument("M", type=int, help="grid rows (indices of f)")
    p.add_argument("N", type=int, help="grid columns (indices of g)")
    p.add_argument("K", type=int, help="complementarity window bound")
    p.set_defaults(fn=_cmd_check)

    p = sub.add_parser("beatty", parents=[common],
                       help="floor((1+lambda)n) and floor((1+1/lambda)n) on [1, K]")
    p.add_argument("lam", metavar="lambda", help="exact slope literal, e.g. '(-1+1*sqrt(5))/2'")
    p.add_argument("K", type=int, help="window bound")
    p.set_defaults(fn=_cmd_beatty)

    p = sub.add_parser("construct-phi", parents=[common],
                       help="a strictly increasing map with floor(phi(n)) = f(n)")
    p.add_argument("input", help="sequence file")
    p.set_defaults(fn=_cmd_construct_phi)

    p = sub.add_parser("simulate", parents=[common],
                       help="exact two-runner event log, cross-checked against the set formulas")
    p.add_argument("map", help="map JSON (file path or inline object)")
    p.add_argument("T", help="time horizon, an exact literal such as '50' or '101/2'")
    p.set_defaults(fn=_cmd_simulate)

    p = sub.add_parser("classify", parents=[common],
                       help="bounded / eventually_infinite / window report")
    p.add_argument("input", help="sequence file")
    p.set_defaults(fn=_cmd_classify)

    return parser


def main(argv: Optional[list[str]] = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        fmt = _resolve_format(args)
        payload, code = args.fn(args, fmt)
    except _INPUT_ERRORS as e:
        print(f"lamo: {e.__class__.__name__}: {e}", file=sys.stderr)
        return EXIT_PARSE
    except _HORIZON_ERRORS as e:
        print(f"lamo: {e.__class__.__name__}: {e}", file=sys.stderr)
        return EXIT_HORIZON
    except CollisionPresent as e:
        print(f"lamo: {e.__class__.__name__}: {e}", file=sys.stderr)
        return EXIT_COLLISION
    if args.output:
        try:
            Path(args.output).write_text(payload)
        except OSError as e:
            print(f"lamo: cannot write {args.output}: {e}", file=sys.stderr)
            return EXIT_PARSE
    else:
        sys.stdout.write(payload)
    return code


def main_entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    main_entry()
