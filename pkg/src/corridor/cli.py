"""Command-line front end.

Exit codes: 0 success, 1 verification failure or mismatch, 2 usage or
domain error.  With ``--json`` every command prints one JSON document in
which all counts are strings.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field
from itertools import islice

from . import bijection as bij
from .closed_form import cf_count_endpoint, cf_count_window
from .core import (
    EnumerationTooLarge,
    Path,
    dp_count_endpoint,
    dp_count_window,
    enumerate_paths,
    feasible_endpoints,
)
from .sequences import UnknownReference, full_window, lookup, sequence
from .ta import ta_encode
from .tables import golden_compare, render_table
from .transfer import tm_count_vector, tm_count_window
from .verify import check_bijections, check_engines, check_identities, symmetry_diagnostics

ENGINES = ("dp", "cf", "tm", "oracle")


class UsageError(Exception):
    pass


@dataclass
class CommandResult:
    code: int
    payload: dict = field(default_factory=dict)
    text: str = ""
    stderr: str = ""


def _parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="print a JSON document")

    p = argparse.ArgumentParser(prog="corridor", description="Exact counts and bijections for corridor paths.")
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("count", parents=[common], help="count paths ending at a point or in a window")
    c.add_argument("--h", type=int, required=True)
    c.add_argument("--n", type=int, required=True)
    c.add_argument("--start", type=int, required=True)
    c.add_argument("--end", type=int)
    c.add_argument("--center", type=int)
    c.add_argument("--halfwidth", type=int)
    c.add_argument("--engine", choices=ENGINES, default="dp")

    e = sub.add_parser("enumerate", parents=[common], help="list paths as <base>:<U|D...>")
    e.add_argument("--h", type=int, required=True)
    e.add_argument("--n", type=int, required=True)
    e.add_argument("--start", type=int, required=True)
    e.add_argument("--end", type=int)
    e.add_argument("--limit", type=int)

    m = sub.add_parser("map", parents=[common], help="map a path to its counterpart")
    m.add_argument("--h", type=int, required=True)
    m.add_argument("--center", type=int, required=True)
    m.add_argument("--i", type=int, required=True)
    m.add_argument("--j", type=int, required=True)
    m.add_argument("--path", required=True)
    m.add_argument("--variant", choices=[v.value for v in bij.Variant], default="main")

    s = sub.add_parser("sequence", parents=[common], help="print F(0), F(1), ...")
    s.add_argument("--h", type=int, required=True)
    s.add_argument("--start", type=int, required=True)
    s.add_argument("--center", type=int)
    s.add_argument("--halfwidth", type=int)
    s.add_argument("--terms", type=int, required=True)
    s.add_argument("--ref")

    t = sub.add_parser("table", parents=[common], help="CSV count table for one height")
    t.add_argument("--h", type=int, required=True)
    t.add_argument("--nmax", type=int, required=True)
    t.add_argument("--golden", action="store_true")
    t.add_argument("--wide", action="store_true", help="one column per n")

    v = sub.add_parser("verify", parents=[common], help="run verification sweeps (JSON output)")
    v.add_argument("--suite", choices=("identities", "engines", "bijections", "all"), default="all")
    v.add_argument("--hmax", type=int)
    v.add_argument("--nmax", type=int)
    v.add_argument("--diagnostic", action="store_true", help="also list failing instances outside the symmetric domain")
    return p


def _require_start(h: int, n: int, i: int) -> None:
    if h < 0 or n < 0 or not 0 <= i <= h:
        raise UsageError(f"need h >= 0, n >= 0 and 0 <= start <= h (got h={h}, n={n}, start={i})")


def _window_args(args) -> tuple[int, int] | None:
    if (args.center is None) != (args.halfwidth is None):
        raise UsageError("--center and --halfwidth go together")
    if args.center is None:
        return None
    if args.halfwidth < -1:
        raise UsageError(f"--halfwidth must be >= -1, got {args.halfwidth}")
    return args.center, args.halfwidth


def _count(args) -> CommandResult:
    h, n, i = args.h, args.n, args.start
    _require_start(h, n, i)
    window = _window_args(args)
    if (window is None) == (args.end is None):
        raise UsageError("give exactly one of --end or --center/--halfwidth")
    if window is None:
        ends = [args.end] if 0 <= args.end <= h else []
    else:
        ends = feasible_endpoints(h, n, i, *window)

    if args.engine == "oracle":
        try:
            value = sum(1 for _ in enumerate_paths(h, i, n, ends))
        except EnumerationTooLarge as exc:
            raise UsageError(str(exc)) from exc
    elif window is not None:
        k, j = window
        value = {"dp": dp_count_window, "cf": cf_count_window, "tm": tm_count_window}[args.engine](h, i, k, j, n)
    elif not ends:
        value = 0
    elif args.engine == "dp":
        value = dp_count_endpoint(h, i, args.end, n)
    elif args.engine == "cf":
        value = cf_count_endpoint(h, i, args.end, n)
    else:
        value = tm_count_vector(h, i, n)[args.end]
    payload = {"count": str(value), "engine": args.engine, "h": str(h), "n": str(n), "start": str(i)}
    if window is not None:
        payload.update(center=str(window[0]), halfwidth=str(window[1]))
    else:
        payload["end"] = str(args.end)
    return CommandResult(0, payload, str(value))


def _enumerate(args) -> CommandResult:
    _require_start(args.h, args.n, args.start)
    ends = None if args.end is None else [args.end]
    cap = float("inf") if args.limit is not None else None
    try:
        stream = enumerate_paths(args.h, args.start, args.n, ends, cap=cap)
    except EnumerationTooLarge as exc:
        raise UsageError(str(exc)) from exc
    if args.limit is not None:
        stream = islice(stream, max(args.limit, 0))
    lines = [p.to_text() for p in stream]
    return CommandResult(0, {"paths": lines, "count": str(len(lines))}, "\n".join(lines))


def _map(args) -> CommandResult:
    try:
        p = Path.from_text(args.path)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    h, k, i, j = args.h, args.center, args.i, args.j
    variant = bij.Variant(args.variant)
    case = None
    try:
        if variant is bij.Variant.MAIN:
            q, case = bij.correspond(p, h, k, i, j)
        else:
            q = bij.apply_variant(variant, p, h, k, i, j)
    except bij.NotApplicable as exc:
        payload = {"variant": variant.value, "applicable": False, "reason": str(exc)}
        return CommandResult(1, payload, f"not applicable: {exc}")
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    source_word, word = ta_encode(p, k), ta_encode(q, k)
    payload = {
        "variant": variant.value,
        "path": q.to_text(),
        "word": word.to_text(),
        "source_path": p.to_text(),
        "source_word": source_word.to_text(),
    }
    lines = [f"path: {q}", f"word: {word}", f"source-word: {source_word}"]
    if case is not None:
        payload["case"] = case.value
        lines.append(f"case: {case.value}")
    return CommandResult(0, payload, "\n".join(lines))


def _sequence(args) -> CommandResult:
    if args.terms < 1:
        raise UsageError("--terms must be >= 1")
    _require_start(args.h, args.terms - 1, args.start)
    window = _window_args(args) or full_window(args.h)
    terms = sequence(args.h, args.start, *window, n_max=args.terms - 1)
    payload = {"terms": [str(t) for t in terms], "center": str(window[0]), "halfwidth": str(window[1])}
    lines = [",".join(map(str, terms))]
    code = 0
    if args.ref:
        try:
            ref = lookup(args.ref)
        except UnknownReference as exc:
            raise UsageError(str(exc.args[0])) from exc
        compared = [(n, t) for n, t in zip(ref.indices, ref.terms) if n < len(terms)]
        diffs = [(n, terms[n], t) for n, t in compared if terms[n] != t]
        status = "match" if not diffs else "mismatch"
        payload["ref"] = {
            "label": ref.label,
            "status": status,
            "compared": str(len(compared)),
            "diffs": [{"n": str(n), "got": str(a), "expected": str(b)} for n, a, b in diffs],
        }
        if diffs:
            n, a, b = diffs[0]
            lines.append(f"{ref.label}: mismatch at n={n}: got {a}, expected {b}")
            code = 1
        else:
            lines.append(f"{ref.label}: match ({len(compared)} terms compared)")
    return CommandResult(code, payload, "\n".join(lines))


def _table(args) -> CommandResult:
    if args.h < 0 or args.nmax < 0:
        raise UsageError("--h and --nmax must be >= 0")
    text = render_table(args.h, args.nmax, "wide" if args.wide else "long")
    payload = {"csv": text}
    if not args.golden:
        return CommandResult(0, payload, text.rstrip("\n"))
    try:
        report = golden_compare(args.h, args.nmax)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    payload["golden"] = report.to_json()
    if report.passed:
        note = f"golden h={args.h} n<={args.nmax}: match ({report.checked} cells)"
    else:
        f = report.failures[0]
        note = f"golden h={args.h}: first difference at {f.instance}: got {f.lhs!r}, expected {f.rhs!r}"
    return CommandResult(0 if report.passed else 1, payload, text.rstrip("\n"), note)


def _verify(args) -> CommandResult:
    def bounds(h_default, n_default):
        return (h_default if args.hmax is None else args.hmax, n_default if args.nmax is None else args.nmax)

    reports = []
    if args.suite in ("identities", "all"):
        reports += check_identities(*bounds(6, 14))
    if args.suite in ("engines", "all"):
        h, n = bounds(8, 24)
        reports += check_engines(h, n, min(h, 5), min(n, 12))
    if args.suite in ("bijections", "all"):
        reports += check_bijections(*bounds(5, 10))
    passed = all(r.passed for r in reports)
    payload = {"passed": passed, "reports": [r.to_json() for r in reports]}
    if args.diagnostic:
        payload["diagnostics"] = symmetry_diagnostics(*bounds(6, 14))
    note = "\n".join(r.summary() for r in reports)
    return CommandResult(0 if passed else 1, payload, json.dumps(payload, indent=1), note)


COMMANDS = {
    "count": _count,
    "enumerate": _enumerate,
    "map": _map,
    "sequence": _sequence,
    "table": _table,
    "verify": _verify,
}


def dispatch(argv: list[str] | None = None) -> CommandResult:
    parser = _parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return CommandResult(int(exc.code or 0), {}, "", "")
    try:
        result = COMMANDS[args.command](args)
    except UsageError as exc:
        result = CommandResult(2, {"error": str(exc)}, "", f"error: {exc}")
    if args.json:
        result.text = json.dumps({"exit": result.code, **result.payload}, indent=1)
    return result


def main(argv: list[str] | None = None) -> int:
    result = dispatch(argv)
    if result.text:
        print(result.text)
    if result.stderr:
        print(result.stderr, file=sys.stderr)
    return result.code


if __name__ == "__main__":
    sys.exit(main())
