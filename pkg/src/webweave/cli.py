"""Command-line surface: parse tableaux and webs, run the transforms, drive
exhaustive verification campaigns, and emit SVG diagrams.

Exit codes: 0 success, 1 verification failure, 2 usage or parse error.
Machine output is JSON on stdout; diagnostics go to stderr.
"""
from __future__ import annotations

import argparse
import json
import sys

from .bijection import m_diagram, russell_web, tableau_of_web, web_of_2row
from .jdt import evacuate
from .render import render_matching_svg, render_mdiagram_svg, render_web_svg
from .tableau import (
    enumerate_russell,
    enumerate_standard,
    format_tableau,
    parse_tableau,
    standardize,
    Shape,
    tableau_to_json,
)
from .verify import CHECK_NAMES, Family, FamilyBoundError, TimeBudgetExceeded, run_verification
from .webcore import (
    Matching,
    canonicalize,
    matching_from_json,
    matching_to_json,
    reflect_matching,
    reflect_web,
    web_from_json,
    web_to_json,
)

USAGE_ERROR = 2
VERIFY_FAILURE = 1


def _read_input(path: str | None) -> str:
    if path in (None, "-"):
        return sys.stdin.read()
    with open(path, "r", encoding="utf-8") as handle:
        return handle.read()


def _parse_shape(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(part) for part in text.split(","))
    except ValueError:
        raise ValueError(f"bad shape {text!r}; expected comma-separated integers") from None


def _emit(text: str, output: str | None) -> None:
    if output in (None, "-"):
        sys.stdout.write(text if text.endswith("\n") else text + "\n")
    else:
        with open(output, "w", encoding="utf-8") as handle:
            handle.write(text)


def _cmd_evacuate(args) -> int:
    t = parse_tableau(_read_input(args.input))
    _emit(format_tableau(evacuate(t)), None)
    return 0


def _cmd_standardize(args) -> int:
    t = parse_tableau(_read_input(args.input))
    _emit(format_tableau(standardize(t)), None)
    return 0


def _object_from_tableau(t):
    if len(t.rows) == 2:
        return web_of_2row(t)
    if len(t.rows) == 3:
        return russell_web(t)
    raise ValueError(f"tableaux with {len(t.rows)} rows have no web family")


def _cmd_to_web(args) -> int:
    t = parse_tableau(_read_input(args.input))
    obj = _object_from_tableau(t)
    if args.canonical:
        _emit(str(obj.pairs) if isinstance(obj, Matching) else canonicalize(obj), None)
        return 0
    doc = matching_to_json(obj) if isinstance(obj, Matching) else web_to_json(obj)
    _emit(json.dumps(doc, separators=(",", ":")), None)
    return 0


def _load_web_or_matching(text: str):
    doc = json.loads(text)
    if "pairs" in doc:
        return matching_from_json(doc)
    return web_from_json(doc)


def _cmd_reflect(args) -> int:
    obj = _load_web_or_matching(_read_input(args.input))
    if isinstance(obj, Matching):
        doc = matching_to_json(reflect_matching(obj))
    else:
        doc = web_to_json(reflect_web(obj))
    _emit(json.dumps(doc, separators=(",", ":")), None)
    return 0


def _cmd_enumerate(args) -> int:
    shape = _parse_shape(args.shape)
    if args.repetition is None:
        tableaux = enumerate_standard(Shape(shape))
    else:
        if len(shape) != 3 or len(set(shape)) != 1:
            raise ValueError("--repetition needs a (k,k,k) shape")
        if args.repetition == "all":
            tableaux = []
            for h in range(0, 3 * shape[0]):
                tableaux.extend(enumerate_russell(shape[0], h))
        else:
            tableaux = enumerate_russell(shape[0], int(args.repetition))
    if args.json:
        _emit(json.dumps([tableau_to_json(t) for t in tableaux], separators=(",", ":")), None)
    else:
        _emit("\n\n".join(format_tableau(t) for t in tableaux), None)
    print(f"total {len(tableaux)}", file=sys.stderr)
    return 0


def _cmd_verify(args) -> int:
    shape = _parse_shape(args.shape)
    repetition = args.repetition
    if repetition is not None and repetition != "all":
        repetition = int(repetition)
    family = Family(shape, repetition)
    report = run_verification(family, args.check, jobs=args.jobs, max_seconds=args.max_seconds)
    if args.json:
        _emit(json.dumps(report.to_json(), separators=(",", ":")), None)
    else:
        _emit(report.summary(), None)
        for failure in report.failures:
            print(f"FAIL {failure}", file=sys.stderr)
    return 0 if report.ok else VERIFY_FAILURE


def _cmd_render(args) -> int:
    if args.format != "svg":
        raise ValueError(f"unsupported format {args.format!r}")
    text = _read_input(args.input)
    stripped = text.lstrip()
    if stripped.startswith("{"):
        obj = _load_web_or_matching(text)
        if args.stage == "mdiagram":
            raise ValueError("the m-diagram stage needs a tableau input")
    else:
        t = parse_tableau(text)
        if args.stage == "mdiagram":
            _emit(render_mdiagram_svg(m_diagram(standardize(t) if len(t.rows) == 3 else t)), args.output)
            return 0
        obj = _object_from_tableau(t)
    svg = render_matching_svg(obj) if isinstance(obj, Matching) else render_web_svg(obj)
    _emit(svg, args.output)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="webweave",
        description="Tableau transforms, tableau-web bijections, and exhaustive checks "
        "that web reflection matches tableau evacuation.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def with_input(p):
        p.add_argument("--input", default=None, help="input file (default: stdin)")
        return p

    with_input(sub.add_parser("evacuate", help="evacuate a straight-shape tableau"))
    with_input(sub.add_parser("standardize", help="standardize a Russell tableau"))

    to_web = with_input(sub.add_parser("to-web", help="map a tableau to its web or matching"))
    to_web.add_argument("--canonical", action="store_true", help="emit the canonical encoding")

    with_input(sub.add_parser("reflect", help="reflect a web or matching (JSON in, JSON out)"))

    enum = sub.add_parser("enumerate", help="list a tableau family")
    enum.add_argument("--shape", required=True, help="comma-separated parts, e.g. 3,3,3")
    enum.add_argument("--repetition", default=None, help="Russell repetition h, or 'all'")
    enum.add_argument("--json", action="store_true")

    verify = sub.add_parser("verify", help="run a property exhaustively over a family")
    verify.add_argument("--shape", required=True)
    verify.add_argument("--repetition", default=None)
    verify.add_argument("--check", required=True, choices=CHECK_NAMES)
    verify.add_argument("--jobs", type=int, default=1, help="worker processes (capped by WEBWEAVE_THREADS)")
    verify.add_argument("--max-seconds", type=float, default=None, help="time budget; also lifts the size bounds")
    verify.add_argument("--json", action="store_true")

    render = with_input(sub.add_parser("render", help="draw a tableau, web, or matching"))
    render.add_argument("--format", default="svg", help="output format (svg)")
    render.add_argument("--stage", default="web", choices=("web", "mdiagram"))
    render.add_argument("--output", default=None, help="output file (default: stdout)")

    return parser


_HANDLERS = {
    "evacuate": _cmd_evacuate,
    "standardize": _cmd_standardize,
    "to-web": _cmd_to_web,
    "reflect": _cmd_reflect,
    "enumerate": _cmd_enumerate,
    "verify": _cmd_verify,
    "render": _cmd_render,
}


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else USAGE_ERROR
    try:
        return _HANDLERS[args.command](args)
    except BrokenPipeError:
        return 0
    except (FamilyBoundError, TimeBudgetExceeded) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_ERROR
    except (ValueError, LookupError, OSError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_ERROR


if __name__ == "__main__":
    sys.exit(main())
