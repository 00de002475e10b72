"""Command-line interface: ``surfcover {cover,debase,check,standardize}``.

Input documents are plain text::

    x = (t*(s^2+s+1)+s)/(s*(s-1))
    y = ...
    z = ...
    F = ...        # optional implicit equation in x, y, z
    seed = 0       # optional

Blank lines and ``#`` comments are ignored.  Every field may also be given as a
flag (``--x --y --z --implicit --seed``), which overrides the file.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from dataclasses import dataclass

from .debase import debase
from .oracle import cover_crosscheck, implicit_check
from .parse import ParseError, parse_expr, parse_poly
from .ruledcover import BudgetExhausted, NotRuledForm, PipelineError, cover, detect_ruled_form, standardize

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_NOT_RULED = 2
EXIT_BUDGET = 3
EXIT_CHECK_FAILED = 4

PARAM_VARS = ("s", "t")
SPACE_VARS = ("x", "y", "z")


class InputError(ValueError):
    pass


@dataclass
class InputDoc:
    components: tuple
    implicit: str | None = None
    seed: int = 0

    def parsed_components(self):
        return [parse_expr(c, PARAM_VARS) for c in self.components]

    def parsed_implicit(self):
        if self.implicit is None:
            raise InputError("no implicit equation given (F = ... or --implicit)")
        return parse_poly(self.implicit, SPACE_VARS)


def read_fields(text: str) -> dict:
    fields = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        key, sep, value = line.partition("=")
        key = key.strip()
        if not sep or key not in ("x", "y", "z", "F", "seed"):
            raise InputError(f"line {lineno}: expected 'x|y|z|F|seed = ...', got {raw!r}")
        if key in fields:
            raise InputError(f"line {lineno}: duplicate field {key!r}")
        fields[key] = value.strip()
    return fields


def load_input(args) -> InputDoc:
    fields = {}
    if args.input is not None:
        if args.input == "-":
            text = sys.stdin.read()
        else:
            with open(args.input, encoding="utf-8") as fh:
                text = fh.read()
        fields = read_fields(text)
    for key, flag in (("x", args.x), ("y", args.y), ("z", args.z), ("F", args.implicit)):
        if flag is not None:
            fields[key] = flag
    if args.seed is not None:
        fields["seed"] = str(args.seed)
    missing = [k for k in ("x", "y", "z") if k not in fields]
    if missing:
        raise InputError(f"missing component(s) {', '.join(missing)}")
    try:
        seed = int(fields.get("seed", "0"))
    except ValueError:
        raise InputError(f"seed must be an integer, got {fields['seed']!r}") from None
    return InputDoc((fields["x"], fields["y"], fields["z"]), fields.get("F"), seed)


def cmd_cover(doc: InputDoc, args) -> tuple:
    report = cover(
        doc.parsed_components(),
        seed=doc.seed,
        max_attempts=args.max_attempts,
        k=args.k,
        offset_sign=args.offset_sign,
    )
    return EXIT_OK, report.to_json()


def cmd_debase(doc: InputDoc, args) -> tuple:
    res = debase(doc.parsed_components(), seed=doc.seed, max_attempts=args.max_attempts)
    return EXIT_OK, {
        "result": [str(c) for c in res.param.components()],
        "interpolant": None if res.f is None else str(res.f),
        "shears": [int(lam) if lam.denominator == 1 else str(lam) for lam in res.shears],
        "base_points_before": [str(g) for g in res.radicals[0]],
        "log": [e.to_json() for e in res.log],
    }


def cmd_check(doc: InputDoc, args) -> tuple:
    F = doc.parsed_implicit()
    comps = doc.parsed_components()
    out = {"implicit_check": implicit_check(comps, F)}
    if args.cover:
        report = cover(
            comps, seed=doc.seed, max_attempts=args.max_attempts, k=args.k, offset_sign=args.offset_sign
        )
        out["cover_crosscheck"] = cover_crosscheck(report, F, seed=doc.seed).to_json()
    passed = out["implicit_check"] and out.get("cover_crosscheck", {}).get("passed", True)
    out["passed"] = passed
    return (EXIT_OK if passed else EXIT_CHECK_FAILED), out


def cmd_standardize(doc: InputDoc, args) -> tuple:
    std = standardize(detect_ruled_form(doc.parsed_components()), seed=doc.seed, max_attempts=args.max_attempts)
    return EXIT_OK, {
        "result": [str(c) for c in std.param.components()],
        "log": [e.to_json() for e in std.log],
    }


COMMANDS = {
    "cover": cmd_cover,
    "debase": cmd_debase,
    "check": cmd_check,
    "standardize": cmd_standardize,
}


def _text(obj, indent: str = "") -> str:
    lines = []
    if isinstance(obj, dict):
        for k, v in obj.items():
            if isinstance(v, (dict, list)) and v:
                lines.append(f"{indent}{k}:")
                lines.append(_text(v, indent + "  "))
            else:
                lines.append(f"{indent}{k}: {json.dumps(v)}")
    elif isinstance(obj, list):
        for v in obj:
            if isinstance(v, (dict, list)):
                lines.append(f"{indent}-")
                lines.append(_text(v, indent + "  "))
            else:
                lines.append(f"{indent}- {v}")
    else:
        lines.append(f"{indent}{obj}")
    return "\n".join(lines)


def render(obj, fmt: str) -> str:
    if fmt == "text":
        return _text(obj) + "\n"
    return json.dumps(obj, indent=2, ensure_ascii=False) + "\n"


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="surfcover",
        description="Exact covering and base-point removal for rational surface parametrizations.",
    )
    parser.add_argument("-v", "--verbose", action="store_true", help="log pipeline decisions to stderr")
    sub = parser.add_subparsers(dest="command", required=True)
    for name in COMMANDS:
        p = sub.add_parser(name)
        p.add_argument("input", nargs="?", help="input document, '-' for stdin")
        p.add_argument("--x")
        p.add_argument("--y")
        p.add_argument("--z")
        p.add_argument("--implicit", help="implicit equation F(x, y, z)")
        p.add_argument("--seed", type=int)
        p.add_argument("--format", choices=("json", "text"), default="json")
        p.add_argument("--max-attempts", type=int, default=32)
        if name in ("cover", "check"):
            p.add_argument(
                "--k",
                type=int,
                choices=(1, 2, 3),
                help="component whose line parameter builds the second chart (default: first with p_k != 0)",
            )
            p.add_argument(
                "--offset-sign",
                type=int,
                choices=(-1, 1),
                default=-1,
                help="sign of the translation term in the second chart",
            )
        if name == "check":
            p.add_argument("--cover", action="store_true", help="also run cover and cross-check both charts")
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING, format="%(name)s: %(message)s")
    try:
        doc = load_input(args)
        code, out = COMMANDS[args.command](doc, args)
    except NotRuledForm as exc:
        print(f"error: not in ruled form: {exc}", file=sys.stderr)
        return EXIT_NOT_RULED
    except BudgetExhausted as exc:
        print(f"error: retry budget exhausted: {exc}", file=sys.stderr)
        return EXIT_BUDGET if args.command == "debase" else EXIT_ERROR
    except (InputError, ParseError, OSError, PipelineError, ArithmeticError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR
    sys.stdout.write(render(out, args.format))
    return code


if __name__ == "__main__":
    sys.exit(main())
