"""cubicskein command line.

Exit status: 0 success (including report-only scans), 1 usage or parse error,
2 a requested assertion failed, 3 internal error.
"""
from __future__ import annotations

import argparse
import json
import sys

from . import __version__
from .ring import LaurentPoly, exact_divide, format_poly, parse_poly, phi_mirror

SCHEMA = "cubicskein/1"

EXIT_OK, EXIT_USAGE, EXIT_ASSERT, EXIT_INTERNAL = 0, 1, 2, 3


class UsageError(Exception):
    pass


class AssertionFailed(Exception):
    def __init__(self, message, payload=None):
        super().__init__(message)
        self.payload = payload


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        raise UsageError(message)


def _emit(args, payload: dict, text: str):
    if args.format == "json":
        print(json.dumps(dict({"schema": SCHEMA, "command": args.command}, **payload),
                         indent=2, sort_keys=False))
    else:
        print(text)


def _code(text: str):
    from .tangle_model import parse_conway
    return parse_conway(text)


def _closure(text):
    from .tangle_model import closure_from_text
    return closure_from_text(text)


def _poly(text: str) -> LaurentPoly:
    from .ring import trivial_component
    if text.strip() == "t":
        return trivial_component()
    return parse_poly(text)


# -- subcommands ----------------------------------------------------------------------

def cmd_eval(args):
    from .pretzel import eval_pretzel
    from .rta import eval_code
    from .tangle_model import format_conway, parse_pretzel
    if (args.code is None) == (args.pretzel is None):
        raise UsageError("give exactly one of --code or --pretzel")
    if args.code is not None:
        code = _code(args.code)
        value = eval_code(code, _closure(args.closure))
        src = {"code": format_conway(code), "closure": args.closure}
    else:
        if args.closure != "auto":
            raise UsageError("pretzel links always use the numerator closure")
        pz = parse_pretzel(args.pretzel)
        value = eval_pretzel(pz)
        src = {"pretzel": "P(%s)" % ",".join(map(str, pz))}
    _emit(args, dict(src, value=format_poly(value)), format_poly(value))


def _divisor(target: str) -> tuple[str, LaurentPoly]:
    from .relations import catalog
    if target == "hopf":
        target = "R_Hopf"
    for rel in catalog():
        if rel.name == target:
            if rel.value is None or not rel.value.den.is_monomial():
                raise UsageError("%s is not a single polynomial" % target)
            return target, rel.value.as_poly()
    try:
        with open(target, encoding="utf-8") as fh:
            return target, parse_poly(fh.read())
    except FileNotFoundError:
        raise UsageError("--divide-by: %r is neither hopf, a catalog name nor a file" % target) from None


def _division_payload(p: LaurentPoly, name: str, d: LaurentPoly) -> tuple[dict, str]:
    q = exact_divide(p, d)
    if q is None:
        return {"divisor": name, "divisible": False}, "not divisible by %s" % name
    return ({"divisor": name, "divisible": True, "quotient": format_poly(q)},
            "quotient by %s: %s" % (name, format_poly(q)))


def cmd_relation(args):
    from .relations import relation_between
    scale_a = _poly(args.scale_a) if args.scale_a else None
    scale_b = _poly(args.scale_b) if args.scale_b else None
    diff = relation_between(_code(args.a), _code(args.b), scale_a, scale_b,
                            _closure(args.closure_a), _closure(args.closure_b))
    payload, text = {"relation": format_poly(diff)}, format_poly(diff)
    if args.divide_by:
        name, d = _divisor(args.divide_by)
        extra, line = _division_payload(diff, name, d)
        payload.update(extra)
        text += "\n" + line
        if args.require_divisible and not extra["divisible"]:
            raise AssertionFailed("relation is not divisible by %s" % name, payload)
    _emit(args, payload, text)


def cmd_divide(args):
    p = _poly(args.num)
    if args.by:
        name, d = _divisor(args.by)
    elif args.den:
        name, d = args.den, _poly(args.den)
    else:
        raise UsageError("give --den or --by")
    payload, text = _division_payload(p, name, d)
    if args.require_divisible and not payload["divisible"]:
        raise AssertionFailed("not divisible", payload)
    _emit(args, payload, text)


def cmd_mirror(args):
    from .rta import eval_code
    if (args.code is None) == (args.poly is None):
        raise UsageError("give exactly one of --code or --poly")
    p = eval_code(_code(args.code)) if args.code else _poly(args.poly)
    m = phi_mirror(p)
    _emit(args, {"mirror": format_poly(m)}, format_poly(m))


def cmd_torus(args):
    from .rta import torus_annulus, torus_link
    if args.ambient == "s3":
        v = torus_link(args.n)
        _emit(args, {"n": args.n, "ambient": "s3", "value": format_poly(v)}, format_poly(v))
    else:
        combo = torus_annulus(args.n)
        body = combo.to_json()
        _emit(args, {"n": args.n, "ambient": "annulus", "combo": body},
              "\n".join("%s: %s" % kv for kv in body.items()))


def cmd_pretzel(args):
    from .pretzel import eval_pretzel_report
    from .tangle_model import parse_pretzel
    pz = parse_pretzel(args.code)
    res = eval_pretzel_report(pz)
    flags = ["P(%s)" % ",".join(map(str, f)) for f in sorted(res.zero_with_inf, key=str)]
    text = format_poly(res.value)
    if flags:
        text += "\nwarning: a 0 column met an inf column in %s" % ", ".join(flags)
    _emit(args, {"pretzel": "P(%s)" % ",".join(map(str, pz)), "value": format_poly(res.value),
                 "zero_with_inf": flags}, text)


def cmd_reduce3(args):
    from .tangle3 import basis_name, parse_word, reduce_word
    try:
        word = parse_word(args.word)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    combo = reduce_word(word, args.convention)
    body = combo.to_json()
    text = "\n".join("%s: %s" % kv for kv in body.items()) or "0"
    _emit(args, {"word": basis_name(word), "convention": args.convention, "combo": body}, text)


def cmd_color(args):
    from .colorings import count_fox_colorings
    from .tangle_model import format_conway
    code = _code(args.code)
    n = count_fox_colorings(code, args.p, _closure(args.closure))
    _emit(args, {"code": format_conway(code), "p": args.p, "colorings": n}, str(n))


def cmd_scan(args):
    from . import scans
    if args.max_len < 1 or args.max_entry < 1:
        raise UsageError("--max-len and --max-entry must be >= 1")
    if args.check == "hopf-divisibility":
        report = scans.hopf_scan(args.max_len, args.max_entry, args.workers)
    elif args.check == "col7":
        report = scans.col7_scan(args.max_len, args.max_entry, args.workers)
    else:
        report = scans.pretzel_bridge_scan(args.max_entry, args.workers)
    body = json.dumps(report.to_json(timing=not args.no_timing), indent=2)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(body + "\n")
    if args.format == "json" and not args.out:
        print(body)
    else:
        print("%s: %s (%d items, %d counterexamples)"
              % (report.check, report.verdict, len(report.items), len(report.counterexamples)))
    if report.verdict == "fail":
        raise AssertionFailed("hard check failed", None)


def cmd_catalog(args):
    from .relations import CatalogMismatch, catalog
    try:
        rels = catalog()
    except CatalogMismatch as exc:
        raise AssertionFailed("catalog check failed: %s" % exc) from None
    if args.name:
        rels = [r for r in rels if r.name == args.name]
        if not rels:
            raise UsageError("no relation named %r" % args.name)
    lines = []
    for r in rels:
        lines.append("%s: %s" % (r.name, r.note))
        if r.value is not None:
            lines.append("  numerator: %s" % r.value.num)
            lines.append("  denominator: %s" % r.value.den)
        if r.coeffs is not None:
            for k, v in r.coeffs.to_json().items():
                lines.append("  %s: %s" % (k, v))
    _emit(args, {"relations": [r.to_json() for r in rels]}, "\n".join(lines))


# -- parser ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="cubicskein", description="Cubic skein module computations.")
    p.add_argument("--version", action="version", version="%(prog)s " + __version__)
    sub = p.add_subparsers(dest="command", parser_class=_Parser)
    sub.required = True
    fmt = _Parser(add_help=False)
    fmt.add_argument("--format", choices=("text", "json"), default="text")
    closure = ("num", "den", "auto")

    s = sub.add_parser("eval", parents=[fmt], help="evaluate a rational or pretzel link")
    s.add_argument("--code")
    s.add_argument("--pretzel")
    s.add_argument("--closure", choices=closure, default="auto")
    s.set_defaults(func=cmd_eval)

    s = sub.add_parser("relation", parents=[fmt], help="difference of two evaluations")
    s.add_argument("--a", required=True)
    s.add_argument("--b", required=True)
    s.add_argument("--scale-a")
    s.add_argument("--scale-b")
    s.add_argument("--closure-a", choices=closure, default="auto")
    s.add_argument("--closure-b", choices=closure, default="auto")
    s.add_argument("--divide-by", help="hopf, a catalog name, or a file holding a polynomial")
    s.add_argument("--require-divisible", action="store_true")
    s.set_defaults(func=cmd_relation)

    s = sub.add_parser("divide", parents=[fmt], help="exact division of polynomials")
    s.add_argument("--num", required=True)
    s.add_argument("--den")
    s.add_argument("--by", help="hopf, a catalog name, or a file")
    s.add_argument("--require-divisible", action="store_true")
    s.set_defaults(func=cmd_divide)

    s = sub.add_parser("mirror", parents=[fmt], help="apply the mirror map")
    s.add_argument("--code")
    s.add_argument("--poly")
    s.set_defaults(func=cmd_mirror)

    s = sub.add_parser("torus", parents=[fmt], help="closures of n half twists")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--ambient", choices=("s3", "annulus"), default="s3")
    s.set_defaults(func=cmd_torus)

    s = sub.add_parser("pretzel", parents=[fmt], help="evaluate a pretzel link")
    s.add_argument("code", help='e.g. "P(2,1,-3,1)"')
    s.set_defaults(func=cmd_pretzel)

    s = sub.add_parser("reduce3", parents=[fmt], help="reduce a 3-tangle word to the basis")
    s.add_argument("--word", required=True, help='generators S1 S1i S2 S2i U1 U2, e.g. "S1 S2i U1"')
    s.add_argument("--convention", choices=("relation", "table"), default="relation")
    s.set_defaults(func=cmd_reduce3)

    s = sub.add_parser("color", parents=[fmt], help="count Fox p-colorings")
    s.add_argument("--code", required=True)
    s.add_argument("--p", type=int, required=True)
    s.add_argument("--closure", choices=closure, default="auto")
    s.set_defaults(func=cmd_color)

    s = sub.add_parser("scan", parents=[fmt], help="grid scans")
    s.add_argument("--check", choices=("hopf-divisibility", "col7", "pretzel-bridge"),
                   default="hopf-divisibility")
    s.add_argument("--max-len", type=int, default=3)
    s.add_argument("--max-entry", type=int, default=3)
    s.add_argument("--workers", type=int, help="process count (default: $CUBICSKEIN_WORKERS or all cores)")
    s.add_argument("--out")
    s.add_argument("--no-timing", action="store_true", help="omit wall time from the report")
    s.set_defaults(func=cmd_scan)

    s = sub.add_parser("catalog", parents=[fmt], help="named relations")
    s.add_argument("--name")
    s.set_defaults(func=cmd_catalog)
    return p


def main(argv=None) -> int:
    from .ring import RingError as _RingError
    from .tangle_model import CodeError
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        args.func(args)
        return EXIT_OK
    except UsageError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return EXIT_USAGE
    except (CodeError, _RingError) as exc:
        print("error: %s" % exc, file=sys.stderr)
        return EXIT_USAGE
    except AssertionFailed as exc:
        if exc.payload is not None:
            print(json.dumps(exc.payload, indent=2))
        print("assertion failed: %s" % exc, file=sys.stderr)
        return EXIT_ASSERT
    except ValueError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return EXIT_USAGE
    except SystemExit as exc:            # --help / --version
        return int(exc.code or 0)
    except Exception as exc:             # noqa: BLE001
        print("internal error: %s: %s" % (type(exc).__name__, exc), file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
