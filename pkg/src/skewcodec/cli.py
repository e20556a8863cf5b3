"""Command-line front end.

Exit codes: 0 success, 1 a reproduction entry failed, 2 bad input or spec,
3 a mathematical validation failed, 4 a search budget ran out.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

import tomli

from . import manifests as mf
from .errors import (
    BudgetExceeded,
    ContextMismatch,
    FieldError,
    ParseError,
    ShapeMismatch,
    SkewCodecError,
)
from .gf import GF, primitive_moduli
from .gray import gray_image_code, min_distance
from .mixedcode import CodeContext, code_from_spec, is_separable, minimal_generating_set
from .qecc import css, dual_containing_mixed
from .reproduce import reproduce
from .skewpoly import (
    SkewPoly,
    exact_right_quotient,
    format_poly,
    sp_gcd_left,
    sp_gcd_right,
    sp_lcm_left,
    sp_right_divisors,
)

EXIT_OK, EXIT_FAIL, EXIT_SPEC, EXIT_MATH, EXIT_BUDGET = 0, 1, 2, 3, 4

SPEC_ERRORS = (ParseError, FieldError, ShapeMismatch, ContextMismatch)
INPUT_ERRORS = (KeyError, ValueError, TypeError)


class CliError(Exception):
    def __init__(self, message: str, code: int):
        super().__init__(message)
        self.code = code


# -- helpers -----------------------------------------------------------------------


def load_spec(path: str) -> dict:
    p = Path(path)
    try:
        text = p.read_text()
    except OSError as e:
        raise CliError(f"cannot read {path}: {e}", EXIT_SPEC)
    try:
        if p.suffix == ".toml":
            return tomli.loads(text)
        return json.loads(text)
    except (json.JSONDecodeError, tomli.TOMLDecodeError) as e:
        raise CliError(f"cannot parse {path}: {e}", EXIT_SPEC)


def resolve_field(spec) -> dict:
    """A preset name such as "F9" or an explicit {p, m, modulus, frobenius_power} table."""
    if isinstance(spec, str):
        if spec not in mf.FIELDS:
            raise CliError(f"unknown field preset {spec!r}; known: {', '.join(mf.FIELDS)}", EXIT_SPEC)
        return dict(mf.FIELDS[spec])
    return spec


def context_from_args(args) -> CodeContext:
    if getattr(args, "spec", None):
        spec = load_spec(args.spec)
        fspec = resolve_field(spec.get("field", spec))
    elif args.field:
        fspec = resolve_field(args.field)
    elif args.p and args.m and args.modulus:
        fspec = {"p": args.p, "m": args.m, "modulus": [int(c) for c in args.modulus.split(",")]}
    else:
        raise CliError("give --field NAME, --spec FILE, or --p/--m/--modulus", EXIT_SPEC)
    if getattr(args, "frobenius_power", None):
        fspec = {**fspec, "frobenius_power": args.frobenius_power}
    ctx = CodeContext.from_spec(fspec)
    ctx.field.powers = True
    return ctx


def parse_operand(ctx: CodeContext, text: str) -> SkewPoly:
    """``w^3*x + 1`` style text, or comma-separated ascending coefficients ``1,w^3``."""
    if "x" in text:
        return ctx.fpoly(text)
    return ctx.fpoly([c.strip() for c in text.split(",")])


def emit(obj, human: bool, lines=None) -> None:
    if human and lines is not None:
        print("\n".join(lines))
    else:
        print(json.dumps(obj, indent=2, sort_keys=False))


def _deg_range(text: str | None) -> range:
    if not text:
        return range(0)
    if ".." in text:
        a, b = text.split("..")
        return range(int(a), int(b) + 1)
    return range(int(text), int(text) + 1)


# -- subcommands -------------------------------------------------------------------


def cmd_field(args) -> int:
    if args.moduli:
        p, m = args.p, args.m
        mods = primitive_moduli(p, m)
        emit({"p": p, "m": m, "count": len(mods), "moduli": mods}, args.human, [f"{len(mods)} primitive moduli"] + [str(x) for x in mods])
        return EXIT_OK
    ctx = context_from_args(args)
    F = ctx.field
    report = {
        "p": F.p,
        "m": F.m,
        "q": F.q,
        "modulus": list(F.modulus),
        "frobenius_power": ctx.i,
        "theta_order": ctx.order,
    }
    if args.eval:
        report["eval"] = {e: F.fmt(_eval_field(F, e)) for e in args.eval}
    emit(report, args.human, [f"{k}: {v}" for k, v in report.items()])
    return EXIT_OK


def _eval_field(F: GF, expr: str) -> int:
    """Products and sums of literals, e.g. ``w^3*w^5 + 2``."""
    total = 0
    for term in expr.split("+"):
        prod = 1
        for fac in term.split("*"):
            prod = F.mul(prod, F.parse(fac.strip()))
        total = F.add(total, prod)
    return total


SKEW_OPS = ("mul", "rdiv", "ldiv", "gcd", "lgcd", "lcm", "rec", "psi", "divisors")


def cmd_skew(args) -> int:
    ctx = context_from_args(args)
    ops = [parse_operand(ctx, o) for o in args.operands]
    op = args.op
    need = {"rec": 1, "psi": 1, "divisors": 0}.get(op, 2)
    if len(ops) != need:
        raise CliError(f"skew {op} takes {need} operand(s)", EXIT_SPEC)
    if op == "mul":
        out = {"product": format_poly(ops[0] * ops[1])}
    elif op in ("rdiv", "ldiv"):
        q, r = ops[0].divmod_right(ops[1]) if op == "rdiv" else ops[0].divmod_left(ops[1])
        out = {"quotient": format_poly(q), "remainder": format_poly(r)}
    elif op == "gcd":
        out = {"gcd_right": format_poly(sp_gcd_right(*ops))}
    elif op == "lgcd":
        out = {"gcd_left": format_poly(sp_gcd_left(*ops))}
    elif op == "lcm":
        out = {"lcm_left": format_poly(sp_lcm_left(*ops))}
    elif op == "rec":
        out = {"reciprocal": format_poly(ops[0].reciprocal())}
    elif op == "psi":
        out = {"psi": format_poly(ops[0].psi(args.k))}
    else:
        if args.n is None or args.degree is None:
            raise CliError("skew divisors needs --n and --degree", EXIT_SPEC)
        divs = sp_right_divisors(ctx.Fx, args.n, args.degree, args.budget or 10**6)
        out = {"n": args.n, "degree": args.degree, "divisors": [format_poly(g) for g in divs]}
    emit(out, args.human, [f"{k}: {v}" for k, v in out.items()])
    return EXIT_OK


CODE_ACTIONS = ("build", "gray", "distance", "dual", "qecc")


def cmd_code(args) -> int:
    if not args.spec:
        raise CliError("code needs --spec FILE", EXIT_SPEC)
    spec = load_spec(args.spec)
    spec["field"] = resolve_field(spec["field"])
    code = code_from_spec(spec)
    code.ctx.field.powers = True
    actions = args.actions or list(CODE_ACTIONS)
    unknown = set(actions) - set(CODE_ACTIONS)
    if unknown:
        raise CliError(f"unknown action(s) {sorted(unknown)}", EXIT_SPEC)
    report: dict = {}
    lc = dist = None
    if "build" in actions:
        report["build"] = {**code.summary(), "generating_set_size": len(minimal_generating_set(code)), "separable": is_separable(code)}
    if {"gray", "distance", "qecc"} & set(actions):
        lc = gray_image_code(code)
        report["gray"] = {"n": lc.n, "k": lc.k, "q": lc.field.q}
    if {"distance", "qecc"} & set(actions):
        dist = min_distance(lc, strategy=args.strategy, budget=args.budget, workers=args.workers)
        report["distance"] = dist.to_json()
        report["gray"]["params"] = lc.params(dist.distance)
    if "dual" in actions:
        from .duality import degree_law_holds, dual_cardinalities, dual_generators

        gens = dual_generators(code)
        report["dual"] = {**gens.to_json(), "cardinalities": dual_cardinalities(code), "degree_law": degree_law_holds(code, gens), "verified": True}
    if "qecc" in actions:
        dc = dual_containing_mixed(code)
        q = css(lc.n, lc.k, dist.distance, lc.field.q, dc, source="css")
        report["qecc"] = {**q.to_json(), "params": str(q)}
    lines = [f"{k}: {json.dumps(v)}" for k, v in report.items()]
    emit(report, args.human, lines)
    return EXIT_OK


def cmd_search(args) -> int:
    from .search import search

    ctx = context_from_args(args)
    try:
        found = search(
            ctx,
            args.r,
            args.s,
            _deg_range(args.deg_ell),
            _deg_range(args.deg_t),
            budget=args.budget or 10_000,
            start=args.resume,
            strategy=args.strategy,
        )
    except BudgetExceeded as e:
        part = e.partial or {}
        emit({"error": str(e), "resume": part.get("resume"), "candidates": [c.to_json() for c in part.get("candidates", [])]}, args.human, [str(e), f"resume with --resume {part.get('resume')}"])
        return EXIT_BUDGET
    rows = [c.to_json() for c in found]
    lines = [f"{c['qecc']}  defect {c['defect']}  ell={c['ell']}  t={c['t']}" for c in rows]
    emit({"count": len(rows), "candidates": rows}, args.human, lines or ["no candidates"])
    return EXIT_OK


def cmd_reproduce(args) -> int:
    which = args.which or list(mf.WHICH)
    bad = [w for w in which if w not in mf.WHICH]
    if bad:
        raise CliError(f"unknown manifest(s) {bad}; choose from {', '.join(mf.WHICH)}", EXIT_SPEC)
    results = reproduce(which, strategy=args.strategy, budget=args.budget, workers=args.workers, pool=args.pool)
    lines = []
    for res in results:
        lines.append(f"{res.verdict:4}  {res.id:14}  {res.citation}")
        lines += [f"      {d}" for d in res.diff_lines()]
    emit({"all_pass": all(r.verdict == "PASS" for r in results), "entries": [r.to_json() for r in results]}, args.human, lines)
    return EXIT_OK if all(r.verdict == "PASS" for r in results) else EXIT_FAIL


# -- parser ------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--spec", help="JSON or TOML spec file")
    common.add_argument("--budget", type=int, help="work budget (overrides SKEWCODEC_BUDGET)")
    common.add_argument("--strategy", default="auto", choices=["auto", "enumerate", "support", "support_search"])
    common.add_argument("--workers", type=int, default=1)
    common.add_argument("--human", action="store_true", help="plain text instead of JSON")

    fieldargs = argparse.ArgumentParser(add_help=False)
    fieldargs.add_argument("--field", help="preset name, e.g. F9")
    fieldargs.add_argument("--p", type=int)
    fieldargs.add_argument("--m", type=int)
    fieldargs.add_argument("--modulus", help="ascending coefficients, comma separated")
    fieldargs.add_argument("--frobenius-power", type=int)

    ap = argparse.ArgumentParser(prog="skewcodec", description=__doc__.splitlines()[0])
    sub = ap.add_subparsers(dest="command", required=True)

    f = sub.add_parser("field", parents=[common, fieldargs], help="field information")
    f.add_argument("--moduli", action="store_true", help="list primitive moduli for --p/--m")
    f.add_argument("--eval", nargs="*", help="evaluate expressions like 'w^3*w^5 + 2'")
    f.set_defaults(func=cmd_field)

    s = sub.add_parser("skew", parents=[common, fieldargs], help="skew polynomial calculator")
    s.add_argument("op", choices=SKEW_OPS)
    s.add_argument("operands", nargs="*")
    s.add_argument("--k", type=int, default=1, help="power for psi")
    s.add_argument("--n", type=int, help="length for divisors")
    s.add_argument("--degree", type=int, help="degree for divisors")
    s.set_defaults(func=cmd_skew)

    c = sub.add_parser("code", parents=[common], help="build and analyse a code from a spec")
    c.add_argument("actions", nargs="*", metavar="ACTION", help="any of " + ", ".join(CODE_ACTIONS))
    c.set_defaults(func=cmd_code)

    se = sub.add_parser("search", parents=[common, fieldargs], help="search dual-containing separable codes")
    se.add_argument("--r", type=int, default=0)
    se.add_argument("--s", type=int, default=0)
    se.add_argument("--deg-ell", help="degree or range a..b for ell")
    se.add_argument("--deg-t", help="degree or range a..b for each t_i")
    se.add_argument("--resume", type=int, default=0)
    se.set_defaults(func=cmd_search)

    r = sub.add_parser("reproduce", parents=[common], help="run built-in manifests")
    r.add_argument("which", nargs="*", help=", ".join(mf.WHICH))
    r.add_argument("--pool", type=int, default=1, help="entries run concurrently")
    r.set_defaults(func=cmd_reproduce)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except CliError as e:
        print(f"error: {e}", file=sys.stderr)
        return e.code
    except BudgetExceeded as e:
        print(f"budget exhausted: {e}", file=sys.stderr)
        return EXIT_BUDGET
    except SPEC_ERRORS as e:
        print(f"error: {type(e).__name__}: {e}", file=sys.stderr)
        return EXIT_SPEC
    except SkewCodecError as e:
        print(f"error: {type(e).__name__}: {e}", file=sys.stderr)
        return EXIT_MATH
    except INPUT_ERRORS as e:
        print(f"error: {type(e).__name__}: {e}", file=sys.stderr)
        return EXIT_SPEC


if __name__ == "__main__":
    sys.exit(main())
