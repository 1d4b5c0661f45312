"""Command-line front end: ``epg lg|cy|hybrid|origin|verify``."""
from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

import jsonschema

from . import __version__
from .errors import NonCalabiYauError, SingularLeadingTermError
from .genus import (
    GenusReport,
    GroupSpec,
    HybridSpec,
    WeightSystem,
    cy_fermat_genus,
    hybrid_genus,
    lg_genus,
    origin_contrib_equivariant,
    weighted_cy_genus,
)
from .pseries import PuiseuxSeries
from .schemas import CAMPAIGN_SCHEMA, CHECK_LIST_SCHEMA, GENUS_SCHEMA, validate
from .verify import FAIL, INCONCLUSIVE, CheckReport, run_campaign, run_check

EXIT_OK, EXIT_FAIL, EXIT_PARSE, EXIT_SINGULAR, EXIT_INCONCLUSIVE = 0, 1, 2, 3, 4


class UsageError(ValueError):
    pass


def _int_list(text: str) -> tuple[int, ...]:
    try:
        vals = tuple(int(t) for t in text.split(",") if t.strip())
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None
    if not vals or any(v <= 0 for v in vals):
        raise argparse.ArgumentTypeError("weights must be positive integers")
    return vals


def _rational(text: str) -> Fraction:
    try:
        v = Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"expected a rational number, got {text!r}") from None
    if v < 0:
        raise argparse.ArgumentTypeError("must be >= 0")
    return v


def _group(text: str, n: int) -> GroupSpec:
    """Generators as ``a1,a2,...;b1,b2,...`` with rational phases."""
    gens = []
    for chunk in text.split(";"):
        phases = tuple(Fraction(t) % 1 for t in chunk.split(","))
        if len(phases) != n:
            raise UsageError(f"group generator {chunk!r} needs {n} phases")
        gens.append(phases)
    return GroupSpec(tuple(gens), n)


# ---------------------------------------------------------------------------
# output


def format_coeff(c) -> str:
    if c.is_rational():
        return str(c.to_fraction())
    parts = []
    for k, a in enumerate(c.coeffs):
        if a:
            parts.append(f"{a}" if k == 0 else f"{a}*z{c.order}^{k}")
    return "(" + " + ".join(parts) + ")"


def format_series(s: PuiseuxSeries) -> str:
    lines = []
    levels: dict[Fraction, list[str]] = {}
    for (eq, ey), c in s.items():
        levels.setdefault(eq, []).append(f"{format_coeff(c)} y^{ey}")
    for eq, terms in levels.items():
        body = " + ".join(terms).replace("+ -", "- ")
        lines.append(f"q^{eq}: {body}")
    if not lines:
        lines.append("0")
    lines.append(f"(exact for q-order <= {s.qmax} and |y-exponent| <= {s.ywindow}; N = {s.denom})")
    return "\n".join(lines)


def _dump(data) -> str:
    return json.dumps(data, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def emit_report(rep: GenusReport, fmt: str, out) -> None:
    if fmt == "json":
        data = rep.to_json()
        validate(data, GENUS_SCHEMA)
        out.write(_dump(data))
        return
    out.write(f"formula: {rep.formula}\n")
    out.write(f"params: {json.dumps(rep.params, sort_keys=True)}\n")
    out.write(f"dimension: {rep.dimension}  index: {rep.index}  cy_flag: {str(rep.cy_flag).lower()}\n")
    out.write(format_series(rep.series) + "\n")


def emit_checks(reports: list[CheckReport], fmt: str, out) -> int:
    if fmt == "json":
        data = [r.to_json() for r in reports]
        validate(data, CHECK_LIST_SCHEMA)
        out.write(_dump(data))
    else:
        for r in reports:
            line = f"{r.status.upper():12s} {r.name}"
            if r.detail:
                line += f"  {r.detail}"
            out.write(line + "\n")
    if any(r.status == FAIL for r in reports):
        return EXIT_FAIL
    if any(r.status == INCONCLUSIVE for r in reports):
        return EXIT_INCONCLUSIVE
    return EXIT_OK


# ---------------------------------------------------------------------------
# commands


def _window(args, default) -> Fraction:
    return args.ywindow if args.ywindow is not None else Fraction(default)


def cmd_lg(args) -> GenusReport:
    ws = WeightSystem(args.weights, args.degree)
    group = _group(args.group, ws.n) if args.group else None
    return lg_genus(ws, args.qmax, _window(args, ws.n + 4), group, args.denom, args.convention)


def cmd_cy(args) -> GenusReport:
    if args.fermat is not None:
        if args.weights is not None:
            raise UsageError("give either --fermat or --weights/--degree")
        return cy_fermat_genus(args.fermat, args.qmax, _window(args, args.fermat + 4), args.denom)
    if args.weights is None or args.degree is None:
        raise UsageError("cy needs --fermat N or --weights and --degree")
    ws = WeightSystem(args.weights, args.degree)
    return weighted_cy_genus(ws, args.qmax, _window(args, ws.n + 4), args.denom)


def cmd_hybrid(args) -> GenusReport:
    model = HybridSpec(args.n, args.m)
    return hybrid_genus(model, args.phase, args.qmax, _window(args, args.n + args.m + 4), args.denom)


def cmd_origin(args) -> GenusReport:
    ws = WeightSystem(args.weights, args.degree)
    return origin_contrib_equivariant(ws, args.c, args.qmax, _window(args, ws.n + 4), args.denom)


def _verify_params(args) -> list[dict]:
    base = {"qmax": args.qmax}
    if args.ywindow is not None:
        base["ywindow"] = args.ywindow
    kind = args.check
    if kind == "campaign":
        with open(args.file, encoding="utf-8") as fh:
            entries = json.load(fh)
        validate(entries, CAMPAIGN_SCHEMA)
        return entries
    if kind == "lgcy":
        p = dict(base, n=args.n)
        if args.cy_degree is not None:
            p["cy_degree"] = args.cy_degree
    elif kind in ("weighted", "origin", "spectrum"):
        p = dict(base, weights=list(args.weights), degree=args.degree)
        kind = {"weighted": "weighted_lgcy"}.get(kind, kind)
    elif kind == "hybrid":
        p = dict(base, n=args.n, m=args.m)
    elif kind == "jacobi":
        p = {"input": args.input}
    elif kind in ("numeric", "s_law"):
        with open(args.input, encoding="utf-8") as fh:
            rep = GenusReport.from_json(json.load(fh))
        return [{"check": kind, "report": rep, "params": {"precision": args.precision}}]
    else:  # pragma: no cover - argparse restricts the choices
        raise UsageError(kind)
    return [{"check": kind, "params": p}]


def cmd_verify(args) -> list[CheckReport]:
    entries = _verify_params(args)
    if entries and "report" in entries[0]:
        from .verify import check_numeric, check_s_law

        e = entries[0]
        if e["check"] == "numeric":
            return [check_numeric(e["report"], precision=args.precision)]
        return [check_s_law(e["report"], precision=args.precision)]
    return run_campaign(entries)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="epg", description="Exact q-expansions of orbifold elliptic genera.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--qmax", type=_rational, default=Fraction(2), help="largest q-exponent kept (default 2)")
    common.add_argument("--ywindow", type=_rational, default=None, help="largest |y-exponent| kept")
    common.add_argument("--denom", type=int, default=None, help="override the lattice denominator N")
    common.add_argument("--format", choices=("text", "json"), default="text")
    common.add_argument("--precision", type=int, default=30, help="decimal digits for numeric checks")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("lg", parents=[common], help="Landau-Ginzburg orbifold genus")
    p.add_argument("--weights", type=_int_list, required=True)
    p.add_argument("--degree", type=int, required=True)
    p.add_argument("--group", default=None, help="generators as phases, e.g. '1/2,1/2,0;0,1/2,1/2'")
    p.add_argument("--convention", choices=("phi", "display"), default="phi")

    p = sub.add_parser("cy", parents=[common], help="Calabi-Yau hypersurface genus")
    p.add_argument("--fermat", type=int, default=None, help="degree-n Fermat hypersurface in P^(n-1)")
    p.add_argument("--weights", type=_int_list, default=None)
    p.add_argument("--degree", type=int, default=None)

    p = sub.add_parser("hybrid", parents=[common], help="hybrid model genus")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--phase", choices=("h1", "h2", "h3"), required=True)

    p = sub.add_parser("origin", parents=[common], help="equivariant contribution of the origin")
    p.add_argument("--weights", type=_int_list, required=True)
    p.add_argument("--degree", type=int, required=True)
    p.add_argument("--c", type=Fraction, default=Fraction(1), help="equivariant parameter u = c*z")

    p = sub.add_parser("verify", parents=[common], help="run checks")
    vsub = p.add_subparsers(dest="check", required=True)
    v = vsub.add_parser("lgcy", parents=[common])
    v.add_argument("--n", type=int, required=True)
    v.add_argument("--cy-degree", type=int, default=None, help="compare against a different CY degree")
    for name in ("weighted", "origin", "spectrum"):
        v = vsub.add_parser(name, parents=[common])
        v.add_argument("--weights", type=_int_list, required=True)
        v.add_argument("--degree", type=int, required=True)
    v = vsub.add_parser("hybrid", parents=[common])
    v.add_argument("--n", type=int, required=True)
    v.add_argument("--m", type=int, required=True)
    for name in ("jacobi", "numeric", "s_law"):
        v = vsub.add_parser(name, parents=[common])
        v.add_argument("--input", required=True, help="GenusReport JSON file")
    v = vsub.add_parser("campaign", parents=[common])
    v.add_argument("--file", required=True, help="JSON list of {check, params}")
    return parser


COMMANDS = {"lg": cmd_lg, "cy": cmd_cy, "hybrid": cmd_hybrid, "origin": cmd_origin}


def main(argv=None, out=None, err=None) -> int:
    out = sys.stdout if out is None else out
    err = sys.stderr if err is None else err
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        if args.command == "verify":
            return emit_checks(cmd_verify(args), args.format, out)
        rep = COMMANDS[args.command](args)
        emit_report(rep, args.format, out)
        return EXIT_OK
    except SingularLeadingTermError as exc:
        err.write(f"epg: singular leading term in {exc.sector or 'a sector'}: {exc}\n")
        return EXIT_SINGULAR
    except (UsageError, NonCalabiYauError, ValueError, OSError, json.JSONDecodeError, KeyError, jsonschema.ValidationError) as exc:
        err.write(f"epg: {exc}\n")
        return EXIT_PARSE


if __name__ == "__main__":
    sys.exit(main())
