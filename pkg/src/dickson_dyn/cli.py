"""Command-line front end.

Exit status: 0 when everything requested was computed and verified, 1 when a
verification fails, 2 on a usage error (bad flags, q not a prime power, alpha
out of the allowed set, ...).
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from typing import Callable, TextIO

from . import _core
from .dickson import dickson_closed, dickson_reduced
from .dynamics import (
    OQ_CSV_HEADER,
    composition_period,
    construct_and_check_max_period,
    delta_rule_period,
    group_elements,
    iteration_structure,
    open_question_scan,
    quotient_period,
    record_alpha_text,
)
from .errors import DicksonError, NotSquareError
from .gf import FieldCtx, field_of_order, format_element, is_square, make_field, parse_element, prime_power
from .identities import (
    RotationCheck,
    ascending_offset_grid,
    full_rotation,
    grid_csv,
    half_rotation,
    render_grid,
    rotate180,
    verify_full_identity,
    verify_half_identity,
)
from .periodicity import PERIOD_CSV_HEADER, period_report, scan_periods, theoretical_period
from .polyring import format_poly, parse_csv_coeffs, reduce
from .recognition import recognize_brute, recognize_guess

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_USAGE = 2


class UsageError(Exception):
    pass


def _compact(obj) -> str:
    return json.dumps(obj, separators=(",", ":"))


def _field(q: int) -> FieldCtx:
    prime_power(q)
    return field_of_order(q)


def _alpha(ctx: FieldCtx, text: str, unit: bool = True) -> int:
    a = parse_element(ctx, text)
    if unit and a == 0:
        raise UsageError("alpha must be nonzero")
    return a


def _emit(lines: list[str], out_path: str | None, stdout: TextIO) -> None:
    text = "\n".join(lines) + "\n"
    if out_path:
        with open(out_path, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        stdout.write(text)


def _coeff_csv(ctx: FieldCtx, coeffs) -> str:
    return ",".join(format_element(ctx, c) for c in coeffs)


# -- subcommands --


def cmd_gen(args, out: TextIO) -> int:
    ctx = _field(args.q)
    alpha = _alpha(ctx, args.alpha, unit=False)
    if args.n < 0:
        raise UsageError("n must be nonnegative")
    if args.exact:
        coeffs = dickson_closed(args.n, alpha, ctx).coeffs
    else:
        coeffs = dickson_reduced(args.n, alpha, ctx).coeffs
    if args.format == "csv":
        out.write(_coeff_csv(ctx, coeffs) + "\n")
    else:
        out.write(format_poly(ctx, coeffs) + "\n")
    return EXIT_OK


def sequence_lines(ctx: FieldCtx, alpha: int) -> list[str]:
    """Header "e.p. = P" followed by D_1, ..., D_P modulo x^q - x, one per line."""
    pi = theoretical_period(ctx, alpha)
    lines = [f"e.p. = {pi}"]
    for n in range(1, pi + 1):
        lines.append(format_poly(ctx, dickson_reduced(n, alpha, ctx).coeffs))
    return lines


def cmd_sequence(args, out: TextIO) -> int:
    ctx = _field(args.q)
    alpha = _alpha(ctx, args.alpha)
    if args.format == "csv":
        pi = theoretical_period(ctx, alpha)
        lines = [f"e.p. = {pi}"]
        lines += [_coeff_csv(ctx, dickson_reduced(n, alpha, ctx).coeffs) for n in range(1, pi + 1)]
    else:
        lines = sequence_lines(ctx, alpha)
    _emit(lines, None, out)
    return EXIT_OK


def cmd_period(args, out: TextIO) -> int:
    ctx = _field(args.q)
    alphas = [_alpha(ctx, args.alpha)] if args.alpha is not None else list(ctx.units())
    reports = [period_report(ctx, a) for a in alphas]
    _emit([PERIOD_CSV_HEADER] + [r.csv_row() for r in reports], None, out)
    return EXIT_OK if all(r.agrees for r in reports) else EXIT_FAIL


def cmd_scan_periods(args, out: TextIO) -> int:
    if args.qmax < 2:
        raise UsageError("--qmax must be at least 2")
    reports = scan_periods(args.qmax, jobs=args.jobs)
    if args.format == "json":
        lines = [
            _compact({"q": r.q, "alpha": r.alpha_text, "square_flag": r.square,
                      "theoretical": r.theoretical, "empirical": r.empirical, "agrees": r.agrees})
            for r in reports
        ]
    else:
        lines = [PERIOD_CSV_HEADER] + [r.csv_row() for r in reports]
    _emit(lines, args.out, out)
    return EXIT_OK if all(r.agrees for r in reports) else EXIT_FAIL


def _show_rotation(ctx: FieldCtx, name: str, check: RotationCheck, args, out: TextIO) -> None:
    if args.render:
        show = grid_csv if args.format == "csv" else render_grid
        out.write(f"[{name}] {check.left.source}\n{show(ctx, check.left)}\n")
        out.write(f"[{name}] rotate180\n{show(ctx, rotate180(check.left))}\n")
        out.write(f"[{name}] {check.right.source}\n{show(ctx, check.right)}\n")
    out.write(f"{name} ROTATION {'OK' if check.ok else 'FAIL'}\n")


def cmd_identity(args, out: TextIO) -> int:
    ctx = _field(args.q)
    if ctx.p == 2:
        raise UsageError("the coefficient identities are stated for odd q")
    alpha = _alpha(ctx, args.alpha)
    ok = True
    if args.which in ("full", "both"):
        holds = verify_full_identity(ctx, alpha)
        out.write(f"full identity {'OK' if holds else 'FAIL'}\n")
        check = full_rotation(ctx, alpha)
        _show_rotation(ctx, "full", check, args, out)
        ok = ok and holds and check.ok
    if args.which in ("half", "both"):
        if not is_square(ctx, alpha):
            if args.which == "half":
                raise NotSquareError("the half identity needs a square alpha")
            out.write("half identity skipped (alpha is not a square)\n")
        else:
            holds = verify_half_identity(ctx, alpha)
            out.write(f"half identity {'OK' if holds else 'FAIL'}\n")
            check = half_rotation(ctx, alpha)
            _show_rotation(ctx, "half", check, args, out)
            ok = ok and holds and check.ok
    if args.ascending:
        g = ascending_offset_grid(ctx, alpha)
        show = grid_csv if args.format == "csv" else render_grid
        out.write(f"[ascending] {g.source}\n{show(ctx, g)}\n")
    return EXIT_OK if ok else EXIT_FAIL


def cmd_group(args, out: TextIO) -> int:
    ctx = _field(args.q)
    alphas = [_alpha(ctx, args.alpha)] if args.alpha is not None else list(ctx.units())
    ok = True
    for a in alphas:
        rep = group_elements(ctx, a)
        out.write(
            _compact({
                "q": rep.q,
                "alpha": format_element(ctx, a),
                "period": rep.period,
                "order": len(rep.elements),
                "valid_units": rep.valid_unit_count,
                "kernel": sorted(rep.kernel),
                "predicted_kernel": sorted(rep.predicted_kernel),
                "identity": rep.has_identity,
                "closed": rep.closed,
                "inverses": rep.has_inverses,
                "ok": rep.ok,
            }) + "\n"
        )
        ok = ok and rep.ok
    return EXIT_OK if ok else EXIT_FAIL


def cmd_dynamics(args, out: TextIO) -> int:
    ctx = _field(args.q)
    alpha = _alpha(ctx, args.alpha)
    a_txt = format_element(ctx, alpha)
    if args.n is None:
        rec = construct_and_check_max_period(ctx, alpha)
        out.write(_compact({
            "q": rec.q, "alpha": a_txt, "n": rec.n, "method": rec.method, "period": rec.period,
            "formula_lcm": rec.formula_lcm, "exhaustive_max": rec.exhaustive_max,
            "exhaustive_argmax": rec.exhaustive_argmax, "achieves_max": rec.achieves_max,
        }) + "\n")
        return EXIT_OK
    if args.n < 1:
        raise UsageError("n must be positive")
    rec = iteration_structure(ctx, alpha, args.n)
    row = {"q": rec.q, "alpha": a_txt, "n": rec.n, "l": rec.l, "k": rec.k,
           "poly_l": rec.poly_l, "poly_k": rec.poly_k}
    if math.gcd(args.n, ctx.q * ctx.q - 1) == 1:
        row["composition_period"] = composition_period(ctx, alpha, args.n)
        row["quotient_period"] = quotient_period(ctx, alpha, args.n)
        row["delta_rule_period"] = str(delta_rule_period(ctx, alpha, args.n))
    out.write(_compact(row) + "\n")
    ok = rec.tail_lemma_holds and rec.odd_k_holds
    return EXIT_OK if ok else EXIT_FAIL


def cmd_oq_scan(args, out: TextIO) -> int:
    if args.qmax < 2:
        raise UsageError("--qmax must be at least 2")
    scan = open_question_scan(args.qmax, jobs=args.jobs)
    if args.format == "json":
        lines = scan.json_lines(record_alpha_text)
    else:
        lines = scan.csv_lines(record_alpha_text)
    _emit(lines, args.out, out)
    if scan.violations:
        for r in scan.violations:
            sys.stderr.write(f"violation: q={r.q} alpha={record_alpha_text(r)} n={r.n}\n")
        return EXIT_FAIL
    return EXIT_OK


def cmd_recognize(args, out: TextIO) -> int:
    ctx = _field(args.q)
    g = reduce(parse_csv_coeffs(ctx, args.poly))
    if args.method == "brute":
        out.write(_compact(recognize_brute(g, ctx).to_json(ctx)) + "\n")
        return EXIT_OK
    if args.method == "guess":
        out.write(_compact(recognize_guess(g, ctx).to_json(ctx)) + "\n")
        return EXIT_OK
    b = recognize_brute(g, ctx)
    u = recognize_guess(g, ctx)
    agree = b.is_dickson == u.is_dickson
    out.write(_compact({
        "brute": b.to_json(ctx),
        "guess": u.to_json(ctx),
        "agree": agree,
        "same_witness": b == u,
    }) + "\n")
    return EXIT_OK if agree else EXIT_FAIL


def cmd_field_info(args, out: TextIO) -> int:
    ctx = _field(args.q)
    modulus = format_poly(make_field(ctx.p), ctx.modulus).replace("x", "z") if ctx.s > 1 else None
    out.write(_compact({
        "q": ctx.q,
        "p": ctx.p,
        "s": ctx.s,
        "modulus": modulus,
        "generator": format_element(ctx, ctx.generator),
        "squares": [format_element(ctx, a) for a in ctx.units() if is_square(ctx, a)],
        "backend": _core.BACKEND,
    }) + "\n")
    return EXIT_OK


# -- parser --


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="dickson-dyn",
        description="Dickson polynomials over finite fields: generation, periods, identities, dynamics, recognition.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name: str, func: Callable, help_text: str) -> argparse.ArgumentParser:
        p = sub.add_parser(name, help=help_text)
        p.set_defaults(func=func)
        return p

    p = add("gen", cmd_gen, "print D_n(x, alpha)")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--alpha", required=True, help="field element, e.g. -1, 3, z, z^2+1 (0 gives x^n)")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--exact", action="store_true", help="print the unreduced polynomial")
    p.add_argument("--format", choices=("text", "csv"), default="text")

    p = add("sequence", cmd_sequence, "print D_1 .. D_P modulo x^q - x over one exact period")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--alpha", required=True)
    p.add_argument("--format", choices=("text", "csv"), default="text")

    p = add("period", cmd_period, "theoretical against measured period")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--alpha", default=None, help="default: every unit")

    p = add("scan-periods", cmd_scan_periods, "period check for all prime powers q <= qmax")
    p.add_argument("--qmax", type=int, required=True)
    p.add_argument("--out", default=None)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--format", choices=("csv", "json"), default="csv")

    p = add("identity", cmd_identity, "verify the reversal identities and coefficient-grid rotations")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--alpha", required=True)
    p.add_argument("--which", choices=("full", "half", "both"), default="both")
    p.add_argument("--render", action="store_true", help="print the coefficient grids")
    p.add_argument("--ascending", action="store_true",
                   help="also print the ascending even-coefficient grid of D_{q^2-1} (q columns, one leading blank)")
    p.add_argument("--format", choices=("text", "csv"), default="text")

    p = add("group", cmd_group, "composition group of reduced Dickson permutations")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--alpha", default=None, help="default: every unit")

    p = add("dynamics", cmd_dynamics, "iteration structure of D_n, or the maximal-period construction")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--alpha", required=True)
    p.add_argument("--n", type=int, default=None, help="omit to run the maximal-period construction")

    p = add("oq-scan", cmd_oq_scan, "iteration structures with even integer period, q <= qmax")
    p.add_argument("--qmax", type=int, required=True)
    p.add_argument("--out", default=None)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--format", choices=("csv", "json"), default="csv")

    p = add("recognize", cmd_recognize, "decide whether a polynomial is a Dickson polynomial mod x^q - x")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--poly", required=True, help='ascending coefficients "c0,c1,..."')
    p.add_argument("--method", choices=("brute", "guess", "both"), default="brute")

    p = add("field-info", cmd_field_info, "modulus, generator and squares of F_q")
    p.add_argument("--q", type=int, required=True)
    return parser


def main(argv: list[str] | None = None, stdout: TextIO | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    out = stdout if stdout is not None else sys.stdout
    if getattr(args, "jobs", 1) < 1:
        sys.stderr.write("error: --jobs must be at least 1\n")
        return EXIT_USAGE
    try:
        return args.func(args, out)
    except (UsageError, DicksonError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_USAGE


__all__ = ["OQ_CSV_HEADER", "build_parser", "main", "sequence_lines"]
