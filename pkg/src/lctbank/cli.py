"""Command-line front end: ``lctbank {design,run,spectrum,gen,verify}``.

Exit codes: 0 when every requested check passes, 1 when a check fails or a
module raises, 2 for usage errors.
"""

from __future__ import annotations

import argparse
import logging
import math
import re
import sys

from . import io
from .construct import DEFAULT_GRID, bank_from_prototype, verify_bank
from .design import design_prototype
from .run import analysis, generate_multitone, run_pr_check, synthesis
from .transform import FrequencyGrid, LctParams, dtlct

log = logging.getLogger("lctbank")

_PI_RE = re.compile(r"^\s*([+-]?\d*\.?\d*)\s*\*?\s*pi\s*(?:/\s*(\d+\.?\d*))?\s*$")


def parse_angle(text: str) -> float:
    """Float, or a multiple of pi such as ``30pi/512`` or ``0.25*pi``."""
    m = _PI_RE.match(text)
    if m is None:
        try:
            return float(text)
        except ValueError:
            raise argparse.ArgumentTypeError(f"not a frequency: {text!r}") from None
    coef = m.group(1)
    coef = 1.0 if coef in ("", "+") else -1.0 if coef == "-" else float(coef)
    den = float(m.group(2)) if m.group(2) else 1.0
    return coef * math.pi / den


def _add_params(p: argparse.ArgumentParser, period_required: bool = True) -> None:
    g = p.add_argument_group("LCT parameters")
    g.add_argument("--frft-angle", type=parse_angle, help="FrFT angle; expands to (cos, sin, -sin, cos)")
    for k in "abcd":
        g.add_argument(f"--{k}", type=float)
    p.add_argument("--period", type=float, required=period_required, help="sample period T (s)")


def _params(args, parser) -> LctParams:
    quad = [getattr(args, k) for k in "abcd"]
    if args.frft_angle is not None:
        if any(v is not None for v in quad):
            parser.error("use either --frft-angle or --a/--b/--c/--d, not both")
        return LctParams.frft(args.frft_angle)
    if any(v is None for v in quad):
        parser.error("give --frft-angle or all of --a --b --c --d")
    return LctParams(*quad)


def cmd_design(args, parser) -> int:
    params = _params(args, parser)
    if args.prototype:
        taps = io.read_prototype(args.prototype)
    else:
        taps = design_prototype(args.order, args.transition, args.shape)
    fb = bank_from_prototype(taps, params, args.period)
    report = verify_bank(fb, FrequencyGrid(args.grid), ps_tol=args.tol, pu_tol=args.tol)
    io.write_bank(args.out, fb, report.to_dict())
    log.info("N=%d ps=%.3e pu=%.3e", fb.order, report.max_ps_error, report.max_pu_error)
    return 0 if report.passed else 1


def cmd_run(args, parser) -> int:
    fb = io.read_bank(args.bank)
    period = args.period if args.period is not None else io.read_period(args.input)
    x = io.read_signal(args.input, period if period is not None else fb.period)
    y0, y1 = analysis(x, fb)
    xhat = synthesis(y0, y1, fb)
    report, _ = run_pr_check(x, fb, FrequencyGrid(args.grid), pr_tol=args.tol, seed=args.seed)
    prefix = args.out_prefix
    io.write_signal(f"{prefix}y0.csv", y0)
    io.write_signal(f"{prefix}y1.csv", y1)
    io.write_signal(f"{prefix}xhat.csv", xhat)
    io.write_json(f"{prefix}report.json", report.to_dict())
    log.info("pr=%.3e pu=%.3e ps=%.3e", report.max_pr_error, report.max_pu_error, report.max_ps_error)
    return 0 if report.passed else 1


def cmd_spectrum(args, parser) -> int:
    if args.grid < 2:
        parser.error("--grid must be at least 2")
    params = _params(args, parser)
    x = io.read_signal(args.input, args.period)
    io.write_spectrum(args.out, dtlct(x, params, FrequencyGrid(args.grid)))
    return 0


def cmd_gen(args, parser) -> int:
    params = _params(args, parser)
    x = generate_multitone(args.peaks, args.length, params, args.period)
    io.write_signal(args.out, x)
    return 0


def cmd_verify(args, parser) -> int:
    fb = io.read_bank(args.bank)
    report = verify_bank(fb, FrequencyGrid(args.grid), ps_tol=args.tol, pu_tol=args.tol)
    print(f"N={fb.order} max_ps_error={report.max_ps_error:.3e} max_pu_error={report.max_pu_error:.3e}")
    if args.out:
        io.write_json(args.out, report.to_dict())
    return 0 if report.passed else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="lctbank", description=__doc__.splitlines()[0])
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("design", help="design a prototype and build the bank")
    p.add_argument("--order", type=int, default=14, help="half-band order 2N (N odd)")
    p.add_argument("--transition", type=float, default=0.2 * math.pi)
    p.add_argument("--shape", type=float, default=2.0, help="Kaiser window parameter")
    p.add_argument("--prototype", help="use taps from a k,re,im CSV instead of designing")
    p.add_argument("--grid", type=int, default=DEFAULT_GRID)
    p.add_argument("--tol", type=float, default=1e-8)
    p.add_argument("--out", required=True)
    _add_params(p)
    p.set_defaults(func=cmd_design)

    p = sub.add_parser("run", help="analyse, resynthesise and check PR")
    p.add_argument("bank")
    p.add_argument("input")
    p.add_argument("--out-prefix", required=True)
    p.add_argument("--period", type=float)
    p.add_argument("--grid", type=int, default=DEFAULT_GRID)
    p.add_argument("--tol", type=float, default=1e-9)
    p.add_argument("--seed", type=int)
    p.set_defaults(func=cmd_run)

    p = sub.add_parser("spectrum", help="DTLCT of a signal on a uniform grid over [0, 2pi)")
    p.add_argument("input")
    p.add_argument("--grid", type=int, default=1024)
    p.add_argument("--out", required=True)
    _add_params(p, period_required=False)
    p.set_defaults(func=cmd_spectrum)

    p = sub.add_parser("gen", help="multitone whose DTLCT peaks at the given frequencies")
    p.add_argument("--peaks", type=parse_angle, nargs="+", required=True)
    p.add_argument("--length", type=int, default=512)
    p.add_argument("--out", required=True)
    _add_params(p)
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("verify", help="recheck a bank JSON")
    p.add_argument("bank")
    p.add_argument("--grid", type=int, default=DEFAULT_GRID)
    p.add_argument("--tol", type=float, default=1e-8)
    p.add_argument("--out")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(message)s")
    try:
        return args.func(args, parser)
    except (ValueError, OSError) as exc:
        print(f"lctbank {args.command}: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
