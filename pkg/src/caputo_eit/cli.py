"""Command-line interface.

Subcommands
-----------
eval       Caputo derivative of one catalog entry on an (alpha, x) grid.
figure     Data behind one figure panel (1a, 1b, 2a, 2b, 3a, 3b, 4, 5).
compare    Caputo against Liouville-Caputo for sin and the Gaussian.
eit-check  Euler transform series against direct quadrature of its integral.
validate   Run the acceptance suite.

Exit codes: 0 success, 2 domain or usage error, 3 numerical failure.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys
from dataclasses import dataclass, replace

import numpy as np

from . import __version__
from .acceptance import eit_check_point, run_all
from .catalog import CaputoRequest, CatalogEntry, Kind, build_kernel, caputo
from .eit import eit_numeric_check, eit_transform, simplify_params
from .errors import DomainError, NumericalError, PrecisionInsufficient, UnsupportedComparison
from .figures import DEFAULT_ALPHAS, DEFAULT_POINTS, FIGURES, figure_rows
from .oracle import asymptotic_residual, lc_gaussian_hermite, lc_gaussian_kummer, lc_harmonic
from .precision import DEFAULT, PrecisionConfig
from .specfun import pfq

EXIT_OK, EXIT_DOMAIN, EXIT_NUMERICAL = 0, 2, 3

FUNCTIONS = [k.value for k in Kind] + ["gaussian"]


@dataclass(frozen=True)
class RunConfig:
    command: str
    entry: CatalogEntry | None
    alphas: tuple[float, ...]
    xs: tuple[float, ...]
    precision: PrecisionConfig
    output: str | None
    fmt: str

    def __post_init__(self):
        if not self.alphas:
            raise DomainError("need at least one alpha")
        if any(not 0.0 <= a <= 1.0 for a in self.alphas):
            raise DomainError(f"alpha values must lie in [0, 1], got {list(self.alphas)}")
        if any(not x >= 0.0 for x in self.xs):
            raise DomainError("x values must be >= 0")


def _fmt(v) -> str:
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, (int, np.integer)):
        return str(int(v))
    if isinstance(v, (float, np.floating)):
        return format(float(v) + 0.0, ".17g")
    return str(v)


def _json_value(v):
    if isinstance(v, (float, np.floating)):
        v = float(v)
        return v if math.isfinite(v) else None
    return v


def write_rows(header: list[str], rows: list[tuple], fmt: str, output: str | None) -> None:
    if fmt == "json":
        text = json.dumps([{k: _json_value(v) for k, v in zip(header, r)} for r in rows], indent=1) + "\n"
    else:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(header)
        for r in rows:
            w.writerow([_fmt(v) for v in r])
        text = buf.getvalue()
    if output is None or output == "-":
        sys.stdout.write(text)
    else:
        with open(output, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)


def _entry(args) -> CatalogEntry | None:
    fn = getattr(args, "fn", None)
    if fn is None:
        return None
    if fn == "gaussian":
        return CatalogEntry(Kind.ExpPow, n=2, beta=args.beta)
    if fn == "lorentzian":
        return CatalogEntry(Kind.Lorentzian, beta=args.gamma)
    return CatalogEntry(Kind(fn), n=args.n, beta=args.beta, xi=args.xi)


def _xs(args) -> tuple[float, ...]:
    if getattr(args, "x_range", None) is not None:
        lo, hi, pts = args.x_range
        if int(pts) != pts or pts < 2:
            raise DomainError(f"--x-range needs at least 2 points, got {pts}")
        if hi < lo:
            raise DomainError(f"--x-range needs min <= max, got {lo} > {hi}")
        return tuple(float(v) for v in np.linspace(lo, hi, int(pts)))
    if getattr(args, "x", None):
        return tuple(args.x)
    return ()


def _precision(args) -> PrecisionConfig:
    cfg = DEFAULT
    if args.precision_digits is not None:
        cfg = replace(cfg, working_digits=args.precision_digits)
    if args.tol is not None:
        cfg = replace(cfg, rel_tol=args.tol)
    return cfg


def run_config(args) -> RunConfig:
    alphas = getattr(args, "alpha", None) or ()
    if args.command == "figure" and not alphas:
        alphas = DEFAULT_ALPHAS
    if args.command == "validate":
        alphas = (0.5,)
    try:
        precision = _precision(args)
    except ValueError as exc:
        raise DomainError(str(exc)) from None
    return RunConfig(args.command, _entry(args), tuple(alphas), _xs(args), precision, args.output, args.format)


def _need_grid(rc: RunConfig):
    if not rc.xs:
        raise DomainError("give --x values or --x-range MIN MAX POINTS")


def cmd_eval(rc: RunConfig) -> int:
    _need_grid(rc)
    complex_out = rc.entry.kind is Kind.PlaneWave
    rows, ok = [], True
    for x in rc.xs:
        for a in rc.alphas:
            res = caputo(CaputoRequest(rc.entry, a, x), rc.precision)
            v = complex(res.value)
            head = (x, a, v.real, v.imag) if complex_out else (x, a, v.real)
            rows.append(head + (res.abs_error_estimate, res.terms_used, res.converged))
            ok &= res.converged
    header = ["x", "alpha", "value"] + (["value_imag"] if complex_out else []) + ["abs_error", "terms", "converged"]
    write_rows(header, rows, rc.fmt, rc.output)
    if not ok:
        print("error: some series did not reach the requested tolerance", file=sys.stderr)
        return EXIT_NUMERICAL
    return EXIT_OK


def cmd_figure(figure_id: str, points: int, rc: RunConfig) -> int:
    if points < 2:
        raise DomainError(f"--points must be >= 2, got {points}")
    rows = figure_rows(figure_id, rc.alphas, points, rc.precision)
    write_rows(["x", "alpha", "value"], rows, rc.fmt, rc.output)
    return EXIT_OK


def _scaled_residual(a, beta, x, cfg) -> float:
    if not 0.0 < a < 1.0 or x == 0.0:
        return math.nan
    try:
        return asymptotic_residual(a, beta, x, cfg)[1]
    except PrecisionInsufficient as exc:
        print(f"warning: scaled residual at alpha={a}, x={x} not certified: {exc}", file=sys.stderr)
        return math.nan


def cmd_compare(rc: RunConfig) -> int:
    _need_grid(rc)
    e = rc.entry
    if e.kind is Kind.SinPow and e.n == 1:
        header = ["x", "alpha", "value", "lc", "difference", "scaled_residual"]
        rows = []
        for x in rc.xs:
            for a in rc.alphas:
                v = caputo(CaputoRequest(e, a, x), rc.precision).value
                lc, _ = lc_harmonic(a, e.beta, x)
                rows.append((x, a, v, lc, v - lc, _scaled_residual(a, e.beta, x, rc.precision)))
    elif e.kind is Kind.ExpPow and e.n == 2:
        # exp(-(beta x)^2) is the Gaussian exp(-b x^2) with b = beta^2
        b = e.beta**2
        header = ["x", "alpha", "value", "lc_kummer", "lc_hermite", "difference", "kummer_hermite_gap"]
        rows = []
        for x in rc.xs:
            for a in rc.alphas:
                v = caputo(CaputoRequest(e, a, x), rc.precision).value
                k = lc_gaussian_kummer(a, b, x, rc.precision)
                h = lc_gaussian_hermite(a, b, x, rc.precision)
                rows.append((x, a, v, k, h, v - k, abs(k - h)))
    else:
        raise UnsupportedComparison(
            f"no Liouville-Caputo closed form for {e.kind.value} (n={e.n}); use sin (n=1) or gaussian"
        )
    write_rows(header, rows, rc.fmt, rc.output)
    return EXIT_OK


def cmd_eit_check(rc: RunConfig, tol: float = 1e-9) -> int:
    _need_grid(rc)
    rows, ok = [], True
    for x in rc.xs:
        for a in rc.alphas:
            if x == 0.0:
                # argument vanishes: the integral is a bare beta function
                kernel = replace(build_kernel(rc.entry, a, 1.0), prefactor=1.0, reduced_prefactor=None, x=0.0)
                quad = eit_numeric_check(kernel, rc.precision)
                series = pfq(simplify_params(eit_transform(kernel)), 0.0, rc.precision).value
                gap = abs(quad - series) / max(1.0, abs(series))
            else:
                quad, series, gap = eit_check_point(rc.entry, a, x, rc.precision)
            passed = gap <= tol
            ok &= passed
            rows.append((x, a, quad, series, gap, passed))
    write_rows(["x", "alpha", "value", "series", "rel_diff", "pass"], rows, rc.fmt, rc.output)
    if not ok:
        print(f"error: quadrature and series differ by more than {tol:g} relative", file=sys.stderr)
        return EXIT_NUMERICAL
    return EXIT_OK


def cmd_validate(rc: RunConfig) -> int:
    results = run_all(rc.precision, echo=print)
    failed = [r.number for r in results if not r.passed]
    print(f"{len(results) - len(failed)}/{len(results)} criteria passed")
    return EXIT_NUMERICAL if failed else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("csv", "json"), default="csv")
    common.add_argument("--output", "-o", help="output file (default stdout)")
    common.add_argument("--precision-digits", type=int, help="starting working precision in decimal digits")
    common.add_argument("--tol", type=float, help="relative tolerance of the series sums")

    grid = argparse.ArgumentParser(add_help=False)
    grid.add_argument("--alpha", type=float, nargs="+", help="fractional orders in [0, 1]")
    xg = grid.add_mutually_exclusive_group()
    xg.add_argument("--x", type=float, nargs="+", help="evaluation points")
    xg.add_argument("--x-range", type=float, nargs=3, metavar=("MIN", "MAX", "POINTS"))

    fn = argparse.ArgumentParser(add_help=False)
    fn.add_argument("--fn", choices=FUNCTIONS, required=True, help="catalog family")
    fn.add_argument("--n", type=int, default=1, help="power of the argument")
    fn.add_argument("--beta", type=float, default=1.0, help="argument scale")
    fn.add_argument("--gamma", type=float, default=1.0, help="Lorentzian width")
    fn.add_argument("--xi", type=float, default=1.0, help="shift of the polynomial")

    parser = argparse.ArgumentParser(prog="caputo-eit", description=__doc__.split("\n")[0])
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)
    sub.add_parser("eval", parents=[common, grid, fn], help="evaluate a catalog derivative")
    p = sub.add_parser("figure", parents=[common], help="emit figure data")
    p.add_argument("figure_id", help=f"one of {', '.join(FIGURES)}")
    p.add_argument("--alpha", type=float, nargs="+")
    p.add_argument("--points", type=int, default=DEFAULT_POINTS)
    sub.add_parser("compare", parents=[common, grid, fn], help="Caputo vs Liouville-Caputo")
    sub.add_parser("eit-check", parents=[common, grid, fn], help="check the Euler transform numerically")
    sub.add_parser("validate", parents=[common], help="run the acceptance suite")
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        rc = run_config(args)
        if args.command == "eval":
            return cmd_eval(rc)
        if args.command == "figure":
            return cmd_figure(args.figure_id, args.points, rc)
        if args.command == "compare":
            return cmd_compare(rc)
        if args.command == "eit-check":
            return cmd_eit_check(rc)
        return cmd_validate(rc)
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except NumericalError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_NUMERICAL
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN


if __name__ == "__main__":
    sys.exit(main())
