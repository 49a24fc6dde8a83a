"""Command-line interface: ``polaron <command> [options]``.

Commands
--------
energy      ground-state energy (``--breakdown`` for the zeroth order and I1-I3)
mass        effective mass and its two contributions
feynman     minimized Feynman model: v, w, energy and mass
verify      closed forms against quadrature; exit 1 on any failure
scan        OM vs Feynman over an alpha grid, as CSV or JSON, optional SVG plot
asymptotes  weak/strong coupling coefficients and the strong-coupling constant

Exit codes: 0 success, 1 computation failure, 2 usage error.  Set
``POLARON_LOG`` to ``error`` (default), ``info`` or ``debug`` for
diagnostics on stderr.
"""
import argparse
import logging
import os
import sys

from . import feynman, om, oracles
from .errors import DomainError
from .kernels import BACKEND
from .quadrature import DEFAULT_TOLERANCE, Tolerance
from .report import emit_csv, emit_json
from .scan import SERIES, ScanConfig, run_scan
from .svgplot import emit_svg_plot

log = logging.getLogger("polaron")

DEFAULT_VERIFY_GRID = (0.1, 0.5, 1.0, 2.0, 5.0, 10.0, 20.0, 50.0)

# config-file keys -> converter
CONFIG_KEYS = {
    "alpha_min": float,
    "alpha_max": float,
    "points": int,
    "spacing": str,
    "output_format": str,
    "output": str,
    "plot_path": str,
    "series": str,
    "abs_tol": float,
    "rel_tol": float,
    "max_evaluations": int,
    "jobs": int,
}


def _num(x):
    return f"{x:.12g}"


def _setup_logging():
    level = os.environ.get("POLARON_LOG", "error").strip().lower()
    levels = {"error": logging.ERROR, "info": logging.INFO, "debug": logging.DEBUG}
    logging.basicConfig(
        stream=sys.stderr, level=levels.get(level, logging.ERROR), format="%(levelname)s %(name)s: %(message)s"
    )
    if level not in levels:
        log.warning("ignoring unknown POLARON_LOG value %r", level)


def read_config(path):
    """Parse ``key = value`` lines; ``#`` starts a comment."""
    values = {}
    with open(path, encoding="utf-8") as fh:
        for lineno, raw in enumerate(fh, 1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            key, sep, value = line.partition("=")
            key = key.strip().replace("-", "_")
            if not sep or key not in CONFIG_KEYS:
                raise DomainError(f"{path}:{lineno}: unrecognized line {raw.strip()!r}")
            values[key] = CONFIG_KEYS[key](value.strip())
    return values


def _tolerance(args):
    return Tolerance(
        abs_tol=args.abs_tol if args.abs_tol is not None else DEFAULT_TOLERANCE.abs_tol,
        rel_tol=args.rel_tol if args.rel_tol is not None else DEFAULT_TOLERANCE.rel_tol,
        max_evaluations=args.max_evaluations or DEFAULT_TOLERANCE.max_evaluations,
    )


def cmd_energy(args, out):
    b = om.ground_state_energy(args.alpha)
    if not args.breakdown:
        print(_num(b.total), file=out)
        return 0
    rows = [
        ("alpha", b.alpha),
        ("omega", om.omega_of_alpha(args.alpha)),
        ("E0_zeroth", b.e0_zeroth),
        ("I1", b.i1),
        ("I2", b.i2),
        ("I3", b.i3),
        ("E0", b.total),
    ]
    for name, value in rows:
        print(f"{name:<10} {_num(value)}", file=out)
    return 0


def cmd_mass(args, out):
    m = om.effective_mass(args.alpha)
    for name, value in (("alpha", m.alpha), ("m_zeroth", m.m_zeroth), ("m_correction", m.m_correction), ("m_p", m.total)):
        print(f"{name:<13} {_num(value)}", file=out)
    return 0


def cmd_feynman(args, out):
    r = feynman.feynman_minimize(args.alpha, tol=_tolerance(args))
    for name, value in (("alpha", r.alpha), ("v", r.params.v), ("w", r.params.w), ("E_F", r.energy), ("m_F", r.mass)):
        print(f"{name:<9} {_num(value)}", file=out)
    print(f"{'converged':<9} {r.converged}", file=out)
    return 0 if r.converged else 1


def cmd_verify(args, out):
    reports = oracles.verify_all(args.grid, _tolerance(args))
    for r in reports:
        status = "PASS" if r.passed else "FAIL"
        if r.error:
            print(f"{status} {r.name:<2} alpha={_num(r.alpha)} error: {r.error}", file=out)
            continue
        print(
            f"{status} {r.name:<2} alpha={_num(r.alpha)} closed={_num(r.closed_value)} "
            f"numeric={_num(r.numeric_value)} rel_diff={r.rel_diff:.3e} "
            f"threshold={oracles.THRESHOLDS[r.name]:.0e} evals={r.quad.evaluations}",
            file=out,
        )
    return 0 if all(r.passed for r in reports) else 1


def cmd_scan(args, out):
    settings = read_config(args.config) if args.config else {}
    flags = {
        "alpha_min": args.alpha_min,
        "alpha_max": args.alpha_max,
        "points": args.points,
        "spacing": args.spacing,
        "output_format": args.format,
        "output": args.output,
        "plot_path": args.plot,
        "series": args.series,
        "abs_tol": args.abs_tol,
        "rel_tol": args.rel_tol,
        "max_evaluations": args.max_evaluations,
        "jobs": args.jobs,
    }
    settings.update({k: v for k, v in flags.items() if v is not None})
    tol = Tolerance(
        abs_tol=settings.pop("abs_tol", DEFAULT_TOLERANCE.abs_tol),
        rel_tol=settings.pop("rel_tol", DEFAULT_TOLERANCE.rel_tol),
        max_evaluations=settings.pop("max_evaluations", DEFAULT_TOLERANCE.max_evaluations),
    )
    output = settings.pop("output", None)
    jobs = settings.pop("jobs", 1)
    cfg = ScanConfig(tolerance=tol, **settings)
    log.info("scan %s with the %s backend", cfg, BACKEND)

    rows = run_scan(cfg, jobs=jobs)
    emit = emit_csv if cfg.output_format == "csv" else emit_json
    emit(rows, output if output and output != "-" else out)
    if cfg.plot_path:
        emit_svg_plot(rows, cfg.series, cfg.plot_path)
    failed = [r.alpha for r in rows if not r.ok]
    if failed:
        print(f"{len(failed)} of {len(rows)} scan points failed", file=sys.stderr)
        return 1
    return 0


def cmd_asymptotes(args, out):
    print("weak coupling   E ~ -alpha + c2 alpha^2", file=out)
    print(f"  c2 quoted               {om.WEAK_COEFFICIENT_QUOTED}", file=out)
    print(f"  c2 exact expansion      {_num(om.WEAK_COEFFICIENT_EXACT)}", file=out)
    print("strong coupling E ~ c alpha^2 + c0", file=out)
    print(f"  c  exact                {_num(om.STRONG_COEFFICIENT)}", file=out)
    print(f"  c0 derived  (-3 ln 2)   {_num(om.STRONG_CONSTANT_DERIVED)}", file=out)
    print(f"  c0 quoted               {om.STRONG_CONSTANT_QUOTED}", file=out)
    for alpha in (1e3, 1e4):
        fitted = om.fit_strong_constant(alpha)
        print(
            f"  E - c alpha^2 at alpha={alpha:g}: {_num(fitted)} "
            f"(vs derived {abs(fitted - om.STRONG_CONSTANT_DERIVED):.1e}, "
            f"vs quoted {abs(fitted - om.STRONG_CONSTANT_QUOTED):.3f})",
            file=out,
        )
    return 0


def _add_tolerance_flags(p):
    p.add_argument("--abs-tol", type=float, help="quadrature absolute tolerance (default 1e-12)")
    p.add_argument("--rel-tol", type=float, help="quadrature relative tolerance (default 1e-10)")
    p.add_argument("--max-evaluations", type=int, help="quadrature evaluation budget (default 1e6)")


def build_parser():
    parser = argparse.ArgumentParser(
        prog="polaron",
        description="Operator-method Froehlich polaron energy and mass, with the Feynman baseline.",
    )
    sub = parser.add_subparsers(dest="command", required=True, metavar="command")

    p = sub.add_parser("energy", help="ground-state energy")
    p.add_argument("--alpha", type=float, required=True)
    p.add_argument("--breakdown", action="store_true", help="also print the zeroth order term and I1, I2, I3")
    p.set_defaults(func=cmd_energy)

    p = sub.add_parser("mass", help="effective mass")
    p.add_argument("--alpha", type=float, required=True)
    p.set_defaults(func=cmd_mass)

    p = sub.add_parser("feynman", help="minimized Feynman variational model")
    p.add_argument("--alpha", type=float, required=True)
    _add_tolerance_flags(p)
    p.set_defaults(func=cmd_feynman)

    p = sub.add_parser("verify", help="check closed forms against quadrature")
    p.add_argument("--grid", type=float, nargs="+", default=list(DEFAULT_VERIFY_GRID), metavar="ALPHA")
    _add_tolerance_flags(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("scan", help="compare OM and Feynman over a grid of alpha")
    p.add_argument("--config", help="file of 'key = value' lines; flags override it")
    p.add_argument("--alpha-min", type=float)
    p.add_argument("--alpha-max", type=float)
    p.add_argument("--points", type=int)
    spacing = p.add_mutually_exclusive_group()
    spacing.add_argument("--log", dest="spacing", action="store_const", const="logarithmic",
                         help="logarithmic spacing (default)")
    spacing.add_argument("--linear", dest="spacing", action="store_const", const="linear")
    p.add_argument("--format", choices=("csv", "json"))
    p.add_argument("--output", help="output file (default stdout)")
    p.add_argument("--plot", help="write an SVG plot to this path")
    p.add_argument("--series", choices=SERIES, help="quantity to plot (default energy)")
    p.add_argument("--jobs", type=int, help="worker processes (default 1)")
    _add_tolerance_flags(p)
    p.set_defaults(func=cmd_scan)

    p = sub.add_parser("asymptotes", help="weak and strong coupling limits")
    p.set_defaults(func=cmd_asymptotes)
    return parser


def cmd_dispatch(argv=None, out=None):
    """Run one command and return its exit code."""
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args, out)
    except (DomainError, ArithmeticError, OSError) as exc:
        print(f"polaron {args.command}: {exc}", file=sys.stderr)
        return 1


def main(argv=None):
    _setup_logging()
    sys.exit(cmd_dispatch(argv))


if __name__ == "__main__":
    main()
