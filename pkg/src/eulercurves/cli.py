"""Command-line interface.

Exit codes: 0 success, 1 usage or malformed input, 2 domain/precondition
violation (the message names the violated condition).
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from math import gcd

from . import __version__
from .errors import DomainError, EulerCurvesError, PreconditionError
from .eulerian import eulerian_row, smoothing_kernel
from .experiments import backward_rate, forward_rate
from .fileio import (
    curve_csv,
    curve_from_dict,
    load_curve_like,
    points_from_dict,
    points_to_dict,
    read_json,
    sampled_curve_rows,
)
from .kernels import compose, sigma_shift, smoothing
from .metrics import curve_distance
from .sobolev import MultiBallSpec, membership
from .splines import s0, s1, sample_curve, smoothing_spline

DEFAULT_PORT = int(os.environ.get("EULERCURVES_PORT", "8724"))


def _emit(doc: dict) -> None:
    json.dump(doc, sys.stdout, indent=2)
    sys.stdout.write("\n")


def _parse_grid(text: str) -> tuple[int, ...]:
    """Parse 'lo:hi' into the dyadic grid lo, 2lo, ..., hi, or 'a,b,c' verbatim."""
    if ":" in text:
        lo_s, hi_s = text.split(":", 1)
        lo, hi = int(lo_s), int(hi_s)
        if lo < 1 or hi < lo:
            raise DomainError(f"bad grid range {text!r}")
        grid = []
        n = lo
        while n <= hi:
            grid.append(n)
            n *= 2
        return tuple(grid)
    return tuple(int(v) for v in text.split(","))


def _parse_alpha(text: str) -> tuple[float, ...]:
    return tuple(float(v) for v in text.split(","))


def _kernel_doc(m: int, compose_with: str | None) -> dict:
    if compose_with is None:
        sk = smoothing_kernel(m)
        return {
            "m": m,
            "indices": list(range(m + 1)),
            "numerators": list(sk.numerators),
            "denominator": sk.denominator,
        }
    if compose_with != "sigma":
        raise DomainError(f"unknown composition {compose_with!r}; only 'sigma'")
    k = compose(smoothing(m), sigma_shift(m))
    indices = sorted(k.coeffs)
    denom = 1
    for c in k.coeffs.values():
        denom = denom * c.denominator // gcd(denom, c.denominator)
    return {
        "m": m,
        "composed_with": "sigma",
        "indices": indices,
        "numerators": [int(k.coeffs[i] * denom) for i in indices],
        "denominator": denom,
    }


def _cmd_eulerian(args) -> None:
    row = eulerian_row(args.m)
    _emit({"m": row.m, "row": list(row.values)})


def _cmd_kernel(args) -> None:
    _emit(_kernel_doc(args.m, args.compose))


def _cmd_smooth(args) -> None:
    p = points_from_dict(read_json(args.infile))
    if not p.periodic:
        from .splines import nonperiodic_smoothing

        spline = nonperiodic_smoothing(p, args.m)
    else:
        spline = smoothing_spline(p, args.m, apply_shift=not args.no_shift)
    rows = sampled_curve_rows(spline, args.samples)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(curve_csv(rows, spline.d))
    _emit({"spline": spline.to_dict(), "curve": rows})


def _cmd_discretize(args) -> None:
    curve = curve_from_dict(read_json(args.curve))
    p = sample_curve(curve, args.n)
    spline = s0(p) if args.kind == "s0" else s1(p)
    rows = sampled_curve_rows(spline, args.samples)
    _emit({
        "points": points_to_dict(p),
        "spline": spline.to_dict(),
        "curve": rows,
    })


def _cmd_norms(args) -> None:
    p = points_from_dict(read_json(args.infile))
    if args.alpha is not None:
        alpha = _parse_alpha(args.alpha)
        spec = MultiBallSpec(args.m, args.q, alpha, periodic=p.periodic)
        _emit(membership(p, spec).to_dict())
        return
    from .sobolev import discrete_seminorm

    values = [discrete_seminorm(p, r, args.q) for r in range(args.m + 1)]
    _emit({
        "m": args.m,
        "q": args.q,
        "alpha": None,
        "discrete": values,
        "member": None,
        "slack": None,
    })


def _cmd_distance(args) -> None:
    a = load_curve_like(read_json(args.a))
    b = load_curve_like(read_json(args.b))
    _emit(curve_distance(a, b, tol=args.tol).to_dict())


def _cmd_rates(args) -> None:
    doc = read_json(args.spec)
    ball = MultiBallSpec.from_dict(doc["ball"] if "ball" in doc else doc)
    grid = _parse_grid(args.grid)

    def progress(n, value):
        print(f"n={n} distance={value!r}", file=sys.stderr, flush=True)

    if args.direction == "fwd":
        if "curve" not in doc:
            raise DomainError("forward rates need a 'curve' entry in the spec file")
        curve = curve_from_dict(doc["curve"])
        report = forward_rate(curve, ball, args.kind, grid, progress=progress)
    else:
        report = backward_rate(ball, seed=args.seed, kind=args.kind, n_grid=grid,
                               progress=progress)
    if args.csv:
        with open(args.csv, "w", encoding="utf-8") as fh:
            fh.write(report.to_csv())
    _emit(report.to_dict())


def _cmd_serve(args) -> None:
    import uvicorn

    from .server import app

    uvicorn.run(app, host=args.host, port=args.port, log_level="warning")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="eulercurves",
        description="Curve discretization and Eulerian B-spline smoothing",
    )
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("eulerian", help="print one row of the Eulerian triangle")
    sp.add_argument("--m", type=int, required=True)
    sp.set_defaults(fn=_cmd_eulerian)

    sp = sub.add_parser("kernel", help="print exact smoothing-kernel coefficients")
    sp.add_argument("--m", type=int, required=True)
    sp.add_argument("--compose", choices=["sigma"], default=None)
    sp.set_defaults(fn=_cmd_kernel)

    sp = sub.add_parser("smooth", help="build the smoothing spline of a points file")
    sp.add_argument("--in", dest="infile", required=True)
    sp.add_argument("--m", type=int, required=True)
    sp.add_argument("--samples", type=int, default=256)
    sp.add_argument("--out", default=None, help="CSV path for the sampled curve")
    sp.add_argument("--no-shift", action="store_true",
                    help="skip the sigma alignment shift")
    sp.set_defaults(fn=_cmd_smooth)

    sp = sub.add_parser("discretize", help="sample a curve spec into s0/s1 splines")
    sp.add_argument("--curve", required=True)
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--kind", choices=["s0", "s1"], default="s0")
    sp.add_argument("--samples", type=int, default=256)
    sp.set_defaults(fn=_cmd_discretize)

    sp = sub.add_parser("norms", help="discrete semi-norms and ball membership")
    sp.add_argument("--in", dest="infile", required=True)
    sp.add_argument("--m", type=int, required=True)
    sp.add_argument("--q", type=float, required=True)
    sp.add_argument("--alpha", default=None, help="comma-separated radii a0,..,am")
    sp.set_defaults(fn=_cmd_norms)

    sp = sub.add_parser("distance", help="time-space distance between two curves")
    sp.add_argument("--a", required=True)
    sp.add_argument("--b", required=True)
    sp.add_argument("--tol", type=float, default=1e-8)
    sp.set_defaults(fn=_cmd_distance)

    sp = sub.add_parser("rates", help="convergence-rate experiment over an n-grid")
    sp.add_argument("--spec", required=True)
    sp.add_argument("--direction", choices=["fwd", "bwd"], required=True)
    sp.add_argument("--kind", choices=["s0", "s1"], default="s0")
    sp.add_argument("--grid", default="16:1024")
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--csv", default=None, help="also write the per-n table as CSV")
    sp.set_defaults(fn=_cmd_rates)

    sp = sub.add_parser("serve", help="run the local HTTP facade")
    sp.add_argument("--port", type=int, default=DEFAULT_PORT)
    sp.add_argument("--host", default="127.0.0.1")
    sp.set_defaults(fn=_cmd_serve)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse uses exit code 2 for usage errors; this tool reserves 2
        # for domain errors.
        return 0 if exc.code in (0, None) else 1
    try:
        args.fn(args)
    except json.JSONDecodeError as exc:
        print(f"error: malformed JSON at line {exc.lineno} column {exc.colno}: "
              f"{exc.msg}", file=sys.stderr)
        return 1
    except FileNotFoundError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (DomainError, PreconditionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except EulerCurvesError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    return 0


if __name__ == "__main__":
    sys.exit(main())
