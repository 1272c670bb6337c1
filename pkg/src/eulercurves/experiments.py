"""Desk-scale convergence-rate experiments.

Forward: sample an analytic ball member, check the sampled family stays
in the discrete ball, measure the distance to its s0/s1 discretization.
Backward: generate in-ball point families, build the smoothing witness,
rescale it into the target ball, measure the distance back to s0/s1.
Log-log slope fits stand in for the asymptotic exponents.
"""

from __future__ import annotations

import io
from dataclasses import dataclass, field
from math import ceil

import numpy as np

from .curves import CurveSpec, TrigCurve
from .errors import DomainError, EulerCurvesError, PreconditionError
from .kernels import PointSeq
from .metrics import curve_distance
from .sobolev import (
    MultiBallSpec,
    continuous_seminorm,
    curve_seminorm,
    discrete_seminorm,
    membership,
    scale_into_ball,
)
from .splines import nonperiodic_smoothing, s0, s1, sample_curve, smoothing_spline

DEFAULT_GRID = (16, 32, 64, 128, 256, 512, 1024)


@dataclass(frozen=True)
class RateFit:
    slope: float
    intercept: float
    residual: float
    used: int
    filtered: int

    def to_dict(self) -> dict:
        return {
            "slope": self.slope,
            "intercept": self.intercept,
            "residual": self.residual,
            "used": self.used,
            "filtered": self.filtered,
        }


@dataclass(frozen=True)
class RateReport:
    direction: str
    spline_kind: str
    n_grid: tuple[int, ...]
    distances: tuple[float, ...]
    fit: RateFit
    norm_inflations: tuple[float, ...] | None = None
    deltas: tuple[float, ...] | None = None
    delta_fit: RateFit | None = None
    seed: int | None = None

    def to_dict(self) -> dict:
        return {
            "direction": self.direction,
            "spline_kind": self.spline_kind,
            "n_grid": list(self.n_grid),
            "distances": list(self.distances),
            "fit": self.fit.to_dict(),
            "norm_inflations": (
                list(self.norm_inflations) if self.norm_inflations is not None else None
            ),
            "deltas": list(self.deltas) if self.deltas is not None else None,
            "delta_fit": self.delta_fit.to_dict() if self.delta_fit is not None else None,
            "seed": self.seed,
        }

    def to_csv(self) -> str:
        out = io.StringIO()
        out.write("n,distance,inflation,delta\n")
        for i, n in enumerate(self.n_grid):
            infl = repr(self.norm_inflations[i]) if self.norm_inflations is not None else ""
            delta = repr(self.deltas[i]) if self.deltas is not None else ""
            out.write(f"{n},{self.distances[i]!r},{infl},{delta}\n")
        return out.getvalue()


def fit_rate(n_grid, values) -> RateFit:
    """Least-squares slope of log value against log n.

    Non-positive values cannot enter the log fit; they are dropped and
    counted in the ``filtered`` field.  With fewer than two usable points
    the slope is reported as NaN.
    """
    n_grid = np.asarray(n_grid, dtype=float)
    values = np.asarray(values, dtype=float)
    if n_grid.shape != values.shape:
        raise DomainError("grid and value arrays must have equal length")
    if n_grid.size < 3:
        raise DomainError("need at least 3 grid points for a rate fit")
    mask = values > 0.0
    filtered = int(np.sum(~mask))
    if int(mask.sum()) < 2:
        return RateFit(float("nan"), float("nan"), float("nan"), int(mask.sum()), filtered)
    x = np.log(n_grid[mask])
    y = np.log(values[mask])
    slope, intercept = np.polyfit(x, y, 1)
    resid = y - (slope * x + intercept)
    rms = float(np.sqrt(np.mean(resid**2)))
    return RateFit(float(slope), float(intercept), rms, int(mask.sum()), filtered)


def _discretize(p: PointSeq, kind: str):
    if kind == "s0":
        return s0(p)
    if kind == "s1":
        return s1(p)
    raise DomainError(f"spline kind must be 's0' or 's1', got {kind!r}")


def validate_curve_in_ball(curve: CurveSpec, spec: MultiBallSpec,
                           rel_slack: float = 1e-9) -> None:
    """Check the curve's analytic semi-norms against the radii."""
    for r in range(spec.m + 1):
        norm = curve_seminorm(curve, r, spec.q)
        if norm > spec.alpha[r] * (1.0 + rel_slack):
            raise PreconditionError(
                f"curve violates the ball at order {r}: "
                f"{norm:.6g} > {spec.alpha[r]:.6g}"
            )


def forward_rate(
    curve: CurveSpec,
    spec: MultiBallSpec,
    kind: str = "s0",
    n_grid=DEFAULT_GRID,
    tol: float = 1e-9,
    progress=None,
) -> RateReport:
    """Sample-and-discretize distances over an n-grid, with a slope fit."""
    if kind == "s1" and spec.m < 2:
        raise PreconditionError("the s1 forward bound requires m >= 2")
    validate_curve_in_ball(curve, spec)
    distances = []
    for n in n_grid:
        p = sample_curve(curve, int(n))
        report = membership(p, spec)
        if not report.all_member:
            bad = [r for r, ok in enumerate(report.member) if not ok]
            raise EulerCurvesError(
                f"sampled family left the discrete ball at n={n}, orders {bad}"
            )
        dist = curve_distance(curve, _discretize(p, kind), tol=tol)
        distances.append(dist.value)
        if progress is not None:
            progress(int(n), dist.value)
    return RateReport(
        "forward", kind, tuple(int(n) for n in n_grid), tuple(distances),
        fit_rate(n_grid, distances),
    )


def random_ball_family(
    spec: MultiBallSpec, n: int, seed: int, d: int = 2
) -> PointSeq:
    """A seeded in-ball point family: sampled random trigonometric curve,
    globally rescaled so the tightest order meets its radius exactly."""
    rng = np.random.default_rng([seed, n])
    bandwidth = max(1, ceil(n / 8))
    decay = 1.0 / (1 + np.arange(bandwidth)) ** 2
    cos_c = rng.standard_normal((bandwidth, d)) * decay[:, None]
    sin_c = rng.standard_normal((bandwidth, d)) * decay[:, None]
    curve = TrigCurve(offset=rng.standard_normal(d), cos_coeffs=cos_c, sin_coeffs=sin_c)
    p = PointSeq(curve.value(np.arange(n) / n), periodic=spec.periodic)
    scale = 1.0
    for r in range(spec.m + 1):
        norm = discrete_seminorm(p, r, spec.q)
        if norm > 0.0:
            scale = min(scale, spec.alpha[r] / norm)
    p = PointSeq(p.data * scale, periodic=spec.periodic)
    report = membership(p, spec)
    if not report.all_member:
        raise EulerCurvesError("generator failed to project into the ball")
    return p


def backward_rate(
    spec: MultiBallSpec,
    seed: int = 0,
    kind: str = "s0",
    n_grid=DEFAULT_GRID,
    tol: float = 1e-9,
    progress=None,
) -> RateReport:
    """Smoothing-witness distances to s0/s1 over an n-grid, with slope fits.

    Each witness is rescaled into the target ball; the per-n inflation
    max_l (||f^(l)|| / alpha_l - 1) and the scaling defect 1 - delta are
    recorded alongside the distances.
    """
    m = spec.m
    if kind == "s1" and spec.periodic and m < 2:
        raise PreconditionError("the periodic s1 backward bound requires m >= 2")
    min_n = 2 * m + 3 if spec.periodic else 20 * m + 1
    if any(int(n) < min_n for n in n_grid):
        raise DomainError(f"every n must be >= {min_n} for this spec, grid {n_grid}")
    distances, inflations, deltas = [], [], []
    for n in n_grid:
        p = random_ball_family(spec, int(n), seed)
        if spec.periodic:
            witness = smoothing_spline(p, m, apply_shift=True)
        else:
            witness = nonperiodic_smoothing(p, m)
        infl = max(
            continuous_seminorm(witness, l, spec.q) / spec.alpha[l] - 1.0
            for l in range(m + 1)
        )
        delta, scaled = scale_into_ball(witness, spec)
        dist = curve_distance(scaled, _discretize(p, kind), tol=tol)
        distances.append(dist.value)
        inflations.append(infl)
        deltas.append(delta)
        if progress is not None:
            progress(int(n), dist.value)
    one_minus_delta = [1.0 - dlt for dlt in deltas]
    return RateReport(
        "backward", kind, tuple(int(n) for n in n_grid), tuple(distances),
        fit_rate(n_grid, distances),
        norm_inflations=tuple(inflations),
        deltas=tuple(deltas),
        delta_fit=fit_rate(n_grid, one_minus_delta),
        seed=seed,
    )
