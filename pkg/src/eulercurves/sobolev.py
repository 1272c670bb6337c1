"""Discrete and continuous Sobolev semi-norms and multiball membership.

The discrete semi-norm of order r is n^r ||Delta^{*r} * p||_{l^q}; the
open-boundary variant restricts the sum to indices r..n-1 while keeping
the 1/n renormalization.  Continuous semi-norms of piecewise polynomials
integrate segment by segment; the top order is evaluated in closed form.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .curves import CurveSpec
from .errors import DomainError, PreconditionError
from .kernels import PointSeq, convolve, delta_power, inner_norms, lq_norm
from .quadrature import adaptive_integral
from .splines import PiecewiseSpline

#: Relative slack applied to membership comparisons.
MEMBERSHIP_SLACK = 1e-12


@dataclass(frozen=True)
class MultiBallSpec:
    """Radii alpha_0..alpha_m bounding the semi-norms of orders 0..m."""

    m: int
    q: float
    alpha: tuple[float, ...]
    periodic: bool = True

    def __post_init__(self):
        if self.m < 0:
            raise DomainError("max order must be >= 0")
        if self.q < 1:
            raise DomainError(f"exponent must be >= 1, got {self.q}")
        alpha = tuple(float(a) for a in self.alpha)
        if len(alpha) != self.m + 1:
            raise DomainError(
                f"need {self.m + 1} radii for orders 0..{self.m}, got {len(alpha)}"
            )
        if any(a <= 0 for a in alpha):
            raise DomainError("all radii must be strictly positive")
        object.__setattr__(self, "alpha", alpha)

    def to_dict(self) -> dict:
        return {
            "m": self.m,
            "q": self.q,
            "alpha": list(self.alpha),
            "boundary": "periodic" if self.periodic else "open",
        }

    @classmethod
    def from_dict(cls, doc: dict) -> "MultiBallSpec":
        try:
            return cls(
                int(doc["m"]),
                float(doc["q"]),
                tuple(doc["alpha"]),
                doc.get("boundary", "periodic") == "periodic",
            )
        except (KeyError, TypeError, ValueError) as exc:
            raise DomainError(f"malformed ball spec: {exc}") from exc


@dataclass(frozen=True)
class NormReport:
    """Per-order semi-norm values with membership flags against radii."""

    m: int
    q: float
    alpha: tuple[float, ...] | None
    discrete: tuple[float, ...] | None = None
    continuous: tuple[float, ...] | None = None
    member: tuple[bool, ...] | None = None
    slack: tuple[float, ...] | None = None

    @property
    def all_member(self) -> bool:
        return self.member is not None and all(self.member)

    def to_dict(self) -> dict:
        return {
            "m": self.m,
            "q": self.q,
            "alpha": list(self.alpha) if self.alpha is not None else None,
            "discrete": list(self.discrete) if self.discrete is not None else None,
            "continuous": list(self.continuous) if self.continuous is not None else None,
            "member": list(self.member) if self.member is not None else None,
            "slack": list(self.slack) if self.slack is not None else None,
        }


def discrete_seminorm(
    p: PointSeq, r: int, q: float, inner_norm: str = "euclidean"
) -> float:
    """Order-r discrete semi-norm n^r ||Delta^{*r} * p||_{l^q}."""
    if r < 0:
        raise DomainError(f"order must be >= 0, got {r}")
    if not p.periodic and r >= p.n:
        raise DomainError(
            f"open family of length {p.n} admits orders below {p.n}, got {r}"
        )
    if r == 0:
        rng = None if p.periodic else p.valid
        return lq_norm(p, q, inner_norm, rng)
    dp = convolve(delta_power(r), p)
    rng = None if p.periodic else dp.valid
    return float(p.n**r) * lq_norm(dp, q, inner_norm, rng)


def membership(
    p: PointSeq, spec: MultiBallSpec, inner_norm: str = "euclidean"
) -> NormReport:
    """Evaluate all orders 0..m and flag membership against the radii."""
    if p.periodic != spec.periodic:
        raise PreconditionError(
            "boundary mode of the point family and the ball spec must agree"
        )
    values = tuple(
        discrete_seminorm(p, r, spec.q, inner_norm) for r in range(spec.m + 1)
    )
    member = tuple(
        v <= a * (1.0 + MEMBERSHIP_SLACK) for v, a in zip(values, spec.alpha)
    )
    slack = tuple(a - v for v, a in zip(values, spec.alpha))
    return NormReport(spec.m, spec.q, spec.alpha, discrete=values,
                      member=member, slack=slack)


def continuous_seminorm(
    f: PiecewiseSpline, order: int, q: float, inner_norm: str = "euclidean"
) -> float:
    """L^q norm of the order-th derivative over [0, 1].

    Piecewise-constant derivatives (order equal to the degree) are summed
    in closed form; otherwise each segment is integrated by adaptive
    Gauss-Legendre.
    """
    if order > f.degree:
        raise DomainError(
            f"order {order} exceeds the spline degree {f.degree}"
        )
    if q < 1:
        raise DomainError(f"exponent must be >= 1, got {q}")
    g = f.derivative(order)
    edges = g.breakpoints()
    if g.degree == 0:
        mids = 0.5 * (edges[:-1] + edges[1:])
        vals = inner_norms(g(mids), inner_norm)
        total = float(np.sum(np.diff(edges) * vals**q))
        return total ** (1.0 / q)

    def integrand(t: np.ndarray) -> np.ndarray:
        return inner_norms(g(t), inner_norm) ** q

    total = 0.0
    for a, b in zip(edges[:-1], edges[1:]):
        val, _ = adaptive_integral(integrand, float(a), float(b), rel_tol=1e-11)
        total += val
    return total ** (1.0 / q)


def spline_norm_report(
    f: PiecewiseSpline, spec: MultiBallSpec, inner_norm: str = "euclidean"
) -> NormReport:
    """Continuous semi-norms of a spline, flagged against the radii."""
    orders = range(min(spec.m, f.degree) + 1)
    values = tuple(continuous_seminorm(f, r, spec.q, inner_norm) for r in orders)
    member = tuple(
        v <= a * (1.0 + MEMBERSHIP_SLACK) for v, a in zip(values, spec.alpha)
    )
    slack = tuple(a - v for v, a in zip(values, spec.alpha))
    return NormReport(spec.m, spec.q, spec.alpha, continuous=values,
                      member=member, slack=slack)


def curve_seminorm(
    curve: CurveSpec, order: int, q: float, inner_norm: str = "euclidean"
) -> float:
    """L^q norm of an analytic curve's order-th derivative on [0, 1]."""

    def integrand(t: np.ndarray) -> np.ndarray:
        return inner_norms(curve.derivative(order, t), inner_norm) ** q

    val, _ = adaptive_integral(integrand, 0.0, 1.0, rel_tol=1e-11)
    return val ** (1.0 / q)


def scale_into_ball(
    f: PiecewiseSpline, spec: MultiBallSpec, inner_norm: str = "euclidean"
) -> tuple[float, PiecewiseSpline]:
    """Shrink a curve just enough to satisfy every radius.

    delta = min(1, min_r alpha_r / ||f^(r)||); orders with zero semi-norm
    are skipped so constants do not force delta to infinity.
    """
    delta = 1.0
    for r in range(min(spec.m, f.degree) + 1):
        norm = continuous_seminorm(f, r, spec.q, inner_norm)
        if norm > 0.0:
            delta = min(delta, spec.alpha[r] / norm)
    return delta, f.scaled(delta)
