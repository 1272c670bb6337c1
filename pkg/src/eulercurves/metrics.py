"""Time-space distance between curves: the integral of the pointwise gap.

d(f, g) = int_0^1 ||f(t) - g(t)|| dt.  This is the transport coupling
induced by the shared time parameter, so it bounds the 1-Wasserstein
distance between the lifted measures from above; no tightness is claimed.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Union

import numpy as np

from .curves import CurveSpec
from .errors import DomainError
from .kernels import inner_norms
from .quadrature import adaptive_integral
from .splines import PiecewiseSpline

Curve = Union[PiecewiseSpline, CurveSpec]


@dataclass(frozen=True)
class DistanceResult:
    value: float
    error_estimate: float
    segments_used: int
    inner_norm: str

    def to_dict(self) -> dict:
        return {
            "value": self.value,
            "error_estimate": self.error_estimate,
            "segments_used": self.segments_used,
            "inner_norm": self.inner_norm,
        }


def _breakpoints(curve: Curve) -> np.ndarray:
    if isinstance(curve, PiecewiseSpline):
        return curve.breakpoints()
    return np.array([0.0, 1.0])


def curve_distance(
    f: Curve,
    g: Curve,
    inner_norm: str = "euclidean",
    tol: float = 1e-8,
) -> DistanceResult:
    """Integrate ||f - g|| over [0, 1] on the union of both breakpoint grids."""
    if tol <= 0:
        raise DomainError(f"tolerance must be positive, got {tol}")
    edges = np.unique(np.concatenate([_breakpoints(f), _breakpoints(g)]))
    edges = edges[(edges >= 0.0) & (edges <= 1.0)]
    keep = np.concatenate([[True], np.diff(edges) > 1e-15])
    edges = edges[keep]
    segments = len(edges) - 1

    def integrand(t: np.ndarray) -> np.ndarray:
        fv = np.atleast_2d(np.asarray(f(t), dtype=float))
        gv = np.atleast_2d(np.asarray(g(t), dtype=float))
        return inner_norms(fv - gv, inner_norm)

    per_segment = tol / max(segments, 1)
    total = 0.0
    err = 0.0
    for a, b in zip(edges[:-1], edges[1:]):
        val, e = adaptive_integral(
            integrand, float(a), float(b), rel_tol=0.0, abs_tol=per_segment
        )
        total += val
        err += e
    return DistanceResult(total, err, segments, inner_norm)


def w1_upper_bound(
    f: Curve,
    g: Curve,
    inner_norm: str = "euclidean",
    tol: float = 1e-8,
) -> DistanceResult:
    """Upper bound on W1 between the time-lifted measures; alias of curve_distance."""
    return curve_distance(f, g, inner_norm, tol)
