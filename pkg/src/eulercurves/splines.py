"""Piecewise-polynomial curve representations on the uniform grid.

Three representations share the PiecewiseSpline container: the staircase
s0, the polyline s1, and the degree-m smoothing spline whose segment
coefficients are convolution stencils of the control points.  Segment i
carries g_i(x) = sum_k a_{i,k} x^k / k! on the local coordinate
x = n t - i; the factorial normalization keeps the coefficients equal to
the kernel outputs verbatim.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from math import comb, factorial

import numpy as np

from .curves import CurveSpec
from .errors import DomainError, PreconditionError
from .kernels import (
    PointSeq,
    compose,
    convolve,
    delta_power,
    sigma_shift,
    smoothing,
)

_FACTORIALS = np.array([float(factorial(k)) for k in range(40)])


@dataclass(frozen=True)
class PiecewiseSpline:
    """Degree-m piecewise polynomial on n uniform segments of [0, 1].

    ``coeffs`` has shape (n, degree + 1, d).  An optional affine
    reparameterization (theta, tau) makes the curve t -> base(theta t + tau).
    """

    coeffs: np.ndarray
    periodic: bool = True
    reparam: tuple[float, float] | None = None

    def __post_init__(self):
        arr = np.asarray(self.coeffs, dtype=float)
        if arr.ndim != 3:
            raise DomainError("coefficients must have shape (n, degree + 1, d)")
        object.__setattr__(self, "coeffs", arr)

    @property
    def n(self) -> int:
        return self.coeffs.shape[0]

    @property
    def degree(self) -> int:
        return self.coeffs.shape[1] - 1

    @property
    def d(self) -> int:
        return self.coeffs.shape[2]

    def _local(self, t: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
        """Map evaluation times to (segment index, local coordinate)."""
        u = np.asarray(t, dtype=float)
        if self.reparam is not None:
            theta, tau = self.reparam
            u = theta * u + tau
        if self.periodic:
            u = np.mod(u, 1.0)
            idx = np.floor(self.n * u).astype(int) % self.n
            x = self.n * u - np.floor(self.n * u)
        else:
            # Evaluation at u = 1 lands on the last segment at x = 1.
            u = np.clip(u, 0.0, 1.0)
            idx = np.minimum(np.floor(self.n * u).astype(int), self.n - 1)
            x = self.n * u - idx
        return idx, x

    def __call__(self, t) -> np.ndarray:
        scalar = np.isscalar(t)
        t_arr = np.atleast_1d(np.asarray(t, dtype=float))
        idx, x = self._local(t_arr)
        segs = self.coeffs[idx]  # (len(t), degree + 1, d)
        scaled = segs / _FACTORIALS[: self.degree + 1][None, :, None]
        out = np.zeros((t_arr.shape[0], self.d))
        for k in range(self.degree, -1, -1):
            out = out * x[:, None] + scaled[:, k, :]
        return out[0] if scalar else out

    def derivative(self, order: int) -> "PiecewiseSpline":
        """Per-segment coefficient shift with the chain-rule factor (n theta)^order."""
        if order < 0 or order > self.degree:
            raise DomainError(
                f"derivative order must lie in [0, {self.degree}], got {order}"
            )
        if order == 0:
            return self
        theta = self.reparam[0] if self.reparam is not None else 1.0
        factor = float(self.n * theta) ** order
        return replace(self, coeffs=self.coeffs[:, order:, :] * factor)

    def segment_value(self, i: int, x: float) -> np.ndarray:
        scaled = self.coeffs[i] / _FACTORIALS[: self.degree + 1][:, None]
        out = np.zeros(self.d)
        for k in range(self.degree, -1, -1):
            out = out * x + scaled[k]
        return out

    def breakpoints(self) -> np.ndarray:
        """Segment boundaries expressed in the outer time variable, within [0, 1]."""
        knots = np.arange(self.n + 1) / self.n
        if self.reparam is not None:
            theta, tau = self.reparam
            knots = (knots - tau) / theta
        knots = knots[(knots > 0.0) & (knots < 1.0)]
        return np.concatenate(([0.0], knots, [1.0]))

    def scaled(self, factor: float) -> "PiecewiseSpline":
        return replace(self, coeffs=self.coeffs * float(factor))

    def translated(self, offset: np.ndarray) -> "PiecewiseSpline":
        coeffs = self.coeffs.copy()
        coeffs[:, 0, :] += np.asarray(offset, dtype=float)
        return replace(self, coeffs=coeffs)

    def to_dict(self) -> dict:
        return {
            "kind": "spline",
            "n": self.n,
            "d": self.d,
            "degree": self.degree,
            "boundary": "periodic" if self.periodic else "open",
            "reparam": list(self.reparam) if self.reparam is not None else None,
            "coefficients": self.coeffs.reshape(-1).tolist(),
        }

    @classmethod
    def from_dict(cls, doc: dict) -> "PiecewiseSpline":
        try:
            n, d, degree = int(doc["n"]), int(doc["d"]), int(doc["degree"])
            coeffs = np.asarray(doc["coefficients"], dtype=float).reshape(n, degree + 1, d)
            periodic = doc["boundary"] == "periodic"
            reparam = tuple(doc["reparam"]) if doc.get("reparam") else None
        except (KeyError, ValueError) as exc:
            raise DomainError(f"malformed spline document: {exc}") from exc
        return cls(coeffs, periodic, reparam)


def sample_curve(curve: CurveSpec, n: int) -> PointSeq:
    """p_i = f(i/n); the boundary mode is inherited from the curve."""
    if n < 1:
        raise DomainError(f"sample count must be >= 1, got {n}")
    t = np.arange(n) / n
    return PointSeq(curve.value(t), periodic=curve.periodic)


def s0(p: PointSeq) -> PiecewiseSpline:
    """Piecewise-constant discretization with plateaus on [i/n, (i+1)/n)."""
    return PiecewiseSpline(p.data[:, None, :], p.periodic)


def s1(p: PointSeq) -> PiecewiseSpline:
    """Linear interpolation between consecutive points.

    Open families hold the final value constant on the last segment; the
    periodic case wraps to p_0.
    """
    diffs = np.roll(p.data, -1, axis=0) - p.data
    if not p.periodic:
        diffs[-1] = 0.0
    coeffs = np.stack([p.data, diffs], axis=1)
    return PiecewiseSpline(coeffs, p.periodic)


def smoothing_spline(p: PointSeq, m: int, apply_shift: bool = True) -> PiecewiseSpline:
    """The degree-m Eulerian smoothing spline of a periodic point family.

    Segment coefficients are a_{i,k} = (C^{m-k} * Delta^{*k} * q)_i with
    q the (optionally sigma_m-shifted) control points; the result is
    C^{m-1} at every knot and its m-th derivative is the piecewise
    constant n^m (Delta^{*m} * q)_i.
    """
    if not p.periodic:
        raise PreconditionError(
            "smoothing_spline requires a periodic family; use nonperiodic_smoothing"
        )
    if m < 0:
        raise DomainError(f"degree must be >= 0, got {m}")
    if p.n < 2 * m + 3:
        raise DomainError(
            f"need n >= {2 * m + 3} points for degree {m}, got {p.n}"
        )
    q = convolve(sigma_shift(m), p) if (apply_shift and m >= 1) else p
    layers = []
    for k in range(m + 1):
        stencil = compose(smoothing(m - k), delta_power(k))
        layers.append(convolve(stencil, q).data)
    return PiecewiseSpline(np.stack(layers, axis=1), True)


def nonperiodic_smoothing(p: PointSeq, m: int) -> PiecewiseSpline:
    """Rescaled smoothing spline for open families.

    Builds the periodic-extension smoothing spline of the shifted points
    and evaluates it through the affine map t -> theta t + tau with
    theta = 1 - 20m/n, tau = 10m/n, so the visited segments never touch
    wrapped-around coefficients.
    """
    if m < 1:
        raise DomainError(f"degree must be >= 1, got {m}")
    n = p.n
    if n <= 20 * m:
        raise DomainError(
            f"need n > {20 * m} points for open degree {m}, got {n}"
        )
    theta = 1.0 - 20.0 * m / n
    tau = 10.0 * m / n
    periodic = PointSeq(p.data, periodic=True)
    base = smoothing_spline(periodic, m, apply_shift=True)
    _assert_extension_free(p, m, base)
    return replace(base, reparam=(theta, tau))


def _assert_extension_free(p: PointSeq, m: int, base: PiecewiseSpline) -> None:
    """Guard: coefficients of visited segments must not depend on the wrap.

    Rebuilds the spline from a reflected boundary extension and compares
    the touched segment range; any disagreement means the buffer is too
    small.
    """
    n = p.n
    pad = 2 * m + 2
    reflected = p.data.copy()
    reflected[:pad] = 2.0 * p.data[0] - p.data[pad:0:-1]
    reflected[n - pad :] = 2.0 * p.data[-1] - p.data[n - 2 : n - 2 - pad : -1]
    alt = smoothing_spline(PointSeq(reflected, periodic=True), m, apply_shift=True)
    lo, hi = 10 * m, n - 10 * m + 1
    scale = max(1.0, float(np.max(np.abs(base.coeffs))))
    gap = float(np.max(np.abs(base.coeffs[lo:hi] - alt.coeffs[lo:hi])))
    if gap > 1e-12 * scale:
        raise PreconditionError(
            f"open-boundary buffer violated: extension-dependent coefficients (gap {gap:g})"
        )


def bspline_basis(m: int, x) -> np.ndarray | float:
    """Cardinal B-spline of degree m via the truncated-power alternating sum.

    B^m(x) = (1/m!) sum_{k=0}^{m+1} (-1)^k C(m+1, k) (x-k)_+^m, supported
    on [0, m+1).  The degree-0 case is the indicator of [0, 1).
    """
    if m < 0:
        raise DomainError(f"degree must be >= 0, got {m}")
    scalar = np.isscalar(x)
    x_arr = np.atleast_1d(np.asarray(x, dtype=float))
    out = np.zeros_like(x_arr)
    for k in range(m + 2):
        u = x_arr - k
        if m == 0:
            term = (u >= 0).astype(float)
        else:
            term = np.maximum(u, 0.0) ** m
        out += (-1) ** k * comb(m + 1, k) * term
    out /= factorial(m)
    return float(out[0]) if scalar else out


def eval_bspline_form(p: PointSeq, m: int, t) -> np.ndarray:
    """Evaluate sum_i B^m(nt - i) p_i with periodic index wrap.

    Agrees with the piecewise-polynomial smoothing spline built without
    the sigma shift.
    """
    if not p.periodic:
        raise PreconditionError("the B-spline form is defined for periodic families")
    if p.n < m + 2:
        raise DomainError(f"need n > {m + 1} points for degree {m}, got {p.n}")
    scalar = np.isscalar(t)
    t_arr = np.atleast_1d(np.asarray(t, dtype=float))
    nt = p.n * np.mod(t_arr, 1.0)
    out = np.zeros((t_arr.shape[0], p.d))
    base = np.floor(nt).astype(int)
    for j in range(m + 1):
        i = base - j
        w = bspline_basis(m, nt - i)
        out += np.asarray(w)[:, None] * p.data[np.mod(i, p.n)]
    return out[0] if scalar else out


def derivative_spline(f: PiecewiseSpline, order: int) -> PiecewiseSpline:
    """Alias of PiecewiseSpline.derivative kept as a free function."""
    return f.derivative(order)


def knot_continuity(f: PiecewiseSpline, order: int) -> float:
    """Largest jump of the order-th derivative across segment junctions."""
    g = f.derivative(order)
    left = np.zeros((g.n, g.d))
    for k in range(g.degree, -1, -1):
        left = left + g.coeffs[:, k, :] / _FACTORIALS[k]
    right = g.coeffs[:, 0, :]
    if g.periodic:
        jumps = np.roll(right, -1, axis=0) - left
    else:
        jumps = right[1:] - left[:-1]
        if jumps.shape[0] == 0:
            return 0.0
    return float(np.max(np.linalg.norm(jumps, axis=1)))
