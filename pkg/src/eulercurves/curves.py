"""Analytic test curves with derivatives of every order.

These provide the continuous side of the discretization experiments:
trigonometric polynomials (periodic), ordinary polynomials (open), and
user-supplied callables.  Derivatives are analytic, so the curves can be
checked against Sobolev ball radii without finite differencing.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable

import numpy as np

from .errors import DomainError


class CurveSpec:
    """Base class: a curve [0, 1] -> R^d with derivative access."""

    periodic: bool = True
    d: int = 1

    def value(self, t: np.ndarray) -> np.ndarray:
        return self.derivative(0, t)

    def derivative(self, order: int, t: np.ndarray) -> np.ndarray:
        raise NotImplementedError

    def __call__(self, t: np.ndarray) -> np.ndarray:
        return self.value(t)


@dataclass
class TrigCurve(CurveSpec):
    """f(t) = offset + sum_k cos_coeffs[k] cos(2 pi (k+1) t) + sin_coeffs[k] sin(2 pi (k+1) t).

    Coefficient arrays have shape (harmonics, d); the curve is periodic.
    """

    offset: np.ndarray
    cos_coeffs: np.ndarray
    sin_coeffs: np.ndarray
    periodic: bool = field(default=True, init=False)

    def __post_init__(self):
        self.offset = np.atleast_1d(np.asarray(self.offset, dtype=float))
        self.cos_coeffs = np.atleast_2d(np.asarray(self.cos_coeffs, dtype=float))
        self.sin_coeffs = np.atleast_2d(np.asarray(self.sin_coeffs, dtype=float))
        if self.cos_coeffs.shape != self.sin_coeffs.shape:
            raise DomainError("cos and sin coefficient arrays must share a shape")
        if self.cos_coeffs.shape[1] != self.offset.shape[0]:
            raise DomainError("coefficient dimension must match the offset")
        self.d = self.offset.shape[0]

    def derivative(self, order: int, t: np.ndarray) -> np.ndarray:
        t = np.atleast_1d(np.asarray(t, dtype=float))
        out = np.zeros((t.shape[0], self.d))
        if order == 0:
            out += self.offset[None, :]
        for k in range(self.cos_coeffs.shape[0]):
            w = 2.0 * np.pi * (k + 1)
            phase = order * np.pi / 2.0
            c = np.cos(w * t + phase) * w**order
            s = np.sin(w * t + phase) * w**order
            out += c[:, None] * self.cos_coeffs[k][None, :]
            out += s[:, None] * self.sin_coeffs[k][None, :]
        return out


@dataclass
class PolynomialCurve(CurveSpec):
    """f(t) = sum_k coeffs[k] t^k on [0, 1]; open boundary."""

    coeffs: np.ndarray
    periodic: bool = field(default=False, init=False)

    def __post_init__(self):
        self.coeffs = np.atleast_2d(np.asarray(self.coeffs, dtype=float))
        self.d = self.coeffs.shape[1]

    def derivative(self, order: int, t: np.ndarray) -> np.ndarray:
        t = np.atleast_1d(np.asarray(t, dtype=float))
        out = np.zeros((t.shape[0], self.d))
        for k in range(order, self.coeffs.shape[0]):
            factor = 1.0
            for j in range(order):
                factor *= k - j
            out += factor * t[:, None] ** (k - order) * self.coeffs[k][None, :]
        return out


@dataclass
class CallableCurve(CurveSpec):
    """Wraps externally supplied value/derivative callables."""

    derivatives: tuple[Callable[[np.ndarray], np.ndarray], ...]
    periodic: bool = True

    def __post_init__(self):
        probe = np.atleast_2d(np.asarray(self.derivatives[0](np.array([0.0])), dtype=float))
        self.d = probe.shape[1]

    def derivative(self, order: int, t: np.ndarray) -> np.ndarray:
        if order >= len(self.derivatives):
            raise DomainError(
                f"derivative order {order} not provided (have {len(self.derivatives)})"
            )
        t = np.atleast_1d(np.asarray(t, dtype=float))
        out = np.asarray(self.derivatives[order](t), dtype=float)
        if out.ndim == 1:
            out = out[:, None]
        return out


def unit_circle() -> TrigCurve:
    """The unit-speed circle (cos 2 pi t, sin 2 pi t)."""
    return TrigCurve(
        offset=np.zeros(2),
        cos_coeffs=np.array([[1.0, 0.0]]),
        sin_coeffs=np.array([[0.0, 1.0]]),
    )
