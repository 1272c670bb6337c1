"""Discrete convolution algebra on support-relative kernels.

Kernels are stored as sparse maps from a signed index to an exact
``Fraction`` together with a declared support window [-alpha, beta]; they
are instantiated against a point family only when convolved, at which
point the arithmetic drops to floats.  The convention follows
(K * p)_i = sum_j K_j p_{i-j}, indices taken mod n for periodic families.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import comb
from typing import Mapping

import numpy as np

from .errors import DomainError, PreconditionError
from .eulerian import smoothing_kernel

RationalLike = int | Fraction


@dataclass(frozen=True)
class Kernel:
    """A finitely supported convolution kernel with exact coefficients."""

    coeffs: Mapping[int, Fraction]
    description: str = ""

    def __post_init__(self):
        cleaned = {
            int(i): Fraction(c) for i, c in self.coeffs.items() if c != 0
        }
        object.__setattr__(self, "coeffs", cleaned)

    @property
    def support(self) -> tuple[int, int]:
        """Tight window (-alpha, beta) as (min index, max index); (0, 0) if zero."""
        if not self.coeffs:
            return (0, 0)
        return (min(self.coeffs), max(self.coeffs))

    @property
    def alpha(self) -> int:
        return max(0, -self.support[0])

    @property
    def beta(self) -> int:
        return max(0, self.support[1])

    def coefficient(self, i: int) -> Fraction:
        return self.coeffs.get(i, Fraction(0))

    def total(self) -> Fraction:
        return sum(self.coeffs.values(), Fraction(0))

    def l1_mass(self) -> Fraction:
        """Sum of |coefficients|; the renormalized l1 norm at length n is this / n."""
        return sum((abs(c) for c in self.coeffs.values()), Fraction(0))

    def is_symmetric(self) -> bool:
        return all(self.coefficient(-i) == c for i, c in self.coeffs.items())

    def scaled(self, factor: RationalLike) -> "Kernel":
        f = Fraction(factor)
        return Kernel({i: c * f for i, c in self.coeffs.items()}, self.description)

    def __add__(self, other: "Kernel") -> "Kernel":
        out = dict(self.coeffs)
        for i, c in other.coeffs.items():
            out[i] = out.get(i, Fraction(0)) + c
        return Kernel(out)

    def __sub__(self, other: "Kernel") -> "Kernel":
        return self + other.scaled(-1)

    def as_floats(self) -> dict[int, float]:
        return {i: float(c) for i, c in self.coeffs.items()}


IDENTITY = Kernel({0: Fraction(1)}, "identity")
SHIFT = Kernel({1: Fraction(1)}, "shift T")


def delta_power(m: int) -> Kernel:
    """The m-th discrete difference kernel, coefficients (-1)^i C(m, i)."""
    if m < 0:
        raise DomainError(f"difference order must be >= 0, got {m}")
    return Kernel(
        {i: Fraction((-1) ** i * comb(m, i)) for i in range(m + 1)},
        f"delta^{m}",
    )


def sigma_shift(m: int) -> Kernel:
    """The alignment shift: a pure index shift for odd m, midpoint averaging for even m."""
    if m < 1:
        raise DomainError(f"shift order must be >= 1, got {m}")
    if m % 2 == 1:
        return Kernel({-(m + 1) // 2: Fraction(1)}, f"sigma_{m}")
    half = Fraction(1, 2)
    return Kernel({-m // 2: half, -(m // 2 + 1): half}, f"sigma_{m}")


def smoothing(m: int) -> Kernel:
    """The degree-m smoothing kernel as a Kernel value."""
    sk = smoothing_kernel(m)
    return Kernel(
        {i: sk.coefficient(i) for i in range(m + 1)},
        f"C^{m}",
    )


def compose(*kernels: Kernel) -> Kernel:
    """Exact convolution of kernel coefficient maps; supports add up."""
    out = {0: Fraction(1)}
    for k in kernels:
        nxt: dict[int, Fraction] = {}
        for i, a in out.items():
            for j, b in k.coeffs.items():
                nxt[i + j] = nxt.get(i + j, Fraction(0)) + a * b
        out = nxt
    return Kernel(out)


def delta_inverse(a: Kernel) -> Kernel:
    """The discrete antiderivative of a zero-sum kernel.

    Solves Delta * R = A with R supported in [-alpha, beta - 1]:
    R_i = sum_{j <= i} A_j.  The renormalized l1 norm of the result obeys
    ||R|| <= (alpha + beta) ||A||.
    """
    if a.total() != 0:
        raise PreconditionError(
            "delta_inverse requires coefficients summing to exactly 0, "
            f"got sum {a.total()}"
        )
    if not a.coeffs:
        return Kernel({})
    lo, hi = a.support
    out: dict[int, Fraction] = {}
    running = Fraction(0)
    for i in range(lo, hi):
        running += a.coefficient(i)
        out[i] = running
    return Kernel(out, f"delta^-1({a.description})")


@dataclass(frozen=True)
class PointSeq:
    """A family of n points in R^d with a boundary mode.

    ``valid`` is the inclusive index range on which the values are
    meaningful; it starts as the full range and shrinks when an open
    family is convolved with a kernel whose support would wrap.
    """

    data: np.ndarray
    periodic: bool = True
    valid: tuple[int, int] | None = field(default=None)

    def __post_init__(self):
        arr = np.asarray(self.data, dtype=float)
        if arr.ndim == 1:
            arr = arr[:, None]
        if arr.ndim != 2 or arr.shape[0] < 1 or arr.shape[1] < 1:
            raise DomainError("point family must be a non-empty n x d array")
        if not np.all(np.isfinite(arr)):
            raise DomainError("point coordinates must be finite")
        object.__setattr__(self, "data", arr)
        if self.valid is None:
            object.__setattr__(self, "valid", (0, arr.shape[0] - 1))

    @property
    def n(self) -> int:
        return self.data.shape[0]

    @property
    def d(self) -> int:
        return self.data.shape[1]

    def shifted_by(self, c: np.ndarray) -> "PointSeq":
        return PointSeq(self.data + np.asarray(c, dtype=float), self.periodic, self.valid)


def convolve(kernel: Kernel, p: PointSeq) -> PointSeq:
    """Apply a kernel to a point family; open families carry a shrunk valid range."""
    n = p.n
    lo, hi = kernel.support
    if hi - lo >= n:
        raise PreconditionError(
            f"kernel support width {hi - lo + 1} does not fit length {n}"
        )
    out = np.zeros_like(p.data)
    for j, c in sorted(kernel.as_floats().items()):
        out += c * np.roll(p.data, j, axis=0)
    if p.periodic:
        return PointSeq(out, True)
    # Index i is valid iff every touched index i - j stays inside the
    # original valid range (no wrapped entries).
    a, b = p.valid
    lo_valid = a + max(hi, 0)
    hi_valid = b + min(lo, 0)
    if lo_valid > hi_valid:
        raise PreconditionError(
            "open family too short for the kernel support: no valid indices remain"
        )
    return PointSeq(out, False, (lo_valid, hi_valid))


_INNER_NORMS = {
    "euclidean": lambda a: np.linalg.norm(a, axis=-1),
    "l1": lambda a: np.abs(a).sum(axis=-1),
    "linf": lambda a: np.abs(a).max(axis=-1),
}


def inner_norms(values: np.ndarray, inner_norm: str = "euclidean") -> np.ndarray:
    """Per-point R^d norms of an (..., d) array."""
    try:
        fn = _INNER_NORMS[inner_norm]
    except KeyError:
        raise DomainError(
            f"unknown inner norm {inner_norm!r}; choose from {sorted(_INNER_NORMS)}"
        ) from None
    return fn(np.asarray(values, dtype=float))


def lq_norm(
    p: PointSeq | np.ndarray,
    q: float,
    inner_norm: str = "euclidean",
    index_range: tuple[int, int] | None = None,
) -> float:
    """Renormalized l^q norm ((1/n) sum ||p_i||^q)^(1/q).

    The 1/n factor always uses the full length n, also when the sum is
    restricted to ``index_range`` (inclusive), matching the non-periodic
    semi-norm convention.
    """
    if q < 1:
        raise DomainError(f"exponent must be >= 1, got {q}")
    data = p.data if isinstance(p, PointSeq) else np.asarray(p, dtype=float)
    if data.ndim == 1:
        data = data[:, None]
    n = data.shape[0]
    norms = inner_norms(data, inner_norm)
    if index_range is not None:
        a, b = index_range
        norms = norms[a : b + 1]
    return float((np.sum(norms**q) / n) ** (1.0 / q))
