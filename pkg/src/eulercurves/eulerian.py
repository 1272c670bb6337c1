"""Exact Eulerian numbers and the rational smoothing kernels built from them.

The Eulerian triangle A(m, k) counts permutations of m elements with k
descents.  Rows are kept as exact Python integers; the degree-m smoothing
kernel stores the row divided by m! as a shared-denominator rational.

Index convention: ``EulerianRow.values[k]`` (0-based k = 0..m-1) is the
classical A(m, k), so the row for m = 3 reads [1, 4, 1].  The smoothing
kernel of degree m has nonzero coefficients at indices 1..m with
coefficient A(m, i-1)/m! at index i; degree 0 is the convolution identity.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial

from .errors import DomainError

#: Largest degree accepted by the exact routines.  Row sums are m!, which
#: stays within 128 bits for m <= 32; larger degrees have no practical use.
MAX_DEGREE = 32


def _check_degree(m: int, minimum: int = 0, maximum: int = MAX_DEGREE) -> None:
    if not isinstance(m, int):
        raise DomainError(f"degree must be an integer, got {m!r}")
    if m < minimum:
        raise DomainError(f"degree must be >= {minimum}, got {m}")
    if m > maximum:
        raise DomainError(
            f"degree exceeds exact range: {m} > {maximum}"
        )


@dataclass(frozen=True)
class EulerianRow:
    """One row of the Eulerian triangle, entries A(m, 0) .. A(m, m-1)."""

    m: int
    values: tuple[int, ...]

    def __post_init__(self):
        if len(self.values) != max(self.m, 0):
            raise DomainError("row length must equal the degree")

    def sum(self) -> int:
        return sum(self.values)


@dataclass(frozen=True)
class SmoothingKernel:
    """Degree-m smoothing kernel: numerators over the shared denominator m!.

    ``numerators[i]`` is the integer numerator of the coefficient at
    convolution index i, for i = 0..m.
    """

    m: int
    numerators: tuple[int, ...]
    denominator: int

    def coefficient(self, i: int) -> Fraction:
        if 0 <= i <= self.m:
            return Fraction(self.numerators[i], self.denominator)
        return Fraction(0)

    def coefficients(self) -> list[Fraction]:
        return [Fraction(v, self.denominator) for v in self.numerators]


@lru_cache(maxsize=None)
def eulerian_row(m: int) -> EulerianRow:
    """Row m of the Eulerian triangle via the two-term recurrence.

    A(m, k) = (m - k) A(m-1, k-1) + (k + 1) A(m-1, k) in 0-based k.
    The degree-0 row is empty by convention.
    """
    _check_degree(m)
    if m == 0:
        return EulerianRow(0, ())
    if m == 1:
        return EulerianRow(1, (1,))
    prev = eulerian_row(m - 1).values
    values = []
    for k in range(m):
        left = (m - k) * prev[k - 1] if 1 <= k else 0
        right = (k + 1) * prev[k] if k < m - 1 else 0
        values.append(left + right)
    return EulerianRow(m, tuple(values))


def eulerian_number(m: int, i: int) -> int:
    """E^m_i in the 1-based convention used by the kernel coefficients.

    For m >= 1 the value is A(m, i-1) when 1 <= i <= m and 0 otherwise.
    For m = 0 the sequence is the Kronecker delta at i = 0.
    """
    _check_degree(m)
    if m == 0:
        return 1 if i == 0 else 0
    if 1 <= i <= m:
        return eulerian_row(m).values[i - 1]
    return 0


def eulerian_closed_form(m: int, i: int) -> int:
    """Alternating-binomial closed form for E^m_i (1-based), m >= 1.

    E^m_i = sum_{k=0}^{i} (-1)^k C(m+1, k) (i-k)^m.  Vanishes outside
    1..m; used as an independent cross-check of the recurrence.
    """
    _check_degree(m, minimum=1)
    if i < 0:
        return 0
    return sum((-1) ** k * comb(m + 1, k) * (i - k) ** m for k in range(i + 1))


@lru_cache(maxsize=None)
def smoothing_kernel(m: int) -> SmoothingKernel:
    """The degree-m smoothing kernel C^m.

    C^0 is the convolution identity; for m >= 1 the coefficient at index i
    is A(m, i-1)/m!, zero at index 0 and outside [0, m].  Coefficients sum
    to exactly 1.
    """
    _check_degree(m)
    if m == 0:
        return SmoothingKernel(0, (1,), 1)
    row = eulerian_row(m).values
    return SmoothingKernel(m, (0,) + row, factorial(m))


def check_recurrence_rec1(m: int) -> bool:
    """First Eulerian recurrence, checked exactly over the extended range.

    E^m_i = sum_{k=1}^{m} C(m,k) sum_{l=0}^{k-1} (-1)^l C(k-1,l) E^{m-k}_{i-1-l}
    with entries outside the row support treated as 0.
    """
    _check_degree(m, minimum=1, maximum=20)
    for i in range(-2, m + 3):
        rhs = sum(
            comb(m, k)
            * sum(
                (-1) ** l * comb(k - 1, l) * eulerian_number(m - k, i - 1 - l)
                for l in range(k)
            )
            for k in range(1, m + 1)
        )
        if rhs != eulerian_number(m, i):
            return False
    return True


def check_recurrence_rec2(m: int) -> bool:
    """Second Eulerian recurrence under this package's index convention.

    E^m_i = sum_{k=1}^{m} C(m,k) sum_{l=1}^{k} (-1)^{l-1} C(k-1,l-1) E^{m-k}_{i-l},
    equivalent to the telescoped knot-continuity identity
    sum_{k=1}^{s} (1/k!) (T * C^{s-k} * Delta^{*k}) = Delta * C^s.
    """
    _check_degree(m, minimum=1, maximum=20)
    for i in range(-2, m + 3):
        rhs = sum(
            comb(m, k)
            * sum(
                (-1) ** (l - 1) * comb(k - 1, l - 1) * eulerian_number(m - k, i - l)
                for l in range(1, k + 1)
            )
            for k in range(1, m + 1)
        )
        if rhs != eulerian_number(m, i):
            return False
    return True
