"""Kernel algebra: exact identities, inverses, and the norm inequalities."""

from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from eulercurves import (
    IDENTITY,
    Kernel,
    PointSeq,
    PreconditionError,
    compose,
    convolve,
    delta_inverse,
    delta_power,
    lq_norm,
    sigma_shift,
    smoothing,
)
from eulercurves.errors import DomainError


def test_delta_power_examples():
    assert delta_power(0).coeffs == IDENTITY.coeffs
    assert delta_power(1).coeffs == {0: Fraction(1), 1: Fraction(-1)}
    assert delta_power(2).coeffs == {0: Fraction(1), 1: Fraction(-2), 2: Fraction(1)}


def test_sigma_shift_action(rng):
    p = PointSeq(rng.standard_normal((8, 2)))
    np.testing.assert_allclose(
        convolve(sigma_shift(1), p).data, np.roll(p.data, -1, axis=0)
    )
    np.testing.assert_allclose(
        convolve(sigma_shift(2), p).data,
        0.5 * (np.roll(p.data, -1, axis=0) + np.roll(p.data, -2, axis=0)),
    )
    # shifts fix constants
    c = PointSeq(np.full((6, 1), 3.5))
    np.testing.assert_allclose(convolve(sigma_shift(3), c).data, c.data)
    with pytest.raises(DomainError):
        sigma_shift(0)


def test_convolve_identity_and_delta():
    p = PointSeq(np.array([0.0, 1.0, 2.0, 3.0]))
    np.testing.assert_array_equal(convolve(IDENTITY, p).data, p.data)
    out = convolve(delta_power(1), p)
    np.testing.assert_allclose(out.data[:, 0], [-3.0, 1.0, 1.0, 1.0])


def test_convolve_sequential_matches_composed(rng):
    p = PointSeq(rng.standard_normal((16, 3)))
    twice = convolve(delta_power(1), convolve(delta_power(1), p))
    once = convolve(delta_power(2), p)
    np.testing.assert_allclose(twice.data, once.data, atol=1e-14)


def test_convolve_support_too_wide():
    p = PointSeq(np.zeros((3, 1)))
    with pytest.raises(PreconditionError):
        convolve(delta_power(3), p)


def test_compose_identity(rng):
    k = delta_power(2)
    assert compose(IDENTITY, k).coeffs == k.coeffs


def test_compose_smoothing_with_sigma():
    k = compose(smoothing(2), sigma_shift(2))
    assert k.coeffs == {-1: Fraction(1, 4), 0: Fraction(1, 2), 1: Fraction(1, 4)}
    assert k.is_symmetric()


@pytest.mark.parametrize("m", range(2, 11))
def test_smoothed_sigma_symmetric(m):
    assert compose(smoothing(m), sigma_shift(m)).is_symmetric()


@pytest.mark.parametrize("a,b", [(0, 1), (1, 1), (2, 3), (5, 7), (6, 6)])
def test_delta_semigroup(a, b):
    assert compose(delta_power(a), delta_power(b)).coeffs == delta_power(a + b).coeffs


def test_delta_inverse_of_delta_is_identity():
    assert delta_inverse(delta_power(1)).coeffs == IDENTITY.coeffs


def test_delta_inverse_rejects_nonzero_sum():
    with pytest.raises(PreconditionError):
        delta_inverse(IDENTITY)


def test_smoothed_sigma_minus_identity():
    # degenerate low degrees: the remainder vanishes entirely
    assert (compose(smoothing(1), sigma_shift(1)) - IDENTITY).coeffs == {}
    # m = 2: zero-sum remainder admitting two inversions
    a = compose(smoothing(2), sigma_shift(2)) - IDENTITY
    assert a.total() == 0
    r = delta_inverse(a)
    assert r.total() == 0
    delta_inverse(r)  # second inversion exists


@settings(max_examples=100, deadline=None)
@given(
    st.lists(
        st.tuples(st.integers(-6, 6), st.integers(-50, 50)),
        min_size=1,
        max_size=8,
    )
)
def test_delta_inverse_roundtrip_and_bound(entries):
    coeffs: dict[int, Fraction] = {}
    for i, c in entries:
        coeffs[i] = coeffs.get(i, Fraction(0)) + Fraction(c)
    # force a zero sum by balancing on a fresh index
    total = sum(coeffs.values(), Fraction(0))
    coeffs[7] = coeffs.get(7, Fraction(0)) - total
    a = Kernel(coeffs)
    r = delta_inverse(a)
    assert compose(delta_power(1), r).coeffs == a.coeffs
    assert r.l1_mass() <= (a.alpha + a.beta) * a.l1_mass()


def test_lq_norm_examples():
    p = PointSeq(np.ones((4, 1)))
    for q in (1.0, 2.0, 3.5):
        assert lq_norm(p, q) == pytest.approx(1.0, abs=1e-14)
    c = PointSeq(np.full((7, 2), 3.0 / np.sqrt(2)))
    for q in (1.0, 2.0, 4.0):
        assert lq_norm(c, q) == pytest.approx(3.0, rel=1e-13)
    with pytest.raises(DomainError):
        lq_norm(p, 0.5)


def test_lq_inner_norm_choices():
    p = PointSeq(np.array([[3.0, 4.0]]))
    assert lq_norm(p, 2.0, "euclidean") == pytest.approx(5.0)
    assert lq_norm(p, 2.0, "l1") == pytest.approx(7.0)
    assert lq_norm(p, 2.0, "linf") == pytest.approx(4.0)
    with pytest.raises(DomainError):
        lq_norm(p, 2.0, "nope")


def _random_kernel(rng):
    support = rng.integers(-4, 3)
    width = int(rng.integers(1, 5))
    coeffs = {
        int(support + j): Fraction(int(rng.integers(-20, 21)), int(rng.integers(1, 9)))
        for j in range(width)
    }
    return Kernel(coeffs)


def test_youngs_inequality_random_triples():
    # ||K * p||_lq <= n ||K||_l1 ||p||_lq; renormalized, n ||K||_l1 is the
    # plain coefficient l1 mass.
    rng = np.random.default_rng(7)
    for _ in range(1000):
        k = _random_kernel(rng)
        n = int(rng.integers(8, 33))
        d = int(rng.integers(1, 4))
        q = float(rng.uniform(1.0, 4.0))
        p = PointSeq(rng.standard_normal((n, d)))
        lhs = lq_norm(convolve(k, p), q)
        rhs = float(k.l1_mass()) * lq_norm(p, q)
        assert lhs <= rhs * (1.0 + 1e-12) + 1e-300


def test_restricted_sum_inequality_open_families():
    # Young-type bound with the l^q sums restricted: the valid output range
    # only touches inputs from the original valid range.
    rng = np.random.default_rng(13)
    for _ in range(200):
        k = _random_kernel(rng)
        lo, hi = k.support
        # long enough that the shrunk valid range stays non-empty
        n = int(rng.integers(max(hi, 0) - min(lo, 0) + 2, 40))
        q = float(rng.uniform(1.0, 3.0))
        p = PointSeq(rng.standard_normal((n, 2)), periodic=False)
        out = convolve(k, p)
        lhs = lq_norm(out, q, index_range=out.valid)
        rhs = float(k.l1_mass()) * lq_norm(p, q, index_range=p.valid)
        assert lhs <= rhs * (1.0 + 1e-12) + 1e-300


def test_open_valid_range_bookkeeping():
    p = PointSeq(np.arange(10.0), periodic=False)
    out = convolve(delta_power(2), p)
    assert out.valid == (2, 9)
    # interior second differences of a ramp vanish
    np.testing.assert_allclose(out.data[2:10], 0.0, atol=1e-14)


def test_pointseq_validation():
    with pytest.raises(DomainError):
        PointSeq(np.array([[np.inf]]))
    with pytest.raises(DomainError):
        PointSeq(np.zeros((0, 2)))
