"""Discrete/continuous semi-norms, membership, and the ball rescale."""

import numpy as np
import pytest

from eulercurves import (
    DomainError,
    MultiBallSpec,
    PointSeq,
    PreconditionError,
    continuous_seminorm,
    convolve,
    delta_power,
    discrete_seminorm,
    lq_norm,
    membership,
    s1,
    sample_curve,
    scale_into_ball,
    sigma_shift,
    smoothing_spline,
    unit_circle,
)
from eulercurves.sobolev import curve_seminorm, spline_norm_report

from conftest import random_points

CIRCLE_SPEC = MultiBallSpec(2, 2.0, (1.0, 2 * np.pi, 4 * np.pi**2))


def test_constant_sequence_vanishes():
    p = PointSeq(np.full((9, 2), 3.0))
    for r in (1, 2, 3):
        assert discrete_seminorm(p, r, 2.0) == 0.0


@pytest.mark.parametrize("q", [1.0, 2.0, 3.0])
def test_open_ramp_first_order(q):
    # all n-1 valid first differences equal 1/n; with the full-n
    # renormalization the exact value is ((n-1)/n)^(1/q).
    n = 16
    p = PointSeq(np.arange(n) / n, periodic=False)
    expect = ((n - 1) / n) ** (1.0 / q)
    assert discrete_seminorm(p, 1, q) == pytest.approx(expect, rel=1e-13)


def test_circle_chord_identity():
    for n in (4, 8, 32, 128):
        p = sample_curve(unit_circle(), n)
        value = discrete_seminorm(p, 1, 2.0)
        assert value == pytest.approx(2 * n * np.sin(np.pi / n), rel=1e-12)
        assert value <= 2 * np.pi


def test_circle_membership():
    for n in (4, 16, 64, 256):
        report = membership(sample_curve(unit_circle(), n), CIRCLE_SPEC)
        assert report.all_member
        assert all(s >= 0 for s in report.slack)


def test_membership_trivia():
    zero = PointSeq(np.zeros((8, 2)))
    assert membership(zero, CIRCLE_SPEC).all_member
    with pytest.raises(PreconditionError):
        membership(PointSeq(np.zeros((8, 2)), periodic=False), CIRCLE_SPEC)


def test_homogeneity(rng):
    for _ in range(50):
        p = random_points(rng, 12, d=2)
        c = float(rng.uniform(0.1, 10.0))
        scaled = PointSeq(c * p.data)
        for r in (0, 1, 2):
            q = float(rng.uniform(1.0, 4.0))
            a = discrete_seminorm(p, r, q)
            b = discrete_seminorm(scaled, r, q)
            assert b == pytest.approx(c * a, rel=1e-12, abs=1e-14)


def test_l1_below_lq(rng):
    for _ in range(100):
        p = random_points(rng, int(rng.integers(4, 20)), d=2)
        q = float(rng.uniform(1.0, 5.0))
        assert lq_norm(p, 1.0) <= lq_norm(p, q) * (1.0 + 1e-12)


def test_open_order_limit():
    p = PointSeq(np.zeros((4, 1)), periodic=False)
    with pytest.raises(DomainError):
        discrete_seminorm(p, 4, 2.0)


def test_ball_spec_validation():
    with pytest.raises(DomainError):
        MultiBallSpec(2, 2.0, (1.0, 2.0))  # wrong radius count
    with pytest.raises(DomainError):
        MultiBallSpec(1, 2.0, (1.0, -1.0))
    with pytest.raises(DomainError):
        MultiBallSpec(1, 0.5, (1.0, 1.0))
    spec = MultiBallSpec(1, 2.0, (1.0, 2.0), periodic=False)
    assert MultiBallSpec.from_dict(spec.to_dict()) == spec


def test_continuous_constant_curve():
    f = smoothing_spline(PointSeq(np.full((9, 2), 2.0)), 2)
    for l in (1, 2):
        assert continuous_seminorm(f, l, 2.0) == 0.0
    assert continuous_seminorm(f, 0, 2.0) == pytest.approx(2.0 * np.sqrt(2), rel=1e-12)


@pytest.mark.parametrize("q", [1.0, 2.0, 3.0])
def test_continuous_s1_open_ramp(q):
    n = 16
    f = s1(PointSeq(np.arange(n) / n, periodic=False))
    # derivative is 1 on the interpolated range, 0 on the held segment
    expect = ((n - 1) / n) ** (1.0 / q)
    assert continuous_seminorm(f, 1, q) == pytest.approx(expect, rel=1e-11)


@pytest.mark.parametrize("m", [1, 2, 3, 4, 5, 6])
@pytest.mark.parametrize("n", [16, 64, 256])
def test_top_order_exactness(m, n, rng):
    p = random_points(rng, n, d=2)
    f = smoothing_spline(p, m)
    q_pts = convolve(sigma_shift(m), p)
    discrete = float(n) ** m * lq_norm(convolve(delta_power(m), q_pts), 2.0)
    assert continuous_seminorm(f, m, 2.0) == pytest.approx(discrete, rel=1e-12)


def test_continuous_order_limit():
    f = s1(PointSeq(np.arange(4.0)))
    with pytest.raises(DomainError):
        continuous_seminorm(f, 2, 2.0)


def test_scale_into_ball_inside(rng):
    p = random_points(rng, 12, d=2, scale=1e-3)
    f = smoothing_spline(p, 2)
    delta, g = scale_into_ball(f, CIRCLE_SPEC)
    assert delta == 1.0
    np.testing.assert_array_equal(g.coeffs, f.coeffs)


def test_scale_into_ball_single_violation(rng):
    p = random_points(rng, 16, d=2)
    f = smoothing_spline(p, 2)
    norms = [continuous_seminorm(f, r, 2.0) for r in range(3)]
    # radii leave slack everywhere except order 1, violated by a factor 2
    alpha = (2 * norms[0], 0.5 * norms[1], 2 * norms[2])
    delta, g = scale_into_ball(f, MultiBallSpec(2, 2.0, alpha))
    assert delta == pytest.approx(0.5, rel=1e-12)
    report = spline_norm_report(g, MultiBallSpec(2, 2.0, alpha))
    assert report.all_member


def test_curve_seminorm_circle():
    circle = unit_circle()
    assert curve_seminorm(circle, 0, 2.0) == pytest.approx(1.0, rel=1e-10)
    assert curve_seminorm(circle, 1, 2.0) == pytest.approx(2 * np.pi, rel=1e-10)
    assert curve_seminorm(circle, 2, 2.0) == pytest.approx(4 * np.pi**2, rel=1e-10)


def test_witness_low_orders_stay_inside(rng):
    # smoothing witnesses of in-ball families never exceed the radii at
    # orders m-1 and m
    from eulercurves.experiments import random_ball_family

    for n in (16, 64):
        p = random_ball_family(CIRCLE_SPEC, n, seed=3)
        f = smoothing_spline(p, 2)
        for l in (1, 2):
            norm = continuous_seminorm(f, l, 2.0)
            assert norm <= CIRCLE_SPEC.alpha[l] * (1.0 + 1e-12)
