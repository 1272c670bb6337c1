import numpy as np
import pytest

from eulercurves import PointSeq, s0, s1, smoothing_spline


def random_points(rng, n, d=2, periodic=True, scale=1.0):
    return PointSeq(scale * rng.standard_normal((n, d)), periodic=periodic)


def random_spline(rng, n=8, d=2, degree=2):
    p = random_points(rng, max(n, 2 * degree + 3), d)
    if degree == 0:
        return s0(p)
    if degree == 1:
        return s1(p)
    return smoothing_spline(p, degree)


@pytest.fixture
def rng():
    return np.random.default_rng(20260824)
