"""Scikit-learn style wrappers around the smoothing and discretization ops.

These adapters let the spline construction participate in sklearn
pipelines: ``fit`` consumes an (n, d) array of control points, and
``transform`` maps an array of time values to points on the fitted curve.
"""

from __future__ import annotations

import numpy as np
from sklearn.base import BaseEstimator, TransformerMixin
from sklearn.utils.validation import check_array, check_is_fitted

from .kernels import PointSeq
from .splines import nonperiodic_smoothing, s0, s1, smoothing_spline


class SplineSmoother(BaseEstimator, TransformerMixin):
    """Fits the degree-m Eulerian smoothing spline to control points.

    Parameters
    ----------
    m : spline degree.
    periodic : whether the control points close into a loop.
    apply_shift : apply the alignment shift so the curve tracks the
        points rather than running ahead of them.
    samples : default number of curve samples for fit_transform.
    """

    def __init__(self, m: int = 2, periodic: bool = True,
                 apply_shift: bool = True, samples: int = 256):
        self.m = m
        self.periodic = periodic
        self.apply_shift = apply_shift
        self.samples = samples

    def fit(self, X, y=None):
        X = check_array(X, ensure_min_samples=2)
        p = PointSeq(X, periodic=self.periodic)
        if self.periodic:
            self.spline_ = smoothing_spline(p, self.m, self.apply_shift)
        else:
            self.spline_ = nonperiodic_smoothing(p, self.m)
        self.n_features_in_ = X.shape[1]
        return self

    def transform(self, T):
        """Evaluate the fitted curve at the given time values in [0, 1]."""
        check_is_fitted(self, "spline_")
        t = np.asarray(T, dtype=float).ravel()
        return self.spline_(t)

    def fit_transform(self, X, y=None, **fit_params):
        self.fit(X, y)
        endpoint = not self.periodic
        t = np.linspace(0.0, 1.0, self.samples, endpoint=endpoint)
        return self.transform(t)


class CurveDiscretizer(BaseEstimator, TransformerMixin):
    """Fits a piecewise-constant or linear discretization to control points."""

    def __init__(self, kind: str = "s1", periodic: bool = True):
        self.kind = kind
        self.periodic = periodic

    def fit(self, X, y=None):
        X = check_array(X, ensure_min_samples=1)
        p = PointSeq(X, periodic=self.periodic)
        self.spline_ = s0(p) if self.kind == "s0" else s1(p)
        self.n_features_in_ = X.shape[1]
        return self

    def transform(self, T):
        check_is_fitted(self, "spline_")
        t = np.asarray(T, dtype=float).ravel()
        return self.spline_(t)
