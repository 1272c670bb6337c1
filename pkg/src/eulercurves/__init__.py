"""Curve discretization and Eulerian B-spline smoothing toolkit."""

from .curves import CallableCurve, CurveSpec, PolynomialCurve, TrigCurve, unit_circle
from .errors import DomainError, EulerCurvesError, PreconditionError
from .eulerian import (
    EulerianRow,
    SmoothingKernel,
    check_recurrence_rec1,
    check_recurrence_rec2,
    eulerian_row,
    smoothing_kernel,
)
from .experiments import (
    RateFit,
    RateReport,
    backward_rate,
    fit_rate,
    forward_rate,
    random_ball_family,
)
from .kernels import (
    IDENTITY,
    SHIFT,
    Kernel,
    PointSeq,
    compose,
    convolve,
    delta_inverse,
    delta_power,
    lq_norm,
    sigma_shift,
    smoothing,
)
from .metrics import DistanceResult, curve_distance, w1_upper_bound
from .sobolev import (
    MultiBallSpec,
    NormReport,
    continuous_seminorm,
    discrete_seminorm,
    membership,
    scale_into_ball,
    spline_norm_report,
)
from .splines import (
    PiecewiseSpline,
    bspline_basis,
    derivative_spline,
    eval_bspline_form,
    knot_continuity,
    nonperiodic_smoothing,
    s0,
    s1,
    sample_curve,
    smoothing_spline,
)

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
