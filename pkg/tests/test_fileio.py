"""Document round-trips for points, curves, and sampled-curve CSV."""

import numpy as np
import pytest

from eulercurves import DomainError, PointSeq, s1
from eulercurves.curves import PolynomialCurve, TrigCurve
from eulercurves.fileio import (
    curve_csv,
    curve_from_dict,
    curve_to_dict,
    load_curve_like,
    points_from_dict,
    points_to_dict,
    sampled_curve_rows,
)


def test_points_roundtrip(rng):
    p = PointSeq(rng.standard_normal((6, 3)), periodic=False)
    q = points_from_dict(points_to_dict(p))
    np.testing.assert_array_equal(p.data, q.data)
    assert q.periodic is False


def test_points_shape_mismatch():
    with pytest.raises(DomainError):
        points_from_dict({"version": 1, "n": 3, "d": 2, "periodic": True,
                          "points": [[0.0, 0.0]]})
    with pytest.raises(DomainError):
        points_from_dict({"version": 2, "n": 1, "d": 1, "periodic": True,
                          "points": [[0.0]]})


def test_curve_roundtrip():
    trig = TrigCurve(offset=np.zeros(2), cos_coeffs=np.array([[1.0, 0.0]]),
                     sin_coeffs=np.array([[0.0, 1.0]]))
    doc = curve_to_dict(trig)
    back = curve_from_dict(doc)
    t = np.linspace(0, 1, 20)
    np.testing.assert_array_equal(trig.value(t), back.value(t))

    poly = PolynomialCurve(coeffs=np.array([[1.0], [2.0]]))
    back = curve_from_dict(curve_to_dict(poly))
    np.testing.assert_array_equal(poly.value(t), back.value(t))

    with pytest.raises(DomainError):
        curve_from_dict({"family": "bezier"})


def test_load_curve_like_dispatch(rng):
    f = s1(PointSeq(rng.standard_normal((5, 2))))
    assert load_curve_like(f.to_dict()).to_dict() == f.to_dict()
    assert load_curve_like({"spline": f.to_dict()}).to_dict() == f.to_dict()
    with pytest.raises(DomainError):
        load_curve_like({"what": "ever"})


def test_csv_export(rng):
    f = s1(PointSeq(rng.standard_normal((5, 2))))
    rows = sampled_curve_rows(f, 10)
    text = curve_csv(rows, f.d)
    lines = text.strip().split("\n")
    assert lines[0] == "t,x1,x2"
    assert len(lines) == 11
    # shortest round-trip decimals reparse exactly
    parsed = [float(v) for v in lines[1].split(",")]
    assert parsed == rows[0]
