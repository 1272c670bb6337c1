"""JSON and CSV document formats shared by the CLI and HTTP layers.

Structured data travels as JSON (floats as shortest round-trip decimals,
which is Python's default repr); sampled curves and rate tables are CSV.
"""

from __future__ import annotations

import json
from typing import Iterable

import numpy as np

from .curves import CurveSpec, PolynomialCurve, TrigCurve
from .errors import DomainError
from .kernels import PointSeq
from .splines import PiecewiseSpline

POINTS_VERSION = 1


def points_to_dict(p: PointSeq) -> dict:
    return {
        "version": POINTS_VERSION,
        "n": p.n,
        "d": p.d,
        "periodic": p.periodic,
        "points": p.data.tolist(),
    }


def points_from_dict(doc: dict) -> PointSeq:
    try:
        version = int(doc.get("version", POINTS_VERSION))
        if version != POINTS_VERSION:
            raise DomainError(f"unsupported points file version {version}")
        points = np.asarray(doc["points"], dtype=float)
        n, d = int(doc["n"]), int(doc["d"])
        periodic = bool(doc["periodic"])
    except (KeyError, TypeError, ValueError) as exc:
        raise DomainError(f"malformed points document: {exc}") from exc
    if points.ndim == 1:
        points = points[:, None]
    if points.shape != (n, d):
        raise DomainError(
            f"points array shape {points.shape} does not match (n, d) = ({n}, {d})"
        )
    return PointSeq(points, periodic=periodic)


def curve_to_dict(curve: CurveSpec) -> dict:
    if isinstance(curve, TrigCurve):
        return {
            "kind": "curve",
            "family": "trigonometric",
            "offset": curve.offset.tolist(),
            "cos": curve.cos_coeffs.tolist(),
            "sin": curve.sin_coeffs.tolist(),
        }
    if isinstance(curve, PolynomialCurve):
        return {
            "kind": "curve",
            "family": "polynomial",
            "coeffs": curve.coeffs.tolist(),
        }
    raise DomainError(f"cannot serialize curve of type {type(curve).__name__}")


def curve_from_dict(doc: dict) -> CurveSpec:
    family = doc.get("family")
    try:
        if family == "trigonometric":
            return TrigCurve(
                offset=np.asarray(doc["offset"], dtype=float),
                cos_coeffs=np.asarray(doc["cos"], dtype=float),
                sin_coeffs=np.asarray(doc["sin"], dtype=float),
            )
        if family == "polynomial":
            return PolynomialCurve(coeffs=np.asarray(doc["coeffs"], dtype=float))
    except (KeyError, TypeError, ValueError) as exc:
        raise DomainError(f"malformed curve document: {exc}") from exc
    raise DomainError(f"unknown curve family {family!r}")


def load_curve_like(doc: dict):
    """Dispatch a JSON document to a spline or an analytic curve."""
    kind = doc.get("kind")
    if kind == "spline":
        return PiecewiseSpline.from_dict(doc)
    if kind == "curve":
        return curve_from_dict(doc)
    if "spline" in doc:
        return PiecewiseSpline.from_dict(doc["spline"])
    raise DomainError(
        "document is neither a spline dump nor a curve spec "
        "(expected a 'kind' field of 'spline' or 'curve')"
    )


def read_json(path: str) -> dict:
    with open(path, "r", encoding="utf-8") as fh:
        return json.load(fh)


def write_json(path: str, doc: dict) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(doc, fh, indent=2)
        fh.write("\n")


def sampled_curve_rows(spline, samples: int, endpoint: bool | None = None) -> list[list[float]]:
    """Rows [t, x_1..x_d] sampling a spline or curve on a uniform t-grid."""
    if endpoint is None:
        endpoint = not getattr(spline, "periodic", True)
    t = np.linspace(0.0, 1.0, samples, endpoint=endpoint)
    values = np.atleast_2d(np.asarray(spline(t), dtype=float))
    return np.column_stack([t, values]).tolist()


def curve_csv(rows: Iterable[Iterable[float]], d: int) -> str:
    header = "t," + ",".join(f"x{i + 1}" for i in range(d))
    lines = [header]
    for row in rows:
        lines.append(",".join(repr(float(v)) for v in row))
    return "\n".join(lines) + "\n"
