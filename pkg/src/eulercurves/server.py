"""Minimal HTTP facade over the core, for scripts and the browser editor.

Stateless: every request is self-contained and responses are
deterministic for identical bodies.  Malformed JSON is 400; domain and
precondition violations are 422 with the violated condition named.
"""

from __future__ import annotations

from pathlib import Path

from fastapi import FastAPI, Query, Request
from fastapi.exceptions import RequestValidationError
from fastapi.responses import JSONResponse
from fastapi.staticfiles import StaticFiles
from pydantic import BaseModel, Field

from . import __version__
from .cli import _kernel_doc
from .errors import DomainError, EulerCurvesError
from .experiments import backward_rate, forward_rate
from .fileio import (
    curve_from_dict,
    points_from_dict,
    points_to_dict,
    sampled_curve_rows,
)
from .metrics import curve_distance
from .sobolev import MultiBallSpec, discrete_seminorm, membership
from .splines import (
    knot_continuity,
    nonperiodic_smoothing,
    s0,
    s1,
    sample_curve,
    smoothing_spline,
)

app = FastAPI(title="eulercurves", version=__version__)


class PointsBody(BaseModel):
    version: int = 1
    n: int
    d: int
    periodic: bool = True
    points: list[list[float]]


class SmoothRequest(BaseModel):
    points: PointsBody
    m: int = 2
    samples: int = Field(default=256, ge=2)
    apply_shift: bool = True
    q: float | None = None
    alpha: list[float] | None = None


class DiscretizeRequest(BaseModel):
    curve: dict
    n: int
    kind: str = "s0"
    samples: int = Field(default=256, ge=2)


class RatesRequest(BaseModel):
    ball: dict
    curve: dict | None = None
    direction: str = "fwd"
    kind: str = "s0"
    grid: list[int] = Field(default_factory=lambda: [16, 32, 64, 128, 256])
    seed: int = 0


@app.exception_handler(EulerCurvesError)
async def _domain_error_handler(request: Request, exc: EulerCurvesError):
    return JSONResponse(status_code=422, content={"detail": str(exc)})


@app.exception_handler(RequestValidationError)
async def _validation_handler(request: Request, exc: RequestValidationError):
    for err in exc.errors():
        if err.get("type") == "json_invalid":
            return JSONResponse(status_code=400, content={"detail": "malformed JSON"})
    return JSONResponse(status_code=422, content={"detail": exc.errors()})


@app.get("/api/health")
def health() -> dict:
    return {"version": __version__}


@app.get("/api/kernel")
def kernel(m: int = Query(ge=0), compose: str | None = None) -> dict:
    return _kernel_doc(m, compose)


@app.post("/api/smooth")
def smooth(req: SmoothRequest) -> dict:
    p = points_from_dict(req.points.model_dump())
    if p.periodic:
        spline = smoothing_spline(p, req.m, apply_shift=req.apply_shift)
    else:
        spline = nonperiodic_smoothing(p, req.m)
    rows = sampled_curve_rows(spline, req.samples)
    q = req.q if req.q is not None else 2.0
    if req.alpha is not None:
        spec = MultiBallSpec(req.m, q, tuple(req.alpha), periodic=p.periodic)
        norms = membership(p, spec).to_dict()
    else:
        norms = {
            "m": req.m,
            "q": q,
            "alpha": None,
            "discrete": [discrete_seminorm(p, r, q) for r in range(req.m + 1)],
            "member": None,
            "slack": None,
        }
    return {
        "curve": rows,
        "spline": spline.to_dict(),
        "s0": sampled_curve_rows(s0(p), req.samples),
        "s1": sampled_curve_rows(s1(p), req.samples),
        "norms": norms,
        "distance_s0": curve_distance(spline, s0(p)).value,
        "distance_s1": curve_distance(spline, s1(p)).value,
        "continuity_order": max(req.m - 1, 0),
        "max_knot_jump": knot_continuity(spline, max(req.m - 1, 0)),
    }


@app.post("/api/discretize")
def discretize(req: DiscretizeRequest) -> dict:
    curve = curve_from_dict(req.curve)
    p = sample_curve(curve, req.n)
    if req.kind not in ("s0", "s1"):
        raise DomainError(f"kind must be 's0' or 's1', got {req.kind!r}")
    spline = s0(p) if req.kind == "s0" else s1(p)
    return {
        "points": points_to_dict(p),
        "spline": spline.to_dict(),
        "curve": sampled_curve_rows(spline, req.samples),
    }


@app.post("/api/rates")
def rates(req: RatesRequest) -> dict:
    ball = MultiBallSpec.from_dict(req.ball)
    grid = tuple(int(n) for n in req.grid)
    if req.direction == "fwd":
        if req.curve is None:
            raise DomainError("forward rates need a curve spec")
        report = forward_rate(curve_from_dict(req.curve), ball, req.kind, grid)
    elif req.direction == "bwd":
        report = backward_rate(ball, seed=req.seed, kind=req.kind, n_grid=grid)
    else:
        raise DomainError(f"direction must be 'fwd' or 'bwd', got {req.direction!r}")
    return report.to_dict()


_STATIC_DIR = Path(__file__).resolve().parents[2] / "frontend" / "dist"
if _STATIC_DIR.is_dir():
    app.mount("/", StaticFiles(directory=str(_STATIC_DIR), html=True), name="ui")
