"""HTTP front end: the toolkit as a small stateless compute service.

Every endpoint is a pure function of its query parameters, so responses
are cache-friendly and safe to serve concurrently.  Run with

    uvicorn spinchain.service:app

Unlike the CLI table emitters, responses carry full float precision.
"""

from __future__ import annotations

import os

from fastapi import FastAPI, HTTPException, Query
from fastapi.responses import JSONResponse, PlainTextResponse
from pydantic import BaseModel

from . import __version__
from .basis import enumerate_sector
from .errors import ModelParseError, ResourceLimitError, SpinChainError
from .hamiltonian import build_sector_hamiltonian, coordinate_dump
from .model import PathSpec, instantiate_path, make_xxx_chain, parse_model_document, serialize_model
from .observables import ground_state_report
from .spectrum import crossing_points, ferro_check, phase_boundaries, sector_minima, sweep

DEFAULT_MAX_N = 14


class Crossing(BaseModel):
    label: int
    lower_sector: int
    upper_sector: int
    t: float


class CrossingsResponse(BaseModel):
    n_sites: int
    crossings: list[Crossing]


class CrossingsTableResponse(BaseModel):
    systems: list[CrossingsResponse]


class SectorLine(BaseModel):
    sector: int
    minimum: float
    slope: float
    intercept: float


class SpectrumResponse(BaseModel):
    n_sites: int
    lines: list[SectorLine]


class SweepPoint(BaseModel):
    t: float
    sector_energies: list[float]
    envelope: float
    argmin_sector: int


class SweepResponse(BaseModel):
    n_sites: int
    rows: list[SweepPoint]


class Phase(BaseModel):
    t_lo: float
    t_hi: float
    sector: int
    total_spin: float
    s0: float
    degeneracy: int
    eta: list[float]
    at_crossing: bool


class PhaseTableResponse(BaseModel):
    n_sites: int
    phases: list[Phase]


class EtaResponse(BaseModel):
    n_sites: int
    t: float
    reports: list[Phase]


class FerroCheckResponse(BaseModel):
    n_sites: int
    no_crossings: bool


class ModelValidateResponse(BaseModel):
    n_sites: int
    u1_symmetric: bool
    normalized: dict


class ServiceInfo(BaseModel):
    name: str
    version: str
    max_sites: int


def _max_sites() -> int:
    env = os.environ.get("SPINCHAIN_MAX_N")
    return int(env) if env else DEFAULT_MAX_N


def _check_sites(n_sites: int) -> int:
    cap = _max_sites()
    if not 2 <= n_sites <= cap:
        raise HTTPException(
            status_code=413,
            detail=f"N={n_sites} outside supported range [2, {cap}]",
        )
    return n_sites


def _phase(report) -> Phase:
    return Phase(
        t_lo=report.t_interval[0],
        t_hi=report.t_interval[1],
        sector=report.sector,
        total_spin=report.total_spin,
        s0=report.s0,
        degeneracy=report.degeneracy,
        eta=list(report.eta_values),
        at_crossing=report.at_crossing,
    )


app = FastAPI(title="spinchain", version=__version__)


@app.exception_handler(SpinChainError)
async def _toolkit_error(request, exc: SpinChainError):
    status = 413 if isinstance(exc, ResourceLimitError) else 422
    return JSONResponse(status_code=status, content={"detail": str(exc)})


@app.get("/", response_model=ServiceInfo)
def info() -> ServiceInfo:
    return ServiceInfo(name="spinchain", version=__version__, max_sites=_max_sites())


@app.get("/crossings", response_model=CrossingsResponse)
def crossings(n: int = Query(ge=2)) -> CrossingsResponse:
    _check_sites(n)
    points = crossing_points(sector_minima(n))
    return CrossingsResponse(
        n_sites=n,
        crossings=[
            Crossing(label=c.label, lower_sector=c.lower_sector,
                     upper_sector=c.upper_sector, t=c.t)
            for c in points
        ],
    )


@app.get("/crossings/table", response_model=CrossingsTableResponse)
def crossings_table(n_max: int = Query(default=12, ge=2)) -> CrossingsTableResponse:
    _check_sites(n_max)
    return CrossingsTableResponse(
        systems=[crossings(n) for n in range(2, n_max + 1)]
    )


@app.get("/spectrum", response_model=SpectrumResponse)
def spectrum(n: int = Query(ge=2)) -> SpectrumResponse:
    _check_sites(n)
    ps = sector_minima(n)
    return SpectrumResponse(
        n_sites=n,
        lines=[
            SectorLine(sector=k, minimum=ps.minima[k], slope=ps.slope(k),
                       intercept=ps.intercept(k))
            for k in range(ps.sectors)
        ],
    )


@app.get("/sweep", response_model=SweepResponse)
def sweep_endpoint(
    n: int = Query(ge=2),
    lo: float = Query(default=0.0, ge=0.0, le=1.0),
    hi: float = Query(default=1.0, ge=0.0, le=1.0),
    step: float = Query(default=0.001, gt=0.0),
) -> SweepResponse:
    _check_sites(n)
    if not lo < hi:
        raise HTTPException(status_code=422, detail="grid requires lo < hi")
    count = int((hi - lo) / step + 1e-9)
    grid = [min(lo + i * step, hi) for i in range(count + 1)]
    rows = sweep(n, grid)
    return SweepResponse(
        n_sites=n,
        rows=[
            SweepPoint(t=r.t, sector_energies=list(r.sector_energies),
                       envelope=r.envelope, argmin_sector=r.argmin_sector)
            for r in rows
        ],
    )


@app.get("/phase-table", response_model=PhaseTableResponse)
def phase_table(n: int = Query(ge=2)) -> PhaseTableResponse:
    _check_sites(n)
    bounds = phase_boundaries(sector_minima(n))
    reports = []
    for interval_lo, interval_hi in zip(bounds[:-1], bounds[1:]):
        reports.extend(ground_state_report(n, 0.5 * (interval_lo + interval_hi)))
    reports.reverse()
    return PhaseTableResponse(n_sites=n, phases=[_phase(r) for r in reports])


@app.get("/eta", response_model=EtaResponse)
def eta_endpoint(n: int = Query(ge=2), t: float = Query(ge=0.0, le=1.0)) -> EtaResponse:
    _check_sites(n)
    return EtaResponse(
        n_sites=n, t=t, reports=[_phase(r) for r in ground_state_report(n, t)]
    )


@app.get("/ferro-check", response_model=FerroCheckResponse)
def ferro(n: int = Query(ge=2)) -> FerroCheckResponse:
    _check_sites(n)
    return FerroCheckResponse(n_sites=n, no_crossings=ferro_check(n))


@app.get("/matrix", response_class=PlainTextResponse)
def matrix(
    n: int = Query(ge=2),
    k: int = Query(ge=0),
    t: float = Query(default=0.0, ge=0.0, le=1.0),
) -> str:
    _check_sites(n)
    spec = instantiate_path(make_xxx_chain(n, 1.0, 0.0), PathSpec("xxx_path", t))
    basis = enumerate_sector(n, k)
    return coordinate_dump(build_sector_hamiltonian(spec, basis), n, k)


@app.post("/model/validate", response_model=ModelValidateResponse)
def validate_model(document: dict) -> ModelValidateResponse:
    try:
        spec = parse_model_document(document)
    except ModelParseError as exc:
        raise HTTPException(status_code=422, detail=str(exc))
    return ModelValidateResponse(
        n_sites=spec.n_sites,
        u1_symmetric=spec.u1_symmetric,
        normalized=serialize_model(spec),
    )
