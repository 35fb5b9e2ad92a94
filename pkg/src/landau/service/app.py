"""FastAPI application exposing the compute surfaces.

Stateless by design: every endpoint is a pure function of its request
body and returns the full file bundle it computes, so responses are as
reproducible as the underlying artifact builders.
"""

from __future__ import annotations

from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse

from .. import __version__, artifacts
from ..errors import DomainError, UsageError
from .models import (
    BundleResponse,
    CompareRequest,
    DensityRequest,
    FileEntry,
    HealthResponse,
    SpectrumRequest,
    SweepRequest,
    TableRequest,
)


def _bundle_response(built) -> BundleResponse:
    files, manifest = built
    return BundleResponse(
        files=[FileEntry(name=f.name, media_type=f.media_type, text=f.text) for f in files],
        manifest=manifest,
    )


def create_app() -> FastAPI:
    app = FastAPI(title="landau", version=__version__)

    @app.exception_handler(DomainError)
    async def domain_error_handler(request: Request, exc: DomainError) -> JSONResponse:
        return JSONResponse(status_code=400, content={"error": "domain", "detail": str(exc)})

    @app.exception_handler(UsageError)
    async def usage_error_handler(request: Request, exc: UsageError) -> JSONResponse:
        return JSONResponse(status_code=422, content={"error": "usage", "detail": str(exc)})

    @app.get("/health", response_model=HealthResponse)
    async def health() -> HealthResponse:
        return HealthResponse(status="ok", version=__version__)

    @app.post("/v1/table", response_model=BundleResponse)
    async def table(req: TableRequest) -> BundleResponse:
        return _bundle_response(artifacts.build_table(max_n=req.max_n))

    @app.post("/v1/density", response_model=BundleResponse)
    async def density(req: DensityRequest) -> BundleResponse:
        return _bundle_response(
            artifacts.build_density(
                n=req.n,
                m_l=req.m_l,
                points=req.points,
                rho_max=req.rho_max,
                fmt=req.format,
                two_d=req.two_d,
                two_d_points=req.two_d_points,
                workers=req.workers,
            )
        )

    @app.post("/v1/spectrum", response_model=BundleResponse)
    async def spectrum(req: SpectrumRequest) -> BundleResponse:
        return _bundle_response(
            artifacts.build_spectrum(n_max=req.n_max, r_max=req.r_max, spin=req.spin)
        )

    @app.post("/v1/dirac/compare", response_model=BundleResponse)
    async def dirac_compare(req: CompareRequest) -> BundleResponse:
        return _bundle_response(
            artifacts.build_compare(
                n=req.n,
                m_l=req.m_l,
                spin=req.spin,
                kappa=req.kappa,
                b_tesla=req.B_tesla,
                zeta=req.zeta,
                points=req.points,
                rho_max=req.rho_max,
                workers=req.workers,
            )
        )

    @app.post("/v1/dirac/sweep", response_model=BundleResponse)
    async def dirac_sweep(req: SweepRequest) -> BundleResponse:
        return _bundle_response(
            artifacts.build_sweep(
                n=req.n,
                m_l=req.m_l,
                spin=req.spin,
                kappa_min=req.kappa_min,
                kappa_max=req.kappa_max,
                steps=req.steps,
                zeta=req.zeta,
                points=req.points,
                rho_max=req.rho_max,
                workers=req.workers,
            )
        )

    return app


app = create_app()
