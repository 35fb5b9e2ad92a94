"""Request/response schemas for the compute service.

Shape validation (types, counts, ranges that are API contracts) lives here
and surfaces as 422; physics validation (parity rule, field strength sign)
stays in the core and surfaces as 400 domain errors, so a client can tell
"you called it wrong" from "that state does not exist".
"""

from __future__ import annotations

from typing import Any, Literal, Optional

from pydantic import BaseModel, Field


class FileEntry(BaseModel):
    name: str
    media_type: str
    text: str


class BundleResponse(BaseModel):
    """Every compute endpoint answers with the files it would write."""

    files: list[FileEntry]
    manifest: dict[str, Any]


class HealthResponse(BaseModel):
    status: Literal["ok"]
    version: str


class TableRequest(BaseModel):
    max_n: int = Field(default=5, ge=0, le=8)


class DensityRequest(BaseModel):
    n: int = Field(ge=0)
    m_l: int
    points: int = Field(default=1024, ge=16, le=1_000_000)
    rho_max: float = Field(default=8.0, gt=0.0, le=1000.0)
    format: Literal["csv", "svg", "ascii"] = "csv"
    two_d: bool = False
    two_d_points: int = Field(default=96, ge=8, le=256)
    workers: int = Field(default=1, ge=1, le=64)


class SpectrumRequest(BaseModel):
    n_max: int = Field(default=4, ge=0, le=64)
    r_max: Optional[int] = Field(default=None, ge=0)
    spin: Literal["up", "down", "both"] = "both"


class CompareRequest(BaseModel):
    n: int = Field(ge=0)
    m_l: int
    spin: Literal["up", "down"] = "up"
    kappa: Optional[float] = None
    B_tesla: Optional[float] = None
    zeta: float = 0.0
    points: int = Field(default=1024, ge=16, le=1_000_000)
    rho_max: float = Field(default=8.0, gt=0.0, le=1000.0)
    workers: int = Field(default=1, ge=1, le=64)


class SweepRequest(BaseModel):
    n: int = Field(ge=0)
    m_l: int
    spin: Literal["up", "down"] = "up"
    kappa_min: float
    kappa_max: float
    steps: int = Field(default=8, ge=2, le=256)
    zeta: float = 0.0
    points: int = Field(default=512, ge=16, le=100_000)
    rho_max: float = Field(default=8.0, gt=0.0, le=1000.0)
    workers: int = Field(default=1, ge=1, le=64)
