"""Quantum states of an electron in a uniform magnetic field.

Core library: characteristic scales, generalized Laguerre evaluation,
occupation-number algebra, transverse eigenfunctions and radial densities,
energy spectra with Landau degeneracy, and relativistic four-spinor states.
A FastAPI service (landau.service) exposes the computations; the CLI
(landau.cli) is a thin client over it.
"""

from __future__ import annotations

__version__ = "0.1.0"

from .errors import DomainError, InvalidQuantumNumbers, LandauError, UnsupportedRange, UsageError
from .fock import CircularOccupation, QuantumNumbers
from .units import FieldConfig, Scales, derive_scales, scales_from_dimensionless

__all__ = [
    "__version__",
    "CircularOccupation",
    "DomainError",
    "FieldConfig",
    "InvalidQuantumNumbers",
    "LandauError",
    "QuantumNumbers",
    "Scales",
    "UnsupportedRange",
    "UsageError",
    "derive_scales",
    "scales_from_dimensionless",
]
