"""Field configuration and the derived characteristic scales.

Conventions
-----------
Two angular frequencies coexist and are easy to conflate:

* ``omega = e B / (2 m0)`` -- the orbital frequency entering the transverse
  oscillator; every eigenfunction and spectrum formula in this package uses
  this one.
* ``omega_larmor = e B / m0 = 2 omega`` -- the spin precession frequency of
  the isolated two-level system; used only by the spin-only splitting.

Both are carried explicitly in :class:`Scales` so call sites never guess.

Dimensionless variables: ``beta = sqrt(m0 omega / hbar)`` (inverse length,
so ``u = beta * rho``), ``kappa = hbar omega / (m0 c^2)`` (field strength),
``zeta = p_z / (m0 c)`` (axial momentum).  Everything downstream of this
module works in these variables; SI enters and leaves only here.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .constants import ELECTRON_MASS, ELEMENTARY_CHARGE, HBAR, SPEED_OF_LIGHT
from .errors import DomainError


@dataclass(frozen=True)
class FieldConfig:
    """Uniform magnetic field along z plus optional axial momentum, SI units.

    The particle constants default to the CODATA electron values and are
    overridable so tests can use round numbers.
    """

    B_tesla: float
    p_z: float = 0.0  # kg m/s
    m0: float = ELECTRON_MASS  # kg
    e: float = ELEMENTARY_CHARGE  # C
    hbar: float = HBAR  # J s
    c: float = SPEED_OF_LIGHT  # m/s

    def __post_init__(self) -> None:
        for name in ("m0", "e", "hbar", "c"):
            value = getattr(self, name)
            if not value > 0:
                raise DomainError(f"{name} must be > 0, got {value}")


@dataclass(frozen=True)
class Scales:
    """Characteristic scales derived from a :class:`FieldConfig`.

    omega and omega_larmor in rad/s, beta in 1/m; kappa and zeta are
    dimensionless.
    """

    omega: float
    omega_larmor: float
    beta: float
    kappa: float
    zeta: float


def derive_scales(config: FieldConfig) -> Scales:
    """Derive all characteristic scales from the SI field configuration.

    B = 0 is legal (free particle limit): every field-derived scale is zero.
    """
    if config.B_tesla < 0:
        raise DomainError(f"B must be >= 0 tesla, got {config.B_tesla}")
    omega = config.e * config.B_tesla / (2.0 * config.m0)
    return Scales(
        omega=omega,
        omega_larmor=2.0 * omega,
        beta=math.sqrt(config.m0 * omega / config.hbar),
        kappa=config.hbar * omega / (config.m0 * config.c**2),
        zeta=config.p_z / (config.m0 * config.c),
    )


def scales_from_dimensionless(kappa: float, zeta: float = 0.0) -> Scales:
    """Build Scales directly from (kappa, zeta), implying the SI field.

    Inverse of :func:`derive_scales` on the dimensionless side: omega is
    reconstructed from kappa, and kappa/zeta are stored exactly as given so
    dimensionless pipelines round-trip without float drift.
    """
    if kappa < 0:
        raise DomainError(f"kappa must be >= 0, got {kappa}")
    omega = kappa * ELECTRON_MASS * SPEED_OF_LIGHT**2 / HBAR
    return Scales(
        omega=omega,
        omega_larmor=2.0 * omega,
        beta=math.sqrt(ELECTRON_MASS * omega / HBAR),
        kappa=kappa,
        zeta=zeta,
    )


def field_for_kappa(kappa: float) -> float:
    """SI field strength (tesla) that produces the given kappa."""
    if kappa < 0:
        raise DomainError(f"kappa must be >= 0, got {kappa}")
    return 2.0 * kappa * ELECTRON_MASS**2 * SPEED_OF_LIGHT**2 / (ELEMENTARY_CHARGE * HBAR)
