"""Relativistic energies and four-component spinor states.

Everything here is dimensionless: energies in units of m0 c^2, momenta as
zeta = p_z/(m0 c), field strength as kappa = hbar omega/(m0 c^2), so the
magnetic term in the dispersion is 2 kappa (n + m_l + 2 m_s + 1):

    E / m0 c^2 = +-sqrt(1 + zeta^2 + 2 kappa (n + m_l + 2 m_s + 1)).

A positive-branch eigenstate is built from the transverse eigenfunctions:
the large components carry F_{n, m_l} in the spin slot, and the small
components follow from applying the kinetic operator, which in circular
gauge couples only nearest ladder neighbors:

    spin up:   (F, 0, zeta' F, 2i sqrt(kappa) sqrt(n_R + 1) F') / norm
    spin down: (0, F, -2i sqrt(kappa) sqrt(n_R) F'', -zeta' F) / norm

with zeta' = zeta/(Ebar + 1), F' = F_{n+1, m_l+1}, F'' = F_{n-1, m_l-1}
(absent when n_R = 0), Ebar the dimensionless energy, and each ladder
coefficient divided by (Ebar + 1).  Since every component is itself a unit-
normalized transverse eigenfunction, the transverse norm is restored by
N = 1/sqrt(sum |c_i|^2); densities below include all four components.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Literal

import numpy as np

from .eigenfunctions import EigenfunctionSpec, chunked_eval, radial_amplitude, radial_density
from .errors import DomainError
from .fock import QuantumNumbers, to_circular
from .spectra import level_number, schrodinger_energy
from .units import Scales

Branch = Literal["particle", "antiparticle"]


@dataclass(frozen=True)
class DiracEnergy:
    """Signed energy in units of m0 c^2."""

    value: float
    branch: Branch


@dataclass(frozen=True)
class SpinorComponent:
    """One of the four components: a complex amplitude on an eigenfunction.

    spec is None for components that vanish identically.
    """

    coefficient: complex
    spec: EigenfunctionSpec | None


@dataclass(frozen=True)
class DiracSpinorField:
    """A normalized positive-branch eigenspinor in the transverse plane."""

    q: QuantumNumbers
    kappa: float
    zeta: float
    energy: DiracEnergy
    components: tuple[SpinorComponent, SpinorComponent, SpinorComponent, SpinorComponent]
    norm: float


def dirac_energy(q: QuantumNumbers, scales: Scales, branch: Branch = "particle") -> DiracEnergy:
    """Exact dispersion; zeta is taken from q.p_z, kappa from scales."""
    if branch not in ("particle", "antiparticle"):
        raise DomainError(f"branch must be 'particle' or 'antiparticle', got {branch!r}")
    magnitude = math.sqrt(1.0 + q.p_z**2 + 2.0 * scales.kappa * level_number(q))
    return DiracEnergy(
        value=magnitude if branch == "particle" else -magnitude,
        branch=branch,
    )


def weak_field_energy(q: QuantumNumbers, scales: Scales) -> float:
    """First-order expansion 1 + kappa (2 m_s + 1), valid on m_l = -n, p_z = 0.

    On that family the magnetic term is 2 kappa (2 m_s + 1) independent of n,
    so the linearization error is bounded by (2 kappa (2 m_s + 1))^2 / 8.
    """
    if q.m_l != -q.n:
        raise DomainError(f"weak-field expansion requires m_l = -n, got ({q.n}, {q.m_l})")
    if q.p_z != 0.0:
        raise DomainError(f"weak-field expansion requires p_z = 0, got {q.p_z}")
    return 1.0 + scales.kappa * (2.0 * q.m_s + 1.0)


def build_spinor(q: QuantumNumbers, scales: Scales, branch: Branch = "particle") -> DiracSpinorField:
    """Construct the eigenspinor for a positive-branch state."""
    if branch != "particle":
        raise DomainError("spinor construction is implemented for the particle branch only")
    energy = dirac_energy(q, scales, branch)
    denom = energy.value + 1.0
    zeta = q.p_z
    kappa = scales.kappa
    occ = to_circular(q)
    base = EigenfunctionSpec(n=q.n, m_l=q.m_l)

    if q.m_s == 0.5:
        raised = EigenfunctionSpec(n=q.n + 1, m_l=q.m_l + 1)
        components = (
            SpinorComponent(1.0 + 0.0j, base),
            SpinorComponent(0.0j, None),
            SpinorComponent(zeta / denom + 0.0j, base),
            SpinorComponent(2.0j * math.sqrt(kappa) * math.sqrt(occ.n_R + 1.0) / denom, raised),
        )
    else:
        if occ.n_R > 0:
            lowered = SpinorComponent(
                -2.0j * math.sqrt(kappa) * math.sqrt(float(occ.n_R)) / denom,
                EigenfunctionSpec(n=q.n - 1, m_l=q.m_l - 1),
            )
        else:
            lowered = SpinorComponent(0.0j, None)
        components = (
            SpinorComponent(0.0j, None),
            SpinorComponent(1.0 + 0.0j, base),
            lowered,
            SpinorComponent(-zeta / denom + 0.0j, base),
        )

    norm = 1.0 / math.sqrt(sum(abs(c.coefficient) ** 2 for c in components))
    return DiracSpinorField(
        q=q, kappa=kappa, zeta=zeta, energy=energy, components=components, norm=norm
    )


def spinor_normalization(field: DiracSpinorField) -> float:
    """Transverse normalization constant, recomputed from the coefficients."""
    return 1.0 / math.sqrt(sum(abs(c.coefficient) ** 2 for c in field.components))


def component_weights(field: DiracSpinorField) -> np.ndarray:
    """Normalized probability weight of each component (sums to 1)."""
    w = np.array([abs(c.coefficient) ** 2 for c in field.components])
    return w / w.sum()


def dirac_radial_density(field: DiracSpinorField, rho, workers: int = 1) -> np.ndarray:
    """All-four-component radial density 2 pi rho sum_i |N c_i F_i|^2."""
    rho_arr = np.asarray(rho, dtype=np.float64)

    def point_eval(r: np.ndarray) -> np.ndarray:
        # the weight-1 single-component case must reproduce radial_density
        # bit for bit (the kappa -> 0 limit), so scale inside the sum with
        # the same multiplication order
        base = 2.0 * math.pi * field.norm**2 * r
        total = np.zeros_like(r)
        for comp in field.components:
            if comp.spec is None or comp.coefficient == 0:
                continue
            amp = radial_amplitude(comp.spec, r)
            total = total + abs(comp.coefficient) ** 2 * base * amp * amp
        return total

    return chunked_eval(point_eval, rho_arr, workers=workers)


@dataclass(frozen=True)
class DensityComparison:
    """Side-by-side radial densities of one state, both descriptions."""

    q: QuantumNumbers
    kappa: float
    zeta: float
    rho: np.ndarray
    density_schrodinger: np.ndarray
    density_dirac: np.ndarray
    sup_difference: float
    mean_radius_schrodinger: float
    mean_radius_dirac: float
    fourth_component_weight: float
    small_component_weight: float
    energy_schrodinger: float  # hbar*omega units
    energy_dirac: float  # m0 c^2 units


def _mean_radius(rho: np.ndarray, density: np.ndarray) -> float:
    total = np.trapezoid(density, rho)
    return float(np.trapezoid(rho * density, rho) / total)


def compare_densities(
    q: QuantumNumbers, scales: Scales, rho, workers: int = 1
) -> DensityComparison:
    """Evaluate both radial densities on a common grid and summarize.

    rho is in units of 1/beta.  As kappa -> 0 the small components die off
    and sup_difference -> 0; in strong fields the relativistic state leaks
    probability outward into the raised neighbor eigenfunction.
    """
    rho_arr = np.asarray(rho, dtype=np.float64)
    field = build_spinor(q, scales)
    spec = EigenfunctionSpec(n=q.n, m_l=q.m_l)
    d_s = chunked_eval(lambda r: radial_density(spec, r), rho_arr, workers=workers)
    d_d = dirac_radial_density(field, rho_arr, workers=workers)
    weights = component_weights(field)
    return DensityComparison(
        q=q,
        kappa=scales.kappa,
        zeta=q.p_z,
        rho=rho_arr,
        density_schrodinger=d_s,
        density_dirac=d_d,
        sup_difference=float(np.max(np.abs(d_s - d_d))),
        mean_radius_schrodinger=_mean_radius(rho_arr, d_s),
        mean_radius_dirac=_mean_radius(rho_arr, d_d),
        fourth_component_weight=float(weights[3]),
        small_component_weight=float(weights[2] + weights[3]),
        energy_schrodinger=schrodinger_energy(q, scales),
        energy_dirac=dirac_energy(q, scales).value,
    )
