"""Nonrelativistic energy levels and Landau-level degeneracy structure.

The full spectrum (axial motion + transverse oscillator + spin) is

    E = p_z^2 / (2 m0) + hbar omega (n + m_l + 2 m_s + 1),

reported here in units of hbar*omega with the kinetic term converted
through the dimensionless pair (zeta, kappa): zeta^2/(2 kappa).  States
with the same n but opposite m_l share a probability density yet differ in
energy; the degeneracy is organized by the Landau index

    r = (n + m_l + 2 m_s + 1) / 2,

an integer >= 0 for every valid state.  At fixed r infinitely many
(n, m_l, m_s) coexist; a cutoff n <= n_max keeps enumeration finite.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import DomainError
from .fock import VALID_SPINS, QuantumNumbers
from .units import Scales


@dataclass(frozen=True)
class EnergyRecord:
    """One state with its energy (hbar*omega units) and Landau index.

    landau_r is None when (n + m_l + 2 m_s + 1) is odd or negative, which
    cannot happen for spin-1/2 states obeying the m_l parity rule but keeps
    the record honest about when the index is defined.
    """

    q: QuantumNumbers
    e_schrodinger: float
    landau_r: int | None


def spin_only_levels() -> tuple[float, float]:
    """(E_plus, E_minus) of the isolated spin doublet, in hbar*omega_larmor.

    The splitting uses omega_larmor = 2 omega, not the orbital omega.
    """
    return (0.5, -0.5)


def spin_only_levels_si(scales: Scales, hbar: float | None = None) -> tuple[float, float]:
    """The same doublet in joules; both levels vanish as B -> 0."""
    from .constants import HBAR

    half = 0.5 * (HBAR if hbar is None else hbar) * scales.omega_larmor
    return (half, -half)


def spin_level_in_orbital_units(m_s: float) -> float:
    """Spin contribution 2 m_s + 1 in hbar*omega, zero-point shifted.

    The doublet then reads (2, 0) instead of (+1/2, -1/2), matching how the
    spin term enters the combined level number n + m_l + 2 m_s + 1.
    """
    if m_s not in VALID_SPINS:
        raise DomainError(f"m_s must be +0.5 or -0.5, got {m_s}")
    return 2.0 * m_s + 1.0


def level_number(q: QuantumNumbers) -> int:
    """The integer n + m_l + 2 m_s + 1 >= 0 (even for every valid state)."""
    return int(q.n + q.m_l + 2 * q.m_s + 1)


def schrodinger_energy(q: QuantumNumbers, scales: Scales) -> float:
    """Energy in hbar*omega units: zeta^2/(2 kappa) + (n + m_l + 2 m_s + 1)."""
    transverse = float(level_number(q))
    if q.p_z == 0.0:
        return transverse
    if scales.kappa == 0.0:
        raise DomainError("axial kinetic term has no hbar*omega expression at B = 0")
    return q.p_z**2 / (2.0 * scales.kappa) + transverse


def landau_index(q: QuantumNumbers) -> int:
    """r = (n + m_l + 2 m_s + 1)/2; labels the degenerate Landau level."""
    lam = level_number(q)
    if lam < 0 or lam % 2 != 0:
        raise DomainError(f"state {q} has no Landau index (level number {lam})")
    return lam // 2


def enumerate_landau_level(
    r: int, n_max: int, m_s: float | None = None
) -> tuple[QuantumNumbers, ...]:
    """All states with landau_index == r and n <= n_max, n ascending.

    Both spin projections by default; pass m_s to filter to one.  At fixed
    spin the members are (n, m_l) with n + m_l = 2r - 2 m_s - 1, one per n
    of the right parity; the cutoff makes the count finite (degeneracy
    grows without bound as n_max does).
    """
    if r < 0:
        raise DomainError(f"r must be >= 0, got {r}")
    if n_max < 0:
        raise DomainError(f"n_max must be >= 0, got {n_max}")
    spins: tuple[float, ...]
    if m_s is None:
        spins = VALID_SPINS
    elif m_s in VALID_SPINS:
        spins = (m_s,)
    else:
        raise DomainError(f"m_s must be +0.5 or -0.5, got {m_s}")
    states = []
    for n in range(n_max + 1):
        for spin in sorted(spins):
            m_l = int(2 * r - 2 * spin - 1) - n
            if abs(m_l) <= n and (n - m_l) % 2 == 0:
                states.append(QuantumNumbers(n=n, m_l=m_l, m_s=spin))
    return tuple(states)


def energy_record(q: QuantumNumbers, scales: Scales) -> EnergyRecord:
    lam = level_number(q)
    return EnergyRecord(
        q=q,
        e_schrodinger=schrodinger_energy(q, scales),
        landau_r=lam // 2 if lam >= 0 and lam % 2 == 0 else None,
    )
