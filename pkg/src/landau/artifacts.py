"""Command implementations: parameters in, deterministic file bundles out.

Each builder returns the complete list of files a command produces,
including its own JSON manifest, as (name, media type, text) triples.  The
service endpoints wrap these 1:1 and the CLI writes the texts verbatim, so
repeated runs with equal parameters are byte-identical by construction.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Any

import numpy as np

from . import __version__
from .dirac import DensityComparison, compare_densities
from .eigenfunctions import (
    EigenfunctionSpec,
    profile_interior_zeros,
    radial_amplitude,
    ring_count,
    sample_profile,
)
from .errors import DomainError
from .fock import QuantumNumbers, level_states
from .laguerre import LaguerreParams, laguerre_coefficients
from .render import ascii_chart, csv_text, json_text, svg_heatmap, svg_line_plot
from .spectra import energy_record
from .units import Scales, field_for_kappa, scales_from_dimensionless

SPIN_VALUES = {"up": 0.5, "down": -0.5}


@dataclass(frozen=True)
class ArtifactFile:
    name: str
    media_type: str
    text: str


def _bundle(
    command: str,
    parameters: dict[str, Any],
    data_files: list[ArtifactFile],
    dimensionless: dict[str, Any],
    notes: dict[str, Any],
) -> tuple[list[ArtifactFile], dict[str, Any]]:
    manifest_name = f"{command}_manifest.json"
    manifest = {
        "command": command,
        "version": __version__,
        "parameters": parameters,
        "dimensionless": dimensionless,
        "outputs": [f.name for f in data_files] + [manifest_name],
        "notes": notes,
    }
    files = data_files + [ArtifactFile(manifest_name, "application/json", json_text(manifest))]
    return files, manifest


def _resolve_scales(kappa: float | None, b_tesla: float | None, zeta: float) -> tuple[Scales, float, float]:
    """(scales, kappa, B) from exactly one of kappa / B_tesla."""
    if (kappa is None) == (b_tesla is None):
        raise DomainError("specify exactly one of kappa or B_tesla")
    if kappa is not None:
        if kappa <= 0:
            raise DomainError(f"kappa must be > 0, got {kappa}")
        return scales_from_dimensionless(kappa, zeta), kappa, field_for_kappa(kappa)
    from .units import FieldConfig, derive_scales

    if b_tesla <= 0:
        raise DomainError(f"B_tesla must be > 0, got {b_tesla}")
    scales = derive_scales(FieldConfig(B_tesla=b_tesla))
    return scales, scales.kappa, b_tesla


# ---------------------------------------------------------------- table ----


def _bracket_coefficients(n: int, m_l: int) -> list[int]:
    """Integer coefficients of the monic bracket polynomial, powers u^0..u^n.

    F = beta/sqrt(c pi) * bracket(u) * exp(-u^2/2) exp(i m_l phi) with
    bracket = (-1)^k k! L_k^{|m|}(u^2) u^{|m|}, c = a! k!.
    """
    k = (n - abs(m_l)) // 2
    coeffs = [0] * (n + 1)
    for i, frac in enumerate(laguerre_coefficients(LaguerreParams(k=k, alpha=abs(m_l)))):
        scaled = (-1) ** k * math.factorial(k) * frac
        assert scaled.denominator == 1
        coeffs[abs(m_l) + 2 * i] = int(scaled)
    return coeffs


def _bracket_text(coeffs: list[int]) -> str:
    terms = []
    for power in range(len(coeffs) - 1, -1, -1):
        c = coeffs[power]
        if c == 0:
            continue
        mag = abs(c)
        if power == 0:
            body = f"{mag}"
        else:
            u = "u" if power == 1 else f"u^{power}"
            body = u if mag == 1 else f"{mag} {u}"
        terms.append(("- " if c < 0 else "+ " if terms else "") + body)
    return " ".join(terms) if terms else "0"


def build_table(max_n: int = 5) -> tuple[list[ArtifactFile], dict[str, Any]]:
    """Closed-form catalog of eigenfunctions with n <= max_n (max 8)."""
    if not 0 <= max_n <= 8:
        raise DomainError(f"max_n must be in [0, 8], got {max_n}")
    rows = []
    pretty = []
    for n in range(max_n + 1):
        for q in level_states(n):
            if q.m_l < 0:
                continue
            k = (n - q.m_l) // 2
            a = (n + q.m_l) // 2
            c_int = math.factorial(a) * math.factorial(k)
            coeffs = _bracket_coefficients(n, q.m_l)
            norm = 1.0 / math.sqrt(c_int * math.pi)
            rows.append((n, q.m_l, norm, c_int, ";".join(str(c) for c in coeffs)))
            phase = "" if q.m_l == 0 else f" exp({q.m_l}i phi)" if q.m_l != 1 else " exp(i phi)"
            pretty.append(
                f"F(n={n}, m_l=+-{q.m_l}) = beta/sqrt({c_int} pi) "
                f"[{_bracket_text(coeffs)}] exp(-u^2/2){phase}"
                + ("" if q.m_l == 0 else "  (sign of m_l flips the phase)")
            )
    csv = csv_text(
        ["n", "m_l", "normalization", "norm_denominator", "bracket_coefficients"], rows
    )
    text = "\n".join(
        ["closed-form transverse eigenfunctions, u = beta*rho", ""] + pretty
    ) + "\n"
    data = [
        ArtifactFile("table.csv", "text/csv", csv),
        ArtifactFile("table.txt", "text/plain", text),
    ]
    return _bundle(
        "table",
        {"max_n": max_n},
        data,
        {"beta": 1.0},
        {
            "bracket_powers": "coefficients listed for ascending powers u^0 .. u^n",
            "phase_convention": "exp(i m_l phi); negative m_l conjugates the phase",
        },
    )


# -------------------------------------------------------------- density ----


def build_density(
    n: int,
    m_l: int,
    points: int = 1024,
    rho_max: float = 8.0,
    fmt: str = "csv",
    two_d: bool = False,
    two_d_points: int = 96,
    workers: int = 1,
) -> tuple[list[ArtifactFile], dict[str, Any]]:
    """Radial density profile of one eigenfunction, plus optional 2D map."""
    spec = EigenfunctionSpec(n=n, m_l=m_l)
    profile = sample_profile(spec, rho_max=rho_max, n_points=points, workers=workers)
    stem = f"density_n{n}_ml{m_l}"
    data: list[ArtifactFile] = []
    if fmt == "csv":
        data.append(
            ArtifactFile(
                f"{stem}.csv", "text/csv", csv_text(["rho", "density"], zip(profile.rho, profile.density))
            )
        )
    elif fmt == "svg":
        data.append(
            ArtifactFile(
                f"{stem}.svg",
                "image/svg+xml",
                svg_line_plot(
                    profile.rho,
                    [(f"D(n={n}, m_l={m_l})", profile.density)],
                    title=f"radial density, n={n}, m_l={m_l}",
                    x_label="rho (units 1/beta)",
                    y_label="D(rho)",
                ),
            )
        )
    elif fmt == "ascii":
        data.append(
            ArtifactFile(
                f"{stem}.txt",
                "text/plain",
                ascii_chart(profile.rho, profile.density, f"D(rho), n={n}, m_l={m_l}"),
            )
        )
    else:
        raise DomainError(f"format must be csv, svg, or ascii, got {fmt!r}")

    if two_d:
        half = np.linspace(-rho_max, rho_max, two_d_points)
        xs, ys = np.meshgrid(half, half)
        rr = np.hypot(xs, ys)
        amp = radial_amplitude(spec, rr.ravel()).reshape(rr.shape)
        dens2d = amp * amp  # |F|^2; phase drops
        grid_rows = (
            (half[ix], half[iy], dens2d[iy, ix])
            for iy in range(two_d_points)
            for ix in range(two_d_points)
        )
        data.append(
            ArtifactFile(f"{stem}_2d.csv", "text/csv", csv_text(["x", "y", "density"], grid_rows))
        )
        data.append(
            ArtifactFile(
                f"{stem}_2d.svg",
                "image/svg+xml",
                svg_heatmap(
                    dens2d,
                    (-rho_max, rho_max, -rho_max, rho_max),
                    title=f"|F|^2, n={n}, m_l={m_l}",
                ),
            )
        )

    return _bundle(
        "density",
        {
            "n": n,
            "m_l": m_l,
            "points": points,
            "rho_max": rho_max,
            "format": fmt,
            "two_d": two_d,
        },
        data,
        {"beta": 1.0},
        {
            "rho_units": "1/beta",
            "trapezoid_integral": profile.trapezoid_integral(),
            "interior_zeros": ring_count(spec),
            "interior_zeros_sampled": profile_interior_zeros(profile),
        },
    )


# ------------------------------------------------------------- spectrum ----


def build_spectrum(
    n_max: int = 4, r_max: int | None = None, spin: str = "both"
) -> tuple[list[ArtifactFile], dict[str, Any]]:
    """Energy table at p_z = 0 plus Landau-level degeneracy counts."""
    if spin not in ("up", "down", "both"):
        raise DomainError(f"spin must be up, down, or both, got {spin!r}")
    if n_max < 0:
        raise DomainError(f"n_max must be >= 0, got {n_max}")
    spins = [-0.5, 0.5] if spin == "both" else [SPIN_VALUES[spin]]
    scales = scales_from_dimensionless(0.0)
    records = []
    for n in range(n_max + 1):
        for base in level_states(n):
            for m_s in spins:
                rec = energy_record(QuantumNumbers(base.n, base.m_l, m_s), scales)
                if r_max is None or (rec.landau_r is not None and rec.landau_r <= r_max):
                    records.append(rec)
    rows = [(r.q.n, r.q.m_l, r.q.m_s, r.landau_r, r.e_schrodinger) for r in records]
    csv = csv_text(["n", "m_l", "m_s", "r", "E_over_hbar_omega"], rows)

    r_top = (
        r_max
        if r_max is not None
        else max((r.landau_r for r in records if r.landau_r is not None), default=0)
    )
    counts = [(r, sum(1 for rec in records if rec.landau_r == r)) for r in range(r_top + 1)]
    degeneracy = csv_text(["r", "count"], counts)

    data = [
        ArtifactFile("spectrum.csv", "text/csv", csv),
        ArtifactFile("degeneracy.csv", "text/csv", degeneracy),
    ]
    return _bundle(
        "spectrum",
        {"n_max": n_max, "r_max": r_max, "spin": spin},
        data,
        {"zeta": 0.0},
        {
            "energy_units": "hbar*omega",
            "p_z": 0.0,
            "degeneracy": "state count per Landau index r within n <= n_max",
        },
    )


# -------------------------------------------------------------- compare ----


def _compare_csv(cmp_: DensityComparison) -> str:
    return csv_text(
        ["rho", "density_schrodinger", "density_dirac"],
        zip(cmp_.rho, cmp_.density_schrodinger, cmp_.density_dirac),
    )


def _comparison_stats(cmp_: DensityComparison) -> dict[str, Any]:
    return {
        "sup_difference": cmp_.sup_difference,
        "mean_radius_schrodinger": cmp_.mean_radius_schrodinger,
        "mean_radius_dirac": cmp_.mean_radius_dirac,
        "fourth_component_weight": cmp_.fourth_component_weight,
        "small_component_weight": cmp_.small_component_weight,
        "energy_schrodinger_hbar_omega": cmp_.energy_schrodinger,
        "energy_dirac_m0c2": cmp_.energy_dirac,
    }


def build_compare(
    n: int,
    m_l: int,
    spin: str = "up",
    kappa: float | None = None,
    b_tesla: float | None = None,
    zeta: float = 0.0,
    points: int = 1024,
    rho_max: float = 8.0,
    workers: int = 1,
) -> tuple[list[ArtifactFile], dict[str, Any]]:
    """Schrodinger vs Dirac radial density of one state at one field strength."""
    if spin not in SPIN_VALUES:
        raise DomainError(f"spin must be up or down, got {spin!r}")
    scales, kappa_val, b_val = _resolve_scales(kappa, b_tesla, zeta)
    q = QuantumNumbers(n=n, m_l=m_l, m_s=SPIN_VALUES[spin], p_z=zeta)
    rho = np.linspace(0.0, rho_max, points)
    cmp_ = compare_densities(q, scales, rho, workers=workers)
    stem = f"compare_n{n}_ml{m_l}"
    data = [
        ArtifactFile(f"{stem}.csv", "text/csv", _compare_csv(cmp_)),
        ArtifactFile(
            f"{stem}.svg",
            "image/svg+xml",
            svg_line_plot(
                rho,
                [("schrodinger", cmp_.density_schrodinger), ("dirac", cmp_.density_dirac)],
                title=f"radial density, n={n}, m_l={m_l}, spin {spin}, kappa={kappa_val:.6g}",
                x_label="rho (units 1/beta)",
                y_label="D(rho)",
            ),
        ),
    ]
    return _bundle(
        "dirac-compare",
        {
            "n": n,
            "m_l": m_l,
            "spin": spin,
            "kappa": kappa,
            "B_tesla": b_tesla,
            "zeta": zeta,
            "points": points,
            "rho_max": rho_max,
        },
        data,
        {"kappa": kappa_val, "zeta": zeta, "B_tesla_equivalent": b_val, "beta": 1.0},
        {"dirac_density_components": "all_four", **_comparison_stats(cmp_)},
    )


# ---------------------------------------------------------------- sweep ----


def build_sweep(
    n: int,
    m_l: int,
    spin: str = "up",
    kappa_min: float = 1e-6,
    kappa_max: float = 0.25,
    steps: int = 8,
    zeta: float = 0.0,
    points: int = 512,
    rho_max: float = 8.0,
    workers: int = 1,
) -> tuple[list[ArtifactFile], dict[str, Any]]:
    """Field-strength sweep of the density comparison, log-spaced in kappa."""
    if spin not in SPIN_VALUES:
        raise DomainError(f"spin must be up or down, got {spin!r}")
    if not 0 < kappa_min < kappa_max:
        raise DomainError(
            f"need 0 < kappa_min < kappa_max, got [{kappa_min}, {kappa_max}]"
        )
    if steps < 2:
        raise DomainError(f"steps must be >= 2, got {steps}")
    kappas = np.geomspace(kappa_min, kappa_max, steps)
    rho = np.linspace(0.0, rho_max, points)
    data: list[ArtifactFile] = []
    frames = []
    for i, kappa in enumerate(kappas):
        scales = scales_from_dimensionless(float(kappa), zeta)
        q = QuantumNumbers(n=n, m_l=m_l, m_s=SPIN_VALUES[spin], p_z=zeta)
        cmp_ = compare_densities(q, scales, rho, workers=workers)
        name = f"sweep_{i:03d}.csv"
        data.append(ArtifactFile(name, "text/csv", _compare_csv(cmp_)))
        frames.append({"file": name, "kappa": float(kappa), **_comparison_stats(cmp_)})
    return _bundle(
        "sweep",
        {
            "n": n,
            "m_l": m_l,
            "spin": spin,
            "kappa_min": kappa_min,
            "kappa_max": kappa_max,
            "steps": steps,
            "zeta": zeta,
            "points": points,
            "rho_max": rho_max,
        },
        data,
        {"kappa_values": [float(k) for k in kappas], "zeta": zeta, "beta": 1.0},
        {"dirac_density_components": "all_four", "frames": frames},
    )
