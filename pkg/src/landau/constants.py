"""Physical constants, CODATA 2018, SI units.

Hard-coded rather than imported from scipy.constants: scipy tracks whatever
CODATA release it ships with, and pinned regression values must not move
under a dependency upgrade.
"""

from __future__ import annotations

from typing import Final

ELEMENTARY_CHARGE: Final[float] = 1.602176634e-19  # C (exact)
ELECTRON_MASS: Final[float] = 9.1093837015e-31  # kg
HBAR: Final[float] = 1.054571817e-34  # J s (h exact; this is h/2pi rounded)
SPEED_OF_LIGHT: Final[float] = 299792458.0  # m/s (exact)

ELECTRON_REST_ENERGY: Final[float] = ELECTRON_MASS * SPEED_OF_LIGHT**2  # J
