"""Generalized Laguerre polynomials L_k^alpha, two independent routes.

``laguerre_sum`` evaluates the explicit finite sum

    L_k^alpha(x) = sum_{i=0}^{k} (-1)^i C(k+alpha, k-i) x^i / i!

in exact rational arithmetic (binomials and factorials as exact integers,
x promoted to the exact rational it already is as a float) and rounds once
at the end.  That makes it a trustworthy reference even deep in the
oscillatory zone where a floating-point sum loses ~20 digits to
cancellation, at the price of speed; it is capped at k <= 40.

``laguerre_recurrence`` is the production path: the standard three-term
recurrence, vectorized over numpy arrays, accumulated in extended precision
and returned as float64.

The two must agree; tests cross-validate them against each other, and the
root counter below feeds the ring-structure checks (number of radial nodes
equals the polynomial degree).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np
from scipy.optimize import brentq

from .errors import DomainError, UnsupportedRange

SUM_DEGREE_CAP = 40  # exact-rational route becomes pointless past this


@dataclass(frozen=True)
class LaguerreParams:
    """Degree k and integer parameter alpha (alpha = |m_l| in this package)."""

    k: int
    alpha: int

    def __post_init__(self) -> None:
        if self.k < 0 or self.alpha < 0:
            raise DomainError(f"need k >= 0 and alpha >= 0, got k={self.k}, alpha={self.alpha}")


def laguerre_coefficients(params: LaguerreParams) -> list[Fraction]:
    """Exact coefficients [c_0, ..., c_k] with L_k^alpha(x) = sum c_i x^i."""
    k, alpha = params.k, params.alpha
    return [
        Fraction((-1) ** i * math.comb(k + alpha, k - i), math.factorial(i))
        for i in range(k + 1)
    ]


def laguerre_sum(params: LaguerreParams, x: float) -> float:
    """Explicit-sum evaluation at a scalar x >= 0, exact until the final rounding."""
    if params.k > SUM_DEGREE_CAP:
        raise UnsupportedRange(
            f"explicit sum capped at k <= {SUM_DEGREE_CAP} (got k={params.k}); "
            "use laguerre_recurrence"
        )
    if x < 0:
        raise DomainError(f"x must be >= 0, got {x}")
    xf = Fraction(x)
    total = Fraction(0)
    power = Fraction(1)
    for c in laguerre_coefficients(params):
        total += c * power
        power *= xf
    return float(total)


def laguerre_recurrence(params: LaguerreParams, x):
    """Three-term recurrence evaluation, scalar or ndarray x >= 0.

    (k+1) L_{k+1} = (2k+1+alpha-x) L_k - (k+alpha) L_{k-1}, seeded with
    L_0 = 1 and L_1 = 1 + alpha - x.  Accumulates in np.longdouble so the
    transient growth before the oscillatory zone does not eat the float64
    budget; the result is cast back to float64.
    """
    k, alpha = params.k, params.alpha
    arr = np.asarray(x, dtype=np.longdouble)
    if np.any(arr < 0):
        raise DomainError("x must be >= 0")
    prev = np.ones_like(arr)
    if k == 0:
        out = prev
    else:
        cur = 1.0 + alpha - arr
        for j in range(1, k):
            prev, cur = cur, ((2.0 * j + 1.0 + alpha - arr) * cur - (j + alpha) * prev) / (j + 1.0)
        out = cur
    out64 = np.asarray(out, dtype=np.float64)
    return float(out64) if np.isscalar(x) else out64


def default_root_window(params: LaguerreParams) -> float:
    """x_max guaranteed to lie beyond the largest positive root."""
    return 4.0 * (params.k + params.alpha + 1.0) + 10.0


def positive_roots(params: LaguerreParams, x_max: float | None = None, step: float = 1e-3) -> np.ndarray:
    """Positive roots of L_k^alpha found by sign scan plus bracket refinement.

    The roots of a generalized Laguerre polynomial are simple, so a fixed
    scan step well below the minimal root spacing brackets each one exactly
    once; brentq then polishes to ~1e-12.
    """
    if x_max is None:
        x_max = default_root_window(params)
    if x_max <= 0 or step <= 0:
        raise DomainError("x_max and step must be > 0")
    grid = np.arange(0.0, x_max + step, step)
    vals = laguerre_recurrence(params, grid)
    roots = []
    for i in np.nonzero(np.sign(vals[:-1]) * np.sign(vals[1:]) < 0)[0]:
        roots.append(
            brentq(lambda t: laguerre_recurrence(params, float(t)), grid[i], grid[i + 1], xtol=1e-12)
        )
    # a sample landing exactly on a root contributes no sign flip above
    for i in np.nonzero(vals == 0.0)[0]:
        if grid[i] > 0.0:
            roots.append(float(grid[i]))
    return np.array(sorted(roots))


def count_positive_roots(params: LaguerreParams, x_max: float | None = None) -> int:
    """Number of positive real roots; equals k for this polynomial family."""
    return int(positive_roots(params, x_max=x_max).size)
