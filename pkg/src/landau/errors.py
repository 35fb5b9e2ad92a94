"""Exception types shared across the package.

Two families matter at the boundaries: ``UsageError`` for malformed requests
(unknown operator names, bad flag combinations) and ``DomainError`` for
physically invalid values (negative field, quantum numbers violating the
parity rule, parameters outside a method's supported range).  The CLI maps
them to exit codes 2 and 3 respectively.
"""

from __future__ import annotations


class LandauError(Exception):
    """Base class for all package-specific errors."""


class UsageError(LandauError):
    """The request itself is malformed (wrong name, wrong shape, bad combination)."""


class DomainError(LandauError):
    """The values are physically or mathematically out of domain."""


class InvalidQuantumNumbers(DomainError):
    """Quantum numbers outside the allowed set.

    The allowed set for the transverse problem: n >= 0 and
    m_l in {n, n-2, ..., -n} (same parity as n, |m_l| <= n).
    """


class UnsupportedRange(DomainError):
    """A parameter is outside the range a method is specified to support."""
