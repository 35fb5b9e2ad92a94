"""Occupation-number bookkeeping and truncated operator matrices.

The transverse problem diagonalizes in two equivalent bases: Cartesian
oscillator quanta (n_x, n_y) and circular quanta (n_R, n_L), related by

    n_R = (n + m_l)/2,    n_L = (n - m_l)/2,
    n = n_R + n_L,        m_l = n_R - n_L.

Valid (n, m_l) therefore satisfy |m_l| <= n with n - m_l even; this parity
rule is enforced at construction time of :class:`QuantumNumbers`.

Operator matrices are built in the circular occupation basis truncated at a
total level n_max, states ordered by (n_R + n_L, n_R).  Truncation drops
matrix elements that reach outside the kept set, so operator *products* are
only trustworthy on the interior subspace n_R + n_L <= n_max - 1 (a
raising-then-lowering path through the cut shell never returns); use
:func:`interior_indices` when comparing composite operators.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import DomainError, InvalidQuantumNumbers, UsageError

PARITY_RULE = "m_l must lie in {n, n-2, ..., -n} (|m_l| <= n, n - m_l even)"

VALID_SPINS = (0.5, -0.5)


@dataclass(frozen=True)
class QuantumNumbers:
    """One stationary state: n, m_l, spin projection, axial momentum.

    ``p_z`` is stored as the dimensionless zeta = p_z / (m0 c); the SI
    conversion happens at the units boundary, never here.
    """

    n: int
    m_l: int
    m_s: float = -0.5
    p_z: float = 0.0

    def __post_init__(self) -> None:
        if self.n < 0:
            raise InvalidQuantumNumbers(f"n must be >= 0, got n={self.n}")
        if abs(self.m_l) > self.n or (self.n - self.m_l) % 2 != 0:
            raise InvalidQuantumNumbers(
                f"invalid (n, m_l) = ({self.n}, {self.m_l}): {PARITY_RULE}"
            )
        if self.m_s not in VALID_SPINS:
            raise InvalidQuantumNumbers(f"m_s must be +0.5 or -0.5, got {self.m_s}")


@dataclass(frozen=True)
class CircularOccupation:
    """Occupation of the right/left circular quanta."""

    n_R: int
    n_L: int

    def __post_init__(self) -> None:
        if self.n_R < 0 or self.n_L < 0:
            raise DomainError(f"occupations must be >= 0, got ({self.n_R}, {self.n_L})")


def to_circular(q: QuantumNumbers) -> CircularOccupation:
    """(n, m_l) -> (n_R, n_L).  Parity is guaranteed by construction of q."""
    return CircularOccupation(n_R=(q.n + q.m_l) // 2, n_L=(q.n - q.m_l) // 2)


def from_circular(occ: CircularOccupation, m_s: float = -0.5, p_z: float = 0.0) -> QuantumNumbers:
    """(n_R, n_L) -> (n, m_l); total quanta and angular momentum projection."""
    return QuantumNumbers(n=occ.n_R + occ.n_L, m_l=occ.n_R - occ.n_L, m_s=m_s, p_z=p_z)


def enumerate_level(n: int) -> list[tuple[int, int, int]]:
    """All n+1 (n_R, n_L, m_l) triplets of transverse level n, m_l descending.

    n_R + n_L = n and m_l = n_R - n_L, so m_l runs n, n-2, ..., -n.
    """
    if n < 0:
        raise DomainError(f"n must be >= 0, got {n}")
    return [((n + m) // 2, (n - m) // 2, m) for m in range(n, -n - 1, -2)]


def level_states(n: int, m_s: float = -0.5) -> tuple[QuantumNumbers, ...]:
    """The same level enumeration as full quantum-number records."""
    return tuple(QuantumNumbers(n=n, m_l=m, m_s=m_s) for _, _, m in enumerate_level(n))


def basis_states(n_max: int) -> tuple[CircularOccupation, ...]:
    """Truncated basis, ordered by total level then by n_R (deterministic)."""
    if n_max < 0:
        raise DomainError(f"n_max must be >= 0, got {n_max}")
    return tuple(
        CircularOccupation(n_R=n_r, n_L=level - n_r)
        for level in range(n_max + 1)
        for n_r in range(level + 1)
    )


def basis_dimension(n_max: int) -> int:
    return (n_max + 1) * (n_max + 2) // 2


@dataclass(frozen=True)
class OperatorMatrix:
    """A dense operator in the truncated circular basis.

    Entries are complex128 and frozen read-only; energy-like operators are
    in units of hbar*omega, angular momentum in units of hbar.
    """

    kind: str
    n_max: int
    entries: np.ndarray

    def __post_init__(self) -> None:
        dim = basis_dimension(self.n_max)
        if self.entries.shape != (dim, dim):
            raise UsageError(
                f"entries shape {self.entries.shape} does not match dim {dim} at n_max={self.n_max}"
            )
        self.entries.setflags(write=False)

    @property
    def dim(self) -> int:
        return basis_dimension(self.n_max)

    @property
    def basis(self) -> tuple[CircularOccupation, ...]:
        return basis_states(self.n_max)

    def __matmul__(self, other: "OperatorMatrix") -> "OperatorMatrix":
        if self.n_max != other.n_max:
            raise UsageError(f"operator cutoffs differ: {self.n_max} != {other.n_max}")
        return OperatorMatrix(
            kind=f"({self.kind} @ {other.kind})",
            n_max=self.n_max,
            entries=self.entries @ other.entries,
        )


_LADDER_KINDS = ("a_R", "a_R_dag", "a_L", "a_L_dag")
_DIAGONAL_KINDS = ("N_R", "N_L", "H_xy", "L_z")
_CARTESIAN_KINDS = ("a_x", "a_y", "a_x_dag", "a_y_dag")
OPERATOR_KINDS = _LADDER_KINDS + _DIAGONAL_KINDS + _CARTESIAN_KINDS


def build_operator(kind: str, n_max: int) -> OperatorMatrix:
    """Matrix of a named operator at cutoff n_max.

    Ladder operators populate exact sqrt(occupation) amplitudes; elements
    reaching past the cutoff are dropped.  Cartesian ladders are linear
    combinations of the circular ones: a_x = (a_R + a_L)/sqrt(2),
    a_y = i (a_R - a_L)/sqrt(2).
    """
    if n_max < 1:
        raise DomainError(f"n_max must be >= 1, got {n_max}")
    states = basis_states(n_max)
    index = {occ: i for i, occ in enumerate(states)}
    dim = len(states)
    entries = np.zeros((dim, dim), dtype=np.complex128)

    if kind in _DIAGONAL_KINDS:
        for i, occ in enumerate(states):
            if kind == "N_R":
                entries[i, i] = occ.n_R
            elif kind == "N_L":
                entries[i, i] = occ.n_L
            elif kind == "H_xy":
                entries[i, i] = occ.n_R + occ.n_L + 1.0
            else:  # L_z
                entries[i, i] = occ.n_R - occ.n_L
    elif kind in _LADDER_KINDS:
        for i, occ in enumerate(states):
            if kind == "a_R" and occ.n_R > 0:
                entries[index[CircularOccupation(occ.n_R - 1, occ.n_L)], i] = math.sqrt(occ.n_R)
            elif kind == "a_L" and occ.n_L > 0:
                entries[index[CircularOccupation(occ.n_R, occ.n_L - 1)], i] = math.sqrt(occ.n_L)
            elif kind == "a_R_dag":
                target = CircularOccupation(occ.n_R + 1, occ.n_L)
                if target in index:
                    entries[index[target], i] = math.sqrt(occ.n_R + 1)
            elif kind == "a_L_dag":
                target = CircularOccupation(occ.n_R, occ.n_L + 1)
                if target in index:
                    entries[index[target], i] = math.sqrt(occ.n_L + 1)
    elif kind in _CARTESIAN_KINDS:
        inv_sqrt2 = 1.0 / math.sqrt(2.0)
        a_r = build_operator("a_R", n_max).entries
        a_l = build_operator("a_L", n_max).entries
        if kind == "a_x":
            entries = inv_sqrt2 * (a_r + a_l)
        elif kind == "a_y":
            entries = 1j * inv_sqrt2 * (a_r - a_l)
        elif kind == "a_x_dag":
            entries = inv_sqrt2 * (a_r + a_l).conj().T
        else:
            entries = (1j * inv_sqrt2 * (a_r - a_l)).conj().T
    else:
        raise UsageError(f"unknown operator kind {kind!r}; expected one of {OPERATOR_KINDS}")

    return OperatorMatrix(kind=kind, n_max=n_max, entries=entries)


def commutator(a: OperatorMatrix, b: OperatorMatrix) -> OperatorMatrix:
    """[a, b] = ab - ba at a common cutoff."""
    if a.n_max != b.n_max:
        raise UsageError(f"operator cutoffs differ: {a.n_max} != {b.n_max}")
    return OperatorMatrix(
        kind=f"[{a.kind}, {b.kind}]",
        n_max=a.n_max,
        entries=a.entries @ b.entries - b.entries @ a.entries,
    )


def interior_indices(n_max: int, interior_max: int | None = None) -> np.ndarray:
    """Basis indices of states with total level <= interior_max.

    Defaults to n_max - 1: the largest subspace on which products of two
    truncated ladder matrices still agree with the untruncated algebra.
    """
    if interior_max is None:
        interior_max = n_max - 1
    return np.array(
        [i for i, occ in enumerate(basis_states(n_max)) if occ.n_R + occ.n_L <= interior_max],
        dtype=np.intp,
    )
