"""Energy levels, Landau indices, and degenerate-level enumeration."""

import pytest
from hypothesis import given
from hypothesis import strategies as st

from landau.constants import HBAR
from landau.errors import DomainError
from landau.fock import QuantumNumbers
from landau.spectra import (
    EnergyRecord,
    energy_record,
    enumerate_landau_level,
    landau_index,
    level_number,
    schrodinger_energy,
    spin_level_in_orbital_units,
    spin_only_levels,
    spin_only_levels_si,
)
from landau.units import FieldConfig, derive_scales, scales_from_dimensionless
from oracles import brute_force_landau

ZERO_FIELD = scales_from_dimensionless(0.0)
valid_state = st.integers(min_value=0, max_value=20).flatmap(
    lambda n: st.tuples(
        st.just(n),
        st.integers(min_value=0, max_value=n).map(lambda j: n - 2 * j),
        st.sampled_from([-0.5, 0.5]),
    )
)


class TestSpinDoublet:
    def test_larmor_units(self):
        assert spin_only_levels() == (0.5, -0.5)

    def test_absolute_levels_vanish_without_field(self):
        scales = derive_scales(FieldConfig(B_tesla=0.0))
        plus, minus = spin_only_levels_si(scales)
        assert plus == 0.0 and minus == 0.0

    def test_absolute_splitting_is_larmor_quantum(self):
        scales = derive_scales(FieldConfig(B_tesla=1.0))
        plus, minus = spin_only_levels_si(scales)
        assert plus == -minus
        assert plus - minus == pytest.approx(HBAR * scales.omega_larmor, rel=1e-15)
        # the half-splitting at 1 T is the Bohr magneton
        assert plus == pytest.approx(9.2740100783e-24, rel=1e-9)

    def test_shifted_doublet_in_orbital_units(self):
        assert spin_level_in_orbital_units(0.5) == 2.0
        assert spin_level_in_orbital_units(-0.5) == 0.0

    def test_shifted_doublet_rejects_bad_spin(self):
        with pytest.raises(DomainError):
            spin_level_in_orbital_units(0.0)


class TestLevelNumber:
    @pytest.mark.parametrize(
        "n,m_l,m_s,expect",
        [
            (0, 0, -0.5, 0),
            (0, 0, 0.5, 2),
            (1, 1, 0.5, 4),
            (1, -1, -0.5, 0),
            (4, -2, 0.5, 4),
            (5, 3, -0.5, 8),
        ],
    )
    def test_examples(self, n, m_l, m_s, expect):
        assert level_number(QuantumNumbers(n, m_l, m_s)) == expect

    @given(valid_state)
    def test_always_even_and_nonnegative(self, state):
        n, m_l, m_s = state
        lam = level_number(QuantumNumbers(n, m_l, m_s))
        assert lam >= 0 and lam % 2 == 0

    @given(valid_state)
    def test_landau_index_is_half_level_number(self, state):
        n, m_l, m_s = state
        q = QuantumNumbers(n, m_l, m_s)
        assert 2 * landau_index(q) == level_number(q)


class TestEnergies:
    def test_transverse_only(self):
        assert schrodinger_energy(QuantumNumbers(0, 0, -0.5), ZERO_FIELD) == 0.0
        assert schrodinger_energy(QuantumNumbers(0, 0, 0.5), ZERO_FIELD) == 2.0
        assert schrodinger_energy(QuantumNumbers(3, 1, 0.5), ZERO_FIELD) == 6.0

    @given(valid_state)
    def test_energy_is_twice_landau_index_at_rest(self, state):
        n, m_l, m_s = state
        q = QuantumNumbers(n, m_l, m_s)
        assert schrodinger_energy(q, ZERO_FIELD) == 2.0 * landau_index(q)

    def test_axial_term(self):
        scales = scales_from_dimensionless(0.5)
        q = QuantumNumbers(0, 0, -0.5, p_z=2.0)
        # zeta^2/(2 kappa) = 4
        assert schrodinger_energy(q, scales) == 4.0

    def test_axial_term_needs_field(self):
        q = QuantumNumbers(0, 0, -0.5, p_z=1.0)
        with pytest.raises(DomainError):
            schrodinger_energy(q, ZERO_FIELD)

    def test_record_embeds_state(self):
        q = QuantumNumbers(2, 0, 0.5)
        rec = energy_record(q, ZERO_FIELD)
        assert isinstance(rec, EnergyRecord)
        assert rec.q == q
        assert rec.e_schrodinger == 4.0
        assert rec.landau_r == 2


class TestLandauEnumeration:
    def test_spin_up_first_level(self):
        states = enumerate_landau_level(1, 4, m_s=0.5)
        assert [(q.n, q.m_l) for q in states] == [
            (0, 0),
            (1, -1),
            (2, -2),
            (3, -3),
            (4, -4),
        ]

    def test_lowest_level_excludes_spin_up(self):
        assert enumerate_landau_level(0, 6, m_s=0.5) == ()
        down = enumerate_landau_level(0, 6, m_s=-0.5)
        assert [(q.n, q.m_l) for q in down] == [(n, -n) for n in range(7)]

    def test_default_includes_both_spins(self):
        states = enumerate_landau_level(1, 2)
        assert [(q.n, q.m_l, q.m_s) for q in states] == [
            (0, 0, 0.5),
            (1, 1, -0.5),
            (1, -1, 0.5),
            (2, 0, -0.5),
            (2, -2, 0.5),
        ]

    def test_matches_brute_force(self):
        for r in range(6):
            for n_max in range(13):
                got = sorted(
                    (q.n, q.m_l, q.m_s) for q in enumerate_landau_level(r, n_max)
                )
                assert got == brute_force_landau(r, n_max)
                for m_s in (-0.5, 0.5):
                    got_one = sorted(
                        (q.n, q.m_l, q.m_s)
                        for q in enumerate_landau_level(r, n_max, m_s=m_s)
                    )
                    assert got_one == brute_force_landau(r, n_max, m_s=m_s)

    def test_index_round_trips_through_members(self):
        for r in range(5):
            for q in enumerate_landau_level(r, 10):
                assert landau_index(q) == r

    def test_spin_up_index_formula(self):
        # every spin-up state sits in level r = (n + m_l)/2 + 1
        for r in range(1, 4):
            for q in enumerate_landau_level(r, 4, m_s=0.5):
                assert (q.n + q.m_l) // 2 + 1 == r

    def test_validation(self):
        with pytest.raises(DomainError):
            enumerate_landau_level(-1, 4)
        with pytest.raises(DomainError):
            enumerate_landau_level(1, -1)
        with pytest.raises(DomainError):
            enumerate_landau_level(1, 4, m_s=0.3)

    def test_degeneracy_grows_with_cutoff(self):
        sizes = [len(enumerate_landau_level(2, n_max)) for n_max in (3, 6, 12, 24)]
        assert sizes == sorted(sizes)
        assert sizes[-1] > sizes[0]
