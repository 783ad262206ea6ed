"""Ladder matrices, deformed algebra, spectrum, inversion, boson map."""

from __future__ import annotations

from fractions import Fraction
from math import sqrt

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st
from mpmath import mp

from goldencalc.binomials import fib_factorial
from goldencalc.core import DomainError, fib_exact, phi_value
from goldencalc.oscillator import (
    LadderSet,
    build_ladder,
    diagonal_identities_exact,
    energy_ratios,
    hamiltonian,
    invert_number,
    nonlinear_map,
    spectrum,
    standard_ladder,
    verify_oscillator_algebra,
)


class TestBuildLadder:
    def test_subdiagonal_entries(self):
        lad = build_ladder(3)
        assert np.allclose(np.diag(lad.b_dag, -1), [1.0, 1.0])  # sqrt(F_1), sqrt(F_2)

    def test_vacuum_annihilated(self):
        for dim in (2, 5, 30):
            assert np.all(build_ladder(dim).b[:, 0] == 0)

    def test_lowering_diagonal_is_fibonacci(self):
        lad = build_ladder(8)
        diag = np.diag(lad.b_dag @ lad.b).real
        assert np.allclose(diag, [fib_exact(n) for n in range(8)])

    def test_raising_diagonal_interior(self):
        # bb+ = F_{n+1} on interior states; [F_1, F_2] = [1, 1] at the bottom
        lad = build_ladder(3)
        diag = np.diag(lad.b @ lad.b_dag).real
        assert diag[0] == 1.0 and diag[1] == 1.0
        lad2 = build_ladder(2)
        assert np.diag(lad2.b @ lad2.b_dag).real[0] == 1.0

    def test_adjoint_pair(self):
        lad = build_ladder(6)
        assert np.array_equal(lad.b_dag, lad.b.conj().T)

    def test_immutable(self):
        lad = build_ladder(4)
        with pytest.raises(ValueError):
            lad.b[0, 0] = 1.0

    def test_guards(self):
        with pytest.raises(DomainError):
            build_ladder(1)
        with pytest.raises(DomainError):
            build_ladder(201)


class TestAlgebraVerification:
    def test_dim_12_within_tolerance(self):
        report = verify_oscillator_algebra(12, 1e-12)
        assert report.passed
        assert max(report.residuals.values()) < 1e-12

    def test_minimal_dimension(self):
        assert verify_oscillator_algebra(3, 1e-12).passed

    def test_corrupted_entry_detected(self):
        lad = build_ladder(10)
        bad_b = lad.b.copy()
        bad_b[1, 2] += 1e-6
        bad = LadderSet(dim=10, b=bad_b, b_dag=lad.b_dag, n_op=lad.n_op)
        report = verify_oscillator_algebra(10, 1e-12, ladder=bad)
        assert not report.passed
        assert max(report.residuals.values()) >= 1e-7

    def test_exact_diagonal_identities(self):
        assert diagonal_identities_exact(100)


class TestSpectrum:
    def test_printed_levels(self):
        table = spectrum(3, 1)
        assert [e for _, e in table.levels] == [
            Fraction(1, 2), Fraction(1), Fraction(3, 2), Fraction(5, 2)]

    def test_ground_state_scale(self):
        table = spectrum(0, Fraction(3, 7))
        assert table.levels[0][1] == Fraction(3, 14)

    def test_level_ten(self):
        assert spectrum(10, 1).levels[10][1] == Fraction(fib_exact(12), 2) == 72

    def test_gap_recurrence(self):
        table = spectrum(20, 1)
        for n in range(20):
            gap = table.levels[n + 1][1] - table.levels[n][1]
            assert gap == Fraction(fib_exact(n + 1), 2)

    @given(st.integers(0, 60))
    def test_level_closed_form(self, n):
        table = spectrum(n, 2)
        assert table.levels[n][1] == fib_exact(n + 2)

    def test_ratios_exact(self):
        assert spectrum(3, 1).ratios == (Fraction(2), Fraction(3, 2), Fraction(5, 3))


class TestEnergyRatios:
    def test_first_values(self):
        seq = energy_ratios(2)
        assert float(seq[0]) == 2.0       # F_3 / F_2
        assert float(seq[1]) == 1.5       # F_4 / F_3

    def test_converges_to_phi(self):
        seq = energy_ratios(30)
        phi, _ = phi_value(34)
        assert abs(seq[30] - phi) < mp.mpf("1e-12")

    def test_envelope_decreases(self):
        seq = energy_ratios(25)
        phi, _ = phi_value(34)
        errs = [abs(r - phi) for r in seq]
        assert all(errs[i + 1] < errs[i] for i in range(len(errs) - 1))


class TestInvertNumber:
    def test_examples(self):
        assert invert_number(55, "even") == 10
        assert invert_number(13, "odd") == 7

    def test_degenerate_unit(self):
        assert invert_number(1, "odd") == 1
        assert invert_number(1, "even") == 2

    @given(st.integers(3, 60))
    def test_round_trip(self, n):
        parity = "even" if n % 2 == 0 else "odd"
        assert invert_number(fib_exact(n), parity) == n

    def test_large_value(self):
        assert invert_number(fib_exact(301), "odd") == 301

    def test_rejects_non_fibonacci(self):
        with pytest.raises(DomainError):
            invert_number(4, "even")

    def test_rejects_wrong_parity(self):
        with pytest.raises(DomainError):
            invert_number(13, "even")  # 13 = F_7, odd index

    def test_rejects_bad_parity_label(self):
        with pytest.raises(DomainError):
            invert_number(13, "both")


class TestNonlinearMap:
    def test_first_transition_undeformed(self):
        nm = nonlinear_map(2)
        assert nm.scale_next[0] == 1.0  # sqrt(F_1 / 1)
        assert nm.scale[0] == 1.0       # convention entry

    def test_reconstruction(self):
        nm = nonlinear_map(6)
        lad = build_ladder(6)
        _, a_dag = standard_ladder(6)
        recon_right = a_dag @ np.diag(nm.scale_next)
        recon_left = np.diag(nm.scale) @ a_dag
        assert np.max(np.abs(recon_right - lad.b_dag)) < 1e-14
        assert np.array_equal(recon_right, recon_left)

    def test_entrywise_identity(self):
        nm = nonlinear_map(10)
        for n in range(9):
            lhs = sqrt(n + 1) * nm.scale_next[n].real
            assert abs(lhs - sqrt(fib_exact(n + 1))) < 1e-14


class TestFockSpace:
    def test_normalization(self):
        dim = 12
        lad = build_ladder(dim)
        vec = np.zeros(dim, dtype=np.complex128)
        vec[0] = 1.0
        for n in range(1, dim):
            vec = lad.b_dag @ vec
            norm = np.linalg.norm(vec) / sqrt(fib_factorial(n))
            assert abs(norm - 1.0) < 1e-12

    def test_number_operator_not_lowering_product(self):
        lad = build_ladder(12)
        diag = np.diag(lad.b_dag @ lad.b).real
        gaps = [abs(diag[n] - n) for n in range(3, 11)]
        assert max(gaps) >= 1.0

    def test_hamiltonian_matches_spectrum(self):
        lad = build_ladder(12)
        h = hamiltonian(lad, 1.0)
        assert np.max(np.abs(h - np.diag(np.diag(h)))) == 0.0
        table = spectrum(10, 1)
        for n, energy in table.levels:
            assert abs(h[n, n].real - float(energy)) < 1e-12 * float(energy)
