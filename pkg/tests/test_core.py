"""Exact Fibonacci arithmetic, the Z[phi] ring, and the analytic extension."""

from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from mpmath import mp

from goldencalc.core import (
    DomainError,
    GoldenValue,
    QPhi,
    ZPhi,
    fib_exact,
    fib_extended,
    fib_higher,
    fib_higher_real,
    fib_range,
    phi_power_exact,
    phi_value,
    ratio_sequence,
)


def fib_linear(n: int) -> int:
    """Independent oracle: the defining recurrence, term by term."""
    if n >= 0:
        a, b = 0, 1
        for _ in range(n):
            a, b = b, a + b
        return a
    f = fib_linear(-n)
    return f if (-n) % 2 == 1 else -f


class TestFibExact:
    def test_known_values(self):
        assert fib_exact(7) == 13
        assert fib_exact(0) == 0
        assert [fib_exact(n) for n in range(1, 8)] == [1, 1, 2, 3, 5, 8, 13]

    def test_negative_index(self):
        # (-1)^{n+1} F_n with F_3 = 2
        assert fib_exact(-3) == 2
        assert fib_exact(-4) == -3

    @given(st.integers(min_value=-300, max_value=300))
    def test_matches_linear_oracle(self, n):
        assert fib_exact(n) == fib_linear(n)

    def test_guard(self):
        with pytest.raises(DomainError):
            fib_exact(10**6 + 1)

    def test_fib_range(self):
        assert fib_range(-3, 3) == [2, -1, 1, 0, 1, 1, 2]


class TestZPhi:
    def test_multiplication_reduction(self):
        # (1+phi)(2+3phi) = 2 + 3phi + 2phi + 3phi^2 = 5 + 8phi
        assert ZPhi(1, 1) * ZPhi(2, 3) == ZPhi(5, 8)

    @given(st.tuples(st.integers(-50, 50), st.integers(-50, 50)),
           st.tuples(st.integers(-50, 50), st.integers(-50, 50)),
           st.tuples(st.integers(-50, 50), st.integers(-50, 50)))
    def test_ring_axioms(self, t1, t2, t3):
        x, y, z = ZPhi(*t1), ZPhi(*t2), ZPhi(*t3)
        assert x * y == y * x
        assert (x * y) * z == x * (y * z)
        assert x * (y + z) == x * y + x * z

    @given(st.integers(-200, 200))
    def test_phi_power_is_fibonacci_pair(self, n):
        assert ZPhi.phi() ** n == ZPhi(fib_exact(n - 1), fib_exact(n))
        assert phi_power_exact(n) == ZPhi.phi() ** n

    def test_phi_power_examples(self):
        assert phi_power_exact(4) == ZPhi(2, 3)
        assert phi_power_exact(0) == ZPhi(1, 0)
        assert phi_power_exact(1) == ZPhi(0, 1)

    def test_unit_inverse(self):
        assert ZPhi.phi().inverse() == ZPhi(-1, 1)
        assert ZPhi.phi() * ZPhi.inv_phi() == ZPhi(1, 0)
        with pytest.raises(ZeroDivisionError):
            ZPhi(2, 0).inverse()

    @given(st.integers(-30, 30), st.integers(-30, 30))
    def test_norm_multiplicative(self, a, b):
        x = ZPhi(a, b)
        y = ZPhi(b - 1, a + 2)
        assert (x * y).norm == x.norm * y.norm

    def test_conjugate_is_second_root(self):
        # phi' = 1 - phi satisfies x^2 = x + 1 as well
        pc = ZPhi.phi_conjugate()
        assert pc * pc == pc + 1


class TestQPhi:
    def test_field_inverse(self):
        x = QPhi(Fraction(2, 3), Fraction(-1, 5))
        assert x * x.inverse() == QPhi(1)
        with pytest.raises(ZeroDivisionError):
            QPhi(0).inverse()

    def test_mixed_arithmetic(self):
        assert QPhi(1, 2) + ZPhi(3, -2) == QPhi(4)
        assert QPhi(0, 1) ** -1 == QPhi(-1, 1)


class TestPhiValue:
    def test_decimal_value(self):
        phi, phi_prime = phi_value(16)
        assert abs(phi - mp.mpf("1.6180339887")) < 1e-9

    def test_root_sum_and_product(self):
        phi, phi_prime = phi_value(16)
        assert abs(phi + phi_prime - 1) < 1e-15
        phi, phi_prime = phi_value(50)
        with mp.workdps(50):
            assert abs(phi * phi_prime + 1) < mp.mpf("1e-48")
            assert abs(phi * (-phi_prime) - 1) < mp.mpf("1e-48")

    def test_precision_floor(self):
        with pytest.raises(DomainError):
            phi_value(8)


class TestFibExtended:
    def test_integer_argument(self):
        gv = fib_extended(5)
        assert isinstance(gv, GoldenValue)
        assert abs(gv.value - 5) < 1e-12

    def test_half_argument_frozen(self):
        # direct high-precision evaluation of the defining formula
        gv = fib_extended(0.5)
        assert abs(gv.value.real - 0.56886) < 1e-5
        assert abs(gv.value.imag - (-0.35158)) < 1e-5

    def test_half_argument_against_independent_formula(self):
        with mp.workdps(40):
            phi = (1 + mp.sqrt(5)) / 2
            z = mp.mpf("0.5")
            oracle = (mp.power(phi, z) - mp.expjpi(z) / mp.power(phi, z)) / mp.sqrt(5)
        assert abs(fib_extended(0.5, 34).value - oracle) < 1e-30

    def test_golden_pi_scale(self):
        # the published example value carries an extra sqrt(5)
        gv = fib_extended(mp.pi)
        scaled = gv.value * mp.sqrt(5)
        assert abs(scaled - mp.mpc("4.73068", "0.0939706")) < 5e-3
        assert abs(gv.value - mp.mpc("4.73068", "0.0939706")) > 2
    def test_guards(self):
        with pytest.raises(DomainError):
            fib_extended(2000.0)
        with pytest.raises(DomainError):
            fib_extended(1.0, precision=8)


class TestFibHigher:
    def test_examples(self):
        assert fib_higher(3, 2) == 8          # F_6 / F_2
        assert fib_higher(4, 2) == 21         # F_8 / F_2
        assert fib_higher(1, 9) == 1

    @given(st.integers(1, 25), st.integers(1, 25))
    def test_integrality(self, n, m):
        value = fib_higher(n, m)
        assert value.denominator == 1
        assert value == Fraction(fib_exact(m * n), fib_exact(m))

    def test_zero_order_rejected(self):
        with pytest.raises(DomainError):
            fib_higher(3, 0)

    def test_real_order(self):
        assert abs(fib_higher_real(2, 2.0) - 3) < 1e-20  # F_4 / F_2


class TestRatioSequence:
    def test_first_values(self):
        seq = ratio_sequence(3)
        assert [float(r) for r in seq] == [1.0, 2.0, 1.5]

    def test_converges_to_phi(self):
        seq = ratio_sequence(30)
        phi, _ = phi_value(34)
        assert abs(seq[0] - 1) == 0
        assert abs(seq[-1] - phi) < mp.mpf("1e-12")

    def test_alternating_envelope(self):
        seq = ratio_sequence(20)
        phi, _ = phi_value(34)
        errors = [abs(r - phi) for r in seq]
        assert all(errors[i + 1] < errors[i] for i in range(len(errors) - 1))
        signs = [1 if r > phi else -1 for r in seq]
        assert all(signs[i] != signs[i + 1] for i in range(len(signs) - 1))

    def test_minimum_length(self):
        with pytest.raises(DomainError):
            ratio_sequence(1)


class TestRealArgumentLaws:
    @settings(max_examples=20, deadline=None)
    @given(st.floats(-5, 5, allow_nan=False), st.floats(-5, 5, allow_nan=False))
    def test_addition_law(self, x, y):
        with mp.workdps(44):
            phi = (1 + mp.sqrt(5)) / 2
            fx = fib_extended(x).value
            fy = fib_extended(y).value
            fxy = fib_extended(x + y).value
            rhs = mp.power(phi, x) * fy + mp.expjpi(y) * mp.power(phi, -y) * fx
            assert abs(fxy - rhs) < mp.mpf("1e-10")

    @settings(max_examples=20, deadline=None)
    @given(st.floats(-5, 5, allow_nan=False))
    def test_recurrence(self, x):
        fx = fib_extended(x).value
        fx1 = fib_extended(x - 1).value
        fx2 = fib_extended(x - 2).value
        assert abs(fx - fx1 - fx2) < 1e-10
