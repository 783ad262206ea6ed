"""Exact and analytic Binet-Fibonacci arithmetic.

The Fibonacci numbers are the two-base quantum numbers with bases equal to
the roots of x**2 - x - 1:

    F_n = (phi**n - phi'**n) / (phi - phi'),   phi = (1+sqrt(5))/2,  phi' = -1/phi.

This module provides the exact integer side (fast-doubling Fibonacci, the
quadratic ring Z[phi]) and the analytic side (the complex extension F_z with
(-1)**z read as exp(i*pi*z) on the principal branch), plus higher Fibonacci
numbers and the golden-ratio convergents.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import mpmath
from mpmath import mp

DEFAULT_DPS = 34
MIN_DPS = 16
GUARD_DPS = 10
MAX_FIB_INDEX = 10**6
MAX_EXTENDED_ARG = 1e3


class DomainError(ValueError):
    """An argument violates a documented precondition."""


def _require(condition: bool, message: str) -> None:
    if not condition:
        raise DomainError(message)


# ---------------------------------------------------------------------------
# Exact integer Fibonacci values
# ---------------------------------------------------------------------------

def fib_exact(n: int) -> int:
    """Exact F_n for any signed index, via fast doubling.

    Negative indices use F_{-n} = (-1)**(n+1) * F_n.
    """
    _require(isinstance(n, int), "Fibonacci index must be an integer")
    _require(abs(n) <= MAX_FIB_INDEX, f"|n| must not exceed {MAX_FIB_INDEX}")
    if n < 0:
        f = _fib_pair(-n)[0]
        return f if n % 2 == 1 else -f
    return _fib_pair(n)[0]


def _fib_pair(n: int) -> tuple[int, int]:
    """(F_n, F_{n+1}) for n >= 0 in O(log n) big-integer multiplies."""
    if n == 0:
        return 0, 1
    a, b = _fib_pair(n >> 1)
    c = a * (2 * b - a)
    d = a * a + b * b
    if n & 1:
        return d, c + d
    return c, d


def fib_range(lo: int, hi: int) -> list[int]:
    """[F_lo, ..., F_hi] by the linear recurrence (cheaper than repeated doubling)."""
    _require(lo <= hi, "empty index range")
    a, b = fib_exact(lo), fib_exact(lo + 1)
    out = [a]
    for _ in range(lo, hi):
        a, b = b, a + b
        out.append(a)
    return out


# ---------------------------------------------------------------------------
# The ring Z[phi]
# ---------------------------------------------------------------------------

class ZPhi:
    """Element a + b*phi of the quadratic integer ring Z[phi].

    Products reduce through phi**2 = phi + 1:

        (a1 + b1*phi)(a2 + b2*phi) = (a1*a2 + b1*b2) + (a1*b2 + a2*b1 + b1*b2)*phi.

    phi is a unit here (phi**-1 = phi - 1), so all integer powers of phi are
    exact ring elements; phi**n = F_{n-1} + F_n * phi.
    """

    __slots__ = ("_a", "_b")

    def __init__(self, a: int, b: int) -> None:
        if not (isinstance(a, int) and isinstance(b, int)):
            raise TypeError("ZPhi coefficients must be integers")
        self._a = a
        self._b = b

    @property
    def a(self) -> int:
        return self._a

    @property
    def b(self) -> int:
        return self._b

    @classmethod
    def from_int(cls, x: int) -> ZPhi:
        return cls(x, 0)

    @classmethod
    def phi(cls) -> ZPhi:
        return cls(0, 1)

    @classmethod
    def phi_conjugate(cls) -> ZPhi:
        """The second root phi' = 1 - phi = -1/phi."""
        return cls(1, -1)

    @classmethod
    def inv_phi(cls) -> ZPhi:
        """1/phi = phi - 1."""
        return cls(-1, 1)

    def __repr__(self) -> str:
        return f"ZPhi({self._a}, {self._b})"

    def __str__(self) -> str:
        return f"{self._a}{self._b:+}φ"

    def __hash__(self) -> int:
        return hash((self._a, self._b))

    def __bool__(self) -> bool:
        return self._a != 0 or self._b != 0

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            return self._a == other and self._b == 0
        if isinstance(other, ZPhi):
            return self._a == other._a and self._b == other._b
        return NotImplemented

    def __neg__(self) -> ZPhi:
        return ZPhi(-self._a, -self._b)

    def __add__(self, other: int | ZPhi) -> ZPhi:
        if isinstance(other, int):
            return ZPhi(self._a + other, self._b)
        if isinstance(other, ZPhi):
            return ZPhi(self._a + other._a, self._b + other._b)
        return NotImplemented

    __radd__ = __add__

    def __sub__(self, other: int | ZPhi) -> ZPhi:
        return self + (-other)

    def __rsub__(self, other: int | ZPhi) -> ZPhi:
        return (-self) + other

    def __mul__(self, other: int | ZPhi) -> ZPhi:
        if isinstance(other, int):
            return ZPhi(self._a * other, self._b * other)
        if isinstance(other, ZPhi):
            a1, b1, a2, b2 = self._a, self._b, other._a, other._b
            return ZPhi(a1 * a2 + b1 * b2, a1 * b2 + a2 * b1 + b1 * b2)
        return NotImplemented

    __rmul__ = __mul__

    @property
    def conj(self) -> ZPhi:
        """Galois conjugate phi -> 1 - phi."""
        return ZPhi(self._a + self._b, -self._b)

    @property
    def norm(self) -> int:
        """Field norm a**2 + a*b - b**2 (multiplicative)."""
        return self._a * self._a + self._a * self._b - self._b * self._b

    def inverse(self) -> ZPhi:
        n = self.norm
        if n == 1:
            return self.conj
        if n == -1:
            return -self.conj
        raise ZeroDivisionError("only units (norm ±1) are invertible in Z[phi]")

    def __pow__(self, n: int) -> ZPhi:
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return self.inverse() ** (-n)
        result = ZPhi(1, 0)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def to_mpf(self) -> mpmath.mpf:
        """Value a + b*phi at the current mpmath precision."""
        return self._a + self._b * (1 + mp.sqrt(5)) / 2

    def __float__(self) -> float:
        return self._a + self._b * (1 + 5 ** 0.5) / 2


class QPhi:
    """Element a + b*phi with rational coordinates (the field Q(phi)).

    Used where exact phi-arithmetic meets rational denominators, e.g. the
    factored forms of the Golden polynomials.
    """

    __slots__ = ("_a", "_b")

    def __init__(self, a: int | Fraction, b: int | Fraction = 0) -> None:
        self._a = Fraction(a)
        self._b = Fraction(b)

    @classmethod
    def from_zphi(cls, z: ZPhi) -> QPhi:
        return cls(z.a, z.b)

    @property
    def a(self) -> Fraction:
        return self._a

    @property
    def b(self) -> Fraction:
        return self._b

    def __repr__(self) -> str:
        return f"QPhi({self._a}, {self._b})"

    def __bool__(self) -> bool:
        return self._a != 0 or self._b != 0

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, Fraction)):
            return self._a == other and self._b == 0
        if isinstance(other, QPhi):
            return self._a == other._a and self._b == other._b
        if isinstance(other, ZPhi):
            return self._a == other.a and self._b == other.b
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self._a, self._b))

    def __neg__(self) -> QPhi:
        return QPhi(-self._a, -self._b)

    def __add__(self, other: int | Fraction | ZPhi | QPhi) -> QPhi:
        o = _as_qphi(other)
        if o is None:
            return NotImplemented
        return QPhi(self._a + o._a, self._b + o._b)

    __radd__ = __add__

    def __sub__(self, other: int | Fraction | ZPhi | QPhi) -> QPhi:
        o = _as_qphi(other)
        if o is None:
            return NotImplemented
        return QPhi(self._a - o._a, self._b - o._b)

    def __rsub__(self, other: int | Fraction | ZPhi | QPhi) -> QPhi:
        return (-self) + other

    def __mul__(self, other: int | Fraction | ZPhi | QPhi) -> QPhi:
        o = _as_qphi(other)
        if o is None:
            return NotImplemented
        a1, b1, a2, b2 = self._a, self._b, o._a, o._b
        return QPhi(a1 * a2 + b1 * b2, a1 * b2 + a2 * b1 + b1 * b2)

    __rmul__ = __mul__

    def inverse(self) -> QPhi:
        n = self._a * self._a + self._a * self._b - self._b * self._b
        if n == 0:
            raise ZeroDivisionError("zero element of Q(phi)")
        return QPhi((self._a + self._b) / n, -self._b / n)

    def __truediv__(self, other: int | Fraction | ZPhi | QPhi) -> QPhi:
        o = _as_qphi(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __pow__(self, n: int) -> QPhi:
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return self.inverse() ** (-n)
        result = QPhi(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def to_mpf(self) -> mpmath.mpf:
        phi = (1 + mp.sqrt(5)) / 2
        return (mp.mpf(self._a.numerator) / self._a.denominator
                + mp.mpf(self._b.numerator) / self._b.denominator * phi)


def _as_qphi(x: object) -> QPhi | None:
    if isinstance(x, QPhi):
        return x
    if isinstance(x, ZPhi):
        return QPhi(x.a, x.b)
    if isinstance(x, (int, Fraction)):
        return QPhi(x)
    return None


def phi_power_exact(n: int) -> ZPhi:
    """phi**n as the exact ring element F_{n-1} + F_n * phi, any signed n."""
    _require(abs(n) <= MAX_FIB_INDEX, f"|n| must not exceed {MAX_FIB_INDEX}")
    return ZPhi(fib_exact(n - 1), fib_exact(n))


# ---------------------------------------------------------------------------
# High-precision constants and the analytic extension
# ---------------------------------------------------------------------------

def phi_value(precision: int = DEFAULT_DPS) -> tuple[mpmath.mpf, mpmath.mpf]:
    """(phi, phi') to `precision` decimal digits; phi' = -1/phi."""
    _require(precision >= MIN_DPS, f"precision must be at least {MIN_DPS} digits")
    with mp.workdps(precision):
        s = mp.sqrt(5)
        return (1 + s) / 2, (1 - s) / 2


@dataclass(frozen=True)
class GoldenValue:
    """The analytic Fibonacci value F_z at a complex argument."""

    z: mpmath.mpc
    value: mpmath.mpc
    precision: int

    def __complex__(self) -> complex:
        return complex(self.value)


def fib_extended(z: complex | float | str, precision: int = DEFAULT_DPS) -> GoldenValue:
    """F_z = (phi**z - exp(i*pi*z) * phi**-z) / sqrt(5) for complex z.

    phi**z is exp(z*log(phi)) on the principal branch; the sign base is read
    as (-1)**z = exp(i*pi*z). At integer z this reproduces fib_exact(z).
    """
    _require(precision >= MIN_DPS, f"precision must be at least {MIN_DPS} digits")
    with mp.workdps(precision + GUARD_DPS):
        zc = mp.mpc(z)
        _require(abs(zc.real) <= MAX_EXTENDED_ARG and abs(zc.imag) <= MAX_EXTENDED_ARG,
                 f"|Re z| and |Im z| must not exceed {MAX_EXTENDED_ARG:g}")
        phi = (1 + mp.sqrt(5)) / 2
        value = (mp.power(phi, zc) - mp.exp(1j * mp.pi * zc) * mp.power(phi, -zc)) / mp.sqrt(5)
        return GoldenValue(z=zc, value=value, precision=precision)


def fib_higher(n: int, m: int) -> Fraction:
    """Higher Fibonacci number F_n^(m) = F_{m*n} / F_m, exact.

    For integer n the quotient is an integer (F_m divides F_{m*n}).
    """
    _require(isinstance(m, int) and m >= 1, "order m must be a positive integer (F_0 = 0 denominator)")
    _require(abs(m * n) <= MAX_FIB_INDEX, f"|m*n| must not exceed {MAX_FIB_INDEX}")
    return Fraction(fib_exact(m * n), fib_exact(m))


def fib_higher_real(n: float, order: float, precision: int = DEFAULT_DPS) -> mpmath.mpc:
    """F_n^(r) at real order r: the two-base number with bases phi**r, phi'**r.

    phi'**r is exp(i*pi*r) * phi**-r on the principal branch.
    """
    _require(precision >= MIN_DPS, f"precision must be at least {MIN_DPS} digits")
    with mp.workdps(precision + GUARD_DPS):
        r = mp.mpf(order)
        nn = mp.mpf(n)
        phi = (1 + mp.sqrt(5)) / 2
        big = mp.power(phi, r)
        small = mp.exp(1j * mp.pi * r) * mp.power(phi, -r)
        return (big ** nn - small ** nn) / (big - small)


def ratio_sequence(n_max: int, precision: int = DEFAULT_DPS) -> list[mpmath.mpf]:
    """Convergents r_n = F_{n+1}/F_n for n = 1..n_max; r_n -> phi."""
    _require(n_max >= 2, "n_max must be at least 2")
    _require(precision >= MIN_DPS, f"precision must be at least {MIN_DPS} digits")
    fibs = fib_range(1, n_max + 1)
    with mp.workdps(precision):
        return [mp.mpf(fibs[i + 1]) / fibs[i] for i in range(n_max)]
