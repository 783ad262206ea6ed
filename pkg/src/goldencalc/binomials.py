"""Fibonacci factorials, Fibonomials, Golden binomials and polynomials.

The Fibonomial coefficient [n k]_F = F_n! / (F_k! F_{n-k}!) plays the role of
the binomial coefficient for the Golden binomial

    (x + y)_F^n = (x + phi^{n-1} y)(x - phi^{n-3} y) ... (x + (-1)^{n-1} phi^{-n+1} y),

whose expansion carries signs (-1)^{k(k-1)/2}.  The same coefficients appear
in the normal-ordered binomial on the plane y x = phi x y, in the Golden
polynomials P_n(x) = (x - a)_F^n / F_n!, and in the finite products whose
large-n limit is the Jackson exponential with base -phi**2.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Literal

import mpmath
from mpmath import mp

from .core import (
    DEFAULT_DPS,
    GUARD_DPS,
    MIN_DPS,
    DomainError,
    QPhi,
    ZPhi,
    _require,
    fib_range,
    phi_power_exact,
)

MAX_FACTORIAL_INDEX = 10**4
MAX_FIBONOMIAL_INDEX = 300
MAX_BINOMIAL_DEGREE = 30
MAX_NONCOMM_DEGREE = 12
MAX_SERIES_TERMS = 200


def fib_factorial(n: int) -> int:
    """F_n! = F_1 * F_2 * ... * F_n, with F_0! = 1 (empty product)."""
    _require(isinstance(n, int) and n >= 0, "factorial index must be a non-negative integer")
    _require(n <= MAX_FACTORIAL_INDEX, f"factorial index must not exceed {MAX_FACTORIAL_INDEX}")
    out = 1
    for f in fib_range(1, n) if n >= 1 else []:
        out *= f
    return out


def fibonomial(n: int, k: int) -> int:
    """Fibonomial coefficient F_n! / (F_k! F_{n-k}!), always an integer.

    k outside [0, n] returns 0, matching the usual binomial-sum convention.
    """
    _require(isinstance(n, int) and n >= 0, "upper index must be a non-negative integer")
    _require(n <= MAX_FIBONOMIAL_INDEX, f"upper index must not exceed {MAX_FIBONOMIAL_INDEX}")
    if k < 0 or k > n:
        return 0
    num = fib_factorial(n)
    den = fib_factorial(k) * fib_factorial(n - k)
    q, r = divmod(num, den)
    if r:  # cannot happen: Fibonomials are integers
        raise ArithmeticError(f"Fibonomial ({n},{k}) is not an integer")
    return q


def _half_triangle_sign(k: int) -> int:
    """(-1)**(k(k-1)/2): the sign pattern + + - - repeating."""
    return -1 if (k * (k - 1) // 2) % 2 else 1


# ---------------------------------------------------------------------------
# Bivariate polynomials with exact coefficients
# ---------------------------------------------------------------------------

class BivarPoly:
    """Sparse polynomial sum c_{ij} x^i y^j with exact coefficients.

    Coefficients may be any exact ring elements supporting +, * and
    truth-testing (ZPhi, QPhi, int, Fraction); explicit zeros are dropped.
    """

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: dict[tuple[int, int], object]) -> None:
        self._coeffs = {e: c for e, c in coeffs.items() if c}

    @classmethod
    def one(cls, ring=ZPhi) -> BivarPoly:
        unit = ring(1, 0) if ring in (ZPhi, QPhi) else ring(1)
        return cls({(0, 0): unit})

    @property
    def coefficients(self) -> dict[tuple[int, int], object]:
        return dict(self._coeffs)

    def coefficient(self, i: int, j: int):
        return self._coeffs.get((i, j))

    def __bool__(self) -> bool:
        return bool(self._coeffs)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, BivarPoly):
            return NotImplemented
        if set(self._coeffs) != set(other._coeffs):
            return False
        return all(self._coeffs[e] == other._coeffs[e] for e in self._coeffs)

    def __hash__(self) -> int:
        return hash(frozenset((e, str(c)) for e, c in self._coeffs.items()))

    def __repr__(self) -> str:
        return f"BivarPoly({self._coeffs!r})"

    def __str__(self) -> str:
        if not self._coeffs:
            return "0"
        parts = []
        for (i, j) in sorted(self._coeffs, key=lambda e: (-e[0], e[1])):
            c = self._coeffs[(i, j)]
            mono = "".join(s for s, p in (("x", i), ("y", j)) if p) or ""
            mono = (f"x^{i}" if i > 1 else "x" if i == 1 else "") + \
                   (f"y^{j}" if j > 1 else "y" if j == 1 else "")
            parts.append(f"({c}){mono}" if mono else f"({c})")
        return " + ".join(parts)

    def __add__(self, other: BivarPoly) -> BivarPoly:
        out = dict(self._coeffs)
        for e, c in other._coeffs.items():
            out[e] = out[e] + c if e in out else c
        return BivarPoly(out)

    def __neg__(self) -> BivarPoly:
        return BivarPoly({e: -c for e, c in self._coeffs.items()})

    def __sub__(self, other: BivarPoly) -> BivarPoly:
        return self + (-other)

    def __mul__(self, other: BivarPoly | object) -> BivarPoly:
        if isinstance(other, BivarPoly):
            out: dict[tuple[int, int], object] = {}
            for (i1, j1), c1 in self._coeffs.items():
                for (i2, j2), c2 in other._coeffs.items():
                    e = (i1 + i2, j1 + j2)
                    p = c1 * c2
                    out[e] = out[e] + p if e in out else p
            return BivarPoly(out)
        return BivarPoly({e: c * other for e, c in self._coeffs.items()})

    __rmul__ = __mul__

    def scale(self, factor) -> BivarPoly:
        return BivarPoly({e: c * factor for e, c in self._coeffs.items()})

    def substitute_y(self, value) -> list:
        """Collapse y by substituting an exact value; dense x-coefficients ascending."""
        deg = max((i for i, _ in self._coeffs), default=0)
        out = [0] * (deg + 1)
        for (i, j), c in self._coeffs.items():
            term = c
            for _ in range(j):
                term = term * value
            out[i] = out[i] + term
        return out

    def evaluate(self, x_val, y_val):
        total = None
        for (i, j), c in self._coeffs.items():
            term = c
            for _ in range(i):
                term = term * x_val
            for _ in range(j):
                term = term * y_val
            total = term if total is None else total + term
        return total if total is not None else 0

    def monomials(self) -> Iterator[tuple[tuple[int, int], object]]:
        return iter(sorted(self._coeffs.items()))


def _linear_factor(y_coeff, ring=ZPhi) -> BivarPoly:
    """x + (y_coeff) * y."""
    unit = ring(1, 0) if ring in (ZPhi, QPhi) else ring(1)
    return BivarPoly({(1, 0): unit, (0, 1): y_coeff})


BinomialForm = Literal["product", "expansion"]


def golden_binomial(n: int, form: BinomialForm = "product") -> BivarPoly:
    """(x + y)_F^n over Z[phi], by factor product or Fibonomial expansion.

    product:   multiply the n factors (x + (-1)^j phi^{n-1-2j} y), j = 0..n-1.
    expansion: sum [n k]_F (-1)^{k(k-1)/2} x^{n-k} y^k.

    Both forms produce the identical polynomial; the expansion coefficients
    are plain integers (vanishing phi-component).
    """
    _require(isinstance(n, int) and n >= 0, "degree must be a non-negative integer")
    _require(n <= MAX_BINOMIAL_DEGREE, f"degree must not exceed {MAX_BINOMIAL_DEGREE}")
    if form == "product":
        poly = BivarPoly.one()
        for j in range(n):
            c = phi_power_exact(n - 1 - 2 * j)
            if j % 2:
                c = -c
            poly = poly * _linear_factor(c)
        return poly
    if form == "expansion":
        coeffs = {
            (n - k, k): ZPhi(_half_triangle_sign(k) * fibonomial(n, k), 0)
            for k in range(n + 1)
        }
        return BivarPoly(coeffs)
    raise DomainError(f"unknown binomial form {form!r}")


def golden_binomial_roots(n: int) -> list[ZPhi]:
    """The n zeros of (x+y)_F^n at x/y = -phi^{n-1-2j}, as exact ring elements."""
    return [-(phi_power_exact(n - 1 - 2 * j)) if j % 2 == 0 else phi_power_exact(n - 1 - 2 * j)
            for j in range(n)]


# ---------------------------------------------------------------------------
# Golden polynomials
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class UnivarPoly:
    """Dense univariate polynomial, ascending-degree exact coefficients.

    `shift` records the parameter a for polynomials born as (x - a)_F^n / F_n!.
    """

    coeffs: tuple
    shift: Fraction | None = None

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def evaluate(self, x):
        total = 0
        for c in reversed(self.coeffs):
            total = total * x + (c.to_mpf() if isinstance(c, (ZPhi, QPhi)) else c)
        return total

    def __str__(self) -> str:
        parts = []
        for k in range(self.degree, -1, -1):
            c = self.coeffs[k]
            if not c:
                continue
            mono = f"x^{k}" if k > 1 else ("x" if k == 1 else "")
            parts.append(f"({c}){mono}" if mono else f"({c})")
        return " + ".join(parts) if parts else "0"


def _trim(coeffs: list) -> tuple:
    while len(coeffs) > 1 and not coeffs[-1]:
        coeffs.pop()
    return tuple(coeffs)


def golden_polynomial(n: int, a: int | Fraction = 1) -> UnivarPoly:
    """P_n(x) = (x - a)_F^n / F_n!;  P_0 = 1.  Exact rational coefficients."""
    _require(isinstance(n, int) and n >= 0, "degree must be a non-negative integer")
    _require(n <= MAX_BINOMIAL_DEGREE, f"degree must not exceed {MAX_BINOMIAL_DEGREE}")
    a = Fraction(a)
    fact = fib_factorial(n)
    coeffs = [Fraction(0)] * (n + 1)
    for k in range(n + 1):
        c = Fraction(_half_triangle_sign(k) * fibonomial(n, k)) * (-a) ** k
        coeffs[n - k] = c / fact
    return UnivarPoly(coeffs=_trim(coeffs), shift=a)


# ---------------------------------------------------------------------------
# Normal ordering on the plane y x = phi x y
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class NoncommWord:
    """Normal-ordered expansion sum c_k x^{n-k} y^k on the plane y x = phi x y."""

    n: int
    coeffs: tuple[ZPhi, ...]


def noncomm_expand(n: int) -> NoncommWord:
    """Expand (x+y)(x + qy)(x + q^2 y)...(x + q^{n-1} y) with q = -1/phi.

    Each right-multiplication is normal-ordered through y x = phi x y, all
    exactly in Z[phi] (powers of phi are units).  The resulting coefficients
    equal [n k]_F * (-1/phi)^{k(k-1)/2}.
    """
    _require(isinstance(n, int) and n >= 0, "degree must be a non-negative integer")
    _require(n <= MAX_NONCOMM_DEGREE, f"degree must not exceed {MAX_NONCOMM_DEGREE}")
    q = ZPhi.phi_conjugate()  # -1/phi = 1 - phi
    coeffs: dict[int, ZPhi] = {0: ZPhi(1, 0)}
    for m in range(n):
        q_m = q ** m
        nxt: dict[int, ZPhi] = {}
        for k, c in coeffs.items():
            # (x^{m-k} y^k) * x = phi^k x^{m-k+1} y^k
            move = c * phi_power_exact(k)
            nxt[k] = nxt[k] + move if k in nxt else move
            # (x^{m-k} y^k) * q^m y
            tail = c * q_m
            nxt[k + 1] = nxt[k + 1] + tail if k + 1 in nxt else tail
        coeffs = nxt
    return NoncommWord(n=n, coeffs=tuple(coeffs.get(k, ZPhi(0, 0)) for k in range(n + 1)))


def noncomm_expected_coefficient(n: int, k: int) -> ZPhi:
    """[n k]_F * (-1/phi)^{k(k-1)/2}, the closed form for noncomm_expand."""
    return ZPhi.phi_conjugate() ** (k * (k - 1) // 2) * fibonomial(n, k)


# ---------------------------------------------------------------------------
# Jackson exponential and the remarkable limit
# ---------------------------------------------------------------------------

def golden_base(precision: int = DEFAULT_DPS) -> mpmath.mpf:
    """-phi**2, the Jackson base reached by the large-n Golden binomial limit."""
    with mp.workdps(precision):
        phi = (1 + mp.sqrt(5)) / 2
        return -(phi ** 2)


def jackson_exp(q, x, n_terms: int = 60, precision: int = DEFAULT_DPS) -> mpmath.mpc:
    """Jackson q-exponential: sum_{k=0}^{n_terms} x^k / [k]_q!.

    [k]_q = (q^k - 1)/(q - 1) = 1 + q + ... + q^{k-1}; q = 1 degenerates to
    the classical exponential with [k]_q = k.  For q = -phi**2 the basic
    factorial grows super-geometrically, so truncation error is bounded by
    twice the first omitted term.
    """
    _require(isinstance(n_terms, int) and 1 <= n_terms <= MAX_SERIES_TERMS,
             f"term count must be in 1..{MAX_SERIES_TERMS}")
    _require(precision >= MIN_DPS, f"precision must be at least {MIN_DPS} digits")
    with mp.workdps(precision + GUARD_DPS):
        qv = mpmath.mpmathify(q)
        xv = mpmath.mpmathify(x)
        total = mp.mpc(1)
        basic_fact = mp.mpf(1)
        power = mp.mpc(1)
        q_pow = mp.mpc(1)
        for k in range(1, n_terms + 1):
            if qv == 1:
                basic = mp.mpf(k)
            else:
                q_pow *= qv
                basic = (q_pow - 1) / (qv - 1)
            basic_fact *= basic
            if basic_fact == 0:
                raise DomainError(f"basic factorial [{k}]_q! vanishes for q = {q}")
            power *= xv
            total += power / basic_fact
        return total


def remarkable_limit_lhs(y, n: int, precision: int = DEFAULT_DPS) -> mpmath.mpc:
    """(1 + y/phi^n)_F^n by its finite Fibonomial expansion.

    As n grows this approaches the Jackson exponential e_{-phi^2}(y/sqrt(5)).
    """
    _require(isinstance(n, int) and 1 <= n <= MAX_SERIES_TERMS,
             f"degree must be in 1..{MAX_SERIES_TERMS}")
    _require(precision >= MIN_DPS, f"precision must be at least {MIN_DPS} digits")
    with mp.workdps(precision + GUARD_DPS):
        yv = mpmath.mpmathify(y)
        phi = (1 + mp.sqrt(5)) / 2
        scale = yv / mp.power(phi, n)
        total = mp.mpc(0)
        power = mp.mpc(1)
        for k in range(n + 1):
            total += _half_triangle_sign(k) * mp.mpf(fibonomial(n, k)) * power
            power *= scale
        return total
