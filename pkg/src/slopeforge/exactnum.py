"""Exact scalar arithmetic: rationals, cyclotomic numbers, p-adic valuations.

Every quantity in this library is a :class:`fractions.Fraction` or a
:class:`Cyclotomic`; there is no floating point anywhere and all comparisons
are exact.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import lcm


def is_prime(n: int) -> bool:
    """Deterministic primality test by trial division (inputs here are small)."""
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0 or n % 3 == 0:
        return False
    d = 5
    while d * d <= n:
        if n % d == 0 or n % (d + 2) == 0:
            return False
        d += 6
    return True


@lru_cache(maxsize=None)
def euler_phi(n: int) -> int:
    if n < 1:
        raise ValueError("euler_phi needs a positive integer")
    result, m, p = n, n, 2
    while p * p <= m:
        if m % p == 0:
            while m % p == 0:
                m //= p
            result -= result // p
        p += 1
    if m > 1:
        result -= result // m
    return result


class _PlusInfinity:
    """The distinguished value +oo, used only as the valuation of zero."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "+Infinity"

    def __eq__(self, other):
        return other is self

    def __hash__(self):
        return hash("slopeforge.+Infinity")

    def __gt__(self, other):
        return other is not self

    def __ge__(self, other):
        return True

    def __lt__(self, other):
        return False

    def __le__(self, other):
        return other is self

    def __add__(self, other):
        return self

    __radd__ = __add__


PLUS_INFINITY = _PlusInfinity()


def padic_valuation(q: Fraction | int, p: int):
    """p-adic valuation of a rational; the valuation of 0 is PLUS_INFINITY."""
    if not is_prime(p):
        raise ValueError(f"p = {p} is not prime")
    q = Fraction(q)
    if q == 0:
        return PLUS_INFINITY

    def _vint(n: int) -> int:
        v = 0
        while n % p == 0:
            n //= p
            v += 1
        return v

    return _vint(abs(q.numerator)) - _vint(q.denominator)


# -- integer polynomial helpers for cyclotomic polynomials -------------------


def _poly_divmod_int(num: list[int], den: list[int]) -> list[int]:
    """Exact quotient of integer polynomials (den monic, division exact)."""
    num = list(num)
    dn = len(den) - 1
    out = [0] * (len(num) - dn)
    for i in range(len(num) - 1, dn - 1, -1):
        c = num[i]
        out[i - dn] = c
        if c:
            for j, d in enumerate(den):
                num[i - dn + j] -= c * d
    if any(num[:dn]):
        raise ArithmeticError("inexact polynomial division")
    return out


@lru_cache(maxsize=None)
def cyclotomic_polynomial(n: int) -> tuple[int, ...]:
    """Coefficients (ascending) of the n-th cyclotomic polynomial."""
    if n < 1:
        raise ValueError("conductor must be positive")
    if n == 1:
        return (-1, 1)
    num = [-1] + [0] * (n - 1) + [1]  # x^n - 1
    for d in range(1, n):
        if n % d == 0:
            num = _poly_divmod_int(num, list(cyclotomic_polynomial(d)))
    return tuple(num)


def _reduce_mod_cyclotomic(coeffs: list[Fraction], n: int) -> list[Fraction]:
    """Remainder mod the (monic) n-th cyclotomic polynomial, length phi(n)."""
    d = euler_phi(n)
    work = list(coeffs)
    if len(work) > d:
        phi = cyclotomic_polynomial(n)
        for i in range(len(work) - 1, d - 1, -1):
            c = work[i]
            if c:
                work[i] = Fraction(0)
                for j in range(d):
                    if phi[j]:
                        work[i - d + j] -= c * phi[j]
    return work[:d] + [Fraction(0)] * max(0, d - len(work))


class Cyclotomic:
    """An element of the cyclotomic field Q(zeta_n), stored reduced mod Phi_n.

    The coefficient vector has length phi(n) over the power basis
    1, zeta_n, ..., zeta_n^(phi(n)-1).  A value that is rational is always
    stored with conductor 1.  Instances are immutable.
    """

    __slots__ = ("conductor", "coeffs")
    __hash__ = None  # cross-conductor equality makes hashing a trap

    def __init__(self, conductor: int, coeffs, _reduced: bool = False):
        coeffs = [Fraction(c) for c in coeffs]
        if not _reduced:
            coeffs = _reduce_mod_cyclotomic(coeffs, conductor)
        d = euler_phi(conductor)
        if len(coeffs) != d:
            coeffs = coeffs[:d] + [Fraction(0)] * (d - len(coeffs))
        if conductor > 1 and not any(coeffs[1:]):
            conductor, coeffs = 1, [coeffs[0]]
        object.__setattr__(self, "conductor", conductor)
        object.__setattr__(self, "coeffs", tuple(coeffs))

    def __setattr__(self, *a):
        raise AttributeError("Cyclotomic values are immutable")

    # -- constructors --

    @staticmethod
    def rational(q) -> Cyclotomic:
        return Cyclotomic(1, [Fraction(q)], _reduced=True)

    @staticmethod
    def zeta(n: int, k: int = 1) -> Cyclotomic:
        """The root of unity zeta_n^k."""
        if n < 1:
            raise ValueError("order must be positive")
        k %= n
        coeffs = [Fraction(0)] * k + [Fraction(1)]
        return Cyclotomic(n, coeffs)

    @staticmethod
    def coerce(x) -> Cyclotomic:
        if isinstance(x, Cyclotomic):
            return x
        if isinstance(x, (int, Fraction)):
            return Cyclotomic.rational(x)
        raise TypeError(f"cannot coerce {type(x).__name__} to Cyclotomic")

    # -- structure --

    @property
    def is_rational(self) -> bool:
        return self.conductor == 1

    def rational_value(self) -> Fraction:
        if not self.is_rational:
            raise ValueError(f"{self!r} is not rational")
        return self.coeffs[0]

    def integer_value(self) -> int:
        q = self.rational_value()
        if q.denominator != 1:
            raise ValueError(f"{self!r} is not a rational integer")
        return q.numerator

    def _lift_coeffs(self, n: int) -> list[Fraction]:
        """Coefficient vector in Q(zeta_n), length phi(n); n a conductor multiple."""
        if n % self.conductor:
            raise ValueError("can only lift to a multiple of the conductor")
        if n == self.conductor:
            return list(self.coeffs)
        step = n // self.conductor
        raw = [Fraction(0)] * ((len(self.coeffs) - 1) * step + 1)
        for j, c in enumerate(self.coeffs):
            raw[j * step] = c
        out = _reduce_mod_cyclotomic(raw, n)
        d = euler_phi(n)
        return out + [Fraction(0)] * (d - len(out))

    # -- arithmetic --

    def _pair(self, other):
        other = Cyclotomic.coerce(other)
        n = lcm(self.conductor, other.conductor)
        return self._lift_coeffs(n), other._lift_coeffs(n), n

    def __add__(self, other):
        try:
            a, b, n = self._pair(other)
        except TypeError:
            return NotImplemented
        return Cyclotomic(n, [x + y for x, y in zip(a, b)], _reduced=True)

    __radd__ = __add__

    def __neg__(self):
        return Cyclotomic(self.conductor, [-c for c in self.coeffs], _reduced=True)

    def __sub__(self, other):
        try:
            return self + (-Cyclotomic.coerce(other))
        except TypeError:
            return NotImplemented

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        try:
            a, b, n = self._pair(other)
        except TypeError:
            return NotImplemented
        prod = [Fraction(0)] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    if y:
                        prod[i + j] += x * y
        return Cyclotomic(n, prod)

    __rmul__ = __mul__

    def inverse(self) -> Cyclotomic:
        """Multiplicative inverse; raises ZeroDivisionError on zero."""
        if not self:
            raise ZeroDivisionError("inversion of zero cyclotomic")
        if self.is_rational:
            return Cyclotomic.rational(1 / self.coeffs[0])
        n = self.conductor
        phi = [Fraction(c) for c in cyclotomic_polynomial(n)]
        # extended Euclid in Q[x]: u*self + v*Phi_n = 1
        r0, r1 = phi, list(self.coeffs)
        s0, s1 = [Fraction(0)], [Fraction(1)]
        while True:
            while r1 and not r1[-1]:
                r1.pop()
            if len(r1) == 1:
                c = r1[0]
                return Cyclotomic(n, [x / c for x in s1])
            q, rem = _poly_divmod_frac(r0, r1)
            r0, r1 = r1, rem
            s0, s1 = s1, _poly_sub(s0, _poly_mul(q, s1))
            s1 = _reduce_mod_cyclotomic(s1, n)

    def __truediv__(self, other):
        return self * Cyclotomic.coerce(other).inverse()

    def __rtruediv__(self, other):
        return Cyclotomic.coerce(other) * self.inverse()

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        out = Cyclotomic.rational(1)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __bool__(self):
        return any(self.coeffs)

    def __eq__(self, other):
        try:
            a, b, _ = self._pair(other)
        except TypeError:
            return NotImplemented
        return a == b

    def __repr__(self):
        if self.is_rational:
            return f"Cyclotomic({self.coeffs[0]})"
        terms = ", ".join(str(c) for c in self.coeffs)
        return f"Cyclotomic(z{self.conductor}; [{terms}])"


def _poly_mul(a, b):
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                if y:
                    out[i + j] += x * y
    return out


def _poly_sub(a, b):
    n = max(len(a), len(b))
    a = list(a) + [Fraction(0)] * (n - len(a))
    b = list(b) + [Fraction(0)] * (n - len(b))
    return [x - y for x, y in zip(a, b)]


def _poly_divmod_frac(num, den):
    num = list(num)
    while den and not den[-1]:
        den = den[:-1]
    dn = len(den) - 1
    lead = den[-1]
    q = [Fraction(0)] * max(1, len(num) - dn)
    for i in range(len(num) - 1, dn - 1, -1):
        c = num[i] / lead
        q[i - dn] = c
        if c:
            for j, d in enumerate(den):
                num[i - dn + j] -= c * d
    return q, num[:dn]


# -- string forms used by the JSON wire formats ------------------------------


def rational_to_str(q: Fraction | int) -> str:
    q = Fraction(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def rational_from_str(s: str) -> Fraction:
    s = s.strip()
    try:
        return Fraction(s)
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"not a rational: {s!r}") from exc
