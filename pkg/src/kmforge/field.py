"""Exact arithmetic in cyclotomic fields Q(zeta_L).

A value of level L is a vector of rationals in the power basis
1, z, ..., z^{n-1} modulo the L-th cyclotomic polynomial, where
z = e^{2*pi*i/L} and n = deg Phi_L.  Reduction mod Phi_L is canonical, so
equality is coordinate equality.  Levels are kept to multiples of 4 so that
i = z^{L/4} is always available.  A value of level M embeds into any level L
with M | L; binary operations lift both operands to the lcm of their levels,
which always exists.  Requests to re-express a value at a level that does not
contain its own raise LevelMismatchError.

Everything is immutable and exact; there is no floating point outside the
debug helper ``to_complex``.
"""

from __future__ import annotations

import functools
import math
from fractions import Fraction

from .errors import LevelMismatchError

Rational = Fraction


def _divisors(n):
    out = [d for d in range(1, n + 1) if n % d == 0]
    return out


def _poly_mul_int(a, b):
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                if y:
                    out[i + j] += x * y
    return out


def _poly_divmod_int(num, den):
    # Exact division of integer polynomials, den monic up to leading unit.
    num = list(num)
    dn = len(den) - 1
    lead = den[-1]
    quot = [0] * (len(num) - dn)
    for i in range(len(num) - 1, dn - 1, -1):
        c = num[i]
        if c % lead:
            raise ArithmeticError("non-exact polynomial division")
        q = c // lead
        quot[i - dn] = q
        if q:
            for j, y in enumerate(den):
                num[i - dn + j] -= q * y
    while num and num[-1] == 0:
        num.pop()
    return quot, num


@functools.cache
def cyclotomic_polynomial(L):
    """Coefficients (low to high) of the L-th cyclotomic polynomial."""
    if L < 1:
        raise ValueError("level must be positive")
    poly = [-1] + [0] * (L - 1) + [1]  # x^L - 1
    for d in _divisors(L):
        if d < L:
            poly, rem = _poly_divmod_int(poly, cyclotomic_polynomial(d))
            assert not rem
    return tuple(poly)


@functools.cache
def field_degree(L):
    """Degree of Q(zeta_L) over Q, i.e. Euler phi of L."""
    return len(cyclotomic_polynomial(L)) - 1


@functools.cache
def _power_table(L):
    """z^m reduced mod Phi_L, for 0 <= m <= max(L, 2*deg-2); integer coords."""
    phi = cyclotomic_polynomial(L)
    n = len(phi) - 1
    top = max(L, 2 * n - 1)
    rows = []
    cur = [0] * n
    cur[0] = 1
    for _ in range(top + 1):
        rows.append(tuple(cur))
        nxt = [0] * (n + 1)
        for i, c in enumerate(cur):
            nxt[i + 1] = c
        lead = nxt[n]
        if lead:
            # subtract lead * Phi_L (monic)
            nxt = [nxt[i] - lead * phi[i] for i in range(n)]
        else:
            nxt = nxt[:n]
        cur = nxt
    return tuple(rows)


def _reduce(L, coeffs):
    """Reduce a raw coefficient list (any length) mod Phi_L to degree coords."""
    n = field_degree(L)
    table = _power_table(L)
    out = [Fraction(0)] * n
    for m, c in enumerate(coeffs):
        if c:
            if m < n:
                out[m] += c
            else:
                row = table[m]
                for i, t in enumerate(row):
                    if t:
                        out[i] += c * t
    return out


class CyclotomicNumber:
    """Element of Q(zeta_L) in the canonical power basis mod Phi_L."""

    __slots__ = ("level", "coords")

    def __init__(self, level, coords):
        if level % 4:
            raise ValueError("level must be a multiple of 4")
        n = field_degree(level)
        coords = tuple(Fraction(c) for c in coords)
        if len(coords) != n:
            raise ValueError(f"expected {n} coordinates at level {level}, got {len(coords)}")
        object.__setattr__(self, "level", level)
        object.__setattr__(self, "coords", coords)

    def __setattr__(self, name, value):
        raise AttributeError("CyclotomicNumber is immutable")

    # -- construction ------------------------------------------------------

    @classmethod
    def from_rational(cls, value, level=4):
        q = Fraction(value)
        n = field_degree(level)
        return cls(level, (q,) + (Fraction(0),) * (n - 1))

    @classmethod
    def zero(cls, level=4):
        return cls.from_rational(0, level)

    @classmethod
    def one(cls, level=4):
        return cls.from_rational(1, level)

    # -- level handling ----------------------------------------------------

    def lift(self, level):
        """Re-express at a higher level; requires self.level | level."""
        if level == self.level:
            return self
        if level % self.level:
            raise LevelMismatchError(f"cannot lift level {self.level} into {level}")
        step = level // self.level
        table = _power_table(level)
        n = field_degree(level)
        out = [Fraction(0)] * n
        for j, c in enumerate(self.coords):
            if c:
                row = table[(j * step) % level]
                for i, t in enumerate(row):
                    if t:
                        out[i] += c * t
        return CyclotomicNumber(level, out)

    @staticmethod
    def _common(a, b):
        if a.level == b.level:
            return a, b
        lev = math.lcm(a.level, b.level)
        return a.lift(lev), b.lift(lev)

    def _coerce(self, other):
        if isinstance(other, CyclotomicNumber):
            return other
        if isinstance(other, (int, Fraction)):
            return CyclotomicNumber.from_rational(other, self.level)
        return None

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        a, b = self._common(self, other)
        return CyclotomicNumber(a.level, tuple(x + y for x, y in zip(a.coords, b.coords)))

    __radd__ = __add__

    def __neg__(self):
        return CyclotomicNumber(self.level, tuple(-x for x in self.coords))

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        a, b = self._common(self, other)
        raw = [Fraction(0)] * (2 * len(a.coords) - 1)
        for i, x in enumerate(a.coords):
            if x:
                for j, y in enumerate(b.coords):
                    if y:
                        raw[i + j] += x * y
        return CyclotomicNumber(a.level, _reduce(a.level, raw))

    __rmul__ = __mul__

    def inverse(self):
        """Multiplicative inverse via the extended Euclidean algorithm."""
        if not self:
            raise ZeroDivisionError("inverse of zero cyclotomic number")
        phi = [Fraction(c) for c in cyclotomic_polynomial(self.level)]
        r0, r1 = phi, [Fraction(c) for c in self.coords]
        t0, t1 = [], [Fraction(1)]
        while True:
            while r1 and not r1[-1]:
                r1.pop()
            if len(r1) == 1:
                inv = 1 / r1[0]
                coords = _reduce(self.level, [c * inv for c in t1])
                return CyclotomicNumber(self.level, coords)
            q, r = _poly_divmod_frac(r0, r1)
            r0, r1 = r1, r
            t_new = _poly_sub(t0, _poly_mul_frac(q, t1))
            t0, t1 = t1, t_new

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other * self.inverse()

    def __pow__(self, exponent):
        if not isinstance(exponent, int):
            return NotImplemented
        if exponent < 0:
            return self.inverse() ** (-exponent)
        result = CyclotomicNumber.one(self.level)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def conj(self):
        """Complex conjugation, the ring automorphism z -> z^{-1}."""
        L = self.level
        table = _power_table(L)
        n = field_degree(L)
        out = [Fraction(0)] * n
        for j, c in enumerate(self.coords):
            if c:
                row = table[(L - j) % L]
                for i, t in enumerate(row):
                    if t:
                        out[i] += c * t
        return CyclotomicNumber(L, out)

    # -- predicates --------------------------------------------------------

    def __bool__(self):
        return any(self.coords)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = CyclotomicNumber.from_rational(other, self.level)
        if not isinstance(other, CyclotomicNumber):
            return NotImplemented
        a, b = self._common(self, other)
        return a.coords == b.coords

    __hash__ = None

    def is_rational(self):
        return not any(self.coords[1:])

    def rational_value(self):
        if not self.is_rational():
            raise ValueError("value is not rational")
        return self.coords[0]

    # -- debug -------------------------------------------------------------

    def to_complex(self):
        """Floating-point embedding at the primitive root; debugging only."""
        z = complex(math.cos(2 * math.pi / self.level), math.sin(2 * math.pi / self.level))
        acc = 0j
        for j in reversed(range(len(self.coords))):
            acc = acc * z + complex(self.coords[j])
        return acc

    def __repr__(self):
        terms = []
        for j, c in enumerate(self.coords):
            if c:
                terms.append(f"{c}*z^{j}" if j else f"{c}")
        body = " + ".join(terms) if terms else "0"
        return f"Cyc[{self.level}]({body})"


def _poly_divmod_frac(num, den):
    num = list(num)
    while den and not den[-1]:
        den = den[:-1]
    dn = len(den) - 1
    inv = 1 / den[-1]
    quot = [Fraction(0)] * max(len(num) - dn, 0)
    for i in range(len(num) - 1, dn - 1, -1):
        c = num[i]
        if c:
            q = c * inv
            quot[i - dn] = q
            for j, y in enumerate(den):
                num[i - dn + j] -= q * y
    while num and not num[-1]:
        num.pop()
    return quot, num


def _poly_mul_frac(a, b):
    if not a or not b:
        return []
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                if y:
                    out[i + j] += x * y
    return out


def _poly_sub(a, b):
    n = max(len(a), len(b))
    return [(a[i] if i < len(a) else Fraction(0)) - (b[i] if i < len(b) else Fraction(0))
            for i in range(n)]


def zeta_power(L, k):
    """Canonical representative of zeta_L^k (level lifted to lcm(4, L))."""
    if L < 1:
        raise ValueError("level must be positive")
    lev = math.lcm(4, L)
    k = (k * (lev // L)) % lev
    row = _power_table(lev)[k]
    return CyclotomicNumber(lev, row)


def zeta_of(r):
    """e^{2*pi*i*r} for rational r, as an exact root of unity."""
    r = Fraction(r)
    b = r.denominator
    return zeta_power(b, r.numerator % b)


def imaginary_unit(level=4):
    """i = zeta_L^{L/4}; requires 4 | level, which all levels satisfy."""
    return zeta_power(level, level // 4)


def field_add(a, b):
    return a + b


def field_mul(a, b):
    return a * b


def field_neg(a):
    return -a


def field_inv(a):
    return a.inverse()


def conj(a):
    return a.conj()
