# -*- coding: utf-8 -*-
"""
Exact numbers
Rationals and elements of the cyclotomic fields Q(zeta_N), stored reduced
modulo the N-th cyclotomic polynomial so that equality is coefficient-wise.
"""

import cmath
from fractions import Fraction
from functools import lru_cache
from math import gcd
from typing import List, Sequence, Tuple, Union

Rational = Fraction

MAX_ORDER = 24


class OrderOutOfRange(ValueError):
    """Root-of-unity order outside 1..MAX_ORDER"""


def _check_order(order: int) -> None:
    if not isinstance(order, int) or order < 1 or order > MAX_ORDER:
        raise OrderOutOfRange(f"cyclotomic order must be in 1..{MAX_ORDER}, got {order!r}")


def _exact_div(num: List[int], den: Sequence[int]) -> List[int]:
    """Divide integer polynomials (low degree first) by a monic divisor"""
    num = list(num)
    m = len(den) - 1
    quotient = [0] * (len(num) - m)
    for i in range(len(quotient) - 1, -1, -1):
        c = num[i + m]
        quotient[i] = c
        if c:
            for j, dj in enumerate(den):
                num[i + j] -= c * dj
    if any(num[:m]):
        raise ArithmeticError("non-exact polynomial division")
    return quotient


@lru_cache(maxsize=None)
def _cyclotomic_int(n: int) -> Tuple[int, ...]:
    poly = [-1] + [0] * (n - 1) + [1]
    for d in range(1, n):
        if n % d == 0:
            poly = _exact_div(poly, _cyclotomic_int(d))
    return tuple(poly)


def cyclotomic_poly(n: int) -> List[Rational]:
    """
    Return the n-th cyclotomic polynomial, lowest degree first.

    Computed by dividing x^n - 1 by Phi_d for every proper divisor d of n.
    """
    if not isinstance(n, int) or n < 1:
        raise ValueError(f"cyclotomic_poly needs n >= 1, got {n!r}")
    return [Fraction(c) for c in _cyclotomic_int(n)]


def euler_phi(n: int) -> int:
    return len(_cyclotomic_int(n)) - 1


@lru_cache(maxsize=None)
def _power_table(order: int) -> Tuple[Tuple[int, ...], ...]:
    """Reduced coordinates of zeta^k for k = 0..order-1"""
    phi_poly = _cyclotomic_int(order)
    deg = len(phi_poly) - 1
    rows = []
    current = [1] + [0] * (deg - 1)
    for _ in range(order):
        rows.append(tuple(current))
        top = current[-1]
        shifted = [0] + current[:-1]
        if top:
            shifted = [shifted[j] - top * phi_poly[j] for j in range(deg)]
        current = shifted
    return tuple(rows)


Scalar = Union[int, Fraction, 'Cyclotomic']


class Cyclotomic:
    """
    Element of Q(zeta_N) in the power basis 1, zeta, ..., zeta^(phi(N)-1).

    Values are immutable. Elements of different orders combine by lifting both
    to the lcm order, which must stay within MAX_ORDER.
    """

    __slots__ = ('order', 'coeffs')

    # equal elements may live in different orders, so no hash
    __hash__ = None

    def __init__(self, order: int, coeffs: Sequence = ()):
        _check_order(order)
        table = _power_table(order)
        acc = [Fraction(0)] * len(table[0])
        for k, c in enumerate(coeffs):
            c = Fraction(c)
            if c:
                for j, r in enumerate(table[k % order]):
                    if r:
                        acc[j] += c * r
        self.order = order
        self.coeffs = tuple(acc)

    @classmethod
    def _make(cls, order: int, coeffs: Tuple[Fraction, ...]) -> 'Cyclotomic':
        obj = object.__new__(cls)
        obj.order = order
        obj.coeffs = coeffs
        return obj

    @classmethod
    def rational(cls, value, order: int = 1) -> 'Cyclotomic':
        _check_order(order)
        deg = euler_phi(order)
        return cls._make(order, (Fraction(value),) + (Fraction(0),) * (deg - 1))

    @classmethod
    def zeta(cls, order: int, k: int = 1) -> 'Cyclotomic':
        _check_order(order)
        return cls._make(order, tuple(Fraction(r) for r in _power_table(order)[k % order]))

    # -- structure ---------------------------------------------------------

    def is_rational(self) -> bool:
        return not any(self.coeffs[1:])

    def to_fraction(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self} is not rational")
        return self.coeffs[0]

    def lift(self, order: int) -> 'Cyclotomic':
        """Re-express in Q(zeta_order); order must be a multiple of self.order"""
        if order == self.order:
            return self
        if order % self.order:
            raise ValueError(f"cannot lift order {self.order} to {order}")
        if self.is_rational():
            return Cyclotomic.rational(self.coeffs[0], order)
        step = order // self.order
        spread = [Fraction(0)] * ((len(self.coeffs) - 1) * step + 1)
        for k, c in enumerate(self.coeffs):
            spread[k * step] = c
        return Cyclotomic(order, spread)

    def _align(self, other: 'Cyclotomic') -> Tuple['Cyclotomic', 'Cyclotomic']:
        if self.order == other.order:
            return self, other
        if other.is_rational():
            return self, Cyclotomic.rational(other.coeffs[0], self.order)
        if self.is_rational():
            return Cyclotomic.rational(self.coeffs[0], other.order), other
        order = self.order * other.order // gcd(self.order, other.order)
        _check_order(order)
        return self.lift(order), other.lift(order)

    @staticmethod
    def _coerce(value) -> 'Cyclotomic':
        if isinstance(value, Cyclotomic):
            return value
        if isinstance(value, (int, Fraction)):
            return Cyclotomic.rational(value)
        return NotImplemented

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other):
        other = Cyclotomic._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        a, b = self._align(other)
        return Cyclotomic._make(a.order, tuple(x + y for x, y in zip(a.coeffs, b.coeffs)))

    __radd__ = __add__

    def __neg__(self):
        return Cyclotomic._make(self.order, tuple(-c for c in self.coeffs))

    def __sub__(self, other):
        other = Cyclotomic._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = Cyclotomic._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def _scale(self, factor: Fraction) -> 'Cyclotomic':
        return Cyclotomic._make(self.order, tuple(c * factor for c in self.coeffs))

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self._scale(Fraction(other))
        if not isinstance(other, Cyclotomic):
            return NotImplemented
        if other.is_rational():
            return self._scale(other.coeffs[0])
        if self.is_rational():
            return other._scale(self.coeffs[0])
        a, b = self._align(other)
        order = a.order
        table = _power_table(order)
        deg = len(table[0])
        prod = [Fraction(0)] * (2 * deg - 1)
        for i, ai in enumerate(a.coeffs):
            if ai:
                for j, bj in enumerate(b.coeffs):
                    if bj:
                        prod[i + j] += ai * bj
        acc = prod[:deg]
        for k in range(deg, 2 * deg - 1):
            c = prod[k]
            if c:
                for j, r in enumerate(table[k % order]):
                    if r:
                        acc[j] += c * r
        return Cyclotomic._make(order, tuple(acc))

    __rmul__ = __mul__

    def inverse(self) -> 'Cyclotomic':
        """Multiplicative inverse via the product of the other Galois conjugates"""
        if not self:
            raise ZeroDivisionError("inverse of zero cyclotomic")
        if self.is_rational():
            return Cyclotomic.rational(1 / self.coeffs[0], self.order)
        partial = Cyclotomic.rational(1, self.order)
        for s in range(2, self.order):
            if gcd(s, self.order) == 1:
                partial = partial * self.galois_map(s)
        norm = self * partial
        if not norm.is_rational():
            raise ArithmeticError("field norm did not reduce to a rational")
        return partial._scale(1 / norm.coeffs[0])

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                raise ZeroDivisionError("division by zero")
            return self._scale(1 / Fraction(other))
        if not isinstance(other, Cyclotomic):
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = Cyclotomic._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other * self.inverse()

    def __pow__(self, exponent: int):
        if not isinstance(exponent, int):
            return NotImplemented
        base = self if exponent >= 0 else self.inverse()
        result = Cyclotomic.rational(1, self.order)
        e = abs(exponent)
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    # -- Galois action and evaluation --------------------------------------

    def galois_map(self, s: int) -> 'Cyclotomic':
        """Substitute zeta -> zeta^s in the reduced representative and re-reduce"""
        spread = [Fraction(0)] * self.order
        for k, c in enumerate(self.coeffs):
            if c:
                spread[(k * s) % self.order] += c
        return Cyclotomic(self.order, spread)

    def conjugate(self) -> 'Cyclotomic':
        return self.galois_map(self.order - 1)

    def to_complex(self) -> complex:
        root = cmath.exp(2j * cmath.pi / self.order)
        return sum((float(c) * root ** k for k, c in enumerate(self.coeffs) if c), 0j)

    __complex__ = to_complex

    # -- comparison and display --------------------------------------------

    def __bool__(self) -> bool:
        return any(self.coeffs)

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            return self.is_rational() and self.coeffs[0] == other
        if not isinstance(other, Cyclotomic):
            return NotImplemented
        try:
            a, b = self._align(other)
        except OrderOutOfRange:
            return False
        return a.coeffs == b.coeffs

    def __repr__(self) -> str:
        return f"Cyclotomic({self.order}, {[str(c) for c in self.coeffs]})"

    def __str__(self) -> str:
        parts = []
        for k, c in enumerate(self.coeffs):
            if not c:
                continue
            if k == 0:
                parts.append(str(c))
                continue
            power = 'j' if k == 1 else f'j^{k}'
            if c == 1:
                parts.append(power)
            elif c == -1:
                parts.append(f'-{power}')
            else:
                parts.append(f'{c}*{power}')
        if not parts:
            return '0'
        text = parts[0]
        for part in parts[1:]:
            text += f' - {part[1:]}' if part.startswith('-') else f' + {part}'
        return text


def as_cyclotomic(value) -> Cyclotomic:
    result = Cyclotomic._coerce(value)
    if result is NotImplemented:
        raise TypeError(f"cannot interpret {value!r} as an exact number")
    return result


def zeta(n: int, k: int = 1) -> Cyclotomic:
    """zeta_n^k reduced modulo Phi_n; zeta(n, 0) is the identity"""
    return Cyclotomic.zeta(n, k)


def galois_map(x: Cyclotomic, s: int) -> Cyclotomic:
    return x.galois_map(s)


def to_complex(x) -> complex:
    return as_cyclotomic(x).to_complex()


def imag_unit() -> Cyclotomic:
    return zeta(4, 1)


def sqrt3() -> Cyclotomic:
    """sqrt(3) = zeta_12 + zeta_12^11 = 2 cos(pi/6)"""
    return zeta(12, 1) + zeta(12, 11)
