#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Tests for exact rationals and cyclotomic numbers
"""

import cmath
from fractions import Fraction

import pytest

from core.exactnum import (Cyclotomic, OrderOutOfRange, cyclotomic_poly, euler_phi, galois_map,
                           imag_unit, sqrt3, to_complex, zeta)


def test_cyclotomic_polynomials():
    assert cyclotomic_poly(1) == [-1, 1]
    assert cyclotomic_poly(3) == [1, 1, 1]
    assert cyclotomic_poly(6) == [1, -1, 1]
    assert cyclotomic_poly(12) == [1, 0, -1, 0, 1]
    assert euler_phi(12) == 4
    assert euler_phi(7) == 6


def test_cyclotomic_polynomials_against_sympy():
    sympy = pytest.importorskip('sympy')
    x = sympy.Symbol('x')
    for n in range(1, 25):
        expected = sympy.Poly(sympy.cyclotomic_poly(n, x), x).all_coeffs()[::-1]
        assert cyclotomic_poly(n) == [Fraction(int(c)) for c in expected]


def test_roots_of_unity():
    j = zeta(3)
    assert j ** 3 == 1
    assert 1 + j + j * j == 0
    assert str(zeta(3, 2)) == '-1 - j'
    assert imag_unit() ** 2 == -1
    assert sqrt3() * sqrt3() == 3
    assert zeta(6, 6) == 1


def test_mixed_orders_lift_to_lcm():
    assert zeta(3) * zeta(4) == zeta(12, 7)
    assert zeta(2) == -1
    assert (zeta(3) + zeta(4)).order == 12


def test_order_out_of_range():
    with pytest.raises(OrderOutOfRange):
        zeta(25)
    with pytest.raises(OrderOutOfRange):
        zeta(5) * zeta(7)
    assert (zeta(5) == zeta(7)) is False


def test_inverse_and_division():
    x = 1 + zeta(5)
    assert x * x.inverse() == 1
    assert zeta(7) / zeta(7) == 1
    assert (Cyclotomic.rational(Fraction(3, 4)) / 3) == Fraction(1, 4)
    two = Cyclotomic.rational(2)
    assert two.inverse() == Fraction(1, 2)
    assert two * two.inverse() == 1
    assert 1 / Cyclotomic.rational(Fraction(-3, 5), 4) == Fraction(-5, 3)
    with pytest.raises(ZeroDivisionError):
        Cyclotomic.rational(0).inverse()


def test_galois_action():
    assert galois_map(zeta(5), 2) == zeta(5, 2)
    assert zeta(8).conjugate() == zeta(8, 7)
    x = 2 + 3 * zeta(12)
    assert x.conjugate().to_complex() == pytest.approx(x.to_complex().conjugate())


def test_to_complex():
    assert to_complex(zeta(3)) == pytest.approx(cmath.exp(2j * cmath.pi / 3))
    assert to_complex(Fraction(1, 2)) == pytest.approx(0.5)
    assert complex(sqrt3()) == pytest.approx(3 ** 0.5)


def test_rational_views():
    assert Cyclotomic.rational(5).is_rational()
    assert Cyclotomic.rational(5).to_fraction() == 5
    with pytest.raises(ValueError):
        zeta(3).to_fraction()
