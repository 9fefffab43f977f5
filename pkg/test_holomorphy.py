#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Tests for conjugate derivatives, Cauchy-Riemann chains and N-ary Laplace operators
"""

from fractions import Fraction

import pytest

from calculus.holomorphy import (ComponentFunction, apply_operator, conj_derivative, cr_chains,
                                 cr_system_check, derivative_operator_matrix,
                                 factorization_laplacian_check, factorized_laplacian,
                                 holomorphic_power_checks, inverse_parity_check, nary_laplacian,
                                 power_function, product_rule_check, reconstruct_coordinate_derivative)
from core.cn_algebra import expand_norm_form
from core.polyring import MultiPoly, StructureMismatch


def test_operator_table():
    table = derivative_operator_matrix(3, 1)
    assert table.scaled_rows()[0] == ['1', 'q^2', 'q']
    binary = derivative_operator_matrix(2, -1)
    assert binary.scaled_rows() == [['1', '-q'], ['1', 'q']]


def test_square_components():
    x0, x1, x2 = MultiPoly.variables(3)
    f = power_function(3, 1, 2)
    assert f.components == (x0 ** 2 + 2 * x1 * x2, 2 * x0 * x1 + x2 ** 2, x1 ** 2 + 2 * x0 * x2)


def test_cr_chains_carry_the_sign():
    chains = cr_chains(3, -1)
    assert chains[0] == [(0, 0, 1), (1, 1, 1), (2, 2, 1)]
    assert chains[2] == [(0, 2, 1), (1, 0, -1), (2, 1, -1)]


@pytest.mark.parametrize('order,sign', [(2, -1), (3, 1), (3, -1), (4, 1), (4, -1)])
def test_powers_are_holomorphic(order, sign):
    for k in range(1, 5):
        f = power_function(order, sign, k)
        assert all(c.passed for c in cr_system_check(f))
        for s in range(1, order):
            assert conj_derivative(f, s).is_zero()


def test_derivative_of_power():
    f = power_function(3, 1, 4)
    derivative = conj_derivative(f, 0)
    expected = ComponentFunction.from_number(power_function(3, 1, 3).as_number() * Fraction(4))
    assert derivative == expected


def test_non_holomorphic_function_is_detected():
    x0, x1, x2 = MultiPoly.variables(3)
    zero = MultiPoly.zero(3)
    f = ComponentFunction(3, 1, (x0 * x1, zero, zero))
    assert not conj_derivative(f, 1).is_zero()
    assert any(not c.passed for c in cr_system_check(f))


def test_higher_holomorphy_types():
    f = power_function(4, 1, 3)
    for kind in (1, 2, 3):
        assert all(c.passed for c in cr_system_check(f, kind))
    with pytest.raises(ValueError):
        cr_system_check(f, 4)


def test_inverse_parities():
    x0, x1, x2 = MultiPoly.variables(3)
    f = ComponentFunction(3, -1, (x0 * x2 ** 2, x1 ** 3, x0 + x2))
    for r in range(3):
        rebuilt = reconstruct_coordinate_derivative(f, r)
        assert rebuilt.components == tuple(c.partial_derivative(r) for c in f.components)
    assert inverse_parity_check(4, -1).passed


def test_index_and_structure_errors():
    f = power_function(3, 1, 2)
    with pytest.raises(IndexError):
        conj_derivative(f, 3)
    with pytest.raises(StructureMismatch):
        ComponentFunction(3, 1, tuple(MultiPoly.variables(3)[:2]))
    with pytest.raises(ValueError):
        power_function(3, 1, -1)


def test_laplacian_is_the_norm_form():
    assert nary_laplacian(3, 1) == expand_norm_form(3, 1).form
    with pytest.raises(ValueError):
        nary_laplacian(7, 1)


@pytest.mark.parametrize('order,sign', [(3, 1), (4, 1), (4, -1)])
def test_laplacian_annihilates_holomorphic_components(order, sign):
    laplacian = nary_laplacian(order, sign)
    for component in power_function(order, sign, order + 2).components:
        assert not apply_operator(laplacian, component)


def test_laplacian_does_not_annihilate_everything():
    x0, x1, x2 = MultiPoly.variables(3)
    assert apply_operator(nary_laplacian(3, 1), x0 ** 3) == 6


def test_operator_stops_once_a_term_vanishes(monkeypatch):
    x0, x1, x2 = MultiPoly.variables(3)
    calls = []
    original = MultiPoly.partial_derivative

    def counting(self, var):
        calls.append(var)
        return original(self, var)

    monkeypatch.setattr(MultiPoly, 'partial_derivative', counting)
    assert not apply_operator(x0 * x1 * x2, x1)
    assert calls == [0]
    assert apply_operator(x0 * x1 * x2, x0 * x1 * x2) == 1


@pytest.mark.parametrize('order,sign', [(2, -1), (3, 1), (4, 1), (4, -1)])
def test_factorized_laplacian(order, sign):
    assert factorized_laplacian(order, sign) == nary_laplacian(order, sign)
    assert factorization_laplacian_check(order, sign).passed


def test_battery_helpers():
    checks = holomorphic_power_checks(3, 1, 3)
    assert all(c.passed for c in checks)
    assert product_rule_check(3, 1).passed
