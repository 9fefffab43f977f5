#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Tests for the C_N algebras: multiplication, conjugations, norms and norm forms
"""

import random
from fractions import Fraction

import pytest

from core.cn_algebra import (CnNumber, basis_norm_check, basis_norm_value, cn_inverse, cn_mul, cn_pow,
                             conjugate, expand_norm_form, factorization_check, is_nonsingular, norm,
                             norm_multiplicativity_check, printed_forms_report, printed_matrix_report,
                             regular_rep, regular_rep_det, regular_rep_det_check, reverse_signs,
                             unit_group_check)
from core.exactnum import OrderOutOfRange
from core.polyring import MultiPoly, StructureMismatch, parse_poly


def test_basis_powers_wrap_with_sign():
    q = CnNumber.basis(3, 1, 1)
    assert q ** 3 == CnNumber.one(3, 1)
    q4 = CnNumber.basis(4, -1, 1)
    assert q4 ** 4 == -CnNumber.one(4, -1)
    assert cn_mul(CnNumber.basis(4, -1, 3), CnNumber.basis(4, -1, 2)) == -CnNumber.basis(4, -1, 1)


def test_cubic_norm_form():
    form = expand_norm_form(3, 1).form
    assert form == parse_poly('x0^3 + x1^3 + x2^3 - 3*x0*x1*x2', 3)
    assert norm(CnNumber(3, 1, [1, 1, 0])) == 2
    assert norm(CnNumber(3, 1, [1, 2, 3])) == 18


def test_complex_numbers_are_the_binary_case():
    x0, x1 = MultiPoly.variables(2)
    assert expand_norm_form(2, -1).form == x0 ** 2 + x1 ** 2
    z = CnNumber(2, -1, [3, 4])
    assert norm(z) == 25
    assert conjugate(z, 1) == CnNumber(2, -1, [3, -4])
    assert cn_mul(CnNumber.basis(2, -1, 1), CnNumber.basis(2, -1, 1)) == -CnNumber.one(2, -1)


@pytest.mark.parametrize('order,sign', [(2, -1), (3, 1), (3, -1), (4, 1), (4, -1), (6, 1), (6, -1)])
def test_norm_forms_are_homogeneous(order, sign):
    assert expand_norm_form(order, sign).form.is_homogeneous(order)


@pytest.mark.parametrize('order,sign', [(3, 1), (4, 1), (4, -1), (5, -1), (6, 1)])
def test_basis_vector_norms(order, sign):
    form = expand_norm_form(order, sign)
    for k in range(order):
        unit = [1 if m == k else 0 for m in range(order)]
        assert form.evaluate(unit) == basis_norm_value(order, sign, k)
    check = basis_norm_check(order, sign)
    assert check.passed
    assert check.residual == 0.0


def test_basis_norm_sign_for_even_order():
    # norm(q) in R[q]/(q^4 - 1) is -1, not +1
    assert basis_norm_value(4, 1, 1) == -1
    assert basis_norm_value(3, -1, 1) == -1
    assert basis_norm_value(3, 1, 2) == 1


def test_conjugation_identity_and_range():
    z = CnNumber(3, 1, [1, 2, 3])
    assert conjugate(z, 0) is z
    with pytest.raises(ValueError):
        conjugate(z, 3)


def test_inverse():
    z = CnNumber(3, 1, [1, 1, 0])
    assert cn_mul(z, cn_inverse(z)) == CnNumber.one(3, 1)
    assert cn_pow(z, -2) == cn_pow(cn_inverse(z), 2)
    w = CnNumber(3, 1, [2, 1, 0]).promote('cyclotomic')
    product = cn_mul(w, cn_inverse(w))
    assert all(c == v for c, v in zip(product.coeffs, [1, 0, 0]))
    singular = CnNumber(3, 1, [1, -1, 0])
    assert not is_nonsingular(singular)
    with pytest.raises(ZeroDivisionError):
        cn_inverse(singular)


def test_structure_errors():
    with pytest.raises(StructureMismatch):
        CnNumber(3, 1, [1, 2])
    with pytest.raises(OrderOutOfRange):
        CnNumber(1, 1, [1])
    with pytest.raises(ValueError):
        CnNumber(3, 2, [1, 2, 3])
    with pytest.raises(StructureMismatch):
        CnNumber(3, 1, [1, 0, 0]) * CnNumber(3, -1, [1, 0, 0])


def test_parse_and_text_form():
    z = CnNumber.parse('N=3,eps=+1:[1, 1/2, 0]')
    assert z.coeffs == (1, Fraction(1, 2), 0)
    assert str(z) == 'N=3,eps=+1:[1, 1/2, 0]'
    assert z.case == 'A'
    w = CnNumber.parse('N=4,eps=-1:[0.5, 0, 0, 1]')
    assert w.ring.name == 'rational'
    assert w.coeffs[0] == Fraction(1, 2)
    assert w.case == 'B'
    with pytest.raises(ValueError):
        CnNumber.parse('N=3:[1, 2, 3]')


def test_float_norm():
    z = CnNumber(3, 1, [1.0, 0.5, 0.25])
    assert norm(z) == pytest.approx(0.765625)


def test_regular_rep_rows():
    z = CnNumber(3, 1, [1, 2, 3])
    rows = [[int(v) for v in row] for row in regular_rep(z)]
    assert rows == [[1, 2, 3], [3, 1, 2], [2, 3, 1]]
    assert regular_rep_det(z) == 18
    b = CnNumber(3, -1, [1, 2, 3])
    assert [int(v) for v in regular_rep(b)[1]] == [-3, 1, 2]


def test_reverse_signs():
    assert reverse_signs(CnNumber(3, 1, [1, 2, 3])) == CnNumber(3, 1, [1, -2, -3])


@pytest.mark.parametrize('order,sign', [(3, 1), (4, 1), (4, -1), (6, 1)])
def test_factorization_claims(order, sign):
    assert factorization_check(order, sign).passed


def test_factorization_without_claim():
    with pytest.raises(ValueError):
        factorization_check(5, 1)


@pytest.mark.parametrize('order,sign', [(3, 1), (4, 1), (4, -1)])
def test_regular_rep_determinant_is_norm_form(order, sign):
    assert regular_rep_det_check(order, sign).passed


@pytest.mark.parametrize('order,sign', [(3, 1), (4, 1), (4, -1)])
def test_printed_low_order_forms(order, sign):
    checks = {c.name.rsplit('.', 1)[1]: c for c in printed_forms_report(order, sign)}
    assert checks['norm'].passed
    assert not checks['norm'].informational


def test_printed_sextic_forms_are_informational():
    checks = printed_forms_report(6, 1) + printed_forms_report(6, -1)
    assert checks
    assert all(c.informational for c in checks)


def test_printed_matrices():
    surface, circulant = printed_matrix_report()
    assert surface.informational
    assert circulant.passed


@pytest.mark.parametrize('order,sign', [(2, -1), (3, 1), (4, 1), (4, -1), (6, 1), (6, -1)])
def test_norm_multiplicativity(order, sign):
    rng = random.Random(42)
    assert norm_multiplicativity_check(order, sign, 20, rng).passed


@pytest.mark.parametrize('order,sign', [(3, 1), (4, -1)])
def test_unit_group(order, sign):
    assert unit_group_check(order, sign, 5, random.Random(7)).passed
