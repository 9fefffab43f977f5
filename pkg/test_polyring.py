#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Tests for the sparse polynomial ring and polynomial matrices
"""

from fractions import Fraction

import numpy as np
import pytest

from core.exactnum import zeta
from core.polyring import (MultiPoly, PolyMatrix, StructureMismatch, cofactor_det, exact_matrix,
                           matrix_power, parse_poly, poly_det, render_poly)


def test_canonical_form_and_equality():
    x0, x1 = MultiPoly.variables(2)
    assert (x0 + x1) ** 2 == x0 ** 2 + 2 * x0 * x1 + x1 ** 2
    assert x0 - x0 == 0
    assert not (x0 - x0)
    assert (x0 * 3).coefficient((1, 0)) == 3


def test_rendering_order():
    x0, x1, x2 = MultiPoly.variables(3)
    cubic = x0 ** 3 + x1 ** 3 + x2 ** 3 - 3 * x0 * x1 * x2
    assert render_poly(cubic) == 'x0^3 - 3*x0*x1*x2 + x1^3 + x2^3'
    assert render_poly(MultiPoly.zero(3)) == '0'
    assert render_poly(x2 * zeta(3, 2)) == '(-1 - j)*x2'


def test_parse_reads_rendering_grammar():
    p = parse_poly('3*x0^2*x1 + (j^2)*x2 - 1/2', 3, order=3)
    x0, x1, x2 = MultiPoly.variables(3)
    assert p == 3 * x0 ** 2 * x1 + x2 * zeta(3, 2) - Fraction(1, 2)
    assert parse_poly(render_poly(p), 3, order=3) == p
    assert parse_poly('1/2', 1) == MultiPoly.constant(1, Fraction(1, 2))
    x = MultiPoly.variables(1)[0]
    assert (4 * x) / 2 == 2 * x


def test_parse_errors():
    with pytest.raises(ValueError):
        parse_poly('x0 +', 2)
    with pytest.raises(ValueError):
        parse_poly('x0 / x1', 2)
    with pytest.raises(ValueError):
        parse_poly('x0 $ x1', 2)


def test_partial_derivative_and_substitution():
    x0, x1 = MultiPoly.variables(2)
    p = x0 ** 3 * x1 + 5 * x1 ** 2
    assert p.partial_derivative(0) == 3 * x0 ** 2 * x1
    assert p.partial_derivative(1) == x0 ** 3 + 10 * x1
    with pytest.raises(IndexError):
        p.partial_derivative(2)
    y = MultiPoly.variables(1)[0]
    assert p.substitute([y, y]) == y ** 4 + 5 * y ** 2


def test_evaluate_and_lambdify():
    x0, x1, x2 = MultiPoly.variables(3)
    cubic = x0 ** 3 + x1 ** 3 + x2 ** 3 - 3 * x0 * x1 * x2
    assert cubic.evaluate([1, 2, 3]) == 18
    f = cubic.lambdify()
    grid = np.array([[1.0, 2.0, 3.0], [0.5, 0.0, 0.0]])
    assert list(f(grid)) == pytest.approx([18.0, 0.125])
    with pytest.raises(StructureMismatch):
        cubic.evaluate([1, 2])


def test_homogeneity():
    x0, x1 = MultiPoly.variables(2)
    assert (x0 ** 2 + x0 * x1).is_homogeneous(2)
    assert not (x0 ** 2 + x1).is_homogeneous()


def test_poly_matrix_products():
    x0, x1 = MultiPoly.variables(2)
    m = PolyMatrix([[x0, x1], [x1, x0]])
    squared = matrix_power(m, 2)
    assert squared == m @ m
    assert squared[0, 0] == x0 ** 2 + x1 ** 2
    assert poly_det(m) == x0 ** 2 - x1 ** 2
    assert PolyMatrix.identity(2, 2).scale(x0).scalar_part() == x0
    assert m.scalar_part() is None


def test_cofactor_det_exact():
    rows = exact_matrix([[2, -1, 0], [-1, 2, -1], [0, -1, 2]])
    assert cofactor_det(rows, 0) == 4
    with pytest.raises(ValueError):
        cofactor_det(np.eye(9, dtype=object), 0)
