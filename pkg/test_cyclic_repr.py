#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Tests for character tables and the C_3 representations
"""

import pytest

from core.cyclic_repr import (char_table, column_orthogonality_check, dagger, dft_conjugation,
                              fourier_matrix, hermitian_pairing, orthogonality_check,
                              vector_rep_checks, xhat, xhat_check)
from core.exactnum import OrderOutOfRange, zeta
from core.polyring import exact_equal, exact_identity, parse_poly


@pytest.mark.parametrize('order', range(1, 13))
def test_character_orthogonality(order):
    table = char_table(order)
    assert orthogonality_check(table).passed
    assert column_orthogonality_check(table).passed


def test_ternary_character_table():
    table = char_table(3)
    assert table.row(1) == [1, zeta(3), zeta(3, 2)]
    assert table.row(2) == [1, zeta(3, 2), zeta(3)]
    assert hermitian_pairing(table.row(1), table.row(1)) == 1
    assert hermitian_pairing(table.row(1), table.row(2)) == 0
    assert len(table.render()) == 4


def test_char_table_range():
    with pytest.raises(OrderOutOfRange):
        char_table(0)
    with pytest.raises(OrderOutOfRange):
        char_table(25)


def test_vector_representation():
    checks = vector_rep_checks()
    assert all(c.passed for c in checks), [c.name for c in checks if not c.passed]


def test_xhat_determinant_is_cubic_form():
    _, det = xhat()
    assert det == parse_poly('x0^3 + x1^3 + x2^3 - 3*x0*x1*x2', 3)
    assert xhat_check().passed


def test_fourier_matrix_is_unitary_up_to_scale():
    s = fourier_matrix(3)
    assert exact_equal(s @ dagger(s), exact_identity(3) * 3)
    assert all(c.passed for c in dft_conjugation())
