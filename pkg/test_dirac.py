#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Tests for the Pauli, gamma, ternary and quaternary matrix families
"""

import random

import pytest

from calculus.dirac import (dirac_report_checks, dirac_square_checks, gamma_checks, gamma_metric,
                            pauli_checks, pauli_family, quaternary_checks, quaternary_eta,
                            shift_diagonal_matrix, symmetrized_product, quaternary_q_family,
                            ternary_dirac_cube, ternary_eta, ternary_eta_checks, ternary_q_family,
                            ternary_structure_checks)
from core.exactnum import zeta
from core.polyring import exact_equal, exact_identity, exact_matrix


def _by_name(checks):
    return {c.name: c for c in checks}


def test_pauli_algebra():
    assert all(c.passed for c in pauli_checks())
    assert all(c.passed for c in dirac_square_checks())


def test_gamma_metric_is_diagonal():
    metric = gamma_metric()
    assert [metric[m][m] for m in range(4)] == [1, 1, 1, 1]
    checks = _by_name(gamma_checks())
    assert checks['dirac.gamma_anticommute'].passed
    assert checks['dirac.gamma_signature'].informational


def test_family_shape_is_enforced():
    family = pauli_family()
    with pytest.raises(ValueError):
        family.add('too_big', exact_identity(3))


def test_plain_shift():
    assert exact_equal(shift_diagonal_matrix(3, 1), exact_matrix([[0, 1, 0], [0, 0, 1], [1, 0, 0]]))
    assert exact_equal(shift_diagonal_matrix(3, 1, inverse=True), exact_matrix([[0, 0, 1], [1, 0, 0], [0, 1, 0]]))


def test_ternary_matrices_cube_to_identity():
    q = ternary_q_family()
    for m in q.members.values():
        assert exact_equal(m @ m @ m, exact_identity(3))
    assert all(c.passed for c in ternary_structure_checks())


def test_ternary_eta_values():
    right_to_left = ternary_eta(reverse=True)
    assert right_to_left.entries['111'] == 1
    assert right_to_left.entries['123'] == zeta(3)
    assert right_to_left.entries['321'] == zeta(3, 2)
    assert right_to_left.entries['112'] == 0
    assert right_to_left.entries['213'] == zeta(3, 2)
    assert ternary_eta().entries['123'] == zeta(3, 2)
    assert all(v is not None for v in right_to_left.entries.values())
    assert set(right_to_left.nonzero_entries()) == {'111', '222', '333', '123', '231', '312', '321', '213', '132'}


def test_ternary_eta_against_printed_table():
    checks = _by_name(ternary_eta_checks())
    assert checks['dirac.ternary_eta.right_to_left'].passed
    assert checks['dirac.ternary_eta.left_to_right'].informational
    assert checks['dirac.ternary_eta_cyclic.left_to_right'].passed
    assert checks['dirac.ternary_eta_cyclic.right_to_left'].passed


def test_ternary_operator_cubes_to_the_norm_form():
    assert all(c.passed for c in ternary_dirac_cube())


def test_quaternary_diagonal_eta():
    eta = quaternary_eta()
    assert [eta.entries[k] for k in ('1111', '2222', '3333', '4444')] == [24, -24, 24, -24]


def test_symmetrizer_ignores_argument_order():
    family = quaternary_q_family()
    assert exact_equal(symmetrized_product(family, ['q1', 'q2', 'q2', 'q3']),
                       symmetrized_product(family, ['q3', 'q2', 'q1', 'q2']))


def test_quaternary_checks():
    checks = quaternary_checks(random.Random(42))
    failing = [c.name for c in checks if not c.passed and not c.informational]
    assert not failing
    assert _by_name(checks)['dirac.quaternary_fourth_power'].passed


def test_report_dispatch():
    assert dirac_report_checks(2, random.Random(1))
    with pytest.raises(ValueError):
        dirac_report_checks(5, random.Random(1))
