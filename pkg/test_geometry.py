#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Tests for the cubic surface, the ternary Pythagoras identity and the integer search
"""

import math
import time

import pytest
import sympy

from numerics.eulermap import DegenerateInput
from numerics.geometry import (MAX_SEARCH_LIMIT, CubicQuadruple, closed_form_area, closed_form_j012, cubic_form,
                               cubic_value, diophantine_search, diophantine_table_check, jacobians,
                               pythagoras_check, surface_point, tetrahedron_check, tetrahedron_checks,
                               tangent_vectors, tetrahedron_faces, trisectrice_radius)

ROOT3 = math.sqrt(3.0)


def test_surface_points_lie_on_the_surface():
    for theta in (0.0, 1.0, 4.0):
        p = surface_point(2.0, 1.5, theta)
        assert sum(p.x) == pytest.approx(1.5)
        assert cubic_form(p.x) == pytest.approx(8.0)
        assert p.a * trisectrice_radius(p) ** 2 == pytest.approx(8.0)
    with pytest.raises(ValueError):
        surface_point(1.0, -1.0, 0.0)


def test_tangent_vectors_match_finite_differences():
    h = 1e-5
    p = surface_point(2.0, 1.5, 1.0)
    along_a, along_theta = tangent_vectors(p)
    a_plus, a_minus = surface_point(2.0, 1.5 + h, 1.0), surface_point(2.0, 1.5 - h, 1.0)
    t_plus, t_minus = surface_point(2.0, 1.5, 1.0 + h), surface_point(2.0, 1.5, 1.0 - h)
    for i in range(3):
        assert along_a[i] == pytest.approx((a_plus.x[i] - a_minus.x[i]) / (2 * h), abs=1e-6)
        assert along_theta[i] == pytest.approx((t_plus.x[i] - t_minus.x[i]) / (2 * h), abs=1e-6)
    assert sum(along_a) == pytest.approx(1.0)
    assert sum(along_theta) == pytest.approx(0.0, abs=1e-12)


def test_jacobians_at_reference_point():
    j01, j12, j20, j012 = jacobians(surface_point(1.0, 1.0, 0.0))
    assert (j01, j12, j20) == pytest.approx((2 * ROOT3 / 9, -ROOT3 / 9, 2 * ROOT3 / 9))
    assert j012 ** 3 == pytest.approx(1 / (3 * ROOT3))
    assert cubic_form((j01, j12, j20)) == pytest.approx(closed_form_area(1.0, 1.0))


@pytest.mark.parametrize('rho', [1.0, 2.0])
def test_pythagoras_identity_on_grid(rho):
    checks = pythagoras_check(rho, 8)
    graded = [c for c in checks if not c.informational]
    assert all(c.passed for c in graded), [(c.name, c.residual) for c in graded]
    printed = {c.name: c for c in checks}[f'geometry.pythagoras_j012_printed[rho={rho:g}]']
    assert printed.informational
    assert not printed.passed


def test_j012_closed_form_away_from_a_equals_rho():
    for rho, a in ((1.0, 2.0), (2.0, 1.0), (2.0, 3.0)):
        j012 = jacobians(surface_point(rho, a, 0.7))[3]
        assert j012 == pytest.approx(closed_form_j012(rho, a))
        assert j012 ** 3 / closed_form_area(rho, a) == pytest.approx((rho / a) ** 3)


def test_tetrahedron_identity():
    checks = {c.name: c for c in tetrahedron_checks()}
    assert checks['geometry.tetrahedron[surface_tangents]'].passed
    assert checks['geometry.tetrahedron[coordinate_pair]'].passed
    unconstrained = checks['geometry.tetrahedron[unconstrained]']
    assert unconstrained.informational
    assert not unconstrained.passed


def test_tetrahedron_faces_when_s_d_vanishes():
    faces = tetrahedron_faces((1, 0, 0), (0, 1, 1))
    assert faces.s_d == pytest.approx(0.0)
    assert tetrahedron_check((1, 0, 0), (0, 1, 1)).passed
    with pytest.raises(DegenerateInput):
        tetrahedron_faces((1, 2, 3), (2, 4, 6))


def test_cubic_value():
    assert cubic_value(2, 3, 3) == 8
    assert cubic_value(5, 25, 42) == 42 ** 3
    assert cubic_value(7, 7, 7) == 0


def test_quadruple_validation():
    q = CubicQuadruple(4, 6, 6, 4)
    assert not q.primitive
    assert q.to_dict() == {'a': 4, 'b': 6, 'c': 6, 'd': 4, 'primitive': False}
    with pytest.raises(ValueError):
        CubicQuadruple(1, 2, 3, 4)
    with pytest.raises(ValueError):
        CubicQuadruple(3, 2, 3, 2)


def test_search_finds_small_solutions():
    found = [(q.a, q.b, q.c, q.d) for q in diophantine_search(40)]
    assert (2, 3, 3, 2) in found
    assert (6, 9, 12, 9) in found
    assert found == sorted(found, key=lambda r: (r[2], r[1], r[0]))


def test_search_limits():
    with pytest.raises(ValueError):
        diophantine_search(0)
    with pytest.raises(ValueError):
        diophantine_search(MAX_SEARCH_LIMIT + 1)


def test_search_matches_exhaustive_enumeration():
    expected = []
    for a in range(1, 31):
        for b in range(a, 31):
            for c in range(b, 31):
                value = cubic_value(a, b, c)
                root, exact = sympy.integer_nthroot(value, 3)
                if value > 0 and exact:
                    expected.append((a, b, c, int(root)))
    expected.sort(key=lambda r: (r[2], r[1], r[0]))
    assert [(q.a, q.b, q.c, q.d) for q in diophantine_search(30)] == expected


def test_search_at_moderate_limit_is_quick():
    start = time.perf_counter()
    found = diophantine_search(300)
    assert time.perf_counter() - start < 30.0
    assert all(q.c <= 300 for q in found)
    assert (2, 3, 3, 2) in [(q.a, q.b, q.c, q.d) for q in found]


def test_parallel_search_matches_serial():
    serial = [q.to_dict() for q in diophantine_search(20)]
    assert [q.to_dict() for q in diophantine_search(20, workers=2)] == serial


def test_printed_table():
    checks = diophantine_table_check()
    assert all(c.passed for c in checks), [c.name for c in checks if not c.passed]


def test_every_numeric_check_reports_a_residual():
    checks = pythagoras_check(1.0, 4) + tetrahedron_checks() + diophantine_table_check()
    assert all(c.residual is not None for c in checks), [c.name for c in checks if c.residual is None]
    rows = [c for c in checks if c.name.startswith('geometry.cubesearch_row')]
    assert all(c.residual == 0.0 for c in rows)
    assert {c.name: c for c in checks}['geometry.cubesearch_symmetric'].residual == 0.0
