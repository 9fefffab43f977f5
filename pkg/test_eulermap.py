#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Tests for the exponential map, the ternary logarithm and the invariance matrices
"""

import logging
import math
import random

import numpy as np
import pytest

from numerics.eulermap import (DegenerateInput, NonPositiveNorm, PhaseVector, SingularCombination,
                               appell_functions, closed_form_checks, cn_exp, cn_log, duality_map,
                               from_polar, homomorphism_check, invariance_checks, invariance_matrix,
                               polar_decompose, printed_invariance_pattern, roundtrip_checks,
                               so2_limit, so11_limit, tu1_element, unimodularity_check)
from utils.message_log import TAG


def test_exponential_at_zero_is_one():
    assert list(cn_exp(3, 1, (0.0, 0.0)).values) == pytest.approx([1.0, 0.0, 0.0])


def test_binary_exponentials_are_trigonometric_and_hyperbolic():
    theta = 0.7
    assert list(cn_exp(2, -1, (theta,)).values) == pytest.approx([math.cos(theta), math.sin(theta)])
    assert list(cn_exp(2, 1, (theta,)).values) == pytest.approx([math.cosh(theta), math.sinh(theta)])


def test_appell_functions_match_exponential():
    c, s, t = appell_functions(0.7, -0.2)
    assert [c, s, t] == pytest.approx(list(cn_exp(3, 1, (0.7, -0.2)).values), abs=1e-12)


@pytest.mark.parametrize('order,sign', [(3, 1), (3, -1), (4, 1), (4, -1), (6, 1), (6, -1)])
def test_unimodularity_and_homomorphism(order, sign):
    rng = random.Random(42)
    assert unimodularity_check(order, sign, 20, rng).passed
    assert homomorphism_check(order, sign, 5, rng).passed


@pytest.mark.parametrize('order,sign', [(3, 1), (4, -1), (6, 1)])
def test_invariance_matrices(order, sign):
    checks = invariance_checks(order, sign, random.Random(3))
    assert all(c.passed for c in checks), [c.name for c in checks if not c.passed]
    assert np.linalg.det(invariance_matrix(order, sign, [0.3] * (order - 1))) == pytest.approx(1.0)


def test_printed_invariance_patterns():
    assert printed_invariance_pattern(6, 1).passed
    case_b = printed_invariance_pattern(6, -1)
    assert case_b.informational


def test_one_parameter_limits():
    assert so2_limit(0.0) == pytest.approx((1.0, 0.0, 0.0))
    c0, s0, t0 = so2_limit(0.4)
    assert c0 ** 2 + s0 ** 2 + t0 ** 2 == pytest.approx(1.0)
    cp, sp = so11_limit(0.4)
    assert (cp - sp) ** 2 * (cp + 2 * sp) == pytest.approx(1.0)
    assert all(c.passed for c in closed_form_checks(random.Random(5)))


def test_tu1_elements_are_unimodular():
    assert tu1_element(0.3, -0.8).norm_value() == pytest.approx(1.0)


def test_logarithm_inverts_exponential():
    z = 2.0 * cn_exp(3, 1, (0.4, -0.3)).values
    log = cn_log(z)
    assert log.scalar == pytest.approx(math.log(2.0))
    assert log.phases.phases == pytest.approx((0.4, -0.3))
    assert list(from_polar(polar_decompose(z))) == pytest.approx(list(z))


def test_polar_form_of_one():
    p = polar_decompose([1.0, 0.0, 0.0])
    assert (p.rho, p.theta, p.phi) == pytest.approx((1.0, 0.0, 0.0))


def test_logarithm_domain_errors():
    with pytest.raises(NonPositiveNorm):
        cn_log([-1.0, 0.0, 0.0])
    with pytest.raises(SingularCombination):
        cn_log([1.0, 1.0, 1.0])
    with pytest.raises(ValueError):
        cn_log([1.0, 0.0])


def test_phase_vector_validation():
    with pytest.raises(ValueError):
        PhaseVector(3, (1.0,))
    with pytest.raises(ValueError):
        PhaseVector(3, (1.0, float('nan')))


def test_large_phases_are_clamped(caplog):
    with caplog.at_level(logging.WARNING, logger=TAG):
        clamped = cn_exp(3, 1, (100.0, 0.0))
    assert list(clamped.values) == pytest.approx(list(cn_exp(3, 1, (20.0, 0.0)).values))
    assert any('clamped' in r.getMessage() for r in caplog.records)


def test_duality_map():
    unit = cn_exp(3, 1, (0.5, 0.1)).values
    assert list(duality_map(unit)) == pytest.approx(list(cn_exp(3, 1, (-0.5, -0.1)).values))
    with pytest.raises(DegenerateInput):
        duality_map([0.0, 0.0, 0.0])


def test_roundtrips():
    assert all(c.passed for c in roundtrip_checks(20, random.Random(11)))


def test_every_numeric_check_reports_a_residual():
    rng = random.Random(8)
    checks = (invariance_checks(4, -1, rng) + closed_form_checks(rng) + roundtrip_checks(5, rng)
              + [unimodularity_check(3, 1, 5, rng), homomorphism_check(3, 1, 3, rng),
                 printed_invariance_pattern(6, 1), printed_invariance_pattern(6, -1)])
    assert all(c.residual is not None for c in checks), [c.name for c in checks if c.residual is None]
    twisted = [c for c in checks if c.name.startswith('eulermap.invariance_twisted_shifts')]
    assert twisted[0].residual == 0.0
    assert printed_invariance_pattern(6, 1).residual == 0.0
