#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Tests for the verification battery
"""

import pytest

from verification.battery import SUITES, run_battery


def test_suite_names():
    assert set(SUITES) == {'algebra', 'representations', 'euler', 'holomorphy', 'dirac', 'geometry', 'berger'}


def test_unknown_suite():
    with pytest.raises(ValueError):
        run_battery(['algebra', 'nope'])


@pytest.mark.parametrize('name', ['representations', 'berger', 'dirac'])
def test_single_suites_pass(name):
    report = run_battery([name])
    assert report.status == 'pass', [c.name for c in report.failures()]


def test_seeded_runs_are_repeatable():
    first = run_battery(['euler'], seed=5, samples=10)
    second = run_battery(['euler'], seed=5, samples=10)
    assert [c.to_dict() for c in first.checks] == [c.to_dict() for c in second.checks]
    assert first.status == 'pass', [c.name for c in first.failures()]


@pytest.mark.slow
def test_full_battery():
    report = run_battery(samples=20)
    assert report.status == 'pass', [c.name for c in report.failures()]
    assert [c.name for c in report.checks] == sorted(c.name for c in report.checks)
    assert any(c.informational for c in report.checks)


@pytest.mark.slow
def test_parallel_matches_serial():
    serial = run_battery(['representations', 'berger'], parallel=False)
    parallel = run_battery(['representations', 'berger'], parallel=True)
    assert [c.to_dict() for c in serial.checks] == [c.to_dict() for c in parallel.checks]
