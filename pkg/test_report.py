#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Tests for checks, reports and their text, JSON and PDF forms
"""

import json

import pytest

from utils.report_generator import (FAIL, INFORMATIONAL, PASS, Check, Report, ReportPdfWriter,
                                    describe)


def _sample_report():
    report = Report('norm', wall_time_ms=12)
    report.add(Check('norm.value', True, expected=18, actual=18, provenance='norm form'))
    report.add(Check('norm.float', False, expected=1.0, actual=0.5, residual=0.5))
    report.add(Check('norm.printed', False, expected='x0^3', actual='x1^3', informational=True))
    return report


def test_check_values_are_stored_as_text():
    check = Check('a', 1, expected=3, actual=[1, 2.5], residual=0)
    assert check.passed is True
    assert check.expected == '3'
    assert check.actual == '[1, 2.5]'
    assert check.residual == 0.0


def test_describe():
    assert describe(None) is None
    assert describe(True) == 'true'
    assert describe(0.1) == '0.1'
    assert describe(1 + 2j) == '1+2j'


def test_check_status():
    assert Check('a', True).status == PASS
    assert Check('a', False).status == FAIL
    assert Check('a', False, informational=True).status == INFORMATIONAL
    assert Check('a', True, informational=True).status == INFORMATIONAL


def test_report_status_rules():
    report = _sample_report()
    assert report.status == FAIL
    assert [c.name for c in report.failures()] == ['norm.float']
    only_info = Report('x', [Check('i', False, informational=True)])
    assert only_info.status == INFORMATIONAL
    assert Report('x', [Check('ok', True), Check('i', False, informational=True)]).status == PASS


def test_sorted_orders_by_name():
    names = [c.name for c in _sample_report().sorted().checks]
    assert names == ['norm.float', 'norm.printed', 'norm.value']


def test_json_roundtrip_is_stable():
    report = _sample_report().sorted()
    text = report.to_json()
    assert Report.from_json(text).to_json() == text
    data = json.loads(text)
    assert data['status'] == FAIL
    assert data['wall_time_ms'] == 12
    assert data['checks'][0]['status'] == FAIL


def test_text_form():
    text = _sample_report().to_text()
    lines = text.splitlines()
    assert lines[0] == 'norm: FAIL (3 checks, 12 ms)'
    assert '  ✓ norm.value' in lines
    assert '      expected: 1' in text
    assert '[residual 0.5]' in text
    assert '  i norm.printed' in text


def test_pdf_writer(tmp_path):
    pytest.importorskip('reportlab')
    path = tmp_path / 'report.pdf'
    ReportPdfWriter().write(_sample_report(), str(path))
    assert path.read_bytes().startswith(b'%PDF')
