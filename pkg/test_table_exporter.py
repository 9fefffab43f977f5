#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Tests for CSV and Excel export of checks and search results
"""

import pytest

pd = pytest.importorskip('pandas')

from numerics.geometry import CubicQuadruple  # noqa: E402
from utils.report_generator import Check, Report  # noqa: E402
from utils.table_exporter import CHECK_COLUMNS, TableExporter, write_rows  # noqa: E402


def _report():
    return Report('suite', [
        Check('a', True, expected=1, actual=1),
        Check('b', False, expected=1, actual=2, residual=1.0),
        Check('c', False, informational=True),
    ])


def test_report_to_csv(tmp_path):
    path = tmp_path / 'checks.csv'
    TableExporter().write_report(_report(), str(path))
    df = pd.read_csv(path)
    assert list(df.columns) == CHECK_COLUMNS
    assert list(df['status']) == ['pass', 'fail', 'informational']


def test_quadruples_to_csv(tmp_path):
    path = tmp_path / 'quadruples.csv'
    TableExporter().write_quadruples([CubicQuadruple(2, 3, 3, 2), CubicQuadruple(4, 6, 6, 4)], str(path))
    df = pd.read_csv(path)
    assert df[['a', 'b', 'c', 'd']].values.tolist() == [[2, 3, 3, 2], [4, 6, 6, 4]]
    assert list(df['primitive']) == [True, False]


def test_excel_output(tmp_path):
    pytest.importorskip('openpyxl')
    path = tmp_path / 'rows.xlsx'
    write_rows([{'x': 1, 'y': 2}], str(path), ['y', 'x'])
    assert list(pd.read_excel(path).columns) == ['y', 'x']


def test_empty_rows_keep_the_header(tmp_path):
    path = tmp_path / 'empty.csv'
    write_rows([], str(path), ['a', 'b'])
    assert path.read_text().strip() == 'a,b'


def test_status_counts():
    assert TableExporter().status_counts(_report()) == {'pass': 1, 'fail': 1, 'informational': 1}
    assert TableExporter().status_counts(Report('x')) == {}
