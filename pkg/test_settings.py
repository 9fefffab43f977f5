#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Tests for settings precedence and logging setup
"""

import json
import logging

import pytest

from utils.message_log import TAG, Level, configure_logging, log_message
from utils.settings import DEFAULTS, get_setting, load_settings, reset_settings, set_setting


@pytest.fixture(autouse=True)
def clean_settings(monkeypatch):
    monkeypatch.delenv('CN_COMPLEX_SETTINGS', raising=False)
    monkeypatch.delenv('CN_COMPLEX_SEED', raising=False)
    reset_settings()
    yield
    reset_settings()


def test_defaults():
    assert get_setting('suite/seed') == DEFAULTS['suite/seed'] == 42
    assert get_setting('berger/exhaustive_limit') == 16
    assert get_setting('missing/key', 'fallback') == 'fallback'


def test_precedence(tmp_path, monkeypatch):
    path = tmp_path / 'settings.json'
    path.write_text(json.dumps({'suite/seed': '7', 'suite/samples': 10}), encoding='utf-8')
    assert load_settings(str(path)) == {'suite/seed': 7, 'suite/samples': 10}
    assert get_setting('suite/seed') == 7

    monkeypatch.setenv('CN_COMPLEX_SEED', '9')
    assert get_setting('suite/seed') == 9

    set_setting('suite/seed', '11')
    assert get_setting('suite/seed') == 11
    assert get_setting('suite/samples') == 10


def test_boolean_coercion(monkeypatch):
    monkeypatch.setenv('CN_COMPLEX_PARALLEL', 'yes')
    assert get_setting('suite/parallel') is True
    set_setting('suite/parallel', 'off')
    assert get_setting('suite/parallel') is False


def test_missing_settings_file_is_empty(tmp_path):
    assert load_settings(str(tmp_path / 'absent.json')) == {}


def test_log_messages_use_the_tag(caplog):
    logger = configure_logging('WARNING')
    assert logger.name == TAG
    assert logger.level == logging.WARNING
    configure_logging('DEBUG')
    with caplog.at_level(logging.INFO, logger=TAG):
        log_message('✓ done', Level.SUCCESS)
        log_message('careful', Level.WARNING)
    assert [r.levelname for r in caplog.records] == ['SUCCESS', 'WARNING']
    configure_logging('INFO')
