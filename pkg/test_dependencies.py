#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Test dependency checking and installation
"""

import importlib
import subprocess

from utils.dependency_checker import DependencyChecker


def test_required_packages_are_importable():
    checker = DependencyChecker()
    assert checker.check_dependencies()
    assert not checker.missing_required
    status = checker.status()
    assert all(status[name] for name, info in checker.REQUIRED_PACKAGES.items() if info['required'])


def test_missing_package_is_reported(monkeypatch):
    real_import = importlib.import_module

    def fake_import(name, *args, **kwargs):
        if name == 'gmpy2':
            raise ImportError(name)
        return real_import(name, *args, **kwargs)

    monkeypatch.setattr(importlib, 'import_module', fake_import)
    checker = DependencyChecker()
    assert not checker.check_dependencies()
    assert checker.missing_required == ['gmpy2>=2.1.0']
    assert checker.status()['gmpy2'] is False


def test_install_uses_pip(monkeypatch):
    calls = []

    def fake_run(cmd, **kwargs):
        calls.append(cmd)
        return subprocess.CompletedProcess(cmd, 1 if 'broken' in cmd[-1] else 0, '', 'no such package')

    monkeypatch.setattr(subprocess, 'run', fake_run)
    checker = DependencyChecker()
    assert checker.install_package('numpy>=1.21.0')
    assert not checker.install_package('broken-package')
    assert calls[0][1:] == ['-m', 'pip', 'install', '--quiet', 'numpy>=1.21.0']

    checker.missing_packages = [('pandas', 'pandas>=1.3.0'), ('x', 'broken-x')]
    assert not checker.install_missing_dependencies()
