# -*- coding: utf-8 -*-
"""
Settings for the CN Complex toolkit
Keys follow the 'group/key' layout; values come from the defaults table,
an optional JSON settings file and environment variables, in that order.
"""

import json
import os
from typing import Any, Dict, Optional

SETTINGS_FILE_ENV = 'CN_COMPLEX_SETTINGS'

DEFAULTS: Dict[str, Any] = {
    'suite/seed': 42,
    'suite/parallel': False,
    'suite/samples': 200,
    'algebra/ring': 'rational',
    'numerics/roundtrip_tol': 1e-9,
    'numerics/identity_tol': 1e-12,
    'numerics/phi_clamp': 20.0,
    'berger/exhaustive_limit': 16,
    'output/digits': 15,
    'log/level': 'INFO',
}

# Environment overrides, one variable per key
ENV_OVERRIDES = {
    'suite/seed': 'CN_COMPLEX_SEED',
    'suite/parallel': 'CN_COMPLEX_PARALLEL',
    'suite/samples': 'CN_COMPLEX_SAMPLES',
    'numerics/phi_clamp': 'CN_COMPLEX_PHI_CLAMP',
    'berger/exhaustive_limit': 'CN_COMPLEX_EXHAUSTIVE_LIMIT',
    'log/level': 'CN_COMPLEX_LOG_LEVEL',
}

_overrides: Dict[str, Any] = {}
_file_values: Optional[Dict[str, Any]] = None


def _coerce(key: str, raw: Any) -> Any:
    """Convert a raw string value to the type of the default"""
    default = DEFAULTS.get(key)
    if not isinstance(raw, str):
        return raw
    if isinstance(default, bool):
        return raw.strip().lower() in ('1', 'true', 'yes', 'on')
    if isinstance(default, int):
        return int(raw)
    if isinstance(default, float):
        return float(raw)
    return raw


def load_settings(path: Optional[str] = None) -> Dict[str, Any]:
    """Load a JSON settings file (flat 'group/key' mapping)"""
    global _file_values
    path = path or os.environ.get(SETTINGS_FILE_ENV, '')
    _file_values = {}
    if path and os.path.exists(path):
        with open(path, 'r', encoding='utf-8') as f:
            data = json.load(f)
        _file_values = {k: _coerce(k, v) for k, v in data.items()}
    return dict(_file_values)


def get_setting(key: str, default: Any = None) -> Any:
    """Get a setting value, honouring explicit, environment and file overrides"""
    if key in _overrides:
        return _overrides[key]
    env_name = ENV_OVERRIDES.get(key)
    if env_name and os.environ.get(env_name):
        return _coerce(key, os.environ[env_name])
    if _file_values is None:
        load_settings()
    if key in _file_values:
        return _file_values[key]
    if key in DEFAULTS:
        return DEFAULTS[key]
    return default


def set_setting(key: str, value: Any) -> None:
    """Set an explicit override (used for CLI flags)"""
    _overrides[key] = _coerce(key, value)


def reset_settings() -> None:
    """Drop explicit overrides and cached file values"""
    global _file_values
    _overrides.clear()
    _file_values = None
