# -*- coding: utf-8 -*-
"""
Fixture loader
Reads the JSON tables transcribed from printed displays under data/
"""

import json
import os
from functools import lru_cache
from typing import Any, Dict

DATA_DIR = os.path.join(os.path.dirname(__file__), '..', 'data')


@lru_cache(maxsize=None)
def _load(name: str) -> str:
    path = os.path.join(DATA_DIR, f'{name}.json')
    if not os.path.exists(path):
        raise FileNotFoundError(f"fixture not found: {path}")
    with open(path, 'r', encoding='utf-8') as f:
        return f.read()


def load_fixture(name: str) -> Dict[str, Any]:
    """Load a fixture by base name; every call returns a fresh copy"""
    return json.loads(_load(name))
