# -*- coding: utf-8 -*-
"""
Dependency Checker for the CN Complex toolkit
Checks required Python packages and installs missing ones with pip
"""

import importlib
import subprocess
import sys
from typing import Dict, List, Tuple

from .message_log import Level, log_message


class DependencyChecker:
    """Check and install toolkit dependencies"""

    # Required packages with import names and pip names
    REQUIRED_PACKAGES = {
        # Core dependencies - MUST be installed
        'numpy': {'pip_name': 'numpy>=1.21.0', 'required': True, 'description': 'Float layers and exact object matrices'},
        'scipy': {'pip_name': 'scipy>=1.8.0', 'required': True, 'description': 'Matrix exponential'},
        'sympy': {'pip_name': 'sympy>=1.10', 'required': True, 'description': 'Exact integer kernels'},
        'gmpy2': {'pip_name': 'gmpy2>=2.1.0', 'required': True, 'description': 'Exact integer cube roots'},

        # Optional dependencies
        'pandas': {'pip_name': 'pandas>=1.3.0', 'required': False, 'description': 'CSV export'},
        'openpyxl': {'pip_name': 'openpyxl>=3.0.0', 'required': False, 'description': 'Excel files'},
        'reportlab': {'pip_name': 'reportlab>=3.6.0', 'required': False, 'description': 'PDF reports'},
    }

    def __init__(self):
        self.missing_packages: List[Tuple[str, str]] = []
        self.missing_required: List[str] = []

    def check_dependencies(self) -> bool:
        """Check if all required dependencies are installed"""
        log_message("Checking toolkit dependencies...")
        self.missing_packages = []
        self.missing_required = []

        for import_name, info in self.REQUIRED_PACKAGES.items():
            try:
                importlib.import_module(import_name)
                log_message(f"✓ {import_name} is installed")
            except ImportError:
                self.missing_packages.append((import_name, info['pip_name']))
                if info['required']:
                    self.missing_required.append(info['pip_name'])
                log_message(f"✗ {import_name} is NOT installed", Level.WARNING)

        return len(self.missing_required) == 0

    def status(self) -> Dict[str, bool]:
        """Import name -> installed"""
        missing = {name for name, _ in self.missing_packages}
        return {name: name not in missing for name in self.REQUIRED_PACKAGES}

    def install_package(self, pip_name: str) -> bool:
        """Install one package with the running interpreter's pip"""
        result = subprocess.run(
            [sys.executable, '-m', 'pip', 'install', '--quiet', pip_name],
            capture_output=True,
            text=True,
            check=False
        )
        if result.returncode != 0:
            log_message(f"Failed to install {pip_name}: {result.stderr.strip()}", Level.CRITICAL)
            return False
        log_message(f"✓ Installed {pip_name}", Level.SUCCESS)
        return True

    def install_missing_dependencies(self) -> bool:
        failed = [pip_name for _, pip_name in self.missing_packages if not self.install_package(pip_name)]
        return not failed
