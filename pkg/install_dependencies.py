#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Install dependencies for the CN Complex toolkit
Checks which packages are missing and installs them with pip
"""

import sys
from pathlib import Path

from utils.dependency_checker import DependencyChecker
from utils.message_log import configure_logging


def main():
    """Main installation function"""
    print("=" * 60)
    print("CN Complex toolkit - Dependency Installer")
    print("=" * 60)
    print()

    requirements_file = Path(__file__).parent / "requirements.txt"
    if not requirements_file.exists():
        print(f"❌ Error: requirements.txt not found at {requirements_file}")
        return 1

    configure_logging('INFO')
    checker = DependencyChecker()
    if checker.check_dependencies() and not checker.missing_packages:
        print("✅ All dependencies are already installed")
        return 0

    print("🔧 Installing missing dependencies...")
    print("-" * 40)
    failed_core, failed_optional = [], []
    for import_name, pip_name in checker.missing_packages:
        print(f"Installing {pip_name}...", end=" ")
        if checker.install_package(pip_name):
            print("✅")
        else:
            print("❌")
            required = checker.REQUIRED_PACKAGES[import_name]['required']
            (failed_core if required else failed_optional).append(pip_name)

    print()
    print("=" * 60)
    print("📊 Installation Summary")
    print("=" * 60)
    if not failed_core:
        print("✅ All core dependencies installed successfully!")
    else:
        print("❌ Failed to install core dependencies:")
        for pkg in failed_core:
            print(f"   - {pkg}")
    if failed_optional:
        print("\n⚠️  Some optional dependencies failed to install:")
        for pkg in failed_optional:
            print(f"   - {pkg}")
        print("\nCSV, Excel and PDF output stay unavailable without them.")
    return 0 if not failed_core else 1


if __name__ == "__main__":
    sys.exit(main())
