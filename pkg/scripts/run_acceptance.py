#!/usr/bin/env python3
"""Run the acceptance gate and print one PASS/FAIL line per criterion."""

import sys
from pathlib import Path

import pytest

ROOT = Path(__file__).resolve().parent.parent

if __name__ == "__main__":
    sys.exit(pytest.main([str(ROOT / "tests" / "test_acceptance.py"), "-q", *sys.argv[1:]]))
