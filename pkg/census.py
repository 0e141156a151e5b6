#!/usr/bin/env python3
"""
Entry point for the census experiments.

Puts ``src/`` on the path and hands over to ``census_cli.main``.
"""
import os
import sys
from pathlib import Path

PROJECT_ROOT = Path(__file__).parent
sys.path.insert(0, str(PROJECT_ROOT / 'src'))
os.environ.setdefault('PROJECT_ROOT', str(PROJECT_ROOT))

from census_cli.main import main  # noqa: E402

if __name__ == "__main__":
    sys.exit(main())
