#!/usr/bin/env python3
"""
Entry point for the dissociation / spectral radius toolkit.

Usage:
    python main.py verify remark
    python main.py --workers 8 search trees --n 20
    python main.py --format json theorem1 --n 42 --confirm

See `python main.py --help` for every command.
"""

import sys
from pathlib import Path

from dotenv import load_dotenv

# Add src to path
sys.path.insert(0, str(Path(__file__).parent))

from src.cli import main

if __name__ == "__main__":
    load_dotenv()
    sys.exit(main())
