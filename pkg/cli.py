#!/usr/bin/env python3
"""
Forced Pairs - Command-line Entry Point

Usage: python cli.py analyze 2,2,1,1,0
"""

import sys

from app.cli import main

if __name__ == "__main__":
    sys.exit(main())
