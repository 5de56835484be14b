"""
Cubic Logic Toolkit - command-line entry point
Usage: python app.py [--json] <command> [options]
"""
import sys

from src.cli import main

if __name__ == "__main__":
    sys.exit(main())
