#!/usr/bin/env python3
"""
grtab - Main Entry Point
Tableaux, Kazhdan-Lusztig characters and cluster seeds of Grassmannians.
"""

import sys
from pathlib import Path

# Add src directory to Python path
sys.path.insert(0, str(Path(__file__).parent / "src"))

from cli.app import run


def main():
    """Main entry point for grtab."""
    try:
        sys.exit(run(sys.argv[1:]))
    except KeyboardInterrupt:
        print("\nInterrupted by user.", file=sys.stderr)
        sys.exit(130)


if __name__ == "__main__":
    main()
