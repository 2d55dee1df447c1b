#!/usr/bin/env python3
"""
etapoly startup script.
Runs the command-line entry point from a source checkout.
"""

import sys

from src.main import main

if __name__ == "__main__":
    try:
        sys.exit(main())
    except KeyboardInterrupt:
        print("\nInterrupted", file=sys.stderr)
        sys.exit(130)
