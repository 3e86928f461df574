#!/usr/bin/env python3
"""
Gray codes for multiset permutations
Command-line launcher: python graycode.py <command> [options]
"""

import sys

from multiset_gray.cli import main

if __name__ == "__main__":
    sys.exit(main())
