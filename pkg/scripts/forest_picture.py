#!/usr/bin/env python3
"""Write the all-positive forest component of N_2(Z) as a DOT file.

For n = 2 the component is the binary tree of subtractive Euclid steps on
positive coprime pairs (the Stern-Brocot tree), rooted at (1,1).
"""

import sys

from nielsen.forest import component_dot, pattern_spec


def main():
    window = int(sys.argv[1]) if len(sys.argv) > 1 else 12
    sys.stdout.write(component_dot(pattern_spec("++", window)))


if __name__ == "__main__":
    main()
