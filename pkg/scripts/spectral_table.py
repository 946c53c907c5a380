#!/usr/bin/env python3
"""Kesten-style spectral estimates (1/m) a_k^(1/k) for growing k.

Finite-k samples of a limsup: not bounds in either direction, but the
amenable dihedral graph consistently dominates the nonamenable integer
graph at equal k.
"""

from nielsen.amenability import closed_walks
from nielsen.groups import InfiniteDihedral, Integers
from nielsen.moves import move_set


def main():
    m = len(move_set(2))
    ks = range(2, 19, 2)
    kmax = max(ks)
    a_z = closed_walks(Integers(), (1, 1), kmax)
    a_d = closed_walks(InfiniteDihedral(), ((0, 1), (1, 1)), kmax)
    print("  k        a_k(Z)          a_k(D_inf)   rho_Z    rho_D")
    for k in ks:
        rho_z = (a_z[k] ** (1 / k)) / m
        rho_d = (a_d[k] ** (1 / k)) / m
        print(f" {k:>2} {a_z[k]:>15} {a_d[k]:>17}   {rho_z:.4f}   {rho_d:.4f}")


if __name__ == "__main__":
    main()
