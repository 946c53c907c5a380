#!/usr/bin/env python3
"""Ball-growth comparison: exponential over Z versus linear over D_inf.

The integer graph contains a rooted forest of minimum degree 3, so its balls
grow geometrically; the rank-2 dihedral graph is quasi-isometric to a line,
so its shells stabilize to a constant. Both show up clearly at radius 30.
"""

from nielsen.explore import ball, growth_profile
from nielsen.groups import InfiniteDihedral, Integers


def main():
    rows_z = growth_profile(ball(Integers(), (1, 1), 14))
    rows_d = growth_profile(ball(InfiniteDihedral(), ((0, 1), (1, 1)), 30))
    print("N_2(Z) from (1,1)")
    print("  r  |B_r|   |B_r|/|B_{r-1}|")
    for r, size in rows_z:
        ratio = "" if r == 0 else f"{size / rows_z[r - 1][1]:.3f}"
        print(f"  {r:>2} {size:>6}   {ratio}")
    print()
    print("N_2(D_inf) from ((0,1),(1,1))")
    print("  r  |B_r|   shell")
    for r, size in rows_d:
        shell = size if r == 0 else size - rows_d[r - 1][1]
        print(f"  {r:>2} {size:>6}   {shell}")


if __name__ == "__main__":
    main()
