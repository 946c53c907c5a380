#!/usr/bin/env python3
"""Isoperimetric upper bounds from ball and sweep families.

Every reported ratio is an exact rational and an upper bound on the Cheeger
constant of the (infinite) graph. Over Z the ball ratios stay above 1/5
(= 1/(2n+1) for n = 2); over D_inf they decay toward zero like c/r.
"""

from nielsen.amenability import cheeger_search, iso_ratio
from nielsen.explore import ball, growth_profile
from nielsen.groups import InfiniteDihedral, Integers


def scan(group, root, radius, label):
    frag = ball(group, root, radius)
    print(f"{label}: ball family up to r={radius - 1}")
    prof = dict(growth_profile(frag))
    for r in range(radius):
        rep = iso_ratio(frag, frag.ball_indices(r), f"ball r={r}")
        print(f"  r={r:>2} |S|={rep.size:>6} |dS|={rep.boundary:>6} ratio={rep.ratio} ~ {float(rep.ratio):.4f}")
        if prof[r] > 20000:
            break
    best = cheeger_search(frag, "sweep")
    print(f"  sweep best: {best.ratio} ~ {float(best.ratio):.4f} ({best.description})")
    print()


def main():
    scan(Integers(), (1, 1), 11, "N_2(Z) from (1,1)")
    scan(InfiniteDihedral(), ((0, 1), (1, 1)), 31, "N_2(D_inf) from ((0,1),(1,1))")


if __name__ == "__main__":
    main()
