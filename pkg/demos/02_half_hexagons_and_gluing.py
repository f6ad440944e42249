"""
From patterns to tilings
========================

A pattern lays out the vertical lozenges of a half-hexagon row by row. Two
half-hexagon tilings glue along the diagonal: into a whole hexagon when the
bottom rows agree, into a dented hexagon otherwise.

SVG files are written to the current directory.
"""

from lozenge.gtp import count_formula
from lozenge.lattice import (brute_force_count, build_half_hexagon, glue_halves,
                             pattern_to_tiling, tiling_to_pattern)
from lozenge.render import region_to_svg, tiling_to_svg

# A two-row half-hexagon: vertical at 4 in the top row, at 2 and 6 below
partial = pattern_to_tiling(((4,), (2, 6)), 6)
print("verticals sticking out below:", list(partial.protruding_positions()))
print("read back:", tiling_to_pattern(partial))

# The bijection seen from the lattice side: a half-hexagon with four rows and
# diagonal 8 has as many tilings as there are patterns over all bottom rows
from itertools import combinations
half = build_half_hexagon(4, 8)
print("half-hexagon tilings:", brute_force_count(half),
      "=", sum(count_formula(u) for u in combinations(range(1, 9), 4)))

# Equal bottom rows: a tiling of the whole hexagon
upper = ((4,), (2, 6), (1, 4, 7), (1, 3, 6, 8))
lower = ((3,), (3, 6), (2, 5, 7), (1, 3, 6, 8))
whole = glue_halves(upper, lower, 8)
print("whole hexagon:", len(whole.lozenges), "lozenges")
with open("hexagon.svg", "w") as fh:
    fh.write(tiling_to_svg(whole))

# Different bottom rows: the bisected verticals are dropped, leaving dents
upper = ((4,), (3, 6), (1, 5, 8), (1, 3, 6, 9), (1, 3, 5, 7, 11), (1, 3, 4, 7, 9, 12),
         (1, 2, 4, 6, 8, 10, 13), (1, 2, 4, 5, 8, 10, 11, 14))
lower = ((5,), (3, 7), (2, 7, 9), (1, 5, 9, 10), (1, 4, 9, 10, 11), (1, 4, 9, 10, 11, 12),
         (1, 4, 9, 10, 11, 12, 14))
dented = glue_halves(upper, lower, 14)
print("dents above:", list(dented.region.dents_up))
print("dents below:", list(dented.region.dents_down))
with open("dented_hexagon.svg", "w") as fh:
    fh.write(tiling_to_svg(dented))
with open("dented_region.svg", "w") as fh:
    fh.write(region_to_svg(dented.region))
