"""
Shuffling dents
===============

The number of tilings of a dented hexagon is GTP(U) * GTP(L). Swapping some
private dents between the two sides changes the count by a ratio that only
depends on the private dents and the row lengths.
"""

from fractions import Fraction

from lozenge.lattice import brute_force_count, build_dented_hexagon
from lozenge.shuffle import (ShuffleSpec, count_dented, count_dented_factored, shuffle,
                             shuffle_ratio_closed_form)

U = [1, 2, 4, 5, 8, 10, 11, 14]
L = [1, 4, 9, 10, 11, 12, 14]

count = count_dented(U, L)
print("GTP(U) * GTP(L):      ", count)
print("factored form:        ", count_dented_factored(U, L))
print("backtracking on cells:", brute_force_count(build_dented_hexagon(len(U), len(L), 14, U, L)))

# Move 2 and 5 down and 12 up
spec = ShuffleSpec(U, L, [2, 5, 12])
U2, L2 = shuffle(spec)
print("after shuffle:", list(U2), list(L2))

direct = Fraction(count, count_dented(U2, L2))
print("ratio, counted:    ", direct)
print("ratio, closed form:", shuffle_ratio_closed_form(spec))
