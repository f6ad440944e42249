"""
Restricted tilings and the shuffling phenomenon
===============================================

Keep some common positions V open on both sides of the diagonal. Every tiling
then has |V| verticals straddling the diagonal, and we may confine them to a
set B. The count splits into a prefix, which moves under shuffling, and a sum
over the possible straddling positions, which does not.
"""

from lozenge.lattice import brute_force_count_restricted
from lozenge.shuffle import RestrictedSpec, count_restricted, restricted_sum

# The small case: two straddling positions allowed, each giving 2 tilings
small = RestrictedSpec(U=[1, 2], L=[1, 3], V=[1], B=[1, 4])
print("formula:", count_restricted(small))
print("oracle: ", brute_force_count_restricted(small.region(), small.V, small.B))

spec = RestrictedSpec(U=[1, 2, 4, 5, 8, 10, 11, 14], L=[1, 4, 9, 10, 11, 12, 14],
                      V=[4, 11], B=[3, 6, 7])
print("region:", spec.region().to_json())
print("restricted count:", count_restricted(spec),
      "oracle:", brute_force_count_restricted(spec.region(), spec.V, spec.B))

for s in ([2], [9, 12], [2, 5, 8, 9, 12]):
    moved = spec.shuffled(s)
    print(f"S={s}: count {count_restricted(moved)}, "
          f"sum {restricted_sum(moved)} (unshuffled {restricted_sum(spec)})")
