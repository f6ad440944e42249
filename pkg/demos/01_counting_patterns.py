"""
Counting Gelfand-Tsetlin patterns
=================================

Three ways to count the patterns with a given bottom row: the product
formula, the row-by-row recursion, and plain enumeration.
"""

from lozenge.gtp import count_formula, count_recursive, enumerate_patterns

bottom = [1, 3, 6, 8]

# The product formula: pairwise differences over the superfactorial
print("formula:    ", count_formula(bottom))

# Summing over every admissible row above, memoized on shifted rows
print("recursion:  ", count_recursive(bottom))

# Every pattern, top row first, in lexicographic order
patterns = list(enumerate_patterns(bottom))
print("enumeration:", len(patterns))
for p in patterns[:3]:
    print("   ", p)

# Only differences matter, so shifting the row leaves the count alone
print("shifted by 10:", count_formula([u + 10 for u in bottom]))

# Counts are exact integers at any size
wide = list(range(1, 60, 3))
print(f"bottom row of length {len(wide)}:", count_formula(wide))
