"""
Counting cross-sections
=======================

How many R-cross-sections exist, and how many up to isomorphism.
"""

from iswreath import counting, cross_sections as cs, oracle

for n in range(1, 7):
    print(f"n={n}: {counting.count_r_cross_sections_isn(n):6d} R-cross-sections, "
          f"{counting.partition_count(n):3d} up to isomorphism")

# in the wreath product each block size picks a multiset of inner types
for pv, term in counting.noniso_wreath_terms(2, 2):
    print("  block sizes", pv.parts(), "->", term)
print("IS_2 wr IS_2:", counting.count_noniso_wreath(2, 2), "classes")

# compare with a brute-force classification of the 15 constructed ones
sections = cs.all_wreath_r_cross_sections(2, 2)
cl = oracle.classify_isomorphism([r.semigroup for r in sections])
print(len(sections), "constructed,", len(cl), "isomorphism classes")
