"""
Cross-sections from ordered partitions
======================================

An ordered partition of {1..n} picks one element from every R-class of IS_n.
"""

from iswreath import cross_sections as cs
from iswreath import isn, oracle
from iswreath.semigroup import FiniteSemigroup
from iswreath.structure import recover_partition

op = cs.parse_partition("[2<1][3]")
r = cs.build_r_cross_section(op)
print(f"R-cross-section from {op}: {len(r)} elements")
for x in r:
    print("  ", x)
print("valid:", bool(cs.validate_cross_section(r.elements, r.ambient, "R")))

# the L version is the set of inverses
l = cs.build_l_cross_section(op)
print("L valid:", bool(cs.validate_cross_section(l.elements, l.ambient, "L")))

# an exhaustive search finds nothing else
S = FiniteSemigroup.from_elements(isn.enumerate_is(3))
found = oracle.find_all_cross_sections(S, "R")
print("search finds", len(found), "R-cross-sections of IS_3; ordered partitions:", len(cs.all_ordered_partitions(3)))

# the partition is recoverable from the bare set of elements
bare = cs.CrossSection("R", r.ambient, r.elements)
print("recovered partition:", recover_partition(bare))

# wreath version: one inner cross-section of IS_2 per block
w = cs.build_wreath_r_cross_section(cs.parse_partition("[1<2]"), [cs.parse_partition("[2<1]")])
print("wreath cross-section size", len(w), "=", (1 + 2 ** 2) ** 2)
