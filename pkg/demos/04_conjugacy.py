"""
Isomorphisms are conjugations
=============================

Every isomorphism between cross-sections is induced by a permutation
(a pair of permutation layers in the wreath case).
"""

from iswreath import cross_sections as cs
from iswreath import structure

r1 = cs.build_r_cross_section(cs.parse_partition("[1<2][3]"))
r2 = cs.build_r_cross_section(cs.parse_partition("[3][2<1]"))
isos = structure.cross_section_isomorphisms(r1, r2)
print(len(isos), "isomorphisms", r1.partition, "->", r2.partition)
for phi in isos:
    c = structure.conjugator_isn(r1, r2, phi)
    print("  theta =", c.theta, "via", c.via)

# the same for IS_2 wr IS_2
w1 = cs.build_wreath_r_cross_section(cs.parse_partition("[1][2]"),
                                     [cs.parse_partition("[1<2]"), cs.parse_partition("[1][2]")])
w2 = cs.build_wreath_r_cross_section(cs.parse_partition("[1][2]"),
                                     [cs.parse_partition("[1][2]"), cs.parse_partition("[2<1]")])
for phi in structure.cross_section_isomorphisms(w1, w2):
    c = structure.conjugator_wreath(w1, w2, phi)
    ok = all(structure.conjugate(p, c) == q for p, q in phi.items())
    print("  outer", c.theta, "inner", c.vartheta, "conjugates:", ok)

# idempotent counts N_e follow a closed form
e = max(w1.idempotents(), key=lambda x: x.sort_key())
print("N_e =", structure.count_N_e(e, w1), "direct", structure.count_N_e_direct(e, w1))
