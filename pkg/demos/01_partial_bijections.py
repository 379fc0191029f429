"""
Partial bijections of a finite set
==================================

Elements of IS_n, how they compose, and how they split into cycles and chains.
"""

from iswreath import isn

# maps are written on the right, so x(fg) = (xf)g
f = isn.make(4, [(1, 2), (2, 3), (4, 4)])
g = isn.make(4, [(2, 1), (3, 4), (4, 2)])
print("f  =", f, " dom", sorted(f.dom), " ran", sorted(f.ran))
print("g  =", g)
print("fg =", f * g)
print("f^-1 =", isn.inverse(f), " f f^-1 f == f:", f * isn.inverse(f) * f == f)

# every element is a product of disjoint cycles and chains
d = isn.chain_decompose(f)
print("cycles", d.cycles, "chains", d.chains, " product ok:", d.product() == f)

# R relates equal domains, L equal ranges
a, b = isn.make(3, [(1, 2)]), isn.make(3, [(1, 3)])
print("a R b:", isn.green_R(a, b), " a L b:", isn.green_L(a, b))

# sizes of IS_1 .. IS_4 and their semilattices of idempotents
for n in range(1, 5):
    print(f"|IS_{n}| = {len(isn.enumerate_is(n)):4d}   |E| = {len(isn.idempotents(n))}")
