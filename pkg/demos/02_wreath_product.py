"""
The partial wreath product
==========================

Pairs (f, a) with a in IS_n and f assigning an element of IS_m to each point of dom(a).
"""

import random

import numpy as np

from iswreath import wreath
from iswreath.semigroup import FiniteSemigroup

p = wreath.from_pairs(2, 2, [(1, 2), (2, 1)], {1: [(1, 2)], 2: [(1, 1), (2, 2)]})
q = wreath.from_pairs(2, 2, [(1, 1)], {1: [(2, 1)]})
print("p    =", wreath.format_wreath(p))
print("q    =", wreath.format_wreath(q))
print("pq   =", wreath.format_wreath(p * q))
print("p^-1 =", wreath.format_wreath(wreath.w_inverse(p)))

# the full multiplication table of IS_2 wr IS_2 as a numpy array
S = FiniteSemigroup.from_elements(wreath.enumerate_wreath(2, 2))
print("size", len(S), " associative:", S.is_associative())
print("idempotents:", len(S.idempotents()), "=", wreath.count_wreath_idempotents(2, 2))

# R-classes from the domain criterion, checked against principal right ideals
keys = {wreath.r_class_key(x) for x in S.elements}
ideals = {S.right_ideal(i) for i in range(len(S))}
print("R-classes:", len(keys), "principal right ideals:", len(ideals))

# larger products are fine to sample
rng = random.Random(0)
xs = [wreath.random_wreath(3, 3, rng) for _ in range(3)]
print("random IS_3 wr IS_3 triple associates:", (xs[0] * xs[1]) * xs[2] == xs[0] * (xs[1] * xs[2]))
print("row of zero in table:", np.unique(S.table[S.index[wreath.w_zero(2, 2)]]))
