"""
One-dimensional formal group laws
=================================

A Hopf structure on k[[T]] is the same as a formal group law F(T, T').
"""

import random

from superhopf.core import QQF, binomial
from superhopf.hopf import additive_law, check_group_law, group_law, multiplicative_law
from superhopf.superalgebra import SuperCommutativeAlgebra, delta_k

for H in (additive_law(("T",), (), 6), multiplicative_law(6)):
    law = group_law(H)
    print(law.to_text())
    print(check_group_law(law))

# Hasse derivatives compose like divided powers:
#   Delta^j Delta^k = binom(j + k, k) Delta^(j + k).
A = SuperCommutativeAlgebra(QQF, ["T"], truncation=8)
T = A.gen("T")
rng = random.Random(1)
f = sum((A.scalar(rng.randint(-5, 5)) * T ** e for e in range(6)), A.zero())
j, k = 2, 3
lhs = delta_k(j, "T", delta_k(k, "T", f))
rhs = delta_k(j + k, "T", f) * binomial(j + k, k)
print("f =", f)
print("identity holds:", lhs == rhs)
