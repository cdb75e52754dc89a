"""
Formal series, divided powers and their duals
=============================================

The additive formal group k[[T]] is dual to the divided power algebra.  Over
a field of characteristic p the divided powers stop being generated by a
single element, which the smoothness check detects.
"""

from superhopf.core import Field
from superhopf.dump import dump_tables
from superhopf.duality import continuous_dual, dual_of_hyper, from_presentation, match_tables, roundtrip_check
from superhopf.hopf import additive_law
from superhopf.hyper import TruncatedPolynomialHyper, divided_power_hyperalgebra, smoothness_check

# Divided powers b_r multiply by binomial coefficients: b1 b1 = 2 b2.
D = divided_power_hyperalgebra([("b", 0)], 4)
print("b1 b1 =", D.mul((1,), (1,)))

# Over F_3 the product b1 b2 = 3 b3 vanishes.
D3 = divided_power_hyperalgebra([("b", 0)], 4, Field(3))
print("b1 b2 over F3 =", D3.mul((1,), (2,)))

# Dualizing k[[T]] truncated at level 4 gives the same tables as D.
H = additive_law(("T",), (), 4)
Cd = continuous_dual(from_presentation(H))
print("dual of k[[T]] matches divided powers:", match_tables(Cd, D, {k: (k,) for k in range(5)}))

# A dump lists the structure constants; the dual swaps product and coproduct.
print(dump_tables(Cd))

# One even and one odd variable, dualized twice, comes back unchanged.
H2 = additive_law(("T",), ("E",), 4)
A = from_presentation(H2)
print("dimensions by level:", A.dims(), dual_of_hyper(continuous_dual(A)).dims())
print(roundtrip_check(H2))

# k[x]/(x^3) over F_3 is a hyper-algebra that is not smooth past level 2.
r = smoothness_check(TruncatedPolynomialHyper(Field(3), 6))
print("smooth up to N:", r.smooth_up_to_N, " last good level:", r.defect_level)
