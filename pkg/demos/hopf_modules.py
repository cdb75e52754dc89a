"""
Hopf modules over an exterior algebra
=====================================

For R the exterior algebra on odd primitives, every Hopf module M is free
over R on its coinvariants, so dim M = dim M^coR * dim R.  The second half
builds the retraction Theta for a surjection of Hopf algebras.
"""

from superhopf.hopfmod import (coinvariants, exterior_hopf, nu, random_hopf_module, theta_retraction,
                               xi_differs, xi_instance)

R = exterior_hopf(["w1", "w2"])
print("basis of R:", R.labels)

for seed in range(5):
    M = random_hopf_module(R, seed)
    co = coinvariants(M)
    r = nu(M)
    print(f"seed {seed}: dim M = {M.dim}, coinvariants = {co.dim}, "
          f"nu invertible: {r.report.get('nu_nu_inverse').passed and r.report.get('nu_inverse_nu').passed}")

# The retraction Theta on a small instance where Xi differs from ret.
D = xi_instance()
res = theta_retraction(D)
print(res.report)
print("Xi =", [[x.to_text() for x in row] for row in res.Xi])
print("Xi differs from ret:", xi_differs(res, D))
