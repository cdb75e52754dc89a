"""
The general linear supergroup GL(1|1), end to end
==================================================

Build the coordinate ring of GL(1|1), check its Hopf axioms, split it into
an ordinary group plus odd data, rebuild a Hopf super-algebra from that data
and compare the two.
"""

from superhopf.hcp import build_B, check_hcp, defining_module, eta_iso, gallery_gl, verify_module_pair
from superhopf.hopf import check_hopf_axioms

# The gallery hands back the coordinate ring O(G) and the pair built from it.
O_G, H = gallery_gl(1, 1)
print("generators of O(G):", O_G.A.names)

# The antipode of the even corner X11 picks up a correction from the odd
# entries P11 and Q11.
print("S(X11) =", O_G.S(O_G.A.gen("X11")))

rep = check_hopf_axioms(O_G)
print(rep)

# Harish-Chandra pair axioms for the even group together with the odd space.
print(check_hcp(H))

# Rebuild a Hopf super-algebra B from the pair.  Its axioms hold on their own.
B = build_B(H)
print(check_hopf_axioms(B.presentation()))

# eta compares O(G) with B generator by generator; every defect should be zero.
res = eta_iso(O_G, H, B)
for g in sorted(res.images):
    print(f"eta({g}) = {res.images[g].to_text()}")
print("all defects zero:", all(not d for d in res.defects.values()))

# The defining representation on k^{1|1} is a module for the pair.
M, dot, tri = defining_module(1, 1, H)
rep, _ = verify_module_pair(H, M, dot, tri, B)
print("defining representation:", "ok" if rep.ok else "broken")

# Doubling one entry of the odd action breaks it, and the report says where.
bad = dict(tri)
k = next(iter(bad))
bad[k] = {a: 2 * c for a, c in bad[k].items()}
rep, _ = verify_module_pair(H, M, dot, bad, B)
for r in rep.failures():
    print(r.line())
