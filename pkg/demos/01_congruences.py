"""
Congruences of a small lattice
==============================

The pentagon N5 has five congruences.  All of them are principal, so the
chain J+(Con L) within Princ L within Con L is tight here.
"""

from latrep import catalog
from latrep.congruence import check_containment_chain, con_lattice, principal_congruence
from latrep.order import join_irreducibles

L = catalog.n5()
print("N5 covers:", L.covers)

# collapsing a < b leaves the rest of N5 alone
theta = principal_congruence(L, "a", "b")
print("con(a, b) blocks:", [sorted(b) for b in theta.blocks])

# collapsing 0 < a forces b and 1 together too
print("con(0, a) blocks:", [sorted(b) for b in principal_congruence(L, "0", "a").blocks])

CL = con_lattice(L)
print("|Con N5| =", len(CL), " principal:", sorted(CL.principal))
print("join-irreducible congruences:", join_irreducibles(CL.lattice))
print("containment chain holds:", check_containment_chain(L, CL))

# M3 is simple: only the two trivial congruences
print("|Con M3| =", len(con_lattice(catalog.m3())))
