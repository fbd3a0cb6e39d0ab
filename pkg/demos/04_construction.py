"""
Building a lattice from (D, Q)
==============================

D has J(D) = {p, q < r, 1} with the unit join-irreducible.  Q leaves out
p+q.  The colored chain q, 1, p, r realizes Q, and gluing the gadgets
along it gives a lattice L with Con L = D and Princ L = Q.

Pass a file name to also write the Hasse diagram of L as DOT.
"""

import sys

from latrep import catalog
from latrep.coloring import ColoredChain
from latrep.congruence import principal_congruence
from latrep.construction import a_, b_
from latrep.io import export_dot
from latrep.order import join_irreducibles, subposet
from latrep.pipeline import verify_theorem15

D, colors, Q = catalog.construction_example()
C = ColoredChain.from_word(colors, subposet(D, join_irreducibles(D)))
report = verify_theorem15(D, Q, chain=C)
for stage in report.stages:
    print(f"{'ok ' if stage.ok else 'BAD'} {stage.name:18} {stage.detail}")

asm = report.artifacts["assembly"]
L, CL = asm.L, report.artifacts["con"]
print(f"|L| = {len(L)} from {len(asm.components)} components: {', '.join(asm.components)}")

# two joins of principal congruences: one is principal, one is not
con = lambda x, y: principal_congruence(L, x, y)
principal = {CL.congruence_of[x] for x in CL.principal}
pr = con(a_("p"), b_("p")) | con(a_("r"), b_("r"))
pq = con(a_("p"), b_("p")) | con(a_("q"), b_("q"))
print("con(a_p,b_p) v con(a_r,b_r) == con(c3,c5):", pr == con("c3", "c5"))
print("con(a_p,b_p) v con(a_q,b_q) principal:", pq in principal)

if len(sys.argv) > 1:
    with open(sys.argv[1], "w") as fh:
        fh.write(export_dot(L, asm.provenance(), name="L"))
    print("wrote", sys.argv[1])
