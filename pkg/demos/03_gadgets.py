"""
The two gadgets
===============

W(p, q) makes collapsing [a_q, b_q] collapse [a_p, b_p] but not the other
way round.  Flag(c_i) ties a prime interval of the colored chain to the
interval [a_p, b_p] of its color.
"""

from latrep import catalog
from latrep.coloring import ColoredChain
from latrep.congruence import internal_congruences, principal_congruence
from latrep.construction import a_, b_, flag_lattice, w_lattice
from latrep.order import join_irreducibles, subposet

W = w_lattice("p", "q").lattice
print(f"W(p,q): {len(W)} elements, {len(W.covers)} prime intervals")
cp = principal_congruence(W, a_("p"), b_("p"))
cq = principal_congruence(W, a_("q"), b_("q"))
print("internal congruences:", len(internal_congruences(W)), " con(a_p,b_p) < con(a_q,b_q):", cp < cq)

D, colors, _ = catalog.construction_example()
C = ColoredChain.from_word(colors, subposet(D, join_irreducibles(D)))
F = flag_lattice(C, 3).lattice
p = C.colors[2]
theta = principal_congruence(F, a_(p), b_(p))
print(f"Flag(c3) (color {p}): {len(F)} elements")
print("  collapsed primes:", [(x, y) for x, y in F.covers if theta.related(x, y)])
print("  con(a_p, b_p) == con(c3, c4):", theta == principal_congruence(F, "c3", "c4"))
