"""
Colored chains and the Rep map
==============================

A chain whose prime intervals are colored by J(D) sends every interval to
the join of its colors.  The image is the set Rep C.
"""

from latrep import catalog
from latrep.coloring import ColoredChain, colset, decide_chain_representable, rep, rep_set
from latrep.order import join_irreducibles, subposet

# D = down-sets of {a < b, d}; its top b+d is join-reducible
D, colors, Q = catalog.rep_example()
P = subposet(D, join_irreducibles(D))
C = ColoredChain.from_word(colors, P)
print("chain:", C.chain.ordered, "colors:", C.colors)
print("colset[c1, c3] =", sorted(colset(C, "c1", "c3")))
print("colset[c2, c4] =", sorted(colset(C, "c2", "c4")))
print("Rep[c1, c2] =", rep(C, D, "c1", "c2"))
print("Rep C =", sorted(rep_set(C, D)), " missing:", sorted(set(D.elements) - rep_set(C, D)))

# the search finds a shorter chain with the same image
v = decide_chain_representable(D, Q)
print(v.status, "with colors", v.witness.colors)

# in B3 two distinct atoms always meet somewhere on the chain,
# so {0, atoms, 1} can never be Rep C
B3 = catalog.b3()
v = decide_chain_representable(B3, {B3.zero, "a1", "a2", "a3", B3.one})
print(v.status + ":", v.certificate)
