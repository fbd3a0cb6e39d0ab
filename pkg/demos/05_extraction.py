"""
From a lattice back to a colored chain
======================================

Glue all maximal chains of L, flipping every second one, and color each
prime interval by the congruence it generates.  The Rep image of that
chain is exactly the set of principal congruences.
"""

from latrep import catalog
from latrep.coloring import extract_colored_chain, rep_set
from latrep.order import j_plus, maximal_chains
from latrep.pipeline import verify_theorem13, verify_theorem15

L = catalog.n5()
print("maximal chains of N5:", [c.ordered for c in maximal_chains(L)])
ex = extract_colored_chain(L)
print("glued chain colors:", ex.colored.colors)
print("Rep C == Princ L:", rep_set(ex.colored, ex.con.lattice) == ex.con.principal)

for name in ("m3", "b2", "b3"):
    print(name, verify_theorem13(getattr(catalog, name)()).summary())

# round trip: build L for (D, J+(D)) and extract again
D, _, _ = catalog.construction_example()
rep = verify_theorem15(D, j_plus(D))
L = rep.artifacts["lattice"]
back = verify_theorem13(L, CL=rep.artifacts["con"])
print(f"|L| = {len(L)}, extracted chain length {back.artifacts['chain_length']}:", back.summary())
