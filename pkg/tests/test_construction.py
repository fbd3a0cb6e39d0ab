from itertools import combinations

import pytest

from latrep import catalog
from latrep.coloring import ColoredChain, decide_chain_representable
from latrep.congruence import Congruence, con_lattice, internal_congruences, is_internal, principal_congruence, restrict
from latrep.construction import (
    Incompatible,
    IndexOutOfRange,
    PreconditionViolated,
    UnitColor,
    UnitColorMissing,
    a_,
    adjacent_join_check,
    assemble,
    b_,
    check_compatibility,
    check_flag_intersections,
    check_order_union,
    complementary_check,
    component_congruence,
    component_is_sublattice,
    definition_assignment,
    flag_lattice,
    flag_names,
    frame_lattice,
    glue_congruences,
    m3_witness,
    meet_irreducibility_check,
    union_is_sublattice,
    w_lattice,
    w_names,
)
from latrep.order import FinitePoset, join_irreducibles, subposet


def example_chain():
    D, colors, Q = catalog.construction_example()
    return D, ColoredChain.from_word(colors, subposet(D, join_irreducibles(D))), Q


@pytest.fixture(scope="module")
def asm_ex():
    D, C, _ = example_chain()
    return assemble(C, D)


def test_frame():
    D, C, _ = example_chain()
    asm = frame_lattice(C)
    L = asm.L
    assert len(L) == 17
    assert L.meet("s1", a_("1")) == "o" and L.join("s1", a_("1")) == b_("1")
    for x in L.elements:
        if x not in ("o", "i", "u"):
            assert L.join("u", x) == "i" and L.meet("u", x) == "o"


def test_frame_needs_unit_color():
    P = FinitePoset(["p", "q"])
    C = ColoredChain.from_word(["p", "q"], P)
    with pytest.raises(UnitColorMissing):
        frame_lattice(C)


def test_w_contract():
    W = w_lattice("p", "q")
    L = W.lattice
    assert len(L) == 13 and len(L.covers) == 19
    internal = internal_congruences(L)
    assert len(internal) == 2
    cp = principal_congruence(L, a_("p"), b_("p"))
    cq = principal_congruence(L, a_("q"), b_("q"))
    assert set(internal) == {cp, cq} and cp < cq
    nm = w_names("p", "q")
    assert principal_congruence(L, nm["e"], nm["f"]) == cp
    theta = principal_congruence(L, nm["h"], b_("p"))
    assert not is_internal(L, theta) and theta.related(nm["f"], "i")


def test_flag_contract():
    D, C, _ = example_chain()
    for i in range(1, C.length + 1):
        F = flag_lattice(C, i).lattice
        p = C.colors[i - 1]
        # o, i, a_p, b_p, the chain, then i primed copies and five more
        assert len(F) == 4 + (C.length + 1) + i + 5
        theta = principal_congruence(F, a_(p), b_(p))
        assert theta == principal_congruence(F, f"c{i}", f"c{i + 1}")
        nm = flag_names(i)
        five = {(a_(p), b_(p)), (nm["d"], nm["h"]), (nm["e"], nm["f"]), (nm[f"prime{i}"], nm["y"]), (f"c{i}", f"c{i + 1}")}
        collapsed = {(x, y) for x, y in F.covers if theta.related(x, y)}
        assert collapsed == five
    with pytest.raises(IndexOutOfRange):
        flag_lattice(C, C.length + 1)


def test_example_assembly_size(asm_ex):
    L = asm_ex.L
    frame = 17
    comparable = 4  # q<r, p<1, q<1, r<1
    flags = sum(i + 5 for i in range(1, 5))
    assert len(L) == frame + 7 * comparable + flags == 75
    counted = set()
    for A in asm_ex.components.values():
        counted |= set(A.elements)
    assert counted == set(L.elements)
    for x, owners in asm_ex.element_origin.items():
        assert owners == tuple(n for n, A in asm_ex.components.items() if x in A)


def test_order_union_and_sublattices(asm_ex):
    assert check_order_union(asm_ex.L.leq) == (True, True)
    for A in asm_ex.components.values():
        assert component_is_sublattice(asm_ex, A)
    names = list(asm_ex.components)
    for k in (2, 3):
        for group in list(combinations(names, k))[:40]:
            assert union_is_sublattice(asm_ex, group)


def test_intersections(asm_ex):
    assert check_flag_intersections(asm_ex)
    comps = list(asm_ex.components.values())
    for A, B in combinations(comps, 2):
        if A.kind == "Flag" and B.kind == "Flag":
            continue
        assert meet_irreducibility_check(asm_ex, A, B), (A.name, B.name)


def test_intersection_examples(asm_ex):
    assert set(asm_ex.intersection("W(p,1)", "C_u")) == {"o", "i"}
    assert set(asm_ex.intersection("W(q,r)", "W(q,1)")) == {"o", a_("q"), b_("q"), "i"}
    # [c3, c4] is colored p
    assert {a_("p"), b_("p")} <= set(asm_ex.intersection("Flag(c3)", "W(p,1)"))


def test_complements_and_adjacent_joins(asm_ex):
    for A, B in combinations(asm_ex.components, 2):
        if asm_ex.adjacent(A, B):
            assert adjacent_join_check(asm_ex, A, B), (A, B)
        else:
            assert complementary_check(asm_ex, A, B), (A, B)


def test_m3_witness(asm_ex):
    assert m3_witness(asm_ex, "u") == ("u", a_("1"), "c1", "o", "i")
    assert m3_witness(asm_ex, "s1") == ("u", "s1", "c1", "o", "i")
    L = asm_ex.L
    for x in L.elements:
        five = m3_witness(asm_ex, x)
        assert x in five and {"o", "i"} <= set(five)
        mids = [y for y in five if y not in ("o", "i")]
        for y, z in combinations(mids, 2):
            assert L.join(y, z) == "i" and L.meet(y, z) == "o"


def test_component_congruence_cases(asm_ex):
    W = asm_ex.component("W(q,r)")
    got = component_congruence(asm_ex, "r", W)
    assert got == principal_congruence(W.lattice, a_("r"), b_("r"))
    got = component_congruence(asm_ex, "q", W)
    assert got == principal_congruence(W.lattice, a_("q"), b_("q"))
    assert component_congruence(asm_ex, "p", W).is_identity
    assert component_congruence(asm_ex, "p", "C_u").is_identity
    assert component_congruence(asm_ex, "p", "S").is_identity
    with pytest.raises(UnitColor):
        component_congruence(asm_ex, "1", W)


def test_compatibility(asm_ex):
    ident = {n: Congruence.identity(A.lattice) for n, A in asm_ex.components.items()}
    assert check_compatibility(asm_ex, ident)
    assert glue_congruences(asm_ex, ident).is_identity
    for r in ("p", "q", "r"):
        assert check_compatibility(asm_ex, definition_assignment(asm_ex, r))
    bad = dict(ident)
    W = asm_ex.component("W(p,1)").lattice
    bad["W(p,1)"] = principal_congruence(W, a_("p"), b_("p"))
    assert not check_compatibility(asm_ex, bad)
    with pytest.raises(Incompatible):
        glue_congruences(asm_ex, bad)


@pytest.mark.parametrize("r", ["p", "q", "r"])
def test_gluing_matches_generated_congruence(asm_ex, r):
    asg = definition_assignment(asm_ex, r)
    glued = glue_congruences(asm_ex, asg)
    assert glued == principal_congruence(asm_ex.L, a_(r), b_(r))
    for name, A in asm_ex.components.items():
        assert restrict(glued, A.elements) == asg[name]


def test_restriction_to_w_is_internal(asm_ex):
    theta = principal_congruence(asm_ex.L, a_("r"), b_("r"))
    W = asm_ex.component("W(q,r)")
    got = restrict(theta, W.elements)
    assert got == principal_congruence(W.lattice, a_("r"), b_("r"))
    assert got in internal_congruences(W.lattice)


def test_assembly_preconditions():
    D, C, _ = example_chain()
    with pytest.raises(PreconditionViolated):
        assemble(C, catalog.n5())
    two = catalog.two_chain()
    with pytest.raises(PreconditionViolated):
        assemble(ColoredChain.from_word(["1"], subposet(two, ["1"])), two)
    B2 = catalog.b2()
    P = join_irreducibles(B2)
    with pytest.raises(PreconditionViolated):
        assemble(ColoredChain.from_word(P, subposet(B2, P)), B2)


@pytest.mark.parametrize("D", catalog.ji_unit_catalog(4)[1:], ids=lambda D: f"n{len(D)}")
def test_union_order_over_catalog(D):
    v = decide_chain_representable(D, set(D.elements))
    asm = assemble(v.witness, D)
    assert check_order_union(asm.L.leq) == (True, True)
    assert all(component_is_sublattice(asm, A) for A in asm.components.values())
    CL = con_lattice(asm.L)
    assert len(CL) == len(D)
