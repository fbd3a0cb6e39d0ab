import itertools

import pytest

from latrep import catalog
from latrep.congruence import (
    Congruence,
    NotASublattice,
    check_containment_chain,
    con_lattice,
    internal_congruences,
    is_internal,
    ji_congruences,
    principal_congruence,
    restrict,
)
from latrep.order import UnknownElement, find_isomorphism, is_distributive

from oracles import all_congruences, canonical, principal_by_enumeration

SAMPLE = catalog.small_lattices(7)


def blocks(theta):
    return {frozenset(b) for b in theta.blocks}


def test_identity_and_full():
    L = catalog.n5()
    for x in L.elements:
        assert principal_congruence(L, x, x).is_identity
    assert principal_congruence(L, "0", "1").is_full


def test_n5_con_ab():
    theta = principal_congruence(catalog.n5(), "a", "b")
    assert blocks(theta) == {frozenset("0"), frozenset("ab"), frozenset("c"), frozenset("1")}


def test_unknown_element():
    with pytest.raises(UnknownElement):
        principal_congruence(catalog.n5(), "a", "nope")


def test_rejects_incompatible_partition():
    with pytest.raises(ValueError):
        Congruence.from_blocks(catalog.n5(), [{"a", "b", "c"}])


@pytest.mark.parametrize("L", SAMPLE[::4] + (catalog.m3(), catalog.b3()), ids=lambda L: f"n{len(L)}")
def test_principal_matches_partition_enumeration(L):
    cons = all_congruences(L)
    oracle = principal_by_enumeration(L, cons)
    for (a, b), lab in oracle.items():
        got = principal_congruence(L, L.elements[a], L.elements[b])
        assert canonical(got.labels) == canonical(lab)
    CL = con_lattice(L)
    assert {canonical(t.labels) for t in CL.congruences} == {canonical(r) for r in cons}


def test_con_lattice_examples():
    CL = con_lattice(catalog.two_chain())
    assert len(CL) == 2 and CL.principal == set(CL.lattice.elements)
    CL = con_lattice(catalog.b2())
    assert find_isomorphism(CL.lattice, catalog.b2()) is not None
    assert len(CL.principal) == 4
    assert len(con_lattice(catalog.m3())) == 2


def test_con_lattice_bounds_and_order():
    L = catalog.n5()
    CL = con_lattice(L)
    assert CL.congruence_of[CL.lattice.zero].is_identity
    assert CL.congruence_of[CL.lattice.one].is_full
    for x, y in itertools.product(CL.lattice.elements, repeat=2):
        tx, ty = CL.congruence_of[x], CL.congruence_of[y]
        assert CL.lattice.le(x, y) == (tx <= ty)
        assert CL.congruence_of[CL.lattice.join(x, y)] == (tx | ty)
        assert CL.congruence_of[CL.lattice.meet(x, y)] == (tx & ty)


def test_ji_congruences_examples():
    assert [t.is_full for t in ji_congruences(con_lattice(catalog.m3()))] == [True]
    B2 = catalog.b2()
    ji = ji_congruences(con_lattice(B2))
    assert len(ji) == 2
    assert len(ji_congruences(con_lattice(catalog.n5()))) == 3


@pytest.mark.parametrize("L", SAMPLE[::3], ids=lambda L: f"n{len(L)}")
def test_con_lattice_invariants(L):
    CL = con_lattice(L)
    assert is_distributive(CL.lattice)
    assert check_containment_chain(L, CL)
    prime = {t for t in CL.prime_con}
    assert all(t in prime for t in ji_congruences(CL))


@pytest.mark.parametrize("L", SAMPLE[::7], ids=lambda L: f"n{len(L)}")
def test_interval_additivity(L):
    for a, b, c in itertools.product(L.elements, repeat=3):
        if L.le(a, b) and L.le(b, c):
            left = principal_congruence(L, a, c)
            right = principal_congruence(L, a, b) | principal_congruence(L, b, c)
            assert left == right


def test_containment_examples():
    for L in (catalog.two_chain(), catalog.n5(), catalog.m3(), catalog.b3()):
        assert check_containment_chain(L)


def test_restrict():
    B3 = catalog.b3()
    S = [B3.zero, "a1", B3.one]
    ident = restrict(Congruence.identity(B3), S)
    assert ident.is_identity and len(ident.host) == 3
    assert restrict(Congruence.full(B3), S).is_full
    theta = principal_congruence(B3, B3.zero, "a1")
    assert blocks(restrict(theta, S)) == {frozenset([B3.zero, "a1"]), frozenset([B3.one])}
    with pytest.raises(NotASublattice):
        restrict(theta, ["a1", "a2"])


def test_is_internal():
    L = catalog.n5()
    assert not is_internal(L, Congruence.full(L))
    with pytest.raises(ValueError):
        is_internal(L, Congruence.identity(L))
    # con(a, b) in N5 leaves 0 and 1 alone
    assert is_internal(L, principal_congruence(L, "a", "b"))
    assert len(internal_congruences(L)) == 1
