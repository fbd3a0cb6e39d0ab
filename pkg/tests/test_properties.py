"""Property tests over randomly drawn lattices, chains and subsets."""

from hypothesis import HealthCheck, given, settings
from hypothesis import strategies as st

from latrep import catalog
from latrep.coloring import UNSAT, WITNESS, ColoredChain, colset, decide_chain_representable, rep, rep_set
from latrep.congruence import con_lattice, principal_congruence
from latrep.order import birkhoff_lattice, dual, find_isomorphism, is_distributive, join_irreducibles, poset_of, subposet

from oracles import all_congruences, brute_force_witness, canonical, principal_by_enumeration

LATTICES = catalog.small_lattices(8)
DISTRIBUTIVE = [D for D in catalog.ji_unit_catalog(4) if len(D) > 2]

settings.register_profile("default", deadline=None, suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")

lattices = st.sampled_from(LATTICES)


@given(lattices)
def test_axioms_and_dual(L):
    assert L.check_axioms()
    assert dual(dual(L)) == L
    assert dual(L).check_axioms()


@given(lattices, st.data())
def test_principal_congruence_is_least(L, data):
    a = data.draw(st.sampled_from(L.elements))
    b = data.draw(st.sampled_from(L.elements))
    want = principal_by_enumeration(L)[L.idx(a), L.idx(b)]
    assert canonical(principal_congruence(L, a, b).labels) == canonical(want)


@given(lattices)
def test_congruence_lattice_is_distributive(L):
    CL = con_lattice(L)
    assert is_distributive(CL.lattice)
    assert len(CL) == len(all_congruences(L))


@given(lattices, st.data())
def test_interval_additivity_of_congruences(L, data):
    a, b, c = (data.draw(st.sampled_from(L.elements)) for _ in range(3))
    # force a <= b <= c
    b = L.join(a, b)
    c = L.join(b, c)
    assert principal_congruence(L, a, c) == principal_congruence(L, a, b) | principal_congruence(L, b, c)


@st.composite
def colored_chains(draw):
    D = draw(st.sampled_from(DISTRIBUTIVE))
    P = join_irreducibles(D)
    extra = draw(st.lists(st.sampled_from(P), max_size=6))
    word = draw(st.permutations(P + extra))
    return D, ColoredChain.from_word(word, subposet(D, P))


@given(colored_chains(), st.data())
def test_colset_and_rep_laws(dc, data):
    D, C = dc
    names = C.chain.ordered
    i, j, k = sorted(data.draw(st.integers(0, len(names) - 1)) for _ in range(3))
    x, y, z = names[i], names[j], names[k]
    assert colset(C, x, z) == colset(C, x, y) | colset(C, y, z)
    assert D.le(rep(C, D, y, z), rep(C, D, x, z))
    assert D.le(rep(C, D, x, y), rep(C, D, x, z))


@given(colored_chains())
def test_rep_set_contains_j_plus(dc):
    D, C = dc
    got = rep_set(C, D)
    assert {D.zero, D.one} | set(join_irreducibles(D)) <= got


@st.composite
def targets(draw):
    D = draw(st.sampled_from(DISTRIBUTIVE))
    core = {D.zero, D.one} | set(join_irreducibles(D))
    rest = [x for x in D.elements if x not in core]
    return D, core | set(draw(st.sets(st.sampled_from(rest)))) if rest else core


@settings(max_examples=40)
@given(targets())
def test_decision_agrees_with_brute_force(dq):
    D, Q = dq
    v = decide_chain_representable(D, Q)
    P = join_irreducibles(D)
    if v.status == WITNESS:
        assert rep_set(v.witness, D) == Q
        word, _ = brute_force_witness(D, Q, P, v.witness.length)
        assert word is not None and len(word) == v.witness.length
    else:
        assert v.status == UNSAT
        word, _ = brute_force_witness(D, Q, P, 6)
        assert word is None


@settings(max_examples=25)
@given(st.sampled_from(catalog.distributive_catalog(12)))
def test_birkhoff_round_trip(D):
    if len(D) > 1:
        D2, _ = birkhoff_lattice(poset_of(D, join_irreducibles(D)))
        assert find_isomorphism(D2, D) is not None
