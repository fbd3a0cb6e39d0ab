import pytest

from latrep import catalog
from latrep.coloring import (
    EXHAUSTED,
    UNSAT,
    WITNESS,
    ColoredChain,
    ColorNotInD,
    NotComparable,
    NotDistributive,
    colset,
    decide_chain_representable,
    extract_colored_chain,
    rep,
    rep_set,
    verify_necessity,
)
from latrep.congruence import con_lattice
from latrep.order import FinitePoset, join_irreducibles, maximal_chain_paths, subposet

from oracles import brute_force_witness, rep_set_of_word


@pytest.fixture
def rep_ex():
    D, colors, Q = catalog.rep_example()
    return D, ColoredChain.from_word(colors, subposet(D, join_irreducibles(D))), Q


def test_colset_examples(rep_ex):
    D, C, _ = rep_ex
    assert colset(C, "c1", "c1") == frozenset()
    assert colset(C, "c1", "c3") == {"a", "b"}
    assert colset(C, "c2", "c4") == {"b", "d"}
    with pytest.raises(NotComparable):
        colset(C, "c3", "c1")


def test_rep_examples(rep_ex):
    D, C, _ = rep_ex
    assert rep(C, D, "c1", "c1") == D.zero
    assert rep(C, D, "c1", "c2") == "a"
    for k, (x, y) in enumerate(C.chain.prime_intervals()):
        assert rep(C, D, x, y) == C.colors[k]


def test_rep_set_examples(rep_ex):
    D, C, Q = rep_ex
    assert rep_set(C, D) == Q
    assert Q == {D.zero, "a", "b", "d", "b+d"}
    two = catalog.two_chain()
    C2 = ColoredChain.from_word(["1"], subposet(two, ["1"]))
    assert rep_set(C2, two) == {"0", "1"}
    D, colors, Q = catalog.construction_example()
    C = ColoredChain.from_word(colors, subposet(D, join_irreducibles(D)))
    assert rep_set(C, D) == Q


def test_color_outside_d():
    P = FinitePoset(["zz"])
    C = ColoredChain.from_word(["zz"], P)
    with pytest.raises(ColorNotInD):
        rep_set(C, catalog.two_chain())
    with pytest.raises(ColorNotInD):
        rep(C, catalog.two_chain(), "c1", "c2")


def test_coloring_must_be_onto():
    with pytest.raises(ValueError):
        ColoredChain.from_word(["a", "a"], FinitePoset(["a", "b"]))


def test_json_round_trip(rep_ex):
    _, C, _ = rep_ex
    assert ColoredChain.from_json(C.to_json()) == C


def test_decide_examples():
    two = catalog.two_chain()
    v = decide_chain_representable(two, {"0", "1"})
    assert v.status == WITNESS and v.witness.colors == ("1",)
    B3 = catalog.b3()
    v = decide_chain_representable(B3, {B3.zero, "a1", "a2", "a3", B3.one})
    assert v.status == UNSAT and "adjacent" in v.certificate
    D, _, Q = catalog.rep_example()
    v = decide_chain_representable(D, Q)
    assert v.status == WITNESS and rep_set(v.witness, D) == Q


def test_required_containment_certificate():
    D, _, _ = catalog.construction_example()
    v = decide_chain_representable(D, {D.zero, D.one})
    assert v.status == UNSAT and "containment" in v.certificate


def test_not_distributive():
    with pytest.raises(NotDistributive):
        decide_chain_representable(catalog.n5(), {"0", "1"})


def test_bound_exhausted():
    D, _, Q = catalog.construction_example()
    v = decide_chain_representable(D, Q, max_len=2)
    assert v.status == EXHAUSTED and v.bound == 2


def test_witness_is_least_word_of_least_length():
    for D in catalog.ji_unit_catalog(4)[:6]:
        colors = join_irreducibles(D)
        for Q in (set(D.elements), {D.zero, D.one} | set(colors)):
            v = decide_chain_representable(D, Q)
            word, _ = brute_force_witness(D, Q, colors, v.witness.length)
            assert tuple(word) == v.witness.colors


def test_search_state_space_exhaustion_is_sound():
    # Q misses the top, so no surjective coloring can realize it
    D, _, _ = catalog.construction_example()
    Q = set(D.elements) - {D.one}
    v = decide_chain_representable(D, Q)
    assert v.status == UNSAT
    word, _ = brute_force_witness(D, Q, join_irreducibles(D), 7)
    assert word is None


def test_extract_examples():
    ex = extract_colored_chain(catalog.two_chain())
    assert ex.colored.length == 1
    assert ex.con.congruence_of[ex.colored.colors[0]].is_full
    ex = extract_colored_chain(catalog.b2())
    assert ex.colored.length == 4
    c = ex.colored.colors
    assert c[0] == c[2] and c[1] == c[3] and c[0] != c[1]
    assert extract_colored_chain(catalog.n5()).colored.length == 5


@pytest.mark.parametrize("L", [catalog.two_chain(), catalog.n5(), catalog.m3(), catalog.b2(), catalog.b3()],
                         ids=["2", "N5", "M3", "B2", "B3"])
def test_verify_necessity(L):
    assert verify_necessity(L)


def _position_element(paths, bounds, k, s):
    path = paths[k]
    start = bounds[k][0]
    if k % 2 == 1:
        path = path[::-1]
    return path[s - start]


@pytest.mark.parametrize("L", [catalog.n5(), catalog.b3(), catalog.small_lattices(7)[-3]], ids=["N5", "B3", "L7"])
def test_three_case_argument(L):
    CL = con_lattice(L)
    ex = extract_colored_chain(L, CL)
    paths = maximal_chain_paths(L)
    D = CL.lattice
    word = ex.colored.colors
    for i, (si, ei) in enumerate(ex.components):
        for j, (sj, ej) in enumerate(ex.components):
            if j <= i:
                continue
            for s in range(si, ei + 1):
                for t in range(max(s, sj), ej + 1):
                    got = D.join_all(word[s:t])
                    if i + 1 < j:
                        assert got == D.one
                        continue
                    u = _position_element(paths, ex.components, i, s)
                    v = _position_element(paths, ex.components, j, t)
                    if i % 2 == 0:
                        assert got == CL.pair_congruence(L.meet(u, v), L.one)
                    else:
                        assert got == CL.pair_congruence(L.zero, L.join(u, v))


def test_rep_set_oracle_agrees_on_random_words():
    D, _, _ = catalog.construction_example()
    P = join_irreducibles(D)
    poset = subposet(D, P)
    words = [P + P[::-1], P * 2, ["1"] + P + ["q"]]
    for w in words:
        assert rep_set(ColoredChain.from_word(w, poset), D) == rep_set_of_word(w, D)
