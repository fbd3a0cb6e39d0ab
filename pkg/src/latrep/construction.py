"""Gadget lattices and their assembly into a lattice with a prescribed
congruence lattice and prescribed principal congruences.

Global element names: ``o``/``i`` are the bounds, ``a_<p>``/``b_<p>`` the
chain ``C_p`` for a color ``p``, ``c<j>`` the colored chain, ``u`` the
universal complement and ``s1`` the sectional complement of ``a_1`` in
``b_1``.  Gadget-private elements carry the gadget in their name:
``w.<p>.<q>.<k>`` and ``flag.<i>.<k>`` / ``flag.<i>.prime.<j>``.

The union of the component lattices is ordered by the union of their
orders; shared elements (``a_p``, ``b_p``, ``c_j``) only ever have a chain
above them inside each component, which is what makes the union
transitive.

W(p, q) adds seven elements to ``C_p`` and ``C_q``::

    dp < a_p, h;  h ^ a_p = dp      (so [dp, h] ~ [a_p, b_p])
    dq < a_q, hq; hq ^ a_q = dq     (so [dq, hq] ~ [a_q, b_q])
    e = dp v dq,  f = h v dq  (e < f),  t = f v hq  (f < t)

``{dq, e, f, t, hq}`` is a pentagon with long side ``dq < e < f < t``, so
collapsing ``[dq, hq]`` collapses ``[e, f]`` and hence ``[a_p, b_p]``, but
not conversely.

Flag(c_i) with ``p`` the color of ``[c_i, c_{i+1}]`` adds primed copies
``c'_1 < ... < c'_i`` (``c'_j < c_j``, forming a 2 x i grid with the lower
chain), an element ``y`` with ``c'_i < y < c_{i+1}``, and ``d, h, e, f``
with ``d < a_p, h``, ``e = d v c'_i`` and ``f = h v y``.  The square
``{d, h, e, f}`` joins the two perspectivities, so
``con(a_p, b_p) = con(c_i, c_{i+1})``.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Mapping

import numpy as np

from .congruence import Congruence, _Blocks, principal_congruence, restrict_to
from .coloring import ColoredChain
from .order import (
    FiniteLattice,
    FinitePoset,
    LatticeError,
    is_distributive,
    join_irreducibles,
    meet_irreducibles,
)


class PreconditionViolated(LatticeError):
    pass


class UnitColorMissing(PreconditionViolated):
    pass


class IndexOutOfRange(LatticeError, IndexError):
    pass


class UnitColor(LatticeError):
    pass


class Incompatible(LatticeError):
    pass


class SubstitutionFailure(LatticeError):
    pass


def a_(p):
    return f"a_{p}"


def b_(p):
    return f"b_{p}"


def c_(j):
    return f"c{j}"


@dataclass(frozen=True)
class ComponentLattice:
    kind: str
    params: tuple
    lattice: FiniteLattice

    @property
    def name(self):
        if self.kind == "W":
            return f"W({self.params[0]},{self.params[1]})"
        if self.kind == "Flag":
            return f"Flag(c{self.params[0]})"
        if self.kind == "ChainCp":
            return f"C_{self.params[0]}"
        return {"BaseChain": "C", "ChainCu": "C_u", "S": "S"}[self.kind]

    @property
    def elements(self):
        return self.lattice.elements

    def __contains__(self, x):
        return x in self.lattice


def _component(kind, params, elements, covers):
    return ComponentLattice(kind, tuple(params), FiniteLattice(elements, covers))


def chain_cp(p):
    return _component("ChainCp", (p,), ["o", a_(p), b_(p), "i"], [("o", a_(p)), (a_(p), b_(p)), (b_(p), "i")])


def chain_cu():
    return _component("ChainCu", (), ["o", "u", "i"], [("o", "u"), ("u", "i")])


def s_lattice(unit):
    a1, b1 = a_(unit), b_(unit)
    return _component("S", (), ["o", a1, "s1", b1, "i"], [("o", a1), (a1, b1), ("o", "s1"), ("s1", b1), (b1, "i")])


def base_chain(n):
    names = ["o"] + [c_(j) for j in range(1, n + 1)] + ["i"]
    return _component("BaseChain", (), names, list(zip(names, names[1:])))


def w_lattice(p, q) -> ComponentLattice:
    """The 13-element gadget forcing con(a_p, b_p) < con(a_q, b_q)."""
    w = lambda k: f"w.{p}.{q}.{k}"
    ap, bp, aq, bq = a_(p), b_(p), a_(q), b_(q)
    dp, h, dq, hq, e, f, t = (w(k) for k in ("dp", "h", "dq", "hq", "e", "f", "t"))
    elements = ["o", dp, dq, ap, h, aq, hq, e, f, bp, bq, t, "i"]
    covers = [
        ("o", dp), ("o", dq),
        (dp, ap), (dp, h), (ap, bp), (h, bp),
        (dq, aq), (dq, hq), (aq, bq), (hq, bq),
        (dp, e), (dq, e), (e, f), (h, f), (f, t), (hq, t),
        (bp, "i"), (bq, "i"), (t, "i"),
    ]
    comp = _component("W", (p, q), elements, covers)
    L = comp.lattice
    if L.meet(h, ap) != dp or L.join(h, ap) != bp or L.join(dp, dq) != e or L.join(h, dq) != f:
        raise AssertionError("W gadget transcription broken")
    return comp


def w_names(p, q):
    return {k: f"w.{p}.{q}.{k}" for k in ("dp", "h", "dq", "hq", "e", "f", "t")}


def flag_names(i):
    names = {k: f"flag.{i}.{k}" for k in ("y", "d", "h", "e", "f")}
    names.update({f"prime{j}": f"flag.{i}.prime.{j}" for j in range(1, i + 1)})
    return names


def flag_lattice(C: ColoredChain, i: int) -> ComponentLattice:
    """Flag(c_i): ties con(c_i, c_{i+1}) to con(a_p, b_p), p its color (1-based i)."""
    n = len(C.chain.ordered)
    if not 1 <= i < n:
        raise IndexOutOfRange(f"flag index {i} outside 1..{n - 1}")
    p = C.colors[i - 1]
    nm = flag_names(i)
    prime = [nm[f"prime{j}"] for j in range(1, i + 1)]
    y, d, h, e, f = (nm[k] for k in ("y", "d", "h", "e", "f"))
    cs = [c_(j) for j in range(1, n + 1)]
    ap, bp = a_(p), b_(p)
    covers = [("o", prime[0]), ("o", d), (cs[-1], "i"), (bp, "i"), (f, "i")]
    covers += list(zip(prime, prime[1:]))
    covers += [(prime[j], cs[j]) for j in range(i)]
    covers += list(zip(cs, cs[1:]))
    covers += [(prime[-1], y), (y, cs[i]), (d, ap), (ap, bp), (d, h), (h, bp), (d, e), (prime[-1], e), (e, f), (h, f), (y, f)]
    elements = ["o"] + prime + [d, y, ap, h, e] + cs + [bp, f, "i"]
    comp = _component("Flag", (i,), elements, covers)
    L = comp.lattice
    if L.join(y, cs[i - 1]) != cs[i] or L.meet(y, cs[i - 1]) != prime[-1] or L.join(h, ap) != bp:
        raise AssertionError("flag gadget transcription broken")
    return comp


@dataclass
class Assembly:
    """Union of component lattices, ordered by the union of their orders."""

    components: dict
    L: FiniteLattice
    element_origin: dict
    D: FiniteLattice | None = None
    chain: ColoredChain | None = None
    unit: str | None = None
    colors: tuple = ()

    def component(self, name) -> ComponentLattice:
        return self.components[name]

    def intersection(self, A, B):
        A, B = self._comp(A), self._comp(B)
        return [x for x in A.elements if x in B.lattice]

    def adjacent(self, A, B):
        return set(self.intersection(A, B)) != {"o", "i"}

    def _comp(self, A):
        return self.components[A] if isinstance(A, str) else A

    def provenance(self):
        return {x: list(v) for x, v in self.element_origin.items()}

    @property
    def p_order(self):
        return FinitePoset.from_leq(
            self.colors, self.D.leq[np.ix_([self.D.idx(p) for p in self.colors], [self.D.idx(p) for p in self.colors])]
        )


def _union(components, order_hint=()):
    names = []
    seen = set()
    for x in order_hint:
        if x not in seen:
            seen.add(x)
            names.append(x)
    for comp in components:
        for x in comp.elements:
            if x not in seen:
                seen.add(x)
                names.append(x)
    names.remove("i")
    names.append("i")
    index = {x: k for k, x in enumerate(names)}
    n = len(names)
    leq = np.zeros((n, n), dtype=bool)
    origin = {x: [] for x in names}
    for comp in components:
        ks = np.array([index[x] for x in comp.elements])
        leq[np.ix_(ks, ks)] |= comp.lattice.leq
        for x in comp.elements:
            origin[x].append(comp.name)
    return names, leq, {x: tuple(v) for x, v in origin.items()}


def check_order_union(leq) -> tuple[bool, bool]:
    """(antisymmetric, transitive) for an order given as a boolean matrix."""
    n = len(leq)
    anti = not (leq & leq.T & ~np.eye(n, dtype=bool)).any()
    li = leq.astype(np.int32)
    trans = not ((li @ li > 0) & ~leq).any()
    return anti, trans


def _build(components, D=None, C=None, unit=None, colors=(), hint=()):
    names, leq, origin = _union(components, hint)
    anti, trans = check_order_union(leq)
    if not anti:
        raise PreconditionViolated("union order is not antisymmetric")
    if not trans:
        raise PreconditionViolated("union order is not transitive")
    L = FiniteLattice.from_leq(names, leq)
    comps = {c.name: c for c in components}
    asm = Assembly(comps, L, origin, D, C, unit, tuple(colors))
    bad = [c.name for c in components if not component_is_sublattice(asm, c)]
    if bad:
        raise PreconditionViolated(f"components not sublattices of the union: {bad}")
    return asm


def component_is_sublattice(asm: Assembly, A: ComponentLattice) -> bool:
    L = asm.L
    ks = [L.idx(x) for x in A.elements]
    if not (L.leq[np.ix_(ks, ks)] == A.lattice.leq).all():
        return False
    return L.is_sublattice(A.elements)


def _unit_of(P: FinitePoset):
    tops = P.maximal()
    if len(tops) != 1:
        raise UnitColorMissing("the color poset has no greatest element")
    return tops[0]


def frame_lattice(C: ColoredChain, unit=None) -> Assembly:
    P = C.color_poset
    if unit is None:
        unit = _unit_of(P)
    elif unit not in P:
        raise UnitColorMissing(f"unit color {unit!r} is not a color")
    n = len(C.chain.ordered)
    colors = list(P.elements)
    components = [chain_cp(p) for p in colors] + [base_chain(n), s_lattice(unit), chain_cu()]
    return _build(components, C=C, unit=unit, colors=colors)


def _check_assembly_input(C: ColoredChain, D: FiniteLattice):
    if not is_distributive(D):
        raise PreconditionViolated("D is not distributive")
    if len(D) <= 2:
        raise PreconditionViolated("|D| <= 2: the two-element lattice represents D directly")
    P = join_irreducibles(D)
    if D.one not in P:
        raise PreconditionViolated("the unit of D is not join-irreducible")
    if set(C.colors) != set(P):
        raise PreconditionViolated("the coloring is not onto J(D)")
    for x in C.color_poset.elements:
        for y in C.color_poset.elements:
            if C.color_poset.le(x, y) != D.le(x, y):
                raise PreconditionViolated("the color order differs from the order of D")
    if D.one not in C.colors:
        raise PreconditionViolated("no prime interval is colored by the unit")
    return P


def assemble(C: ColoredChain, D: FiniteLattice) -> Assembly:
    P = _check_assembly_input(C, D)
    unit = D.one
    n = len(C.chain.ordered)
    comps = []
    for p in P:
        for q in P:
            if p != q and D.le(p, q):
                comps.append(w_lattice(p, q))
    comps += [flag_lattice(C, i) for i in range(1, n)]
    comps += [s_lattice(unit), chain_cu()]
    hint = ["o"] + [x for p in P for x in (a_(p), b_(p))] + ["s1"] + [c_(j) for j in range(1, n + 1)] + ["u"]
    return _build(comps, D=D, C=C, unit=unit, colors=P, hint=hint)


def union_is_sublattice(asm: Assembly, names) -> bool:
    elements = sorted({x for nm in names for x in asm.components[nm].elements})
    return asm.L.is_sublattice(elements)


def _is_chain_shape(asm, X):
    X = set(X)
    if X == {"o", "i"}:
        return True
    if asm.colors and any(X == {"o", a_(p), b_(p), "i"} for p in asm.colors):
        return True
    n = len(asm.chain.chain.ordered) if asm.chain is not None else 0
    return X == {"o", "i"} | {c_(j) for j in range(1, n + 1)}


def meet_irreducibility_check(asm: Assembly, A, B) -> bool:
    """The intersection of two components, one of them not a flag, is one of
    the three chain shapes and its elements other than o are meet-irreducible.

    The unit ``i`` counts as meet-irreducible (no proper meet decomposition).
    """
    A, B = asm._comp(A), asm._comp(B)
    if A.kind == "Flag" and B.kind == "Flag":
        raise ValueError("at least one component must not be a flag")
    X = asm.intersection(A, B)
    if not _is_chain_shape(asm, X):
        return False
    mi = set(meet_irreducibles(asm.L)) | {"i"}
    return all(x in mi for x in X if x != "o")


def check_flag_intersections(asm: Assembly) -> bool:
    flags = [c for c in asm.components.values() if c.kind == "Flag"]
    n = len(asm.chain.chain.ordered)
    base = {"o", "i"} | {c_(j) for j in range(1, n + 1)}
    return all(set(asm.intersection(A, B)) == base for A, B in combinations(flags, 2))


def complementary_check(asm: Assembly, A, B) -> bool:
    """Interior elements of non-adjacent components are complementary."""
    L = asm.L
    A, B = asm._comp(A), asm._comp(B)
    for a in A.elements:
        if a in ("o", "i"):
            continue
        for b in B.elements:
            if b in ("o", "i"):
                continue
            if L.join(a, b) != "i" or L.meet(a, b) != "o":
                return False
    return True


def _up_in(L, U, x):
    cands = [u for u in U if L.le(x, u)]
    return min(cands, key=lambda u: L.height(u))


def adjacent_join_check(asm: Assembly, A, B) -> bool:
    """For adjacent A, B with U = A ^ B: a v b = max(a^U, b^U) on interiors."""
    L = asm.L
    A, B = asm._comp(A), asm._comp(B)
    U = asm.intersection(A, B)
    for a in A.elements:
        if a in ("o", "i"):
            continue
        au = _up_in(L, U, a)
        for b in B.elements:
            if b in ("o", "i"):
                continue
            bu = _up_in(L, U, b)
            top = au if L.le(bu, au) else bu
            if L.join(a, b) != top:
                return False
    return True


def _is_m3(L, five):
    o, i = L.zero, L.one
    mids = [x for x in five if x not in (o, i)]
    if len(mids) != 3 or len(set(five)) != 5 or o not in five or i not in five:
        return False
    return all(L.join(x, y) == i and L.meet(x, y) == o for x, y in combinations(mids, 2))


def m3_witness(asm: Assembly, x) -> tuple:
    """A diamond {o,i}-sublattice through ``x``.

    Tries the standard choices around ``u``, ``a_1``, ``s1`` and ``c1``
    first; for elements where those are not complementary to ``x`` (for
    example elements below ``a_1`` or ``b_1``) it searches for a partner
    of ``u`` among the chain and ``C_p`` elements.
    """
    L = asm.L
    a1 = a_(asm.unit)
    if x in ("o", "i", "u", a1):
        cand = ("u", a1, "c1", "o", "i")
    elif x == "s1":
        cand = ("u", "s1", "c1", "o", "i")
    else:
        cand = ("u", a1, x, "o", "i")
    if _is_m3(L, cand):
        return cand
    if x in ("o", "i"):
        pool = [y for y in L.elements if y not in ("o", "i", "u")]
        for y, z in combinations(pool, 2):
            if _is_m3(L, ("u", y, z, "o", "i")):
                return ("u", y, z, "o", "i")
    for y in L.elements:
        if y in ("o", "i", "u", x):
            continue
        cand = ("u", y, x, "o", "i")
        if _is_m3(L, cand):
            return cand
    raise AssertionError(f"no diamond through {x!r}")


def _color_le(asm, x, r):
    return asm.D.le(x, r)


def _cover_congruence(A: ComponentLattice, primes) -> Congruence:
    L = A.lattice
    uf = _Blocks(len(L))
    for x, y in primes:
        uf.union(L.idx(x), L.idx(y))
    theta = Congruence(L, uf.labels(), check=False)
    if not theta.is_compatible():
        raise SubstitutionFailure(f"collapsed prime intervals of {A.name} do not form a congruence")
    return theta


def component_congruence(asm: Assembly, r, A) -> Congruence:
    """The congruence a join-irreducible ``r < 1`` of D assigns to component ``A``."""
    A = asm._comp(A)
    if r == asm.unit:
        raise UnitColor("r must lie strictly below the unit")
    L = A.lattice
    if A.kind == "W":
        p, q = A.params
        if _color_le(asm, q, r):
            return principal_congruence(L, a_(q), b_(q))
        if _color_le(asm, p, r):
            return principal_congruence(L, a_(p), b_(p))
        return Congruence.identity(L)
    if A.kind == "Flag":
        i = A.params[0]
        C = asm.chain
        p = C.colors[i - 1]
        nm = flag_names(i)
        primes = []
        if _color_le(asm, p, r):
            primes += [
                (a_(p), b_(p)),
                (nm["d"], nm["h"]),
                (nm["e"], nm["f"]),
                (nm[f"prime{i}"], nm["y"]),
                (c_(i), c_(i + 1)),
            ]
        for j, col in enumerate(C.colors, start=1):
            if _color_le(asm, col, r):
                primes.append((c_(j), c_(j + 1)))
                if j < i:
                    primes.append((nm[f"prime{j}"], nm[f"prime{j + 1}"]))
        return _cover_congruence(A, primes)
    return Congruence.identity(L)


def definition_assignment(asm: Assembly, r) -> dict:
    return {name: component_congruence(asm, r, A) for name, A in asm.components.items()}


def _restrict_to_elements(theta, X):
    lab = theta.labels
    return tuple(sorted(tuple(sorted(x for x in X if lab[theta.host.idx(x)] == lab[theta.host.idx(y)])) for y in X))


def check_compatibility(asm: Assembly, assignments: Mapping[str, Congruence]) -> bool:
    names = list(assignments)
    for A, B in combinations(names, 2):
        X = asm.intersection(A, B)
        if set(X) == {"o", "i"}:
            continue
        if _restrict_to_elements(assignments[A], X) != _restrict_to_elements(assignments[B], X):
            return False
    return True


def glue_congruences(asm: Assembly, assignments: Mapping[str, Congruence]) -> Congruence:
    """The unique congruence of L restricting to each component's assigned congruence."""
    if not check_compatibility(asm, assignments):
        raise Incompatible("assigned congruences disagree on a shared chain")
    L = asm.L
    uf = _Blocks(len(L))
    for name, theta in assignments.items():
        if not theta.is_identity:
            A = asm.components[name].lattice
            if len(theta.block_of(A.zero)) > 1 or len(theta.block_of(A.one)) > 1:
                raise ValueError(f"assignment on {name} is neither internal nor the identity")
        host = theta.host
        for k, v in enumerate(theta.labels.tolist()):
            if k != v:
                uf.union(L.idx(host.elements[k]), L.idx(host.elements[v]))
    glued = Congruence(L, uf.labels(), check=False)
    if not glued.is_compatible():
        raise SubstitutionFailure("glued relation violates the substitution properties")
    for name, theta in assignments.items():
        if restrict_to(glued, asm.components[name].lattice) != theta:
            raise SubstitutionFailure(f"gluing collapsed extra pairs inside {name}")
    return glued
