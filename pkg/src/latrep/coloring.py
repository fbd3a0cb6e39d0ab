"""Colored chains and chain representability.

A chain colored by an ordered set ``P`` assigns a color to every prime
interval.  With ``P`` sitting inside a distributive lattice ``D`` as its
join-irreducibles, an interval ``[x, y]`` of the chain is sent to the join
of the colors it contains, and ``Q`` is chain representable when some
coloring hits exactly ``Q`` this way.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from .congruence import ConLattice, con_lattice
from .order import (
    Chain,
    FiniteLattice,
    FinitePoset,
    LatticeError,
    is_distributive,
    join_irreducibles,
    j_plus,
    maximal_chain_paths,
    subposet,
)


class NotComparable(LatticeError):
    pass


class ColorNotInD(LatticeError):
    pass


class NotDistributive(LatticeError):
    pass


WITNESS = "Witness"
UNSAT = "CertifiedUnsat"
EXHAUSTED = "BoundExhausted"


@dataclass(frozen=True)
class ColoredChain:
    """A chain whose ``k``-th prime interval (bottom up) has color ``colors[k]``."""

    chain: Chain
    colors: tuple
    color_poset: FinitePoset

    def __post_init__(self):
        object.__setattr__(self, "colors", tuple(self.colors))
        if len(self.colors) != self.chain.length:
            raise ValueError("need exactly one color per prime interval")
        unknown = set(self.colors) - set(self.color_poset.elements)
        if unknown:
            raise ValueError(f"colors outside the color poset: {sorted(unknown)}")
        if set(self.colors) != set(self.color_poset.elements):
            raise ValueError("coloring is not onto the color poset")

    @classmethod
    def from_word(cls, colors: Sequence[str], color_poset: FinitePoset, prefix="c"):
        return cls(Chain([f"{prefix}{k}" for k in range(1, len(colors) + 2)]), colors, color_poset)

    @property
    def length(self):
        return self.chain.length

    def color(self, x, y):
        k = self.chain.position(x)
        if self.chain.position(y) != k + 1:
            raise ValueError(f"[{x}, {y}] is not a prime interval")
        return self.colors[k]

    def to_json(self):
        return {
            "elements": list(self.chain.ordered),
            "colors": list(self.colors),
            "colorPoset": self.color_poset.to_json(),
        }

    @classmethod
    def from_json(cls, data, color_poset=None):
        poset = color_poset
        if poset is None:
            cp = data["colorPoset"]
            poset = FinitePoset(cp["elements"], [tuple(c) for c in cp["covers"]])
        if "elements" in data:
            return cls(Chain(data["elements"]), data["colors"], poset)
        return cls.from_word(data["colors"], poset)


def _positions(C: ColoredChain, x, y):
    i, j = C.chain.position(x), C.chain.position(y)
    if i > j:
        raise NotComparable(f"{x!r} is above {y!r} in the chain")
    return i, j


def colset(C: ColoredChain, x, y) -> frozenset:
    i, j = _positions(C, x, y)
    return frozenset(C.colors[i:j])


def rep(C: ColoredChain, D: FiniteLattice, x, y):
    colors = colset(C, x, y)
    missing = [c for c in colors if c not in D]
    if missing:
        raise ColorNotInD(f"colors not in D: {sorted(missing)}")
    return D.join_all(sorted(colors))


def _rep_indices(colors_idx, D, one=None):
    """Indices of D hit by the intervals of a chain with color indices ``colors_idx``."""
    J = D.J
    zero = D.index[D.zero]
    top = D.index[D.one] if one is None else one
    out = {zero}
    n = len(colors_idx)
    for s in range(n):
        acc = zero
        for t in range(s, n):
            acc = int(J[acc, colors_idx[t]])
            out.add(acc)
            if acc == top:
                break
    return out


def rep_set(C: ColoredChain, D: FiniteLattice) -> frozenset:
    missing = sorted(set(C.colors) - set(D.elements))
    if missing:
        raise ColorNotInD(f"colors not in D: {missing}")
    idx = [D.index[c] for c in C.colors]
    return frozenset(D.elements[k] for k in _rep_indices(idx, D))


@dataclass
class RepresentabilityVerdict:
    status: str
    witness: ColoredChain | None = None
    certificate: str | None = None
    bound: int = 0
    explored: int = 0

    def to_json(self):
        out = {"status": self.status, "bound": self.bound, "certificate": self.certificate}
        if self.witness is not None:
            out["witness"] = {"length": self.witness.length, "colors": list(self.witness.colors)}
        else:
            out["witness"] = None
        return out


def default_max_len(D: FiniteLattice, Q) -> int:
    return len(join_irreducibles(D)) * len(set(Q))


def required_containment(D: FiniteLattice, Q):
    """Elements of J+(D) missing from Q (empty when the requirement holds)."""
    return sorted(j_plus(D) - set(Q), key=D.index.__getitem__)


def adjacent_colors_certificate(D: FiniteLattice, Q):
    """Certificate text if no join of two distinct join-irreducibles lies in Q."""
    P = join_irreducibles(D)
    if len(P) < 2:
        return None
    Q = set(Q)
    for a in range(len(P)):
        for b in range(a + 1, len(P)):
            if D.join(P[a], P[b]) in Q:
                return None
    return (
        "adjacent colors: a coloring onto |J(D)| >= 2 colors has two neighbouring prime "
        "intervals of distinct colors p, q, so p v q lies in Rep C; no such join lies in Q"
    )


def decide_chain_representable(D: FiniteLattice, Q, max_len: int | None = None) -> RepresentabilityVerdict:
    """Decide whether ``Q`` is chain representable over ``P = J(D)``.

    Fast rejects use the necessary conditions; otherwise a breadth-first
    search over color words runs up to ``max_len`` letters.  A search
    state is the pair (joins realised so far, joins of the current
    suffixes), which determines every extension; states are deduplicated
    across lengths, so when the frontier empties the whole space has been
    exhausted and the answer is a certified no.  The first witness found
    is the lexicographically least word (colors in ``J(D)`` order) of
    least length.
    """
    if not is_distributive(D):
        raise NotDistributive("D is not distributive")
    Q = set(Q)
    unknown = Q - set(D.elements)
    if unknown:
        raise LatticeError(f"Q has elements outside D: {sorted(unknown)}")
    if max_len is None:
        max_len = default_max_len(D, Q)
    missing = required_containment(D, Q)
    if missing:
        return RepresentabilityVerdict(
            UNSAT, certificate=f"required containment: J+(D) not within Q, missing {missing}", bound=0
        )
    cert = adjacent_colors_certificate(D, Q)
    if cert:
        return RepresentabilityVerdict(UNSAT, certificate=cert, bound=0)

    P = join_irreducibles(D)
    pidx = [D.index[p] for p in P]
    J = D.J
    zero = D.index[D.zero]
    qmask = 0
    for x in Q:
        qmask |= 1 << D.index[x]
    target = qmask

    def bits(m):
        while m:
            low = m & -m
            yield low.bit_length() - 1
            m ^= low

    start = (1 << zero, 0)
    seen = {start}
    frontier = [(start, ())]
    explored = 0
    for length in range(1, max_len + 1):
        nxt = []
        for (realised, suffixes), word in frontier:
            for ci, c in enumerate(pidx):
                new_suffix = 1 << c
                for s in bits(suffixes):
                    new_suffix |= 1 << int(J[s, c])
                if new_suffix & ~qmask:
                    continue
                state = (realised | new_suffix, new_suffix)
                explored += 1
                if state in seen:
                    continue
                seen.add(state)
                w = word + (ci,)
                if state[0] == target:
                    chain = ColoredChain.from_word([P[k] for k in w], subposet(D, P))
                    return RepresentabilityVerdict(WITNESS, witness=chain, bound=length, explored=explored)
                nxt.append((state, w))
        frontier = nxt
        if not frontier:
            return RepresentabilityVerdict(
                UNSAT,
                certificate=f"search space exhausted: all {len(seen)} reachable states checked by length {length}",
                bound=length,
                explored=explored,
            )
    return RepresentabilityVerdict(EXHAUSTED, bound=max_len, explored=explored)


@dataclass
class Extraction:
    """Result of :func:`extract_colored_chain`."""

    colored: ColoredChain
    con: ConLattice
    components: list = field(default_factory=list)


def _glued_color_word(L: FiniteLattice, CL: ConLattice):
    paths = maximal_chain_paths(L)
    word = []
    bounds = []
    for k, path in enumerate(paths, start=1):
        steps = list(zip(path, path[1:]))
        if k % 2 == 0:
            # dual chain: walk the chain top-down, prime [y, x]~ is [x, y] of L
            steps = list(reversed(steps))
        start = len(word)
        for x, y in steps:
            word.append(CL.pair_congruence(x, y))
        bounds.append((start, len(word)))
    return paths, word, bounds


def extract_colored_chain(L: FiniteLattice, CL: ConLattice | None = None) -> Extraction:
    """Glue all maximal chains of ``L`` (every other one dualised) into one colored chain.

    Each prime interval is colored by the congruence of ``L`` it generates;
    the color poset is ``J(Con L)`` and colors are ids in ``CL.lattice``.
    """
    if len(L) < 2:
        raise LatticeError("need at least two elements")
    CL = CL or con_lattice(L)
    paths, word, bounds = _glued_color_word(L, CL)
    P = subposet(CL.lattice, join_irreducibles(CL.lattice))
    return Extraction(ColoredChain.from_word(word, P, prefix="x"), CL, bounds)


def principal_image(CL: ConLattice) -> frozenset:
    return frozenset(CL.principal)


def verify_necessity(L: FiniteLattice, CL: ConLattice | None = None) -> bool:
    ex = extract_colored_chain(L, CL)
    return rep_set(ex.colored, ex.con.lattice) == principal_image(ex.con)
