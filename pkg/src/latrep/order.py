"""Finite posets and lattices given by cover relations.

Lattices are immutable: the order matrix and the join/meet tables are
computed once, as numpy arrays indexed by element position, and every
downstream algorithm works by table lookup.
"""

from __future__ import annotations

from functools import cached_property
from itertools import product
from typing import Iterable, Mapping, Sequence

import numpy as np


class LatticeError(ValueError):
    pass


class EmptyUniverse(LatticeError):
    pass


class CycleDetected(LatticeError):
    pass


class NotALattice(LatticeError):
    def __init__(self, pair, reason="no unique bound"):
        self.pair = pair
        super().__init__(f"pair {pair!r}: {reason}")


class UnknownElement(LatticeError, KeyError):
    pass


def _frozen(a):
    a.setflags(write=False)
    return a


def _closure(n, covers):
    """Reflexive-transitive closure of an index cover relation."""
    up = [[] for _ in range(n)]
    indeg = [0] * n
    for x, y in covers:
        up[x].append(y)
        indeg[y] += 1
    order = [x for x in range(n) if indeg[x] == 0]
    k = 0
    while k < len(order):
        x = order[k]
        k += 1
        for y in up[x]:
            indeg[y] -= 1
            if indeg[y] == 0:
                order.append(y)
    if len(order) != n:
        raise CycleDetected("cover relation has a cycle")
    leq = np.eye(n, dtype=bool)
    for x in reversed(order):
        for y in up[x]:
            leq[x] |= leq[y]
    return leq


def _reduction(leq):
    """Cover pairs (index form) of a partial order matrix."""
    n = len(leq)
    lt = leq & ~np.eye(n, dtype=bool)
    # x < z < y for some z
    through = (lt.astype(np.int32) @ lt.astype(np.int32)) > 0
    xs, ys = np.nonzero(lt & ~through)
    return sorted(zip(xs.tolist(), ys.tolist()))


class FinitePoset:
    """A finite ordered set on string ids."""

    def __init__(self, elements: Iterable[str], covers: Iterable[tuple[str, str]] = ()):
        self.elements = tuple(elements)
        if len(set(self.elements)) != len(self.elements):
            raise LatticeError("duplicate element ids")
        self.index = {x: k for k, x in enumerate(self.elements)}
        pairs = []
        for lo, hi in covers:
            if lo not in self.index or hi not in self.index:
                raise UnknownElement(f"cover ({lo!r}, {hi!r}) uses an unknown element")
            if lo == hi:
                raise CycleDetected(f"self-cover on {lo!r}")
            pairs.append((self.index[lo], self.index[hi]))
        self.leq = _frozen(_closure(len(self.elements), pairs))
        self._covers = _reduction(self.leq)

    @classmethod
    def from_leq(cls, elements, leq):
        self = cls.__new__(cls)
        self.elements = tuple(elements)
        self.index = {x: k for k, x in enumerate(self.elements)}
        leq = np.array(leq, dtype=bool)
        n = len(self.elements)
        if not (leq[np.arange(n), np.arange(n)].all()):
            raise LatticeError("order relation is not reflexive")
        if (leq & leq.T & ~np.eye(n, dtype=bool)).any():
            raise CycleDetected("order relation is not antisymmetric")
        if n and ((leq.astype(np.int32) @ leq.astype(np.int32) > 0) & ~leq).any():
            raise LatticeError("order relation is not transitive")
        self.leq = _frozen(leq)
        self._covers = _reduction(self.leq)
        return self

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __contains__(self, x):
        return x in self.index

    def __repr__(self):
        return f"{type(self).__name__}({len(self)} elements, {len(self._covers)} covers)"

    @cached_property
    def heights(self):
        """Length of the longest chain from a minimal element up to each element."""
        n = len(self.elements)
        h = np.zeros(n, dtype=np.int64)
        for y in np.argsort(self.leq.sum(axis=0), kind="stable"):
            below = self.leq[:, y].copy()
            below[y] = False
            if below.any():
                h[y] = h[below].max() + 1
        return _frozen(h)

    def idx(self, x):
        try:
            return self.index[x]
        except KeyError:
            raise UnknownElement(f"unknown element {x!r}") from None

    @property
    def cover_indices(self):
        return self._covers

    @property
    def covers(self):
        e = self.elements
        return [(e[x], e[y]) for x, y in self._covers]

    def le(self, x, y):
        return bool(self.leq[self.idx(x), self.idx(y)])

    def lt(self, x, y):
        return x != y and self.le(x, y)

    def upper_covers(self, x):
        k = self.idx(x)
        return [self.elements[b] for a, b in self._covers if a == k]

    def lower_covers(self, x):
        k = self.idx(x)
        return [self.elements[a] for a, b in self._covers if b == k]

    def maximal(self, subset=None):
        subset = list(self.elements if subset is None else subset)
        return [x for x in subset if not any(self.lt(x, y) for y in subset)]

    def __eq__(self, other):
        if not isinstance(other, FinitePoset):
            return NotImplemented
        return set(self.elements) == set(other.elements) and set(self.covers) == set(other.covers)

    def __hash__(self):
        return hash((frozenset(self.elements), frozenset(self.covers)))

    def to_json(self):
        return {"elements": list(self.elements), "covers": [list(c) for c in self.covers]}


class FiniteLattice(FinitePoset):
    """A finite lattice with precomputed join and meet tables.

    ``J`` and ``M`` are the index-level join/meet tables; ``join``/``meet``
    work on string ids.
    """

    def __init__(self, elements, covers=()):
        super().__init__(elements, covers)
        self._build()

    @classmethod
    def from_leq(cls, elements, leq):
        self = super().from_leq(elements, leq)
        self._build()
        return self

    def _build(self):
        n = len(self.elements)
        if n == 0:
            raise EmptyUniverse("a lattice needs at least one element")
        self.J = _frozen(self._bounds(self.leq))
        self.M = _frozen(self._bounds(self.leq.T, meet=True))
        self.zero = self.elements[int(np.argmin(self.leq.sum(axis=0)))]
        self.one = self.elements[int(np.argmin(self.leq.sum(axis=1)))]

    def _bounds(self, leq, meet=False):
        n = len(leq)
        ups = leq.sum(axis=1)
        out = np.empty((n, n), dtype=np.int64)
        # row blocks keep the n x n x n intermediate small
        step = max(1, 2_000_000 // (n * n))
        for lo in range(0, n, step):
            common = leq[lo:lo + step, None, :] & leq[None, :, :]
            count = common.sum(axis=2)
            best = np.where(common, ups[None, None, :], -1).argmax(axis=2)
            bad = (count == 0) | (ups[best] != count)
            if bad.any():
                a, b = map(int, np.argwhere(bad)[0])
                kind = "meet" if meet else "join"
                raise NotALattice((self.elements[lo + a], self.elements[b]), f"no unique {kind}")
            out[lo:lo + step] = best
        return out

    def join(self, x, y):
        return self.elements[self.J[self.idx(x), self.idx(y)]]

    def meet(self, x, y):
        return self.elements[self.M[self.idx(x), self.idx(y)]]

    def join_all(self, xs):
        acc = self.index[self.zero]
        for x in xs:
            acc = self.J[acc, self.idx(x)]
        return self.elements[acc]

    def height(self, x=None):
        if x is None:
            return int(self.heights[self.index[self.one]])
        return int(self.heights[self.idx(x)])

    def is_sublattice(self, subset):
        ks = [self.idx(x) for x in subset]
        sel = np.zeros(len(self), dtype=bool)
        sel[ks] = True
        grid = np.ix_(ks, ks)
        return bool(sel[self.J[grid]].all() and sel[self.M[grid]].all())

    def check_axioms(self):
        """Exhaustive commutativity, associativity and absorption check."""
        J, M = self.J, self.M
        n = len(J)
        r = np.arange(n)
        a, b, c = r[:, None, None], r[None, :, None], r[None, None, :]
        return bool(
            (J == J.T).all()
            and (M == M.T).all()
            and (J[J[a, b], c] == J[a, J[b, c]]).all()
            and (M[M[a, b], c] == M[a, M[b, c]]).all()
            and (J[r[:, None], M] == r[:, None]).all()
            and (M[r[:, None], J] == r[:, None]).all()
        )


class Chain(FiniteLattice):
    """A finite totally ordered lattice; ``ordered`` lists it bottom to top."""

    def __init__(self, names: Sequence[str]):
        names = list(names)
        n = len(names)
        if n == 0:
            raise EmptyUniverse("a lattice needs at least one element")
        self.elements = tuple(names)
        if len(set(names)) != n:
            raise LatticeError("duplicate element ids")
        self.index = {x: k for k, x in enumerate(names)}
        r = np.arange(n)
        # built directly: the generic bound search is cubic and chains get long
        self.leq = _frozen(r[:, None] <= r[None, :])
        self._covers = [(k, k + 1) for k in range(n - 1)]
        self.J = _frozen(np.maximum.outer(r, r))
        self.M = _frozen(np.minimum.outer(r, r))
        self.zero, self.one = names[0], names[-1]
        self.ordered = self.elements

    @property
    def length(self):
        return len(self.ordered) - 1

    def prime_intervals(self):
        return list(zip(self.ordered, self.ordered[1:]))

    def position(self, x):
        return self.ordered.index(x)


def lattice_from_covers(elements, covers) -> FiniteLattice:
    return FiniteLattice(elements, covers)


def chain(n_or_names, prefix="c") -> Chain:
    if isinstance(n_or_names, int):
        return Chain([f"{prefix}{k}" for k in range(1, n_or_names + 1)])
    return Chain(n_or_names)


def join_irreducibles(L: FiniteLattice) -> list[str]:
    """Elements with exactly one lower cover, listed by height then id order."""
    lower = np.zeros(len(L), dtype=np.int64)
    for _, y in L.cover_indices:
        lower[y] += 1
    ks = [k for k in range(len(L)) if lower[k] == 1]
    ks.sort(key=lambda k: (L.heights[k], k))
    return [L.elements[k] for k in ks]


def meet_irreducibles(L: FiniteLattice) -> list[str]:
    upper = np.zeros(len(L), dtype=np.int64)
    for x, _ in L.cover_indices:
        upper[x] += 1
    ks = [k for k in range(len(L)) if upper[k] == 1]
    ks.sort(key=lambda k: (L.heights[k], k))
    return [L.elements[k] for k in ks]


def j_plus(L: FiniteLattice) -> set[str]:
    return set(join_irreducibles(L)) | {L.zero, L.one}


def is_distributive(L: FiniteLattice) -> bool:
    J, M = L.J, L.M
    r = np.arange(len(L))
    a, b, c = r[:, None, None], r[None, :, None], r[None, None, :]
    return bool((M[a, J[b, c]] == J[M[a, b], M[a, c]]).all())


def subposet(L: FinitePoset, subset) -> FinitePoset:
    subset = list(subset)
    ks = [L.idx(x) for x in subset]
    return FinitePoset.from_leq(subset, L.leq[np.ix_(ks, ks)])


def sublattice(L: FiniteLattice, subset) -> FiniteLattice:
    subset = list(subset)
    if not L.is_sublattice(subset):
        raise LatticeError("subset is not closed under join and meet")
    ks = [L.idx(x) for x in subset]
    return FiniteLattice.from_leq(subset, L.leq[np.ix_(ks, ks)])


def _downset_name(P, down, empty):
    if not down:
        return empty
    return "+".join(P.maximal(sorted(down, key=P.index.__getitem__)))


def birkhoff_lattice(P: FinitePoset) -> tuple[FiniteLattice, dict[str, str]]:
    """Lattice of down-sets of ``P``; returns it with the map p -> down-set of p.

    Down-sets are named by their maximal elements joined with ``+``; the
    empty one is ``0`` (``∅`` if ``P`` already uses ``0``).  The principal
    down-set of ``p`` is therefore named ``p`` itself.
    """
    if len(P) == 0:
        raise EmptyUniverse("poset is empty")
    n = len(P)
    downs = [frozenset()]
    seen = {frozenset()}
    frontier = [frozenset()]
    while frontier:
        nxt = []
        for d in frontier:
            for k in range(n):
                if k in d:
                    continue
                if all(j in d for j in range(n) if j != k and P.leq[j, k]):
                    e = d | {k}
                    if e not in seen:
                        seen.add(e)
                        nxt.append(e)
        downs.extend(sorted(nxt, key=sorted))
        frontier = nxt
    empty = "∅" if "0" in P else "0"
    names = [_downset_name(P, [P.elements[k] for k in d], empty) for d in downs]
    m = len(downs)
    leq = np.array([[downs[a] <= downs[b] for b in range(m)] for a in range(m)], dtype=bool)
    D = FiniteLattice.from_leq(names, leq)
    return D, {p: p for p in P.elements}


def poset_of(L: FinitePoset, subset) -> FinitePoset:
    return subposet(L, subset)


def dual(L: FiniteLattice) -> FiniteLattice:
    if isinstance(L, Chain):
        return Chain(list(reversed(L.ordered)))
    return FiniteLattice(L.elements, [(y, x) for x, y in L.covers])


def glued_sum(C1: Chain, C2: Chain) -> Chain:
    """Ordinal sum of two chains with the top of ``C1`` identified with the bottom of ``C2``.

    The glued element keeps the name of ``C1``'s top.
    """
    rest = C2.ordered[1:]
    if set(rest) & set(C1.ordered):
        raise LatticeError("chains share element ids outside the glued point")
    return Chain(list(C1.ordered) + list(rest))


def maximal_chain_paths(L: FinitePoset, bottom=None, top=None) -> list[tuple[str, ...]]:
    """All maximal chains from ``bottom`` to ``top`` as id tuples, in DFS order."""
    if bottom is None:
        bottom = L.zero
    if top is None:
        top = L.one
    up = [[] for _ in range(len(L))]
    for x, y in L.cover_indices:
        up[x].append(y)
    for u in up:
        u.sort()
    b, t = L.idx(bottom), L.idx(top)
    out = []
    path = [b]

    def walk(x):
        if x == t:
            out.append(tuple(L.elements[k] for k in path))
            return
        for y in up[x]:
            if L.leq[y, t]:
                path.append(y)
                walk(y)
                path.pop()

    walk(b)
    return out


def maximal_chains(L: FiniteLattice) -> list[Chain]:
    return [Chain(p) for p in maximal_chain_paths(L)]


def _invariants(L):
    n = len(L)
    up = np.zeros(n, dtype=np.int64)
    lo = np.zeros(n, dtype=np.int64)
    for x, y in L.cover_indices:
        up[x] += 1
        lo[y] += 1
    return [
        (int(L.heights[k]), int(lo[k]), int(up[k]), int(L.leq[k].sum()), int(L.leq[:, k].sum()))
        for k in range(n)
    ]


def find_isomorphism(L1: FinitePoset, L2: FinitePoset, fixed: Mapping[str, str] | None = None):
    """An order isomorphism ``L1 -> L2`` as a dict of ids, or ``None``.

    For lattices an order isomorphism preserves join and meet.  ``fixed``
    pins part of the map in advance.
    """
    n = len(L1)
    if n != len(L2) or len(L1.cover_indices) != len(L2.cover_indices):
        return None
    inv1, inv2 = _invariants(L1), _invariants(L2)
    if sorted(inv1) != sorted(inv2):
        return None
    cand = [[b for b in range(n) if inv2[b] == inv1[a]] for a in range(n)]
    order = sorted(range(n), key=lambda a: (len(cand[a]), inv1[a][0], a))
    f = [-1] * n
    used = [False] * n
    leq1, leq2 = L1.leq, L2.leq

    if fixed:
        for x, y in fixed.items():
            a, b = L1.idx(x), L2.idx(y)
            if b not in cand[a] or used[b]:
                return None
            f[a] = b
            used[b] = True
        assigned = [a for a in range(n) if f[a] >= 0]
        for a in assigned:
            for c in assigned:
                if leq1[a, c] != leq2[f[a], f[c]]:
                    return None
        order = [a for a in order if f[a] < 0]

    done = [a for a in range(n) if f[a] >= 0]

    def extend(k):
        if k == len(order):
            return True
        a = order[k]
        for b in cand[a]:
            if used[b]:
                continue
            if all(leq1[a, c] == leq2[b, f[c]] and leq1[c, a] == leq2[f[c], b] for c in done):
                f[a] = b
                used[b] = True
                done.append(a)
                if extend(k + 1):
                    return True
                done.pop()
                used[b] = False
                f[a] = -1
        return False

    if not extend(0):
        return None
    return {L1.elements[a]: L2.elements[f[a]] for a in range(n)}


def is_isomorphic(L1, L2):
    return find_isomorphism(L1, L2) is not None


def product_lattice(*chains_or_lattices: FiniteLattice) -> FiniteLattice:
    """Direct product, elements named by comma-joined coordinates."""
    Ls = chains_or_lattices
    tuples = list(product(*[range(len(L)) for L in Ls]))
    names = [",".join(L.elements[k] for L, k in zip(Ls, t)) for t in tuples]
    m = len(tuples)
    leq = np.ones((m, m), dtype=bool)
    for pos, L in enumerate(Ls):
        col = np.array([t[pos] for t in tuples])
        leq &= L.leq[col[:, None], col[None, :]]
    return FiniteLattice.from_leq(names, leq)
