"""Congruences of finite lattices.

A congruence is stored as a canonical label vector: ``labels[k]`` is the
index of the least element (by position) in the block of element ``k``.
Equality of congruences on the same host is then plain tuple equality.

Principal congruences are generated by closing the collapsed pair under
the translations ``x -> x v z`` and ``x -> x ^ z``.  The full congruence
lattice is assembled from the congruences of prime intervals: a
congruence of a finite lattice is determined by the set of prime
intervals it collapses, and joins of congruences correspond to unions of
those sets.
"""

from __future__ import annotations

from functools import cached_property

import numpy as np

from .order import FiniteLattice, LatticeError, join_irreducibles, sublattice


class NotASublattice(LatticeError):
    pass


def _canonical(lab):
    lab = np.asarray(lab)
    first = {}
    out = np.empty(len(lab), dtype=np.int64)
    for k, v in enumerate(lab.tolist()):
        out[k] = first.setdefault(v, k)
    return out


class Congruence:
    """A partition of a lattice's elements compatible with join and meet."""

    def __init__(self, host: FiniteLattice, labels, check=True):
        self.host = host
        lab = _canonical(labels)
        lab.setflags(write=False)
        self.labels = lab
        self._key = tuple(lab.tolist())
        if check and not self.is_compatible():
            raise ValueError("partition does not satisfy the substitution properties")

    @classmethod
    def from_blocks(cls, host, blocks, check=True):
        lab = np.arange(len(host))
        for block in blocks:
            ks = [host.idx(x) for x in block]
            lab[ks] = min(ks)
        seen = sorted(host.idx(x) for b in blocks for x in b)
        if len(seen) != len(set(seen)):
            raise ValueError("blocks overlap")
        return cls(host, lab, check=check)

    @classmethod
    def identity(cls, host):
        return cls(host, np.arange(len(host)), check=False)

    @classmethod
    def full(cls, host):
        return cls(host, np.zeros(len(host), dtype=np.int64), check=False)

    def is_compatible(self):
        lab = self.labels
        for table in (self.host.J, self.host.M):
            rows = lab[table]
            # rows of elements in one block must agree label-wise
            for rep in np.unique(lab):
                members = np.nonzero(lab == rep)[0]
                if len(members) > 1 and (rows[members] != rows[members[0]]).any():
                    return False
        return True

    @cached_property
    def blocks(self):
        groups = {}
        for k, v in enumerate(self._key):
            groups.setdefault(v, []).append(self.host.elements[k])
        return tuple(frozenset(groups[v]) for v in sorted(groups))

    def block_of(self, x):
        v = self.labels[self.host.idx(x)]
        return frozenset(self.host.elements[k] for k in np.nonzero(self.labels == v)[0])

    def related(self, x, y):
        return bool(self.labels[self.host.idx(x)] == self.labels[self.host.idx(y)])

    @cached_property
    def mask(self):
        """Bit ``k`` set iff the ``k``-th prime interval of the host is collapsed."""
        m = 0
        for k, (x, y) in enumerate(self.host.cover_indices):
            if self.labels[x] == self.labels[y]:
                m |= 1 << k
        return m

    @property
    def is_identity(self):
        return len(self.blocks) == len(self.host)

    @property
    def is_full(self):
        return len(self.blocks) == 1

    def __le__(self, other):
        # refinement: every block of self sits inside a block of other
        lab = other.labels
        return all(lab[k] == lab[v] for k, v in enumerate(self._key))

    def __lt__(self, other):
        return self != other and self <= other

    def __eq__(self, other):
        if not isinstance(other, Congruence):
            return NotImplemented
        return self.host.elements == other.host.elements and self._key == other._key

    def __hash__(self):
        return hash((self.host.elements, self._key))

    def __or__(self, other):
        return join_congruences(self.host, [self, other])

    def __and__(self, other):
        pairs = list(zip(self.labels.tolist(), other.labels.tolist()))
        return Congruence(self.host, [hash(p) for p in pairs], check=False)

    def __repr__(self):
        shown = [sorted(b) for b in self.blocks if len(b) > 1]
        return f"Congruence({shown})"


class _Blocks:
    """Union-find on element indices."""

    def __init__(self, n):
        self.parent = list(range(n))

    def find(self, x):
        p = self.parent
        while p[x] != x:
            p[x] = p[p[x]]
            x = p[x]
        return x

    def union(self, x, y):
        x, y = self.find(x), self.find(y)
        if x == y:
            return False
        if y < x:
            x, y = y, x
        self.parent[y] = x
        return True

    def labels(self):
        return [self.find(k) for k in range(len(self.parent))]


def generate(L: FiniteLattice, pairs) -> Congruence:
    """Smallest congruence of ``L`` collapsing every index pair in ``pairs``."""
    uf = _Blocks(len(L))
    queue = []
    for a, b in pairs:
        if uf.union(a, b):
            queue.append((a, b))
    J, M = L.J, L.M
    while queue:
        a, b = queue.pop()
        for table in (J, M):
            xs, ys = table[a], table[b]
            diff = np.nonzero(xs != ys)[0]
            for z in diff.tolist():
                x, y = int(xs[z]), int(ys[z])
                if uf.union(x, y):
                    queue.append((x, y))
    return Congruence(L, uf.labels(), check=False)


def principal_congruence(L: FiniteLattice, a, b) -> Congruence:
    return generate(L, [(L.idx(a), L.idx(b))])


def join_congruences(L, congruences):
    pairs = []
    for theta in congruences:
        lab = theta.labels
        pairs.extend((k, int(v)) for k, v in enumerate(lab.tolist()) if k != v)
    uf = _Blocks(len(L))
    for a, b in pairs:
        uf.union(a, b)
    # the transitive closure of a union of congruences is a congruence
    return Congruence(L, uf.labels(), check=False)


def congruence_from_mask(L, mask) -> Congruence:
    uf = _Blocks(len(L))
    for k, (x, y) in enumerate(L.cover_indices):
        if mask >> k & 1:
            uf.union(x, y)
    return Congruence(L, uf.labels(), check=False)


class ConLattice:
    """The congruence lattice of a finite lattice.

    ``lattice`` is a :class:`FiniteLattice` whose element ids name
    congruences (``0`` identity, ``1`` full, ``t1, t2, ...`` the rest by
    size); ``congruence_of`` maps those ids to :class:`Congruence` values
    and ``principal`` holds the ids of principal congruences.
    """

    def __init__(self, host, lattice, congruence_of, principal, prime_con):
        self.host = host
        self.lattice = lattice
        self.congruence_of = congruence_of
        self.principal = frozenset(principal)
        self.prime_con = prime_con
        self._by_mask = {c.mask: name for name, c in congruence_of.items()}

    def name_of(self, theta: Congruence):
        return self._by_mask[theta.mask]

    def __len__(self):
        return len(self.lattice)

    @property
    def congruences(self):
        return [self.congruence_of[x] for x in self.lattice.elements]

    def principal_congruences(self):
        return [self.congruence_of[x] for x in self.lattice.elements if x in self.principal]

    def pair_congruence(self, a, b):
        """Name of con(a, b) inside the congruence lattice."""
        return self._pair_names[self.host.idx(a), self.host.idx(b)]

    @cached_property
    def _pair_names(self):
        L = self.host
        masks = _pair_masks(L, self.prime_con)
        n = len(L)
        names = np.empty((n, n), dtype=object)
        for a in range(n):
            for b in range(n):
                names[a, b] = self._by_mask[masks[int(L.M[a, b])][int(L.J[a, b])]]
        return names


def prime_congruences(L: FiniteLattice) -> list[Congruence]:
    """con(x, y) for every prime interval, in cover-index order."""
    return [generate(L, [pair]) for pair in L.cover_indices]


def _pair_masks(L, prime_con):
    """masks[a][b] = mask of con(a, b) for every a <= b (dict per a)."""
    n = len(L)
    cover_index = {c: k for k, c in enumerate(L.cover_indices)}
    lower = [[] for _ in range(n)]
    for x, y in L.cover_indices:
        lower[y].append(x)
    order = sorted(range(n), key=lambda k: L.heights[k])
    pm = [t.mask for t in prime_con]
    masks = []
    for a in range(n):
        row = {a: 0}
        for b in order:
            if b == a or not L.leq[a, b]:
                continue
            for x in lower[b]:
                if x in row:
                    row[b] = row[x] | pm[cover_index[(x, b)]]
                    break
        masks.append(row)
    return masks


def con_lattice(L: FiniteLattice) -> ConLattice:
    prime_con = prime_congruences(L)
    by_mask = {}
    for t in prime_con:
        by_mask.setdefault(t.mask, t)
    ident = Congruence.identity(L)
    all_masks = {0}
    generators = list(by_mask)
    frontier = {0}
    while frontier:
        new = set()
        for m in frontier:
            for g in generators:
                u = m | g
                if u not in all_masks:
                    all_masks.add(u)
                    new.add(u)
        frontier = new
    # unions of closed masks are closed, so each mask is one congruence
    ordered = sorted(all_masks, key=lambda m: (bin(m).count("1"), m))
    full_mask = (1 << len(L.cover_indices)) - 1
    names = []
    k = 0
    for m in ordered:
        if m == 0:
            names.append("0")
        elif m == full_mask:
            names.append("1")
        else:
            k += 1
            names.append(f"t{k}")
    congruence_of = {}
    for name, m in zip(names, ordered):
        congruence_of[name] = ident if m == 0 else congruence_from_mask(L, m)
    size = len(ordered)
    leq = np.array([[ordered[a] & ~ordered[b] == 0 for b in range(size)] for a in range(size)])
    lattice = FiniteLattice.from_leq(names, leq)

    masks = _pair_masks(L, prime_con)
    name_by_mask = dict(zip(ordered, names))
    principal = {name_by_mask[m] for row in masks for m in row.values()}
    return ConLattice(L, lattice, congruence_of, principal, prime_con)


def ji_congruences(CL: ConLattice) -> list[Congruence]:
    out = []
    prime_masks = {t.mask for t in CL.prime_con}
    for name in join_irreducibles(CL.lattice):
        theta = CL.congruence_of[name]
        if theta.mask not in prime_masks:
            raise AssertionError(f"join-irreducible congruence {name} is not generated by a prime interval")
        out.append(theta)
    return out


def check_containment_chain(L: FiniteLattice, CL: ConLattice | None = None) -> bool:
    """J+(Con L) within Princ L within Con L."""
    CL = CL or con_lattice(L)
    D = CL.lattice
    jplus = set(join_irreducibles(D)) | {D.zero, D.one}
    return jplus <= CL.principal <= set(D.elements)


def restrict(theta: Congruence, S) -> Congruence:
    """The restriction of ``theta`` to the sublattice ``S`` of its host."""
    L = theta.host
    try:
        sub = sublattice(L, S)
    except LatticeError as exc:
        raise NotASublattice(str(exc)) from None
    lab = [int(theta.labels[L.idx(x)]) for x in sub.elements]
    return Congruence(sub, lab, check=False)


def restrict_to(theta: Congruence, sub: FiniteLattice) -> Congruence:
    """Restriction onto an already-built sublattice object."""
    L = theta.host
    lab = [int(theta.labels[L.idx(x)]) for x in sub.elements]
    return Congruence(sub, lab, check=False)


def is_internal(L: FiniteLattice, theta: Congruence) -> bool:
    if theta.is_identity:
        raise ValueError("internal congruences are nonzero by definition")
    return len(theta.block_of(L.zero)) == 1 and len(theta.block_of(L.one)) == 1


def internal_congruences(L: FiniteLattice, CL: ConLattice | None = None) -> list[Congruence]:
    CL = CL or con_lattice(L)
    return [t for t in CL.congruences if not t.is_identity and is_internal(L, t)]
