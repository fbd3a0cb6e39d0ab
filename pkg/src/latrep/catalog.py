"""Named small lattices and generated test catalogs."""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations

import numpy as np

from .order import (
    Chain,
    FiniteLattice,
    FinitePoset,
    NotALattice,
    birkhoff_lattice,
    find_isomorphism,
    is_distributive,
    product_lattice,
    _invariants,
)


def two_chain():
    return Chain(["0", "1"])


def three_chain():
    return Chain(["0", "m", "1"])


def n5():
    return FiniteLattice(list("0abc1"), [("0", "a"), ("a", "b"), ("b", "1"), ("0", "c"), ("c", "1")])


def m3():
    return FiniteLattice(list("0abc1"), [("0", x) for x in "abc"] + [(x, "1") for x in "abc"])


def boolean(k):
    names = [f"a{j}" for j in range(1, k + 1)]
    D, _ = birkhoff_lattice(FinitePoset(names))
    return D


def b2():
    return boolean(2)


def b3():
    return boolean(3)


def rep_example():
    """D with J(D) = {a < b, d}, the colored chain a, b, d, d and Q = D - {a+d}."""
    P = FinitePoset(["a", "b", "d"], [("a", "b")])
    D, _ = birkhoff_lattice(P)
    return D, ["a", "b", "d", "d"], set(D.elements) - {"a+d"}


def construction_example():
    """D with J(D) = {p, q < r, 1}, the chain q, 1, p, r and Q = D - {p+q}."""
    P = FinitePoset(["p", "q", "r", "1"], [("q", "r"), ("p", "1"), ("r", "1")])
    D, _ = birkhoff_lattice(P)
    return D, ["q", "1", "p", "r"], set(D.elements) - {"p+q"}


def natural_posets(n):
    """Strict down-set lists of every naturally labeled poset on ``range(n)``."""
    out = []

    def grow(downs):
        k = len(downs)
        if k == n:
            out.append(list(downs))
            return
        # a strict down-set of k: a down-closed subset of 0..k-1
        for r in range(k + 1):
            for subset in combinations(range(k), r):
                s = set(subset)
                if all(downs[j] <= s for j in s):
                    downs.append(frozenset(s))
                    grow(downs)
                    downs.pop()

    grow([])
    return out


def _dedup(lattices):
    buckets = {}
    out = []
    for L in lattices:
        key = (len(L), len(L.cover_indices), tuple(sorted(_invariants(L))))
        bucket = buckets.setdefault(key, [])
        if any(find_isomorphism(L, M) is not None for M in bucket):
            continue
        bucket.append(L)
        out.append(L)
    return out


def posets_up_to_iso(n, names=None):
    names = names or [f"x{k}" for k in range(n)]
    found = []
    for downs in natural_posets(n):
        leq = np.eye(n, dtype=bool)
        for k, d in enumerate(downs):
            for j in d:
                leq[j, k] = True
        found.append(FinitePoset.from_leq(names[:n], leq))
    return _dedup(found)


@lru_cache(maxsize=None)
def small_lattices(max_size=8):
    """Every lattice with at most ``max_size`` elements, one per isomorphism type."""
    out = [Chain(["0"]), Chain(["0", "1"])]
    for m in range(1, max_size - 1):
        cands = []
        for downs in natural_posets(m):
            n = m + 2
            leq = np.eye(n, dtype=bool)
            leq[0, :] = True
            leq[:, n - 1] = True
            for k, d in enumerate(downs):
                for j in d:
                    leq[j + 1, k + 1] = True
            names = ["0"] + [f"x{k}" for k in range(1, m + 1)] + ["1"]
            try:
                cands.append(FiniteLattice.from_leq(names, leq))
            except NotALattice:
                pass
        out.extend(_dedup(cands))
    return tuple(out)


@lru_cache(maxsize=None)
def ji_unit_catalog(max_base=4):
    """Distributive lattices Down(P) for posets P with a top and at most
    ``max_base`` elements, up to isomorphism.  The top of ``P`` is named
    ``1``, the others ``p, q, r, ...``."""
    letters = "pqrstuvw"
    out = []
    for m in range(0, max_base):
        for P in posets_up_to_iso(m, list(letters[:m])):
            elements = list(P.elements) + ["1"]
            leq = np.ones((m + 1, m + 1), dtype=bool)
            leq[:m, :m] = P.leq
            leq[m, :m] = False
            D, _ = birkhoff_lattice(FinitePoset.from_leq(elements, leq))
            out.append(D)
    return tuple(_dedup(out))


def _boolean_sublattices(k, limit, seed=0):
    """Random {0,1}-sublattices of the Boolean lattice on ``k`` atoms."""
    rng = np.random.default_rng(seed)
    full = (1 << k) - 1
    found = []
    for _ in range(limit):
        gens = set(int(x) for x in rng.integers(0, full + 1, size=rng.integers(1, 5)))
        S = {0, full} | gens
        changed = True
        while changed:
            changed = False
            for a in list(S):
                for b in list(S):
                    for c in (a | b, a & b):
                        if c not in S:
                            S.add(c)
                            changed = True
        S = sorted(S)
        leq = np.array([[a & ~b == 0 for b in S] for a in S])
        found.append(FiniteLattice.from_leq([f"s{v}" for v in S], leq))
    return found


@lru_cache(maxsize=None)
def distributive_catalog(max_size=12):
    """Distributive lattices up to ``max_size`` elements from sources other than
    down-set lattices: the exhaustive small-lattice list, products of
    chains, and sublattices of the 16-element Boolean lattice."""
    pool = [L for L in small_lattices(8) if is_distributive(L)]
    for a in range(1, 7):
        for b in range(a, 7):
            if a * b <= max_size:
                pool.append(product_lattice(Chain([f"{k}" for k in range(a)]), Chain([f"{k}" for k in range(b)])))
    pool.append(product_lattice(*[Chain(["0", "1"])] * 2, Chain(["0", "1", "2"])))
    pool.extend(_boolean_sublattices(4, 300))
    return tuple(L for L in _dedup(pool) if len(L) <= max_size)
