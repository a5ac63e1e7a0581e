"""Generating sets, isomorphism tests and automorphism groups.

Isomorphisms are found by backtracking over images of a minimal generating
set, after a cheap screen on invariants. Candidate images must share the
per-element signature (order, centralizer size, number of square roots),
and pairwise products must keep their orders.
"""

from __future__ import annotations

import math
from collections import Counter, deque
from functools import lru_cache

import numpy as np

from starfree import kernels
from starfree.errors import ClosureTooLarge
from starfree.group import FiniteGroup, class_sizes, subgroup_closure

SEARCH_BOUND = 64
"""Largest order accepted by the backtracking searches."""

AUTOMORPHISM_CAP = 50_000


def _signatures(G: FiniteGroup) -> np.ndarray:
    sq = G.table[np.arange(G.order), np.arange(G.order)]
    roots = np.bincount(sq, minlength=G.order)
    return np.stack([G.element_orders, G.centralizer_sizes, roots], axis=1)


def derived_subgroup(G: FiniteGroup) -> frozenset[int]:
    t, inv = G.table, G.inverses
    comms = np.unique(t[t[inv[:, None], inv[None, :]], t])  # a^-1 b^-1 a b
    return subgroup_closure(G, comms.tolist())


def fingerprint(G: FiniteGroup) -> tuple:
    """Isomorphism invariant used to screen before backtracking."""
    sig = Counter(map(tuple, _signatures(G).tolist()))
    return (
        G.order,
        G.is_abelian,
        int(G.center_mask.sum()),
        tuple(sorted(Counter(G.element_orders.tolist()).items())),
        tuple(class_sizes(G)),
        len(derived_subgroup(G)),
        tuple(sorted(sig.items())),
    )


def _prime_factors(n: int) -> list[int]:
    ps, p = [], 2
    while p * p <= n:
        if n % p == 0:
            ps.append(p)
            while n % p == 0:
                n //= p
        p += 1
    if n > 1:
        ps.append(n)
    return ps


def _rank_lower_bound(G: FiniteGroup) -> int:
    # rank of the abelianization, exact for p-groups
    D = np.zeros(G.order, dtype=bool)
    D[list(derived_subgroup(G))] = True
    best = 1 if G.order > 1 else 0
    idx = np.arange(G.order)
    for p in _prime_factors(G.order):
        x = np.full(G.order, G.identity)
        for _ in range(p):
            x = G.table[x, idx]
        count = int(D[x].sum()) // int(D.sum())
        best = max(best, round(math.log(count, p)) if count > 1 else 0)
    return best


def minimal_generating_set(G: FiniteGroup) -> tuple[int, ...]:
    """A smallest tuple of elements generating G.

    Sizes are tried in increasing order starting from the rank of the
    abelianization; elements of larger order are tried first.
    """
    return _mgs_cached(G)


@lru_cache(maxsize=512)
def _mgs_cached(G: FiniteGroup) -> tuple[int, ...]:
    n = G.order
    if n == 1:
        return ()
    order = sorted(range(n), key=lambda x: (-int(G.element_orders[x]), x))
    order = [x for x in order if x != G.identity]

    def search(size: int, start: int, chosen: list[int], sub: frozenset[int]) -> tuple[int, ...] | None:
        if len(sub) == n:
            return tuple(chosen)
        if len(chosen) == size:
            return None
        for i in range(start, len(order)):
            x = order[i]
            if x in sub:
                continue
            found = search(size, i + 1, chosen + [x], subgroup_closure(G, chosen + [x]))
            if found is not None:
                return found
        return None

    for size in range(_rank_lower_bound(G), n):
        found = search(size, 0, [], frozenset([G.identity]))
        if found is not None:
            return found
    raise AssertionError("unreachable: the whole group generates itself")


def _spanning_tree(G: FiniteGroup, gens: tuple[int, ...]):
    n = G.order
    parent = np.full(n, -1, dtype=np.int64)
    via = np.full(n, -1, dtype=np.int64)
    bfs = [G.identity]
    seen = {G.identity}
    queue = deque([G.identity])
    while queue:
        x = queue.popleft()
        for j, g in enumerate(gens):
            y = int(G.table[x, g])
            if y not in seen:
                seen.add(y)
                parent[y], via[y] = x, j
                bfs.append(y)
                queue.append(y)
    return np.asarray(bfs, dtype=np.int64), parent, via


def _search(G: FiniteGroup, H: FiniteGroup, limit: int) -> np.ndarray:
    gens = minimal_generating_set(G)
    if not gens:
        return np.zeros((1, 1), dtype=np.int64) + H.identity
    sigG, sigH = _signatures(G), _signatures(H)
    cands = [np.flatnonzero((sigH == sigG[g]).all(axis=1)) for g in gens]
    width = max(1, max(len(c) for c in cands))
    cand = np.zeros((len(gens), width), dtype=np.int64)
    for i, c in enumerate(cands):
        cand[i, : len(c)] = c
    ncand = np.asarray([len(c) for c in cands], dtype=np.int64)
    limit = max(1, min(limit, int(np.prod(ncand, dtype=object))))
    bfs, parent, via = _spanning_tree(G, gens)
    return kernels.hom_search(
        G.table, H.table, H.identity, G.element_orders, H.element_orders,
        np.asarray(gens), cand, ncand, bfs, parent, via, limit,
    )


def _check_bound(G: FiniteGroup, bound: int) -> None:
    if G.order > bound:
        raise ClosureTooLarge(f"order {G.order} exceeds the search bound {bound}")


def find_isomorphism(G: FiniteGroup, H: FiniteGroup, *, bound: int = SEARCH_BOUND) -> np.ndarray | None:
    """An isomorphism G -> H as an image array, or None."""
    if G.order != H.order:
        return None
    _check_bound(G, bound)
    if fingerprint(G) != fingerprint(H):
        return None
    found = _search(G, H, 1)
    return found[0] if len(found) else None


def are_isomorphic(G: FiniteGroup, H: FiniteGroup, *, bound: int = SEARCH_BOUND) -> bool:
    return find_isomorphism(G, H, bound=bound) is not None


def is_isomorphism(G: FiniteGroup, H: FiniteGroup, phi) -> bool:
    """True iff ``phi`` is a bijection with phi(ab) = phi(a)phi(b) for all a, b."""
    phi = np.asarray(phi, dtype=np.int64)
    if G.order != H.order or phi.shape != (G.order,) or np.unique(phi).size != G.order:
        return False
    return bool(np.array_equal(phi[G.table], H.table[phi[:, None], phi[None, :]]))


def automorphisms(G: FiniteGroup, *, bound: int = SEARCH_BOUND, cap: int = AUTOMORPHISM_CAP) -> list[np.ndarray]:
    """All automorphisms of G as image arrays, the identity map first."""
    _check_bound(G, bound)
    found = _search(G, G, cap + 1)
    if len(found) > cap:
        raise ClosureTooLarge(f"more than {cap} automorphisms")
    out = sorted((tuple(r) for r in found.tolist()))
    return [np.asarray(r, dtype=np.int64) for r in out]
