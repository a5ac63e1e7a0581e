"""Hot loops over multiplication tables and adjacency matrices.

Every kernel exists twice: a numba-compiled version (``*_jit``) and a
numpy/Python version (``*_np``). The public names bind to one of them
according to :mod:`starfree._accel`. Both versions must return identical
results; the test suite runs them side by side.
"""

from __future__ import annotations

import numpy as np

from starfree._accel import USE_NUMBA, njit

# --------------------------------------------------------------------------
# associativity


@njit
def _assoc_violation_jit(table):
    n = table.shape[0]
    for a in range(n):
        for b in range(n):
            ab = table[a, b]
            for c in range(n):
                if table[ab, c] != table[a, table[b, c]]:
                    return a, b, c
    return -1, -1, -1


def _assoc_violation_np(table):
    for a in range(table.shape[0]):
        left = table[table[a]]  # (ab)c, rows b, cols c
        right = table[a][table]  # a(bc)
        bad = np.argwhere(left != right)
        if bad.size:
            b, c = bad[0]
            return a, int(b), int(c)
    return -1, -1, -1


def associativity_violation(table: np.ndarray) -> tuple[int, int, int] | None:
    """First triple (a, b, c) in lexicographic order with (ab)c != a(bc)."""
    fn = _assoc_violation_jit if USE_NUMBA else _assoc_violation_np
    a, b, c = fn(np.ascontiguousarray(table, dtype=np.int64))
    if a < 0:
        return None
    return int(a), int(b), int(c)


# --------------------------------------------------------------------------
# homomorphism search
#
# The source group is described by a generating tuple ``gens`` and a
# breadth-first spanning tree: ``bfs[i]`` is reached from ``parent[bfs[i]]``
# by right multiplication with generator number ``via[bfs[i]]``. Candidate
# images for generator i are ``cand[i, :ncand[i]]``.


@njit
def _hom_search_jit(tG, tH, idH, ordG, ordH, gens, cand, ncand, bfs, parent, via, limit):
    n = tG.shape[0]
    r = gens.shape[0]
    found = np.empty((limit, n), dtype=np.int64)
    nfound = 0
    phi = np.empty(n, dtype=np.int64)
    seen = np.empty(n, dtype=np.bool_)
    images = np.empty(r, dtype=np.int64)
    pos = np.zeros(r, dtype=np.int64)
    if r == 0:
        return found[:0]
    level = 0
    pos[0] = 0
    while level >= 0:
        if pos[level] >= ncand[level]:
            level -= 1
            if level >= 0:
                pos[level] += 1
            continue
        h = cand[level, pos[level]]
        ok = True
        for j in range(level):
            if ordH[tH[images[j], h]] != ordG[tG[gens[j], gens[level]]]:
                ok = False
                break
            if ordH[tH[h, images[j]]] != ordG[tG[gens[level], gens[j]]]:
                ok = False
                break
        if not ok:
            pos[level] += 1
            continue
        images[level] = h
        if level + 1 < r:
            level += 1
            pos[level] = 0
            continue
        # full assignment
        for i in range(n):
            seen[i] = False
        phi[bfs[0]] = idH
        good = True
        for i in range(1, n):
            x = bfs[i]
            phi[x] = tH[phi[parent[x]], images[via[x]]]
        for i in range(n):
            v = phi[i]
            if seen[v]:
                good = False
                break
            seen[v] = True
        if good:
            for x in range(n):
                px = phi[x]
                for j in range(r):
                    if phi[tG[x, gens[j]]] != tH[px, images[j]]:
                        good = False
                        break
                if not good:
                    break
        if good:
            for i in range(n):
                found[nfound, i] = phi[i]
            nfound += 1
            if nfound >= limit:
                return found[:nfound]
        pos[level] += 1
    return found[:nfound]


def _hom_search_np(tG, tH, idH, ordG, ordH, gens, cand, ncand, bfs, parent, via, limit):
    n = tG.shape[0]
    r = len(gens)
    found: list[np.ndarray] = []
    if r == 0:
        return np.empty((0, n), dtype=np.int64)
    cols = tG[:, gens]
    images = [0] * r

    def check() -> np.ndarray | None:
        phi = np.empty(n, dtype=np.int64)
        phi[bfs[0]] = idH
        for x in bfs[1:]:
            phi[x] = tH[phi[parent[x]], images[via[x]]]
        if np.unique(phi).size != n:
            return None
        img = np.asarray(images)
        if not np.array_equal(phi[cols], tH[phi[:, None], img[None, :]]):
            return None
        return phi

    def descend(level: int) -> bool:
        g = gens[level]
        for h in cand[level, : ncand[level]]:
            h = int(h)
            if any(
                ordH[tH[images[j], h]] != ordG[tG[gens[j], g]]
                or ordH[tH[h, images[j]]] != ordG[tG[g, gens[j]]]
                for j in range(level)
            ):
                continue
            images[level] = h
            if level + 1 < r:
                if descend(level + 1):
                    return True
                continue
            phi = check()
            if phi is not None:
                found.append(phi)
                if len(found) >= limit:
                    return True
        return False

    descend(0)
    if not found:
        return np.empty((0, n), dtype=np.int64)
    return np.stack(found)


def hom_search(tG, tH, idH, ordG, ordH, gens, cand, ncand, bfs, parent, via, limit):
    """Enumerate bijective homomorphisms G -> H, at most ``limit`` of them.

    Returns an array of shape (k, |G|); row i maps element x of G to
    ``row[x]`` in H.
    """
    fn = _hom_search_jit if USE_NUMBA else _hom_search_np
    as64 = lambda a: np.ascontiguousarray(a, dtype=np.int64)  # noqa: E731
    return fn(
        as64(tG), as64(tH), int(idH), as64(ordG), as64(ordH), as64(gens),
        as64(cand), as64(ncand), as64(bfs), as64(parent), as64(via), int(limit),
    )


# --------------------------------------------------------------------------
# independent sets inside a small graph


@njit
def _independence_jit(adj, target):
    d = adj.shape[0]
    if d == 0:
        return 0
    cand = np.zeros((d + 1, d), dtype=np.bool_)
    pos = np.zeros(d + 1, dtype=np.int64)
    for v in range(d):
        cand[0, v] = True
    best = 0
    depth = 0
    while depth >= 0:
        v = pos[depth]
        while v < d and not cand[depth, v]:
            v += 1
        if v >= d:
            depth -= 1
            continue
        pos[depth] = v + 1
        remaining = 0
        for u in range(v, d):
            if cand[depth, u]:
                remaining += 1
        if depth + remaining <= best:
            depth -= 1
            continue
        if depth + 1 > best:
            best = depth + 1
            if best >= target:
                return best
        for u in range(d):
            cand[depth + 1, u] = u > v and cand[depth, u] and not adj[v, u]
        pos[depth + 1] = v + 1
        depth += 1
    return best


def _independence_np(adj, target):
    d = adj.shape[0]
    nbr = [sum(1 << int(u) for u in np.flatnonzero(adj[v])) for v in range(d)]
    best = 0

    def grow(size: int, cand: int) -> bool:
        nonlocal best
        while cand:
            if size + cand.bit_count() <= best:
                return False
            v = (cand & -cand).bit_length() - 1
            cand &= cand - 1
            if size + 1 > best:
                best = size + 1
                if best >= target:
                    return True
            if grow(size + 1, cand & ~nbr[v]):
                return True
        return False

    grow(0, (1 << d) - 1)
    return best


def independence_number(adj: np.ndarray, target: int | None = None) -> int:
    """Size of a largest independent set of the graph ``adj``.

    With ``target`` the search stops as soon as a set of that size is found,
    so the result is ``min(alpha, target)``.
    """
    d = adj.shape[0]
    t = d + 1 if target is None else int(target)
    if t <= 0:
        return 0
    fn = _independence_jit if USE_NUMBA else _independence_np
    return int(fn(np.ascontiguousarray(adj, dtype=np.bool_), t))
