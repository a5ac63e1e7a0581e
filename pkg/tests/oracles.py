"""Brute-force reference implementations used to pin expected values.

Everything here is deliberately naive and shares no code with the library
beyond reading multiplication tables.
"""

from __future__ import annotations

import itertools
import math
from fractions import Fraction


def perm_closure(gens, degree):
    """All products of the generators, as a set of image tuples."""
    ident = tuple(range(degree))
    elems = {ident}
    frontier = [ident]
    while frontier:
        nxt = []
        for p in frontier:
            for g in gens:
                q = tuple(g[p[i]] for i in range(degree))
                if q not in elems:
                    elems.add(q)
                    nxt.append(q)
        frontier = nxt
    return elems


def cycles_to_images(degree, cycles):
    img = list(range(degree))
    for c in cycles:
        for i, p in enumerate(c):
            img[p] = c[(i + 1) % len(c)]
    return tuple(img)


def commute_pairs(table):
    n = len(table)
    return [[table[a][b] == table[b][a] for b in range(n)] for a in range(n)]


def center(table):
    c = commute_pairs(table)
    return {a for a in range(len(table)) if all(c[a])}


def centralizer_size(table, x):
    return sum(1 for g in range(len(table)) if table[g][x] == table[x][g])


def commuting_graph(table):
    """(vertices, edge set) by a direct pairwise scan."""
    z = center(table)
    verts = [v for v in range(len(table)) if v not in z]
    edges = {(a, b) for a, b in itertools.combinations(verts, 2) if table[a][b] == table[b][a]}
    return verts, edges


def components(verts, edges):
    parent = {v: v for v in verts}

    def find(v):
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    for a, b in edges:
        parent[find(a)] = find(b)
    groups = {}
    for v in verts:
        groups.setdefault(find(v), set()).add(v)
    out = []
    for comp in groups.values():
        e = sum(1 for a, b in edges if a in comp)
        out.append((len(comp), e))
    return sorted(out, reverse=True)


def induced_star_number(table):
    """max over v of the largest independent subset of N(v), plus one.

    Checks every subset of each neighbourhood.
    """
    verts, edges = commuting_graph(table)
    adj = {v: set() for v in verts}
    for a, b in edges:
        adj[a].add(b)
        adj[b].add(a)
    best = 0
    for v in verts:
        nb = sorted(adj[v])
        for r in range(len(nb), best, -1):
            if any(all(b not in adj[a] for a, b in itertools.combinations(sub, 2)) for sub in itertools.combinations(nb, r)):
                best = r
                break
    return best + 1


def automorphism_count(table):
    """Number of table-preserving bijections, by trying all of them."""
    n = len(table)
    count = 0
    for p in itertools.permutations(range(n)):
        if all(p[table[a][b]] == table[p[a]][p[b]] for a in range(n) for b in range(n)):
            count += 1
    return count


def solve_class_equation(sizes, z):
    """Solutions (n, multiplicities) found by scanning n <= z * lcm(sizes).

    For each n the multiplicities are found as a coin problem in integers:
    coin n/s_i used m_i >= 1 times with total n - z.
    """
    L = math.lcm(*sizes)
    out = []
    for n in range(1, z * L + 1):
        if not all(n % s == 0 and z < s < n for s in sizes):
            continue
        coins = [n // s for s in sizes]

        def rec(i, left, ms):
            if i == len(coins):
                if left == 0:
                    out.append((n, tuple(ms)))
                return
            for m in range(1, left // coins[i] + 1):
                rec(i + 1, left - m * coins[i], ms + [m])

        rec(0, n - z, [])
    return sorted(out)


def solve_class_equation_raw(sizes, z, max_m=60):
    """Integral n = z / (1 - sum m_i/s_i) with no divisibility filters."""
    out = []
    for ms in itertools.product(*(range(1, s) for s in sizes)):
        acc = sum(Fraction(m, s) for m, s in zip(ms, sizes))
        if acc < 1:
            n = Fraction(z) / (1 - acc)
            if n.denominator == 1:
                out.append((int(n), ms))
    return sorted(out)
