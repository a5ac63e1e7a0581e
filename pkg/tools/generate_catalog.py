"""Regenerate the shipped catalog data under src/starfree/catalog/data/.

Orders with hand-written recipes are built from ``starfree.catalog.recipes``.
The 2- and 3-groups of orders 27 and 32 (stretch tier) are enumerated as
central extensions 1 -> C_p -> E -> Q -> 1 over every group Q of order n/p:
normalized 2-cocycles Q x Q -> F_p form a linear space, and one extension
is built per class in H^2 = Z^2 / B^2, then deduplicated up to isomorphism.
Every p-group has a central subgroup of order p, so the list is complete.

Usage:
    python tools/generate_catalog.py [--out DIR]
"""

from __future__ import annotations

import argparse
import hashlib
import itertools
import json
import sys
import time
from pathlib import Path

import numpy as np

from starfree.catalog import DATA_VERSION, default_data_dir
from starfree.catalog.recipes import ORDER_NAMES, RECIPES, describe
from starfree.group import FiniteGroup, class_sizes, from_cayley_table
from starfree.morphisms import are_isomorphic, fingerprint, minimal_generating_set

STRETCH_PGROUPS = {27: 3, 32: 2}


# --------------------------------------------------------------------------
# linear algebra over F_p


def _row_reduce(A: np.ndarray, p: int) -> tuple[np.ndarray, list[int]]:
    A = A.copy() % p
    rows, cols = A.shape
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.flatnonzero(A[r:, c])
        if nz.size == 0:
            continue
        k = r + nz[0]
        A[[r, k]] = A[[k, r]]
        A[r] = (A[r] * pow(int(A[r, c]), -1, p)) % p
        others = np.flatnonzero(A[:, c])
        others = others[others != r]
        A[others] = (A[others] - np.outer(A[others, c], A[r])) % p
        pivots.append(c)
        r += 1
    return A[:r], pivots


def _nullspace(A: np.ndarray, p: int) -> np.ndarray:
    R, pivots = _row_reduce(A, p)
    cols = A.shape[1]
    free = [c for c in range(cols) if c not in set(pivots)]
    basis = []
    for f in free:
        v = np.zeros(cols, dtype=np.int64)
        v[f] = 1
        for i, pc in enumerate(pivots):
            v[pc] = (-R[i, f]) % p
        basis.append(v)
    return np.array(basis, dtype=np.int64).reshape(len(basis), cols)


def _complement(Z: np.ndarray, B: np.ndarray, p: int) -> np.ndarray:
    """Vectors of Z that extend a basis of span(B) to a basis of span(Z)."""
    span, _ = _row_reduce(B, p) if len(B) else (np.zeros((0, Z.shape[1]), dtype=np.int64), [])
    rank = len(span)
    extra = []
    for z in Z:
        trial = np.vstack([span, z[None, :]])
        new, _ = _row_reduce(trial, p)
        if len(new) > rank:
            span, rank = new, len(new)
            extra.append(z)
    return np.array(extra, dtype=np.int64).reshape(len(extra), Z.shape[1])


def central_extensions(Q: FiniteGroup, p: int):
    """Yield one extension group per class of H^2(Q, F_p)."""
    q = Q.order
    e = Q.identity
    nonid = [x for x in range(q) if x != e]
    var = {(a, b): i for i, (a, b) in enumerate(itertools.product(nonid, nonid))}
    nv = len(var)
    rows = []
    t = Q.table
    # f(b,c) - f(ab,c) + f(a,bc) - f(a,b) = 0
    for a, b, c in itertools.product(nonid, repeat=3):
        row = np.zeros(nv, dtype=np.int64)
        for (x, y), s in (((b, c), 1), ((int(t[a, b]), c), -1), ((a, int(t[b, c])), 1), ((a, b), -1)):
            if x != e and y != e:
                row[var[(x, y)]] += s
        rows.append(row % p)
    Z = _nullspace(np.array(rows), p)
    # coboundaries (dg)(a,b) = g(a) + g(b) - g(ab)
    B = []
    for g in nonid:
        v = np.zeros(nv, dtype=np.int64)
        for (a, b), i in var.items():
            v[i] = (a == g) + (b == g) - (int(t[a, b]) == g)
        B.append(v % p)
    comp = _complement(Z, np.array(B), p)
    for coeffs in itertools.product(range(p), repeat=len(comp)):
        f = (np.asarray(coeffs) @ comp) % p if len(comp) else np.zeros(nv, dtype=np.int64)
        cocycle = np.zeros((q, q), dtype=np.int64)
        for (a, b), i in var.items():
            cocycle[a, b] = f[i]
        # (x, s)(y, u) = (xy, s + u + f(x, y)), index x*p + s
        xs = np.repeat(np.arange(q), p)
        ss = np.tile(np.arange(p), q)
        table = t[xs[:, None], xs[None, :]] * p + (ss[:, None] + ss[None, :] + cocycle[xs[:, None], xs[None, :]]) % p
        yield from_cayley_table(table), coeffs


def _abelian_name(G: FiniteGroup) -> str:
    # invariant factors from |{x : x^k = 1}| for prime powers k
    n = G.order
    p = next(d for d in range(2, n + 1) if n % d == 0)
    counts = []
    k = 1
    while True:
        c = int(np.count_nonzero(k % G.element_orders == 0))
        counts.append(c)
        if c == n:
            break
        k *= p
    # counts[i] = |Omega_i|; number of cyclic factors of order >= p^i
    ranks = [round(np.log(counts[i] / counts[i - 1]) / np.log(p)) for i in range(1, len(counts))]
    factors = []
    for i, r in enumerate(ranks, start=1):
        nxt = ranks[i] if i < len(ranks) else 0
        factors += [p**i] * (r - nxt)
    return "x".join(f"C{m}" for m in sorted(factors, reverse=True))


def pgroups(n: int, p: int, quotients: list[FiniteGroup]) -> list[FiniteGroup]:
    reps: dict[tuple, list[FiniteGroup]] = {}
    for Q in quotients:
        for E, _ in central_extensions(Q, p):
            E = E.with_label(f"ext of C{p} by {Q.label}")
            fp = fingerprint(E)
            bucket = reps.setdefault(fp, [])
            if not any(are_isomorphic(E, R) for R in bucket):
                bucket.append(E)
    return [g for b in reps.values() for g in b]


# --------------------------------------------------------------------------
# serialization


def permutation_generators(G: FiniteGroup) -> list[list[list[int]]]:
    """Right regular representation of a minimal generating set, as cycles."""
    from starfree.group import Permutation

    out = []
    for g in minimal_generating_set(G):
        perm = Permutation(tuple(int(v) for v in G.table[:, g]))
        out.append(perm.cycles())
    return out


def entry(G: FiniteGroup, name: str, recipe: str) -> dict:
    return {
        "name": name,
        "degree": G.order,
        "generators": permutation_generators(G),
        "recipe": recipe,
        "expected": {
            "center_size": int(G.center_mask.sum()),
            "abelian": bool(G.is_abelian),
            "class_sizes": class_sizes(G),
        },
    }


def _sort_key(G: FiniteGroup):
    return (not G.is_abelian, fingerprint(G))


def main(argv: list[str] | None = None) -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--out", type=Path, default=default_data_dir())
    args = ap.parse_args(argv)
    out: Path = args.out
    out.mkdir(parents=True, exist_ok=True)

    docs: dict[int, list[dict]] = {}
    for n, names in sorted(ORDER_NAMES.items()):
        docs[n] = [entry(RECIPES[nm](), nm, describe(nm)) for nm in names]

    for n, p in STRETCH_PGROUPS.items():
        t0 = time.time()
        quotients = [RECIPES[nm]() for nm in ORDER_NAMES[n // p]]
        found = sorted(pgroups(n, p, quotients), key=_sort_key)
        named = {nm: RECIPES[nm]() for nm in ORDER_NAMES.get(n, [])}
        entries, k = [], 0
        for G in found:
            match = next((nm for nm, R in named.items() if are_isomorphic(G, R)), None)
            if match:
                entries.append(entry(named[match], match, describe(match)))
            elif G.is_abelian:
                nm = _abelian_name(G)
                entries.append(entry(G, nm, "direct product " + " x ".join(nm.split("x"))))
            else:
                k += 1
                entries.append(entry(G, f"G{n}_{k:02d}", f"central extension of C{p} by {G.label[len(f'ext of C{p} by '):]}"))
        if named and len(named) != len(found):
            print(f"order {n}: recipes give {len(named)} groups, extensions give {len(found)}", file=sys.stderr)
            return 1
        docs[n] = entries
        print(f"order {n}: {len(found)} groups in {time.time() - t0:.1f}s", file=sys.stderr)

    sums = []
    for n, groups in sorted(docs.items()):
        path = out / f"order_{n:02d}.json"
        body = ",\n  ".join(json.dumps(g, separators=(", ", ": ")) for g in groups)
        text = f'{{\n "version": "{DATA_VERSION}",\n "order": {n},\n "groups": [\n  {body}\n ]\n}}\n'
        path.write_text(text, encoding="utf-8")
        sums.append(f"{hashlib.sha256(text.encode()).hexdigest()}  {path.name}")
    (out / "SHA256SUMS").write_text("\n".join(sums) + "\n", encoding="utf-8")
    print(f"wrote {len(docs)} order files to {out}", file=sys.stderr)
    return 0


if __name__ == "__main__":
    sys.exit(main())
