"""Finite groups stored as dense multiplication tables.

Elements are the integers ``0..n-1``; ``table[a, b]`` is the index of the
product ``a*b``. Groups built by closure always put the identity at 0.
Permutations multiply left to right: ``(p*q)[i] == q[p[i]]``.
"""

from __future__ import annotations

import logging
from collections import Counter, deque
from dataclasses import dataclass, field
from functools import cached_property
from typing import Callable, Hashable, Iterable, Mapping, Sequence

import numpy as np

from starfree import kernels
from starfree.errors import AbelianGroup, ClosureTooLarge, NotAGroup, NotAHomomorphism

log = logging.getLogger(__name__)

ORDER_BOUND = 256
"""Largest order any construction may produce."""

ASSOCIATIVITY_BOUND = 256
"""Tables up to this order get the exhaustive n^3 associativity check."""


def _frozen(a: np.ndarray) -> np.ndarray:
    a = np.array(a, dtype=np.int64, copy=True)
    a.setflags(write=False)
    return a


@dataclass(frozen=True)
class Permutation:
    """A bijection of ``range(degree)``, stored by images."""

    images: tuple[int, ...]

    def __post_init__(self):
        if sorted(self.images) != list(range(len(self.images))):
            raise ValueError(f"not a permutation: {self.images}")

    @classmethod
    def from_cycles(cls, degree: int, cycles: Iterable[Sequence[int]]) -> "Permutation":
        images = list(range(degree))
        seen: set[int] = set()
        for cyc in cycles:
            for p in cyc:
                if not 0 <= p < degree or p in seen:
                    raise ValueError(f"bad cycle {list(cyc)} for degree {degree}")
                seen.add(p)
            for i, p in enumerate(cyc):
                images[p] = cyc[(i + 1) % len(cyc)]
        return cls(tuple(images))

    @classmethod
    def identity(cls, degree: int) -> "Permutation":
        return cls(tuple(range(degree)))

    @property
    def degree(self) -> int:
        return len(self.images)

    def __mul__(self, other: "Permutation") -> "Permutation":
        q = other.images
        return Permutation(tuple(q[i] for i in self.images))

    def cycles(self) -> list[list[int]]:
        """Non-trivial cycles, each starting at its smallest point."""
        out, seen = [], set()
        for i in range(self.degree):
            if i in seen or self.images[i] == i:
                continue
            cyc, j = [i], self.images[i]
            seen.add(i)
            while j != i:
                seen.add(j)
                cyc.append(j)
                j = self.images[j]
            out.append(cyc)
        return out

    def __str__(self) -> str:
        cyc = self.cycles()
        return "".join("(" + " ".join(map(str, c)) + ")" for c in cyc) or "()"


@dataclass(frozen=True, eq=False)
class FiniteGroup:
    """A validated finite group.

    Use :func:`from_cayley_table`, :func:`from_permutation_generators` or
    one of the product constructions rather than calling this directly.
    ``generators`` records the indices the group was generated from, if
    known. Derived data (orders, centralizers, classes) is computed lazily
    and never changes afterwards.
    """

    table: np.ndarray
    identity: int
    inverses: np.ndarray
    label: str | None = None
    generators: tuple[int, ...] | None = field(default=None)

    @property
    def order(self) -> int:
        return int(self.table.shape[0])

    def __len__(self) -> int:
        return self.order

    def __repr__(self) -> str:
        return f"FiniteGroup(order={self.order}, label={self.label!r})"

    def mul(self, a: int, b: int) -> int:
        return int(self.table[a, b])

    def with_label(self, label: str | None) -> "FiniteGroup":
        return FiniteGroup(self.table, self.identity, self.inverses, label, self.generators)

    @cached_property
    def commutes(self) -> np.ndarray:
        """Boolean matrix, ``[a, b]`` true iff ``ab == ba``."""
        c = self.table == self.table.T
        c.setflags(write=False)
        return c

    @cached_property
    def is_abelian(self) -> bool:
        return bool(self.commutes.all())

    @cached_property
    def element_orders(self) -> np.ndarray:
        n = self.order
        orders = np.zeros(n, dtype=np.int64)
        cur = np.full(n, self.identity, dtype=np.int64)
        idx = np.arange(n)
        for k in range(1, n + 1):
            cur = self.table[cur, idx]
            hit = (cur == self.identity) & (orders == 0)
            orders[hit] = k
            if orders.all():
                break
        orders.setflags(write=False)
        return orders

    @cached_property
    def centralizer_sizes(self) -> np.ndarray:
        s = self.commutes.sum(axis=1).astype(np.int64)
        s.setflags(write=False)
        return s

    @cached_property
    def center_mask(self) -> np.ndarray:
        m = self.centralizer_sizes == self.order
        m.setflags(write=False)
        return m

    @cached_property
    def class_index(self) -> np.ndarray:
        """``class_index[x]`` is the number of the conjugacy class of x.

        Classes are numbered by their smallest element.
        """
        t, inv = self.table, self.inverses
        conj = t[t, inv[:, None]]  # conj[g, x] = g x g^-1
        idx = np.full(self.order, -1, dtype=np.int64)
        k = 0
        for x in range(self.order):
            if idx[x] < 0:
                idx[np.unique(conj[:, x])] = k
                k += 1
        idx.setflags(write=False)
        return idx


# --------------------------------------------------------------------------
# constructors


def from_cayley_table(
    table, label: str | None = None, *, associativity_bound: int = ASSOCIATIVITY_BOUND
) -> FiniteGroup:
    """Validate a square multiplication table and wrap it as a group.

    The identity and inverses are discovered from the table. Associativity
    is checked exhaustively when the order is at most
    ``associativity_bound``; larger tables skip that check.
    """
    t = np.asarray(table)
    if t.ndim != 2 or t.shape[0] != t.shape[1] or t.shape[0] == 0:
        raise NotAGroup("shape", (), f"table must be a non-empty square array, got shape {t.shape}")
    if not np.issubdtype(t.dtype, np.integer):
        raise NotAGroup("closure", (), "table entries must be integers")
    n = t.shape[0]
    t = t.astype(np.int64)
    bad = np.argwhere((t < 0) | (t >= n))
    if bad.size:
        a, b = map(int, bad[0])
        raise NotAGroup("closure", (a, b), f"entry table[{a}][{b}] = {t[a, b]} is outside [0, {n})")

    idx = np.arange(n)
    ids = [e for e in range(n) if np.array_equal(t[e], idx) and np.array_equal(t[:, e], idx)]
    if not ids:
        raise NotAGroup("identity", (), "no two-sided identity element")
    e = ids[0]

    inverses = np.empty(n, dtype=np.int64)
    for a in range(n):
        right = np.flatnonzero(t[a] == e)
        if right.size == 0 or t[right[0], a] != e:
            raise NotAGroup("inverse", (a,), f"element {a} has no two-sided inverse")
        inverses[a] = right[0]

    if n <= associativity_bound:
        triple = kernels.associativity_violation(t)
        if triple is not None:
            raise NotAGroup("associativity", triple, f"(a*b)*c != a*(b*c) for (a, b, c) = {triple}")
    else:
        log.info("skipping associativity check for order %d > %d", n, associativity_bound)

    return FiniteGroup(_frozen(t), int(e), _frozen(inverses), label)


def closure(
    gens: Sequence[Hashable],
    mul: Callable[[Hashable, Hashable], Hashable],
    identity: Hashable,
    bound: int = ORDER_BOUND,
) -> tuple[list[Hashable], np.ndarray]:
    """Breadth-first closure of ``gens`` under ``mul``, starting at ``identity``.

    Returns the elements in discovery order (identity first) and the
    multiplication table on their indices. Generators are applied by right
    multiplication in the order given.
    """
    elems = [identity]
    index = {identity: 0}
    queue = deque([identity])
    while queue:
        x = queue.popleft()
        for g in gens:
            y = mul(x, g)
            if y not in index:
                if len(elems) >= bound:
                    raise ClosureTooLarge(f"closure exceeds the order bound {bound}")
                index[y] = len(elems)
                elems.append(y)
                queue.append(y)
    n = len(elems)
    table = np.empty((n, n), dtype=np.int64)
    for i, a in enumerate(elems):
        table[i] = [index[mul(a, b)] for b in elems]
    return elems, table


def from_generators(
    gens: Sequence[Hashable],
    mul: Callable[[Hashable, Hashable], Hashable],
    identity: Hashable,
    label: str | None = None,
    *,
    bound: int = ORDER_BOUND,
) -> FiniteGroup:
    """Group generated by arbitrary hashable elements under ``mul``."""
    elems, table = closure(gens, mul, identity, bound)
    index = {x: i for i, x in enumerate(elems)}
    G = from_cayley_table(table, label)
    return FiniteGroup(G.table, G.identity, G.inverses, label, tuple(index[g] for g in gens))


def from_permutation_generators(
    gens: Sequence[Permutation], label: str | None = None, *, bound: int = ORDER_BOUND
) -> FiniteGroup:
    """Closure of permutation generators.

    Element 0 is the identity; element order follows the breadth-first
    closure with generators applied in input order. An empty list gives the
    trivial group.
    """
    gens = list(gens)
    degrees = {g.degree for g in gens}
    if len(degrees) > 1:
        raise ValueError(f"generators have mixed degrees {sorted(degrees)}")
    degree = degrees.pop() if degrees else 0
    return from_generators(gens, Permutation.__mul__, Permutation.identity(degree), label, bound=bound)


def trivial_group(label: str = "C1") -> FiniteGroup:
    return from_cayley_table([[0]], label)


# --------------------------------------------------------------------------
# subgroups and conjugation


def center(G: FiniteGroup) -> frozenset[int]:
    return frozenset(int(z) for z in np.flatnonzero(G.center_mask))


def centralizer(G: FiniteGroup, x: int) -> frozenset[int]:
    if not 0 <= x < G.order:
        raise IndexError(f"element {x} out of range for order {G.order}")
    return frozenset(int(g) for g in np.flatnonzero(G.commutes[x]))


def conjugacy_classes(G: FiniteGroup) -> list[frozenset[int]]:
    """Conjugacy classes, ordered by smallest member."""
    blocks: dict[int, list[int]] = {}
    for x, k in enumerate(G.class_index):
        blocks.setdefault(int(k), []).append(x)
    return [frozenset(blocks[k]) for k in sorted(blocks)]


def class_sizes(G: FiniteGroup) -> list[int]:
    """Sorted multiset of conjugacy class sizes."""
    return sorted(Counter(G.class_index.tolist()).values())


def subgroup_closure(G: FiniteGroup, elements: Iterable[int]) -> frozenset[int]:
    """Subgroup of G generated by ``elements``."""
    gens = [int(g) for g in elements]
    seen = {G.identity}
    queue = deque([G.identity])
    while queue:
        x = queue.popleft()
        for g in gens:
            y = int(G.table[x, g])
            if y not in seen:
                seen.add(y)
                queue.append(y)
    return frozenset(seen)


# --------------------------------------------------------------------------
# centralizer profile


@dataclass(frozen=True)
class CentralizerProfile:
    """Center order plus (centralizer size, number of classes) pairs.

    Only non-central classes are counted; entries are sorted by size.
    """

    group_order: int
    center_order: int
    entries: tuple[tuple[int, int], ...]

    def __post_init__(self):
        n, z = self.group_order, self.center_order
        total = z
        for size, count in self.entries:
            if size % z or n % size or not z < size < n:
                raise ValueError(f"centralizer size {size} incompatible with n={n}, z={z}")
            total += count * (n // size)
        if total != n:
            raise ValueError(f"class equation fails: {z} + classes = {total} != {n}")

    @property
    def sizes(self) -> tuple[int, ...]:
        return tuple(s for s, _ in self.entries)

    @property
    def multiplicities(self) -> tuple[int, ...]:
        return tuple(m for _, m in self.entries)


def centralizer_profile(G: FiniteGroup) -> CentralizerProfile:
    if G.is_abelian:
        raise AbelianGroup(f"{G.label or 'group'} is abelian")
    reps = {}
    for x, k in enumerate(G.class_index):
        if not G.center_mask[x]:
            reps.setdefault(int(k), x)
    counts = Counter(int(G.centralizer_sizes[x]) for x in reps.values())
    return CentralizerProfile(G.order, int(G.center_mask.sum()), tuple(sorted(counts.items())))


# --------------------------------------------------------------------------
# products


def direct_product(G: FiniteGroup, H: FiniteGroup, label: str | None = None, *, bound: int = ORDER_BOUND) -> FiniteGroup:
    """G x H with element (g, h) stored at index ``g*|H| + h``."""
    n, m = G.order, H.order
    if n * m > bound:
        raise ClosureTooLarge(f"direct product of order {n * m} exceeds the bound {bound}")
    t = G.table[:, None, :, None] * m + H.table[None, :, None, :]
    table = t.reshape(n * m, n * m)
    inverses = G.inverses[:, None] * m + H.inverses[None, :]
    return FiniteGroup(_frozen(table), G.identity * m + H.identity, _frozen(inverses.ravel()), label)


def is_automorphism(G: FiniteGroup, perm: Sequence[int]) -> bool:
    p = np.asarray(perm, dtype=np.int64)
    if p.shape != (G.order,) or np.unique(p).size != G.order:
        return False
    return bool(np.array_equal(p[G.table], G.table[p[:, None], p[None, :]]))


def semidirect_product(
    N: FiniteGroup,
    H: FiniteGroup,
    action: Mapping[int, Sequence[int]] | Sequence[Sequence[int]],
    label: str | None = None,
    *,
    bound: int = ORDER_BOUND,
) -> FiniteGroup:
    """N x| H with ``(n1, h1)(n2, h2) = (n1 * action[h1](n2), h1 h2)``.

    ``action[h]`` is an automorphism of N given as the image array of N's
    element indices. The map ``h -> action[h]`` must be a homomorphism
    into Aut(N); otherwise :class:`NotAHomomorphism` names a bad pair.
    Indexing matches :func:`direct_product`, so the trivial action
    reproduces it entry for entry.
    """
    n, m = N.order, H.order
    if n * m > bound:
        raise ClosureTooLarge(f"semidirect product of order {n * m} exceeds the bound {bound}")
    act = np.asarray([action[h] for h in range(m)], dtype=np.int64)
    for h in range(m):
        if not is_automorphism(N, act[h]):
            raise NotAHomomorphism((h,), f"action of element {h} is not an automorphism of N")
    composed = act[:, act]  # composed[h1, h2, x] = act[h1][act[h2][x]]
    bad = np.argwhere((act[H.table] != composed).any(axis=2))
    if bad.size:
        h1, h2 = map(int, bad[0])
        raise NotAHomomorphism((h1, h2))
    # row/column index i encodes (nidx[i], hidx[i])
    nidx = np.repeat(np.arange(n), m)
    hidx = np.tile(np.arange(m), n)
    npart = N.table[nidx[:, None], act[hidx[:, None], nidx[None, :]]]
    hpart = H.table[hidx[:, None], hidx[None, :]]
    # validated action: the axioms hold, so skip the n^3 check
    return from_cayley_table(npart * m + hpart, label, associativity_bound=0)


def action_from_generators(
    H: FiniteGroup,
    N: FiniteGroup,
    gens: Sequence[int],
    images: Sequence[Sequence[int]],
) -> list[np.ndarray]:
    """Extend automorphisms of N assigned to generators of H to all of H.

    Raises :class:`NotAHomomorphism` if the assignment does not extend.
    """
    m = H.order
    act: list[np.ndarray | None] = [None] * m
    act[H.identity] = np.arange(N.order)
    imgs = [np.asarray(a, dtype=np.int64) for a in images]
    queue = deque([H.identity])
    while queue:
        x = queue.popleft()
        for g, a in zip(gens, imgs):
            y = int(H.table[x, g])
            val = act[x][a]  # act[x g] = act[x] o act[g]
            if act[y] is None:
                act[y] = val
                queue.append(y)
            elif not np.array_equal(act[y], val):
                raise NotAHomomorphism((x, g), f"generator images do not define an action at {(x, g)}")
    if any(a is None for a in act):
        raise ValueError("gens do not generate H")
    return act  # type: ignore[return-value]
