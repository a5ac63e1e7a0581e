"""Class-equation arithmetic.

For a group of order n with center of size z and non-central centralizer
sizes n_1 < ... < n_m, each used m_i >= 1 times, the class equation reads

    n - z = sum_i m_i * n / n_i,   i.e.   n = z / (1 - sum_i m_i / n_i).

:func:`solve` enumerates every multiplicity vector with sum m_i/n_i < 1 in
exact rationals and keeps the integral n that pass the divisibility and
strictness filters. :func:`enumerate_candidates` runs it over every center
size and size set allowed for a strong k-star-free group.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import asdict, dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from starfree.errors import InvalidSizes


@dataclass(frozen=True)
class ClassEquationSolution:
    order: int
    center: int
    sizes: tuple[int, ...]
    multiplicities: tuple[int, ...]

    def __post_init__(self):
        if len(self.sizes) != len(self.multiplicities):
            raise ValueError("sizes and multiplicities differ in length")
        rhs = sum(Fraction(m * self.order, s) for s, m in zip(self.sizes, self.multiplicities))
        if rhs != self.order - self.center:
            raise ValueError(f"class equation fails for {self}")

    @property
    def class_sizes(self) -> tuple[int, ...]:
        """Sizes of the non-central classes, one entry per class."""
        return tuple(self.order // s for s, m in zip(self.sizes, self.multiplicities) for _ in range(m))

    def is_strict(self) -> bool:
        n, z = self.order, self.center
        return all(s % z == 0 and n % s == 0 and z < s < n for s in self.sizes)

    def to_dict(self) -> dict:
        d = asdict(self)
        d["sizes"] = list(self.sizes)
        d["multiplicities"] = list(self.multiplicities)
        return d

    @classmethod
    def from_dict(cls, d: dict) -> "ClassEquationSolution":
        return cls(int(d["order"]), int(d["center"]), tuple(d["sizes"]), tuple(d["multiplicities"]))


def conjugacy_count(sol: ClassEquationSolution) -> int:
    """Number of conjugacy classes, central ones included."""
    return sol.center + sum(sol.multiplicities)


def _check_sizes(sizes: Sequence[int], z: int, strict: bool) -> tuple[int, ...]:
    if isinstance(z, bool) or not isinstance(z, int) or z < 1:
        raise InvalidSizes(f"center size must be a positive integer, got {z!r}")
    sizes = tuple(sizes)
    if not sizes:
        raise InvalidSizes("at least one centralizer size is required")
    if any(isinstance(s, bool) or not isinstance(s, int) for s in sizes):
        raise InvalidSizes(f"sizes must be integers, got {sizes}")
    if list(sizes) != sorted(set(sizes)):
        raise InvalidSizes(f"sizes must be strictly increasing, got {sizes}")
    for s in sizes:
        if s <= z:
            raise InvalidSizes(f"size {s} is not larger than the center size {z}")
        if strict and s % z:
            raise InvalidSizes(f"center size {z} does not divide {s}")
    return sizes


def solve(sizes: Iterable[int], z: int, *, strict: bool = True) -> list[ClassEquationSolution]:
    """All solutions of the class equation using every size at least once.

    With ``strict=False`` only integrality of n is required, which mirrors
    the bare arithmetic (n may then equal a centralizer size or fail to be
    divisible by it). Results are sorted by (n, multiplicities).
    """
    sizes = _check_sizes(list(sizes), z, strict)
    found = []

    def walk(i: int, acc: Fraction, ms: tuple[int, ...]) -> None:
        if i == len(sizes):
            n = Fraction(z) / (1 - acc)
            if n.denominator != 1:
                return
            n = int(n)
            if strict and not all(n % s == 0 and s < n for s in sizes):
                return
            found.append(ClassEquationSolution(n, z, sizes, ms))
            return
        s = sizes[i]
        # the remaining sizes each need at least one class
        rest = sum(Fraction(1, t) for t in sizes[i + 1:])
        m = 1
        while acc + Fraction(m, s) + rest < 1:
            walk(i + 1, acc + Fraction(m, s), ms + (m,))
            m += 1

    walk(0, Fraction(0), ())
    return sorted(found, key=lambda r: (r.order, r.multiplicities))


def distinct_size_bound(k: int) -> int:
    """Largest number of distinct centralizer sizes: m/(2k+1) < 1 gives 2k."""
    if k < 1:
        raise ValueError(f"k must be positive, got {k}")
    return 2 * k


@dataclass(frozen=True)
class CandidateTuple:
    center: int
    sizes: tuple[int, ...]
    solutions: tuple[ClassEquationSolution, ...]


@dataclass(frozen=True)
class CandidateSet:
    k: int
    tuples: tuple[CandidateTuple, ...]

    @property
    def orders(self) -> list[int]:
        return sorted({s.order for t in self.tuples for s in t.solutions})

    def solutions(self) -> list[ClassEquationSolution]:
        return [s for t in self.tuples for s in t.solutions]

    def contains(self, z: int, sizes: Sequence[int], order: int, multiplicities: Sequence[int]) -> bool:
        target = ClassEquationSolution(order, z, tuple(sizes), tuple(multiplicities))
        return any(target == s for s in self.solutions())

    def to_dict(self) -> dict:
        return {
            "k": self.k,
            "orders": self.orders,
            "tuples": [
                {"center": t.center, "sizes": list(t.sizes), "solutions": [s.to_dict() for s in t.solutions]}
                for t in self.tuples
            ],
        }


def enumerate_candidates(k: int) -> CandidateSet:
    """Every class-equation solution open to a strong k-star-free group.

    The center has at most k elements and each non-central centralizer size
    s is a multiple of z with z < s <= k + z. Only size sets with at least
    one solution are kept.
    """
    if k < 1:
        raise ValueError(f"k must be positive, got {k}")
    bound = distinct_size_bound(k)
    out = []
    for z in range(1, k + 1):
        allowed = list(range(2 * z, k + z + 1, z))
        for r in range(1, len(allowed) + 1):
            for sizes in itertools.combinations(allowed, r):
                sols = solve(sizes, z)
                if sols:
                    assert len(sizes) <= bound, (k, z, sizes)
                    out.append(CandidateTuple(z, sizes, tuple(sols)))
    return CandidateSet(k, tuple(out))


def solutions_to_json(solutions: Iterable[ClassEquationSolution]) -> str:
    return json.dumps([s.to_dict() for s in solutions], indent=2)


def solutions_from_json(text: str) -> list[ClassEquationSolution]:
    return [ClassEquationSolution.from_dict(d) for d in json.loads(text)]
