"""Catalog of small groups, complete up to isomorphism for supported orders.

The data lives in one JSON document per order under a versioned directory
(``data/v1`` inside the package, or ``$STARFREE_CATALOG_DIR``). Each
document lists groups by permutation generators together with the
invariants they must reproduce; a ``SHA256SUMS`` file guards the documents
against accidental edits.

Supported orders are 1-24, 30, 50 and 60. Orders 25-29, 31 and 32 form an
optional stretch tier (the 51 groups of order 32 dominate its cost).
"""

from __future__ import annotations

import hashlib
import json
import os
import threading
import warnings
from dataclasses import dataclass
from pathlib import Path

from starfree.errors import CatalogIntegrityError, UnknownName, UnsupportedOrder
from starfree.group import FiniteGroup, Permutation, class_sizes, from_permutation_generators
from starfree.morphisms import are_isomorphic, fingerprint

DATA_VERSION = "v1"
CORE_ORDERS = frozenset(range(1, 25)) | {30, 50, 60}
STRETCH_ORDERS = frozenset({25, 26, 27, 28, 29, 31, 32})

# number of isomorphism classes of groups of order n
KNOWN_COUNTS = {
    1: 1, 2: 1, 3: 1, 4: 2, 5: 1, 6: 2, 7: 1, 8: 5, 9: 2, 10: 2, 11: 1, 12: 5,
    13: 1, 14: 2, 15: 1, 16: 14, 17: 1, 18: 5, 19: 1, 20: 5, 21: 2, 22: 2, 23: 1,
    24: 15, 25: 2, 26: 2, 27: 5, 28: 4, 29: 1, 30: 4, 31: 1, 32: 51, 50: 5, 60: 13,
}


class CatalogIncompleteWarning(UserWarning):
    """A group of supported order matched no catalog entry."""


def default_data_dir() -> Path:
    return Path(__file__).parent / "data" / DATA_VERSION


def data_dir() -> Path:
    env = os.environ.get("STARFREE_CATALOG_DIR")
    return Path(env) if env else default_data_dir()


@dataclass(frozen=True)
class Expected:
    center_size: int
    abelian: bool
    class_sizes: tuple[int, ...]


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    order: int
    degree: int
    generators: tuple[Permutation, ...]
    recipe: str
    expected: Expected

    @classmethod
    def from_json(cls, order: int, doc: dict) -> "CatalogEntry":
        degree = int(doc["degree"])
        gens = tuple(Permutation.from_cycles(degree, cycles) for cycles in doc["generators"])
        exp = doc["expected"]
        return cls(
            name=doc["name"],
            order=order,
            degree=degree,
            generators=gens,
            recipe=doc.get("recipe", ""),
            expected=Expected(int(exp["center_size"]), bool(exp["abelian"]), tuple(exp["class_sizes"])),
        )

    def build(self) -> FiniteGroup:
        """Construct the group and check it against ``expected``."""
        G = from_permutation_generators(self.generators, self.name)
        got = Expected(int(G.center_mask.sum()), G.is_abelian, tuple(class_sizes(G)))
        if G.order != self.order or got != self.expected:
            raise CatalogIntegrityError(
                f"{self.name}: built order {G.order} with {got}, expected order {self.order} with {self.expected}"
            )
        return G


class Catalog:
    """Lazy, thread-safe view of one catalog data directory."""

    def __init__(self, directory: Path | str | None = None):
        self.directory = Path(directory) if directory is not None else data_dir()
        self._lock = threading.RLock()
        self._sums: dict[str, str] | None = None
        self._entries: dict[int, list[CatalogEntry]] = {}
        self._groups: dict[str, FiniteGroup] = {}
        self._name_order: dict[str, int] | None = None

    # -- raw data

    def _checksums(self) -> dict[str, str]:
        if self._sums is None:
            path = self.directory / "SHA256SUMS"
            if not path.exists():
                raise CatalogIntegrityError(f"missing checksum file {path}")
            sums = {}
            for line in path.read_text(encoding="utf-8").splitlines():
                if line.strip():
                    digest, fname = line.split()
                    sums[fname] = digest
            self._sums = sums
        return self._sums

    def available_orders(self) -> list[int]:
        with self._lock:
            return sorted(int(f[len("order_"):-len(".json")]) for f in self._checksums())

    def entries(self, n: int) -> list[CatalogEntry]:
        with self._lock:
            if n not in self._entries:
                fname = f"order_{n:02d}.json"
                sums = self._checksums()
                if fname not in sums:
                    raise UnsupportedOrder(f"no catalog data for order {n}")
                raw = (self.directory / fname).read_bytes()
                if hashlib.sha256(raw).hexdigest() != sums[fname]:
                    raise CatalogIntegrityError(f"{fname} does not match SHA256SUMS")
                doc = json.loads(raw.decode("utf-8"))
                if doc.get("order") != n:
                    raise CatalogIntegrityError(f"{fname} declares order {doc.get('order')}")
                self._entries[n] = [CatalogEntry.from_json(n, g) for g in doc["groups"]]
            return list(self._entries[n])

    def _names(self) -> dict[str, int]:
        with self._lock:
            if self._name_order is None:
                index: dict[str, int] = {}
                for n in self.available_orders():
                    for e in self.entries(n):
                        if e.name in index:
                            raise CatalogIntegrityError(f"duplicate name {e.name}")
                        index[e.name] = n
                self._name_order = index
            return self._name_order

    def names(self) -> list[str]:
        return list(self._names())

    # -- groups

    def build(self, name: str) -> FiniteGroup:
        """The catalog group called ``name``; repeated calls share one object."""
        with self._lock:
            if name not in self._groups:
                order = self._names().get(name)
                if order is None:
                    raise UnknownName(f"unknown group name {name!r}")
                entry = next(e for e in self.entries(order) if e.name == name)
                self._groups[name] = entry.build()
            return self._groups[name]

    def all_groups_of_order(self, n: int, *, stretch: bool = False) -> list[FiniteGroup]:
        """One group per isomorphism class of order n, in catalog order."""
        if n not in CORE_ORDERS and not (stretch and n in STRETCH_ORDERS):
            tier = " (stretch tier; pass stretch=True)" if n in STRETCH_ORDERS else ""
            raise UnsupportedOrder(f"order {n} is not supported{tier}")
        return [self.build(e.name) for e in self.entries(n)]

    def identify(self, G: FiniteGroup) -> str | None:
        """Name of the catalog group isomorphic to G, or None."""
        n = G.order
        if n not in CORE_ORDERS | STRETCH_ORDERS or n not in self.available_orders():
            return None
        fp = fingerprint(G)
        for H in self.all_groups_of_order(n, stretch=True):
            if fingerprint(H) == fp and are_isomorphic(G, H):
                return H.label
        warnings.warn(
            f"no catalog group of order {n} matches; the catalog is incomplete for this order",
            CatalogIncompleteWarning,
            stacklevel=2,
        )
        return None

    def validate_order(self, n: int) -> list[tuple[str, str]]:
        """Isomorphic pairs among the entries of order n (empty when sound).

        Also raises :class:`CatalogIntegrityError` if the entry count differs
        from the known number of groups of that order.
        """
        groups = self.all_groups_of_order(n, stretch=True)
        if n in KNOWN_COUNTS and len(groups) != KNOWN_COUNTS[n]:
            raise CatalogIntegrityError(f"order {n}: {len(groups)} entries, expected {KNOWN_COUNTS[n]}")
        dupes = []
        for i, G in enumerate(groups):
            for H in groups[i + 1:]:
                if are_isomorphic(G, H):
                    dupes.append((G.label, H.label))
        return dupes


_default: Catalog | None = None
_default_lock = threading.Lock()


def default_catalog() -> Catalog:
    """Shared catalog for the current data directory."""
    global _default
    with _default_lock:
        if _default is None or _default.directory != data_dir():
            _default = Catalog()
        return _default


def build(name: str) -> FiniteGroup:
    return default_catalog().build(name)


def all_groups_of_order(n: int, *, stretch: bool = False) -> list[FiniteGroup]:
    return default_catalog().all_groups_of_order(n, stretch=stretch)


def identify(G: FiniteGroup) -> str | None:
    return default_catalog().identify(G)


def entries(n: int) -> list[CatalogEntry]:
    return default_catalog().entries(n)


def supported_orders(*, stretch: bool = False) -> frozenset[int]:
    return CORE_ORDERS | STRETCH_ORDERS if stretch else CORE_ORDERS
