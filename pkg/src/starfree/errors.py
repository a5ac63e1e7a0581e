"""Exception types raised across the package."""


class StarFreeError(Exception):
    """Base class for all package errors."""


class NotAGroup(StarFreeError):
    """A multiplication table fails one of the group axioms.

    ``axiom`` names the failing axiom and ``witness`` holds the offending
    element indices (a triple for associativity).
    """

    def __init__(self, axiom: str, witness: tuple = (), message: str = ""):
        self.axiom = axiom
        self.witness = tuple(witness)
        super().__init__(message or f"{axiom} fails at {self.witness}")


class ClosureTooLarge(StarFreeError):
    """A construction would exceed the configured order bound."""


class AbelianGroup(StarFreeError):
    """An operation needs a non-abelian group (empty commuting graph)."""


class NotAHomomorphism(StarFreeError):
    """An action map does not respect the group law."""

    def __init__(self, pair: tuple, message: str = ""):
        self.pair = tuple(pair)
        super().__init__(message or f"action is not a homomorphism at {self.pair}")


class UnknownName(StarFreeError, KeyError):
    """Catalog lookup by an unregistered name."""

    def __str__(self) -> str:
        return Exception.__str__(self)


class UnsupportedOrder(StarFreeError):
    """The catalog holds no complete list for this order."""


class InvalidSizes(StarFreeError, ValueError):
    """Centralizer sizes incompatible with the given center size."""


class CatalogIntegrityError(StarFreeError):
    """Catalog data does not match its checksum or its expected invariants."""
