"""Commuting graphs of finite groups and their star-freeness.

Quick tour::

    from starfree import catalog, graph
    G = catalog.build("A4")
    graph.strong_star_number(G)      # 3
    graph.induced_star_number(G)     # 2
"""

from starfree._accel import backend_name
from starfree.errors import (
    AbelianGroup,
    CatalogIntegrityError,
    ClosureTooLarge,
    InvalidSizes,
    NotAGroup,
    NotAHomomorphism,
    StarFreeError,
    UnknownName,
    UnsupportedOrder,
)
from starfree.group import (
    CentralizerProfile,
    FiniteGroup,
    Permutation,
    center,
    centralizer,
    centralizer_profile,
    conjugacy_classes,
    direct_product,
    from_cayley_table,
    from_permutation_generators,
    semidirect_product,
)
from starfree.morphisms import are_isomorphic, automorphisms, find_isomorphism

__version__ = "0.1.0"

__all__ = [
    "AbelianGroup",
    "CatalogIntegrityError",
    "CentralizerProfile",
    "ClosureTooLarge",
    "FiniteGroup",
    "InvalidSizes",
    "NotAGroup",
    "NotAHomomorphism",
    "Permutation",
    "StarFreeError",
    "UnknownName",
    "UnsupportedOrder",
    "are_isomorphic",
    "automorphisms",
    "backend_name",
    "center",
    "centralizer",
    "centralizer_profile",
    "conjugacy_classes",
    "direct_product",
    "find_isomorphism",
    "from_cayley_table",
    "from_permutation_generators",
    "semidirect_product",
]
