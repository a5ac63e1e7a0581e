import numpy as np
import pytest

import oracles
from starfree import catalog
from starfree.catalog.recipes import abelian, cyclic, dicyclic, dihedral
from starfree.errors import ClosureTooLarge
from starfree.group import from_cayley_table, semidirect_product, subgroup_closure
from starfree.morphisms import (
    are_isomorphic,
    automorphisms,
    find_isomorphism,
    fingerprint,
    is_isomorphism,
    minimal_generating_set,
)


@pytest.mark.parametrize(
    "G, count",
    [(cyclic(2), 1), (abelian(2, 2), 6), (cyclic(4), 2), (cyclic(5), 4)],
    ids=["C2", "C2xC2", "C4", "C5"],
)
def test_automorphism_counts_match_brute_force(G, count):
    assert oracles.automorphism_count(G.table.tolist()) == count
    auts = automorphisms(G)
    assert len(auts) == count
    assert auts[0].tolist() == list(range(G.order))
    assert all(is_isomorphism(G, G, a) for a in auts)


@pytest.mark.parametrize("name, count", [("S3", 6), ("D8", 8), ("Q8", 24), ("A4", 24)])
def test_automorphism_counts_small_nonabelian(name, count):
    G = catalog.build(name)
    if G.order <= 8:
        assert oracles.automorphism_count(G.table.tolist()) == count
    assert len(automorphisms(G)) == count


def test_automorphism_bound():
    with pytest.raises(ClosureTooLarge):
        automorphisms(catalog.build("A5"), bound=32)


def test_isomorphism_examples():
    assert not are_isomorphic(cyclic(4), abelian(2, 2))
    D8_semi = semidirect_product(cyclic(4), cyclic(2), [[0, 1, 2, 3], [0, 3, 2, 1]])
    phi = find_isomorphism(catalog.build("D8"), D8_semi)
    assert phi is not None and is_isomorphism(catalog.build("D8"), D8_semi, phi)
    assert not are_isomorphic(dihedral(6), dicyclic(3))
    assert not are_isomorphic(cyclic(4), cyclic(5))


def test_relabelled_group_is_isomorphic():
    G = catalog.build("SL(2,3)")
    rng = np.random.default_rng(7)
    perm = rng.permutation(G.order)
    inv = np.argsort(perm)
    t = perm[G.table[inv[:, None], inv[None, :]]]
    H = from_cayley_table(t)
    phi = find_isomorphism(G, H)
    assert phi is not None and is_isomorphism(G, H, phi)


def test_is_isomorphism_rejects_bad_maps():
    G = catalog.build("S3")
    assert not is_isomorphism(G, G, [0] * 6)
    assert not is_isomorphism(G, G, [0, 1, 2])
    assert not is_isomorphism(G, G, [0, 2, 1, 3, 4, 5][::-1])


def test_isomorphism_reflexive_symmetric(all_core):
    for G in all_core[:40]:
        assert are_isomorphic(G, G)
    pairs = [("D12", "C2xC2xS3"), ("Dic12", "D12"), ("C4xC2_rtimes_C2_a", "C4xC2_rtimes_C2_b")]
    for a, b in pairs:
        A, B = catalog.build(a), catalog.build(b)
        assert are_isomorphic(A, B) == are_isomorphic(B, A)


def test_minimal_generating_sets(all_core):
    for G in all_core:
        gens = minimal_generating_set(G)
        assert len(subgroup_closure(G, gens)) == G.order
    assert len(minimal_generating_set(abelian(2, 2, 2))) == 3
    assert len(minimal_generating_set(catalog.build("A5"))) == 2
    assert minimal_generating_set(cyclic(1)) == ()


def test_fingerprint_is_invariant():
    G = catalog.build("Q8")
    assert fingerprint(G) == fingerprint(G.with_label("other"))
    assert fingerprint(G) != fingerprint(catalog.build("D8"))
