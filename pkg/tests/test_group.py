import threading

import numpy as np
import pytest

import oracles
from starfree import catalog
from starfree.catalog.recipes import abelian, cyclic, dicyclic, dihedral, power_semidirect, symmetric
from starfree.errors import AbelianGroup, ClosureTooLarge, NotAGroup, NotAHomomorphism
from starfree.group import (
    CentralizerProfile,
    Permutation,
    action_from_generators,
    center,
    centralizer,
    centralizer_profile,
    class_sizes,
    conjugacy_classes,
    direct_product,
    from_cayley_table,
    from_permutation_generators,
    semidirect_product,
    trivial_group,
)
from starfree.morphisms import are_isomorphic, automorphisms


def P(d, *cycles):
    return Permutation.from_cycles(d, cycles)


# -- construction


def test_trivial_table():
    G = from_cayley_table([[0]])
    assert G.order == 1 and G.identity == 0 and G.inverses.tolist() == [0]


def test_c2_table():
    G = from_cayley_table([[0, 1], [1, 0]])
    assert G.order == 2 and G.is_abelian
    assert G.inverses.tolist() == [0, 1]


def test_identity_discovered_not_assumed():
    # C3 relabelled so that the identity is element 1
    sigma = [1, 0, 2]
    c3 = [[(a + b) % 3 for b in range(3)] for a in range(3)]
    t = [[0] * 3 for _ in range(3)]
    for a in range(3):
        for b in range(3):
            t[sigma[a]][sigma[b]] = sigma[c3[a][b]]
    G = from_cayley_table(t)
    assert G.identity == 1
    assert all(G.mul(G.identity, a) == a == G.mul(a, G.identity) for a in range(3))


def test_mutated_s3_table_rejected():
    t = symmetric(3).table.copy()
    # swap two entries in one row: still a Latin row but breaks associativity
    t[1, [2, 3]] = t[1, [3, 2]]
    with pytest.raises(NotAGroup) as exc:
        from_cayley_table(t)
    assert exc.value.axiom in ("associativity", "inverse", "identity")
    assert exc.value.witness


def test_nonassociative_loop_reports_triple():
    # smallest non-associative loop with two-sided inverses (order 5)
    t = [
        [0, 1, 2, 3, 4],
        [1, 0, 3, 4, 2],
        [2, 4, 0, 1, 3],
        [3, 2, 4, 0, 1],
        [4, 3, 1, 2, 0],
    ]
    with pytest.raises(NotAGroup) as exc:
        from_cayley_table(t)
    assert exc.value.axiom == "associativity"
    a, b, c = exc.value.witness
    assert t[t[a][b]][c] != t[a][t[b][c]]


@pytest.mark.parametrize(
    "table, axiom",
    [
        ([[0, 1], [1, 1]], "inverse"),
        ([[1, 0], [0, 0]], "identity"),
        ([[0, 2], [1, 0]], "closure"),
        ([[0, 1, 2]], "shape"),
    ],
)
def test_bad_tables(table, axiom):
    with pytest.raises(NotAGroup) as exc:
        from_cayley_table(table)
    assert exc.value.axiom == axiom


def test_permutation_closure_s3_and_d8():
    S3 = from_permutation_generators([P(3, [0, 1, 2]), P(3, [0, 1])])
    D8 = from_permutation_generators([P(4, [0, 1, 2, 3]), P(4, [0, 2])])
    assert S3.order == len(oracles.perm_closure([(1, 2, 0), (1, 0, 2)], 3)) == 6
    assert D8.order == 8
    assert are_isomorphic(S3, catalog.build("S3"))
    assert are_isomorphic(D8, catalog.build("D8"))


def test_closure_layout():
    G = from_permutation_generators([P(3, [0, 1, 2]), P(3, [0, 1])])
    assert G.identity == 0
    assert G.generators == (1, 2)
    again = from_permutation_generators([P(3, [0, 1, 2]), P(3, [0, 1])])
    assert np.array_equal(G.table, again.table)


def test_empty_generators_trivial():
    assert from_permutation_generators([]).order == 1


def test_closure_bound():
    with pytest.raises(ClosureTooLarge):
        from_permutation_generators([P(6, [0, 1, 2, 3, 4, 5]), P(6, [0, 1])], bound=100)


def test_mixed_degrees_rejected():
    with pytest.raises(ValueError):
        from_permutation_generators([P(3, [0, 1]), P(4, [0, 1])])


def test_tables_are_read_only():
    G = catalog.build("S3")
    with pytest.raises(ValueError):
        G.table[0, 0] = 1


# -- center, centralizers, classes


def test_center_examples():
    assert len(center(catalog.build("S3"))) == 1
    assert len(center(catalog.build("D8"))) == 2
    A = abelian(4, 2)
    assert center(A) == frozenset(range(8))


def test_centralizer_examples():
    S3 = catalog.build("S3")
    assert centralizer(S3, S3.identity) == frozenset(range(6))
    three_cycles = [x for x in range(6) if S3.element_orders[x] == 3]
    assert all(len(centralizer(S3, x)) == 3 for x in three_cycles)
    A4 = catalog.build("A4")
    sizes = {int(A4.element_orders[x]): len(centralizer(A4, x)) for x in range(12) if x != A4.identity}
    assert sizes == {3: 3, 2: 4}


def test_centralizer_out_of_range():
    with pytest.raises(IndexError):
        centralizer(catalog.build("S3"), 6)


def test_class_sizes_examples():
    assert class_sizes(catalog.build("A5")) == [1, 12, 12, 15, 20]
    assert class_sizes(catalog.build("GA(1,5)")) == [1, 4, 5, 5, 5]
    assert class_sizes(cyclic(5)) == [1] * 5


def test_conjugacy_classes_partition(all_core):
    for G in all_core:
        blocks = conjugacy_classes(G)
        assert sorted(x for b in blocks for x in b) == list(range(G.order))
        for b in blocks:
            x = min(b)
            assert len(b) * len(centralizer(G, x)) == G.order


def test_profiles():
    assert centralizer_profile(catalog.build("D8")) == CentralizerProfile(8, 2, ((4, 3),))
    assert centralizer_profile(catalog.build("A4")) == CentralizerProfile(12, 1, ((3, 2), (4, 1)))
    assert centralizer_profile(catalog.build("SL(2,3)")) == CentralizerProfile(24, 2, ((4, 1), (6, 4)))
    # three classes of 5-element size have |C| = 4, one class of size 4 has |C| = 5
    assert centralizer_profile(catalog.build("GA(1,5)")) == CentralizerProfile(20, 1, ((4, 3), (5, 1)))


def test_profile_rejects_abelian():
    with pytest.raises(AbelianGroup):
        centralizer_profile(cyclic(6))


def test_profile_invariants_checked():
    with pytest.raises(ValueError):
        CentralizerProfile(8, 2, ((4, 2),))
    with pytest.raises(ValueError):
        CentralizerProfile(8, 2, ((8, 3),))


def test_class_equation_every_catalog_group(all_core):
    for G in all_core:
        sizes = class_sizes(G)
        assert sizes.count(1) == len(center(G))
        assert G.order == len(center(G)) + sum(s for s in sizes if s > 1)
        for x in range(G.order):
            c = centralizer(G, x)
            assert center(G) | {x} <= c
            assert (x in center(G)) == (len(c) == G.order)
            assert len(c) == oracles.centralizer_size(G.table.tolist(), x)


# -- products


def test_direct_products():
    V = direct_product(cyclic(2), cyclic(2))
    assert V.order == 4 and sorted(V.element_orders.tolist()) == [1, 2, 2, 2]
    C4C2 = direct_product(cyclic(4), cyclic(2))
    assert C4C2.order == 8 and C4C2.is_abelian
    assert are_isomorphic(direct_product(catalog.build("S3"), cyclic(2)), dihedral(6))


def test_direct_product_indexing():
    G, H = cyclic(3), cyclic(2)
    GH = direct_product(G, H)
    for g1, h1, g2, h2 in np.ndindex(3, 2, 3, 2):
        assert GH.table[g1 * 2 + h1, g2 * 2 + h2] == G.table[g1, g2] * 2 + H.table[h1, h2]


def test_direct_product_with_trivial():
    G = catalog.build("Q8")
    assert are_isomorphic(direct_product(G, trivial_group()), G)


def test_direct_product_bound():
    with pytest.raises(ClosureTooLarge):
        direct_product(cyclic(20), cyclic(20))


def test_semidirect_trivial_action_equals_direct():
    N, H = cyclic(5), cyclic(4)
    ident = [list(range(5))] * 4
    assert np.array_equal(semidirect_product(N, H, ident).table, direct_product(N, H).table)


def _power_action(N, H, r):
    # the generator of H acts by x -> x^r; cyclic recipes put a^i at index i
    return action_from_generators(H, N, [1], [[(x * r) % N.order for x in range(N.order)]])


def test_semidirect_ga15():
    N, H = cyclic(5), cyclic(4)
    G = semidirect_product(N, H, _power_action(N, H, 2))
    assert G.order == 20 and len(center(G)) == 1
    assert centralizer_profile(G) == CentralizerProfile(20, 1, ((4, 3), (5, 1)))
    assert are_isomorphic(G, catalog.build("GA(1,5)"))


def test_semidirect_dicyclic12():
    N, H = cyclic(3), cyclic(4)
    G = semidirect_product(N, H, _power_action(N, H, 2))
    assert G.order == 12 and len(center(G)) == 2
    assert centralizer_profile(G).entries == ((4, 2), (6, 2))
    assert are_isomorphic(G, dicyclic(3))


def test_semidirect_rejects_non_homomorphism():
    N, H = cyclic(3), cyclic(2)
    inv = [0, 2, 1]
    with pytest.raises(NotAHomomorphism) as exc:
        semidirect_product(N, H, [inv, inv])
    assert exc.value.pair


def test_semidirect_rejects_non_automorphism():
    with pytest.raises(NotAHomomorphism):
        semidirect_product(cyclic(3), cyclic(2), [[0, 1, 2], [0, 0, 1]])


def test_d8_as_semidirect_matches_generators():
    N, H = cyclic(4), cyclic(2)
    D = semidirect_product(N, H, [[0, 1, 2, 3], [0, 3, 2, 1]])
    assert are_isomorphic(D, from_permutation_generators([P(4, [0, 1, 2, 3]), P(4, [0, 2])]))


def test_power_semidirect_recipe():
    assert are_isomorphic(power_semidirect(7, 3, 2), catalog.build("C7_rtimes_C3"))


# -- concurrency


def test_concurrent_reads_agree():
    G = catalog.build("A5")
    results = []

    def work():
        results.append((tuple(class_sizes(G)), len(automorphisms(catalog.build("S3")))))

    threads = [threading.Thread(target=work) for _ in range(8)]
    for t in threads:
        t.start()
    for t in threads:
        t.join()
    assert len(set(results)) == 1
