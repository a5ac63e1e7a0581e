import json

import pytest

from starfree import catalog
from starfree.classeq import ClassEquationSolution, enumerate_candidates
from starfree.classify import (
    CONFIRMED,
    EXTRA,
    FAIL,
    MISSING,
    PASS,
    PASS_WITH_WARNING,
    PUBLISHED,
    UNCOMPARED,
    dihedral_class_equation,
    dihedral_star_number,
    strict_inclusion_witness,
    strong_k_star_free_groups,
    verify_against_published,
)
from starfree.graph import is_strong_k_star_free, strong_star_number
from starfree.group import center, centralizer_profile

SIXTEEN = {
    "S3", "D8", "Q8", "D10", "A4", "D12", "Dic12", "C2xD8", "C2xQ8", "C4_rtimes_C4",
    "C4xC2_rtimes_C2_a", "C4xC2_rtimes_C2_b", "C8_rtimes_C2", "GA(1,5)", "SL(2,3)", "A5",
}


@pytest.mark.parametrize(
    "k, names",
    [(2, {"S3", "D8", "Q8"}), (3, {"S3", "A4", "D8", "Q8"}), (4, SIXTEEN), (5, SIXTEEN)],
)
def test_classification(k, names):
    r = strong_k_star_free_groups(k)
    assert set(r.names) == names
    assert [(g.order, g.name) for g in r.verified_groups] == sorted((g.order, g.name) for g in r.verified_groups)


def test_report_invariants():
    for k in range(1, 7):
        r = strong_k_star_free_groups(k)
        cands = enumerate_candidates(k)
        assert sorted(r.scanned_orders + r.unverifiable_orders) == r.candidate_orders == cands.orders
        for g in r.verified_groups:
            G = catalog.build(g.name)
            assert is_strong_k_star_free(G, k)
            assert cands.contains(g.center, [s for s, _ in g.profile], g.order, [m for _, m in g.profile])


def test_completeness_against_full_catalog(nonabelian_core):
    # every catalog group with S <= k is found, whatever its order
    for k in range(1, 7):
        want = {G.label for G in nonabelian_core if strong_star_number(G) <= k}
        assert set(strong_k_star_free_groups(k).names) == want


@pytest.mark.parametrize("k", [2, 3])
def test_verify_pass(k):
    r = verify_against_published(k)
    assert r.status == PASS
    assert all(v.verdict == CONFIRMED for v in r.verdicts)


@pytest.mark.parametrize("k", [4, 5])
def test_verify_warns_on_order_32(k):
    r = verify_against_published(k)
    assert r.status == PASS_WITH_WARNING
    assert r.unverifiable_orders == [32]
    assert len(r.verdicts) == 16 and all(v.verdict == CONFIRMED for v in r.verdicts)


@pytest.mark.parametrize("k", [4, 5])
def test_stretch_refutes_order_32(k):
    r = verify_against_published(k, stretch=True)
    assert r.status == PASS and r.unverifiable_orders == []
    assert 32 in r.scanned_orders
    assert any("order 32" in n for n in r.notes)


def test_no_order_32_group_with_center_four_and_all_centralizers_eight():
    for G in catalog.all_groups_of_order(32, stretch=True):
        if G.is_abelian or len(center(G)) != 4:
            continue
        assert centralizer_profile(G).sizes != (8,)


def test_verdicts_detect_mismatch(monkeypatch):
    listed = PUBLISHED[3][:3] + (("S4", "S4"),)
    monkeypatch.setitem(PUBLISHED, 3, listed)
    r = verify_against_published(3)
    assert r.status == FAIL
    got = {(v.catalog_name, v.verdict) for v in r.verdicts}
    assert ("S4", MISSING) in got and ("Q8", EXTRA) in got


def test_uncompared_k6():
    r = verify_against_published(6)
    assert r.status == UNCOMPARED and r.verdicts == []
    assert 35 in r.unverifiable_orders


def test_published_names_map_injectively():
    for k, listed in PUBLISHED.items():
        targets = [cat for _, cat in listed]
        assert len(set(targets)) == len(targets)
        assert all(catalog.build(t) for t in targets)
    printed = [pub for pub, _ in PUBLISHED[5]]
    assert printed.count("(C4×C2)⋊C2") == 2
    assert dict(PUBLISHED[5])["C4⋊C3"] == "Dic12"


def test_report_serialization():
    r = verify_against_published(5)
    doc = json.loads(r.to_json())
    assert doc["status"] == PASS_WITH_WARNING and doc["unverifiable_orders"] == [32]
    assert len(doc["verified_groups"]) == 16
    text = r.render()
    assert "UNVERIFIED" in text and text == verify_against_published(5).render()


@pytest.mark.parametrize("k", [0, 7, 2.0])
def test_bad_k(k):
    with pytest.raises(ValueError):
        strong_k_star_free_groups(k)


# -- dihedral groups


@pytest.mark.parametrize("n, S", [(3, 2), (5, 4), (6, 4), (7, 6), (4, 2)])
def test_dihedral_star_number(n, S):
    assert dihedral_star_number(n) == S == dihedral_star_number(n, verify=True)


def test_dihedral_closed_forms_3_to_50():
    for n in range(3, 51):
        dihedral_star_number(n, verify=True)
        dihedral_class_equation(n, verify=True)


@pytest.mark.parametrize(
    "n, sol",
    [
        (3, ClassEquationSolution(6, 1, (2, 3), (1, 1))),
        (4, ClassEquationSolution(8, 2, (4,), (3,))),
        (5, ClassEquationSolution(10, 1, (2, 5), (1, 2))),
        (6, ClassEquationSolution(12, 2, (4, 6), (2, 2))),
        (10, ClassEquationSolution(20, 2, (4, 10), (2, 4))),
    ],
)
def test_dihedral_class_equation(n, sol):
    assert dihedral_class_equation(n, verify=True) == sol


def test_dihedral_bad_n():
    with pytest.raises(ValueError):
        dihedral_star_number(2)
    with pytest.raises(ValueError):
        dihedral_class_equation(1)
    with pytest.raises(ValueError):
        dihedral_star_number(200, verify=True)


@pytest.mark.parametrize("k, name", [(1, "S3"), (2, "A4"), (3, "D10"), (5, "D14"), (6, "S4"), (4, None)])
def test_strict_inclusion_witness(k, name):
    assert strict_inclusion_witness(k) == name
    if name is not None:
        assert strong_star_number(catalog.build(name)) == k + 1


def test_large_odd_k_witness_outside_catalog():
    assert strict_inclusion_witness(41) == "D86"


# -- exhaustive checks on the catalog


def test_no_center_three_with_small_star_number():
    for n in range(1, 25):
        for G in catalog.all_groups_of_order(n):
            if not G.is_abelian and len(center(G)) == 3:
                assert strong_star_number(G) > 5


def test_no_center_two_with_all_centralizers_six():
    for n in range(1, 25):
        for G in catalog.all_groups_of_order(n):
            if not G.is_abelian and len(center(G)) == 2:
                assert centralizer_profile(G).sizes != (6,)


def test_star_freeness_is_an_up_set(nonabelian_core):
    for G in nonabelian_core:
        S = strong_star_number(G)
        assert [k for k in range(1, 40) if is_strong_k_star_free(G, k)] == list(range(S, 40))
