"""The numba kernels and their numpy fallbacks must agree exactly."""

import os
import subprocess
import sys

import numpy as np
import pytest

from starfree import _accel, kernels
from starfree.catalog import build
from starfree.morphisms import _search, automorphisms

needs_numba = pytest.mark.skipif(_accel.numba is None, reason="numba not installed")


def _random_graph(rng, d, p):
    a = np.triu(rng.random((d, d)) < p, 1)
    return a | a.T


def _brute_alpha(adj):
    d = adj.shape[0]
    best = 0
    for mask in range(1 << d):
        vs = [i for i in range(d) if mask >> i & 1]
        if len(vs) > best and not adj[np.ix_(vs, vs)].any():
            best = len(vs)
    return best


@needs_numba
@pytest.mark.parametrize("seed", range(20))
def test_independence_parity(seed):
    rng = np.random.default_rng(seed)
    adj = _random_graph(rng, int(rng.integers(0, 13)), float(rng.random()))
    want = _brute_alpha(adj)
    assert kernels._independence_jit(adj, adj.shape[0] + 1) == want
    assert kernels._independence_np(adj, adj.shape[0] + 1) == want
    for t in (1, 2, 3):
        assert kernels._independence_jit(adj, t) == kernels._independence_np(adj, t) == min(want, t)


def test_independence_trivial_cases():
    assert kernels.independence_number(np.zeros((0, 0), dtype=bool)) == 0
    assert kernels.independence_number(np.zeros((4, 4), dtype=bool)) == 4
    full = ~np.eye(5, dtype=bool)
    assert kernels.independence_number(full) == 1
    assert kernels.independence_number(full, target=0) == 0


@needs_numba
@pytest.mark.parametrize("name", ["S3", "Q8", "A4", "D12", "SL(2,3)"])
def test_associativity_parity(name):
    t = build(name).table.copy()
    assert tuple(kernels._assoc_violation_jit(t)) == tuple(kernels._assoc_violation_np(t)) == (-1, -1, -1)
    t[1, [2, 3]] = t[1, [3, 2]]
    got = tuple(map(int, kernels._assoc_violation_jit(t)))
    assert got == tuple(map(int, kernels._assoc_violation_np(t)))
    a, b, c = got
    assert t[t[a, b], c] != t[a, t[b, c]]
    assert kernels.associativity_violation(t) == got


@needs_numba
@pytest.mark.parametrize("name", ["S3", "D8", "Q8", "A4", "C2xQ8"])
def test_hom_search_parity(name, monkeypatch):
    G = build(name)
    monkeypatch.setattr(kernels, "USE_NUMBA", True)
    jit = sorted(map(tuple, _search(G, G, 10_000).tolist()))
    monkeypatch.setattr(kernels, "USE_NUMBA", False)
    fallback = sorted(map(tuple, _search(G, G, 10_000).tolist()))
    assert jit == fallback
    assert len(jit) == len(automorphisms(G))


def test_env_flag_selects_fallback():
    code = "import starfree._accel as a, starfree.kernels as k; print(a.backend_name(), k.USE_NUMBA)"
    env = dict(os.environ, STARFREE_NUMBA="0")
    out = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, text=True, check=True)
    assert out.stdout.split() == ["numpy", "False"]


def test_fallback_backend_end_to_end():
    code = (
        "from starfree.classify import verify_against_published as v;"
        "r = v(3); print(r.status, len(r.verified_groups))"
    )
    env = dict(os.environ, STARFREE_NUMBA="0")
    out = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, text=True, check=True)
    assert out.stdout.split() == ["PASS", "4"]
