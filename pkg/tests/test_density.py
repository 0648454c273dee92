import random
from fractions import Fraction

import pytest

from hyperchoose import (
    GuardExceededError,
    Hypergraph,
    bound_degree,
    bound_gk,
    bound_sparse,
    density_exact,
    density_flow,
    edge_density,
    gen_complete,
    gen_fano,
    gen_k_regular_k_uniform,
    metrics,
)
from oracles import naive_density, random_hypergraph


def test_density_k33():
    hg = gen_complete(2, 3, 3)[0]
    assert density_exact(hg) == Fraction(3, 2)
    assert naive_density(hg) == Fraction(3, 2)  # all 2^9-1 subsets
    assert density_flow(hg) == Fraction(3, 2)


def test_density_single_edge():
    for s in (2, 3, 5):
        hg = Hypergraph(s, (tuple(range(s)),))
        assert density_exact(hg) == Fraction(1, s)
        assert density_flow(hg) == Fraction(1, s)


def test_density_fano():
    fano = gen_fano()
    assert naive_density(fano) == 1
    assert density_exact(fano) == 1
    assert density_flow(fano) == 1


def test_density_k_regular_is_one():
    for k, n, seed in [(2, 3, 0), (4, 8, 3)]:
        hg = gen_k_regular_k_uniform(k, n, seed=seed)
        assert hg is not None
        assert density_exact(hg) == 1


def test_density_flow_matches_exact_on_random_instances():
    rnd = random.Random(2024)
    for _ in range(100):
        hg = random_hypergraph(rnd, rnd.randint(2, 10), rnd.randint(1, 12))
        exact = density_exact(hg)
        assert density_flow(hg) == exact
        assert naive_density(hg) == exact


def test_density_guard():
    rnd = random.Random(1)
    hg = random_hypergraph(rnd, 12, 25)
    with pytest.raises(GuardExceededError):
        density_exact(hg)
    # edge_density transparently falls back to the flow route
    assert edge_density(hg) == density_flow(hg)


def test_density_at_most_degree_ratio():
    rnd = random.Random(5)
    for _ in range(60):
        hg = random_hypergraph(rnd, rnd.randint(2, 8), rnd.randint(1, 9))
        met = metrics(hg)
        assert density_exact(hg) <= Fraction(met.max_degree, met.min_edge_size)


def test_density_monotone_under_edge_addition():
    rnd = random.Random(6)
    for _ in range(40):
        hg = random_hypergraph(rnd, 6, rnd.randint(1, 7))
        size = rnd.randint(2, 4)
        extra = tuple(sorted(rnd.sample(range(6), size)))
        bigger = Hypergraph(6, hg.edges + (extra,))
        assert density_exact(bigger) >= density_exact(hg)


def test_bound_sparse_examples():
    res = bound_sparse(gen_complete(2, 3, 3)[0])
    assert res.value == 3 and res.two_colorable
    hg = gen_k_regular_k_uniform(4, 8, seed=1)
    res = bound_sparse(hg)
    assert res.value == 2 and res.two_colorable
    res = bound_sparse(gen_fano())
    assert res.value == 2 and not res.two_colorable


def test_bound_degree_examples():
    assert bound_degree(gen_complete(2, 3, 3)[0]).value == 3
    hg = gen_k_regular_k_uniform(4, 8, seed=1)
    assert bound_degree(hg).value == 2
    assert bound_degree(Hypergraph(3, ((0, 1, 2),))).value == 2


def test_bound_gk_examples():
    assert bound_gk(gen_fano()) == 3
    assert bound_gk(gen_complete(2, 3, 3)[0]) == 4
    assert bound_gk(Hypergraph(2, ((0, 1),))) == 2


def test_bound_chain_on_two_colorable_instances():
    rnd = random.Random(9)
    checked = 0
    while checked < 30:
        hg = random_hypergraph(rnd, rnd.randint(2, 8), rnd.randint(1, 8))
        sparse = bound_sparse(hg)
        if not sparse.two_colorable:
            continue
        checked += 1
        assert sparse.value <= bound_degree(hg).value <= bound_gk(hg)
