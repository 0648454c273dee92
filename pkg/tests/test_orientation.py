import random
from math import ceil

import pytest

from hyperchoose import (
    Hypergraph,
    ListAssignment,
    PreconditionError,
    density_exact,
    find_bipartition,
    gen_complete,
    gen_fano,
    gen_k_regular_k_uniform,
    hall_orientation,
    is_proper,
    list_color_sparse,
    min_orientation,
    orientation_is_valid,
    reduce_to_pairgraph,
)
from oracles import brute_min_orientation, random_hypergraph


def test_hall_orientation_k33():
    hg = gen_complete(2, 3, 3)[0]
    phi = hall_orientation(hg, 2)
    assert phi is not None
    assert orientation_is_valid(hg, phi)
    assert max(phi.degrees(hg.n)) <= 2
    assert hall_orientation(hg, 1) is None  # 9 edges, 6 slots


def test_hall_orientation_single_edge():
    hg = Hypergraph(3, ((0, 1, 2),))
    phi = hall_orientation(hg, 1)
    assert phi is not None and sum(phi.degrees(3)) == 1


def test_min_orientation_k33():
    hg = gen_complete(2, 3, 3)[0]
    k_star, phi = min_orientation(hg)
    assert k_star == 2 == brute_min_orientation(hg)
    assert max(phi.degrees(hg.n)) <= 2


def test_min_orientation_fano_is_sdr():
    fano = gen_fano()
    k_star, phi = min_orientation(fano)
    assert k_star == 1
    assert sorted(phi.head) == list(range(7))  # distinct representatives


def test_min_orientation_triangle():
    hg = Hypergraph(3, ((0, 1), (1, 2), (0, 2)))
    k_star, _ = min_orientation(hg)
    assert k_star == 1


def test_min_orientation_matches_brute_force():
    rnd = random.Random(77)
    for _ in range(60):
        hg = random_hypergraph(rnd, rnd.randint(2, 7), rnd.randint(1, 7), max_size=3)
        k_star, phi = min_orientation(hg)
        assert k_star == brute_min_orientation(hg)
        assert k_star == ceil(density_exact(hg))
        assert orientation_is_valid(hg, phi)
        assert max(phi.degrees(hg.n)) == k_star


def test_reduce_to_pairgraph_single_edge():
    hg = Hypergraph(3, ((0, 1, 2),))
    bip = find_bipartition(hg)
    assert bip.side == ("A", "A", "B")
    from hyperchoose import Orientation

    pg = reduce_to_pairgraph(hg, bip, Orientation((0,)))
    assert pg.pairs == ((0, 2),)  # smallest opposite-side vertex


def test_reduce_to_pairgraph_k33_identity():
    hg, bip = gen_complete(2, 3, 3)
    _, phi = min_orientation(hg)
    pg = reduce_to_pairgraph(hg, bip, phi)
    assert sorted(tuple(sorted(p)) for p in pg.pairs) == sorted(hg.edges)


def test_reduce_to_pairgraph_complete_3_uniform():
    hg, bip = gen_complete(3, 2, 2)
    k_star, phi = min_orientation(hg)
    pg = reduce_to_pairgraph(hg, bip, phi)
    assert len(pg.pairs) == 4
    assert all(bip.side[x] != bip.side[y] for x, y in pg.pairs)
    heads = [0] * hg.n
    for x, _ in pg.pairs:
        heads[x] += 1
    assert heads == phi.degrees(hg.n)
    assert pg.source_edges == (0, 1, 2, 3)


def test_list_color_sparse_k33():
    hg, bip = gen_complete(2, 3, 3)
    lists = ListAssignment(tuple((1, 2, 3) for _ in range(6)))
    col = list_color_sparse(hg, bip, lists)
    assert is_proper(hg, col) and col.respects(lists)


def test_list_color_sparse_two_lists_when_degree_one():
    hg = Hypergraph(4, ((0, 1, 2), (1, 2, 3)))
    bip = find_bipartition(hg)
    lists = ListAssignment(tuple((1, 2) for _ in range(4)))
    col = list_color_sparse(hg, bip, lists)
    assert is_proper(hg, col) and col.respects(lists)


def test_list_color_sparse_rejects_short_lists():
    hg, bip = gen_complete(2, 3, 3)
    lists = ListAssignment(tuple((1, 2) for _ in range(6)))  # need 3 at degree 2
    with pytest.raises(PreconditionError):
        list_color_sparse(hg, bip, lists)


def test_list_color_sparse_rejects_bad_bipartition():
    hg, _ = gen_complete(2, 3, 3)
    from hyperchoose import Bipartition

    wrong = Bipartition(tuple("A" for _ in range(6)))
    lists = ListAssignment(tuple((1, 2, 3) for _ in range(6)))
    with pytest.raises(PreconditionError):
        list_color_sparse(hg, wrong, lists)


def test_list_color_sparse_on_regular_instance_random_lists():
    hg = gen_k_regular_k_uniform(4, 8, seed=1)
    bip = find_bipartition(hg)
    assert bip is not None
    rnd = random.Random(123)
    for _ in range(100):
        lists = ListAssignment(
            tuple(tuple(rnd.sample(range(1, 10), 2)) for _ in range(8))
        )
        col = list_color_sparse(hg, bip, lists)
        assert is_proper(hg, col) and col.respects(lists)
