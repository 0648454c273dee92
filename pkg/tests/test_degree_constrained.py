import random
from fractions import Fraction
from math import ceil

import pytest

from hyperchoose import (
    Hypergraph,
    ListAssignment,
    PreconditionError,
    build_selection,
    gen_complete,
    gen_fano,
    is_proper,
    list_color_gk,
    metrics,
)
from oracles import random_hypergraph


def test_build_selection_fano_reaches_zero_potential():
    fano = gen_fano()
    sel = build_selection(fano, 2)  # cap = ceil(2*3/3)
    assert sel is not None
    assert sel.degrees(7) == [2] * 7  # 14 incidences over 7 vertices
    assert sel.potential(7) == 0
    for pair, edge in zip(sel.chosen, fano.edges):
        assert pair[0] in edge and pair[1] in edge and pair[0] != pair[1]


def test_build_selection_single_edge():
    sel = build_selection(Hypergraph(3, ((0, 1, 2),)), 1)
    assert sel is not None
    assert sel.chosen == ((0, 1),)
    assert max(sel.degrees(3)) <= 1


def test_build_selection_two_uniform_forced():
    hg = gen_complete(2, 3, 3)[0]
    sel = build_selection(hg, 3)
    assert sel is not None
    assert tuple(tuple(sorted(p)) for p in sel.chosen) == hg.edges
    assert max(sel.degrees(6)) == 3


def test_build_selection_absent_below_threshold():
    # 2-uniform star: both incidences forced, center degree = edge count.
    star = Hypergraph(4, ((0, 1), (0, 2), (0, 3)))
    assert build_selection(star, 2) is None
    assert build_selection(star, 3) is not None


def test_build_selection_never_absent_at_guaranteed_cap():
    rnd = random.Random(31)
    for _ in range(80):
        hg = random_hypergraph(rnd, rnd.randint(2, 9), rnd.randint(1, 10))
        met = metrics(hg)
        k = ceil(Fraction(2 * met.max_degree, met.min_edge_size))
        sel = build_selection(hg, k)
        assert sel is not None
        assert sel.potential(hg.n) == 0
        assert all(
            p[0] in e and p[1] in e and p[0] != p[1]
            for p, e in zip(sel.chosen, hg.edges)
        )


def test_list_color_gk_fano():
    fano = gen_fano()
    lists = ListAssignment(tuple((1, 2, 3) for _ in range(7)))
    col = list_color_gk(fano, lists)
    assert is_proper(fano, col) and col.respects(lists)


def test_list_color_gk_fano_random_lists():
    fano = gen_fano()
    rnd = random.Random(55)
    for _ in range(150):
        lists = ListAssignment(
            tuple(tuple(rnd.sample(range(1, 10), 3)) for _ in range(7))
        )
        col = list_color_gk(fano, lists)
        assert is_proper(fano, col) and col.respects(lists)


def test_list_color_gk_triangle():
    hg = Hypergraph(3, ((0, 1), (1, 2), (0, 2)))
    lists = ListAssignment(tuple((1, 2, 3) for _ in range(3)))  # ceil(2*2/2)+1
    col = list_color_gk(hg, lists)
    assert is_proper(hg, col) and col.respects(lists)


def test_list_color_gk_rejects_short_lists():
    fano = gen_fano()
    lists = ListAssignment(tuple((1, 2) for _ in range(7)))
    with pytest.raises(PreconditionError):
        list_color_gk(fano, lists)


def test_list_color_gk_random_instances():
    rnd = random.Random(60)
    for _ in range(40):
        hg = random_hypergraph(rnd, rnd.randint(2, 8), rnd.randint(1, 8))
        met = metrics(hg)
        k = ceil(Fraction(2 * met.max_degree, met.min_edge_size))
        lists = ListAssignment(
            tuple(tuple(rnd.sample(range(1, 2 * k + 4), k + 1)) for _ in range(hg.n))
        )
        col = list_color_gk(hg, lists)
        assert is_proper(hg, col) and col.respects(lists)
