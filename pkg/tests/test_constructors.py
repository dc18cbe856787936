import pytest
from hypothesis import given
from hypothesis import strategies as st

from multzagreb.constructors import (
    ClassSpec,
    bound_thm31,
    bound_thm32,
    bound_thm41,
    bound_thm42,
    c_n_p,
    c_n_s,
    coalesce,
    complete,
    cycle,
    join_by_path,
    k_n_p,
    k_n_s,
    path,
    star,
)
from multzagreb.errors import InvalidClass, InvalidVertex, TooSmall
from multzagreb.graph import Graph, bridges, is_connected, is_isomorphic
from multzagreb.indices import pi1, pi2

FAMILIES = [c_n_s, c_n_p, k_n_s, k_n_p]


def degseq(g):
    return tuple(sorted(g.degrees(), reverse=True))


def test_small_named_graphs():
    assert cycle(3) == complete(3)
    assert degseq(star(4)) == (3, 1, 1, 1)
    assert path(2) == complete(2)
    assert path(1) == Graph(1) == star(1) == complete(1)


@pytest.mark.parametrize("fn,n", [(path, 0), (star, 0), (complete, 0), (cycle, 2)])
def test_too_small(fn, n):
    with pytest.raises(TooSmall):
        fn(n)


@pytest.mark.parametrize("n,k", [(3, 1), (6, 4), (6, 0), (4, 2), (10, -1)])
def test_invalid_class(n, k):
    with pytest.raises(InvalidClass):
        ClassSpec(n, k)
    for fn in FAMILIES:
        with pytest.raises(InvalidClass):
            fn((n, k))


def test_degree_sequences():
    assert degseq(c_n_s((6, 2))) == (4, 2, 2, 2, 1, 1)
    assert degseq(c_n_p((6, 2))) == (3, 2, 2, 2, 2, 1)
    assert degseq(k_n_p((7, 3))) == (4, 3, 3, 3, 2, 2, 1)
    assert degseq(k_n_s((7, 3))) == (6, 3, 3, 3, 1, 1, 1)


def test_k_equals_one_collapse():
    for n in range(4, 9):
        assert is_isomorphic(c_n_s((n, 1)), c_n_p((n, 1)))
        assert is_isomorphic(k_n_s((n, 1)), k_n_p((n, 1)))
    assert is_isomorphic(k_n_s((5, 1)), join_by_path(complete(4), 0, Graph(1), 0, 1))


def test_hub_is_vertex_zero():
    g = k_n_s((7, 3))
    assert g.degree(0) == 6
    assert g.neighbors(0) == [1, 2, 3, 4, 5, 6]


@pytest.mark.parametrize("n", range(4, 16))
def test_constructions_are_class_members(n):
    for k in range(1, n - 2):
        for fn in FAMILIES:
            g = fn((n, k))
            assert g.n == n and is_connected(g)
            assert len(bridges(g)) == k


def test_bound_examples():
    assert bound_thm31((6, 1)) == 4**4 * 9 == 2304
    assert bound_thm32((6, 2)) == 27 * 4**4 == 6912
    assert bound_thm42((6, 2)) == 5**5 * 3**9 == 61509375
    assert bound_thm41((7, 2)) == 4 * 25 * 4**8 == 6553600


def test_bound_thm32_is_k_free():
    for n in range(4, 20):
        assert len({bound_thm32((n, k)) for k in range(1, n - 2)}) == 1


def test_constructions_attain_bounds():
    for n in range(4, 31):
        for k in range(1, n - 2):
            s = ClassSpec(n, k)
            assert pi1(c_n_s(s)) == bound_thm31(s)
            assert pi2(c_n_p(s)) == bound_thm32(s)
            assert pi1(k_n_p(s)) == bound_thm41(s)
            assert pi2(k_n_s(s)) == bound_thm42(s)


def test_coalesce_examples():
    bowtie = coalesce(cycle(3), 0, cycle(3), 0)
    assert bowtie.n == 5 and degseq(bowtie) == (4, 2, 2, 2, 2)
    g = k_n_p((6, 2))
    assert coalesce(g, 3, Graph(1), 0) == g
    assert degseq(coalesce(complete(3), 1, path(2), 0)) == (3, 2, 2, 1)
    with pytest.raises(InvalidVertex):
        coalesce(cycle(3), 3, cycle(3), 0)


@given(st.integers(1, 6), st.integers(1, 6), st.data())
def test_coalesce_degree_law(n1, n2, data):
    g1 = complete(n1) if data.draw(st.booleans()) else path(n1)
    g2 = star(n2)
    v1 = data.draw(st.integers(0, n1 - 1))
    v2 = data.draw(st.integers(0, n2 - 1))
    h = coalesce(g1, v1, g2, v2)
    assert h.n == n1 + n2 - 1
    assert h.degree(v1) == g1.degree(v1) + g2.degree(v2)
    for v in range(n1):
        if v != v1:
            assert h.degree(v) == g1.degree(v)
    others = [v for v in range(n2) if v != v2]
    for i, v in enumerate(others):
        assert h.degree(n1 + i) == g2.degree(v)


def test_join_by_path():
    g = join_by_path(cycle(3), 0, cycle(3), 0, 1)
    assert g.n == 6 and bridges(g) == [(0, 3)]
    g = join_by_path(cycle(3), 1, cycle(3), 2, 2)
    assert g.n == 7 and len(bridges(g)) == 2
    for edges in range(1, 5):
        g = join_by_path(complete(4), 2, cycle(5), 3, edges)
        assert len(bridges(g)) == edges
    with pytest.raises(InvalidVertex):
        join_by_path(cycle(3), 0, cycle(3), 5, 1)
