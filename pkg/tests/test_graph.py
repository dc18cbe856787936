import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from multzagreb.constructors import complete, cycle, join_by_path, k_n_p, k_n_s, path, star
from multzagreb.enumerate import connected_graphs
from multzagreb.errors import Disconnected, InvalidEdge, InvalidVertex, TooLarge, TooSmall
from multzagreb.graph import (
    Graph,
    blocks,
    bridges,
    bridges_by_deletion,
    canonical_form,
    canonical_graph,
    classify_cut_edges,
    components,
    cyclomatic_number,
    degree,
    is_connected,
    is_isomorphic,
    is_two_connected,
    new_graph,
)

from oracles import all_labeled_graphs, connected_by_search, permutation_min_code, shuffled


def two_triangles_bridge():
    return join_by_path(cycle(3), 0, cycle(3), 0, 1)


@st.composite
def graphs(draw, max_n=9):
    n = draw(st.integers(1, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return Graph(n, chosen)


def test_new_graph_basic():
    p3 = new_graph(3, [(0, 1), (1, 2)])
    assert p3 == path(3)
    assert new_graph(3, [(0, 1), (1, 2), (0, 2)]) == cycle(3) == complete(3)


def test_duplicates_collapse_and_order_is_irrelevant():
    assert Graph(3, [(0, 1), (1, 0), (1, 2)]) == Graph(3, [(2, 1), (0, 1)])
    assert hash(Graph(3, [(0, 1)])) == hash(Graph(3, [(1, 0)]))


@pytest.mark.parametrize("edges", [[(0, 2)], [(1, 1)], [(-1, 0)]])
def test_invalid_edges(edges):
    with pytest.raises(InvalidEdge):
        new_graph(2, edges)


def test_degree():
    assert all(degree(cycle(5), v) == 2 for v in range(5))
    assert all(degree(complete(4), v) == 3 for v in range(4))
    assert degree(star(4), 0) == 3
    with pytest.raises(InvalidVertex):
        degree(star(4), 4)


def test_is_connected():
    assert is_connected(path(4))
    assert not is_connected(Graph(2))
    assert is_connected(cycle(5))


@given(graphs())
def test_connectivity_matches_search(g):
    assert is_connected(g) == connected_by_search(g)
    assert sorted(v for c in components(g) for v in c) == list(range(g.n))


def test_bridges_examples():
    assert bridges(cycle(6)) == []
    assert bridges(path(4)) == [(0, 1), (1, 2), (2, 3)]
    g = k_n_p((6, 2))
    assert bridges(g) == bridges_by_deletion(g)
    assert len(bridges(g)) == 2
    assert set(bridges(g)) == {(0, 4), (4, 5)}


def test_bridges_reject_disconnected():
    with pytest.raises(Disconnected):
        bridges(Graph(3, [(0, 1)]))
    with pytest.raises(Disconnected):
        classify_cut_edges(Graph(2))
    with pytest.raises(Disconnected):
        cyclomatic_number(Graph(2))


def test_classify_cut_edges():
    rep = classify_cut_edges(k_n_s((6, 2)))
    assert (len(rep.pendent), len(rep.internal)) == (2, 0)
    rep = classify_cut_edges(two_triangles_bridge())
    assert (len(rep.pendent), len(rep.internal)) == (0, 1)
    rep = classify_cut_edges(path(4))
    assert (len(rep.pendent), len(rep.internal)) == (2, 1)
    assert rep.internal == [(1, 2)]


def test_blocks_of_two_triangles():
    assert blocks(two_triangles_bridge()) == [(0, 1, 2), (0, 3), (3, 4, 5)]


def _check_report(g):
    rep = classify_cut_edges(g)
    assert sorted(rep.pendent + rep.internal) == rep.bridges
    assert not set(rep.pendent) & set(rep.internal)
    owners = {e: [b for b in rep.blocks if set(e) <= set(b)] for e in g.edges}
    assert all(len(v) == 1 for v in owners.values())
    two = sorted(tuple(b) for b in rep.blocks if len(b) == 2)
    assert two == rep.bridges
    # components of g minus its bridges are single vertices or bridgeless
    rest = g.subgraph_without(rep.bridges)
    for comp in components(rest):
        if len(comp) == 1:
            continue
        sub = _induced(rest, comp)
        assert len(comp) >= 3 and bridges(sub) == []
    # each non-bridge block is 2-connected
    for b in rep.blocks:
        if len(b) > 2:
            assert is_two_connected(_induced(g, b))


def _induced(g, verts):
    idx = {v: i for i, v in enumerate(verts)}
    return Graph(len(verts), [(idx[a], idx[b]) for a, b in g.edges if a in idx and b in idx])


def test_bridgeless_part_need_not_be_two_connected():
    # bowtie plus a pendent edge: removing the bridge leaves the bowtie,
    # which is bridgeless but has a cut vertex
    g = Graph(6, [(0, 1), (1, 2), (0, 2), (0, 3), (3, 4), (0, 4), (4, 5)])
    rest = g.subgraph_without(bridges(g))
    bowtie = _induced(rest, [0, 1, 2, 3, 4])
    assert bridges(bowtie) == []
    assert not is_two_connected(bowtie)


def test_bridge_and_block_structure_exhaustive_small():
    for n in range(1, 7):
        for g in connected_graphs(n):
            assert bridges(g) == bridges_by_deletion(g)
            _check_report(g)


@settings(max_examples=150, deadline=None)
@given(graphs(max_n=10))
def test_bridge_structure_random(g):
    if not is_connected(g):
        return
    assert bridges(g) == bridges_by_deletion(g)
    _check_report(g)


def test_is_two_connected():
    assert is_two_connected(cycle(4))
    assert not is_two_connected(path(4))
    assert is_two_connected(complete(4).with_edges(remove=[(0, 1)]))
    assert not is_two_connected(Graph(4, [(0, 1), (1, 2), (2, 0)]))
    with pytest.raises(TooSmall):
        is_two_connected(path(2))


def test_cyclomatic_number():
    rng = random.Random(7)
    tree = Graph(7, [(v, rng.randrange(v)) for v in range(1, 7)])
    assert cyclomatic_number(tree) == 0
    assert cyclomatic_number(cycle(9)) == 1
    assert cyclomatic_number(complete(4)) == 3


def test_canonical_form_examples():
    c4 = cycle(4)
    assert canonical_form(c4.relabel([2, 0, 3, 1])) == canonical_form(c4.relabel([1, 3, 0, 2]))
    assert canonical_form(path(4)) != canonical_form(star(4))
    with pytest.raises(TooLarge):
        canonical_form(path(13))


def test_eleven_graphs_on_four_vertices():
    forms = {canonical_form(g) for g in all_labeled_graphs(4)}
    assert len(forms) == 11


@pytest.mark.parametrize("n", [3, 4, 5])
def test_canonical_form_agrees_with_permutation_oracle(n):
    # same partition of labeled graphs into classes as the n! brute force
    ours, oracle = {}, {}
    for g in all_labeled_graphs(n):
        ours.setdefault(canonical_form(g), set()).add(g)
        oracle.setdefault(permutation_min_code(g), set()).add(g)
    assert {frozenset(c) for c in ours.values()} == {frozenset(c) for c in oracle.values()}


def test_canonical_form_relabel_invariance():
    rng = random.Random(0)
    tests = [cycle(8), complete(7), k_n_p((8, 3)), two_triangles_bridge(), Graph(8, [(0, 1), (2, 3), (4, 5)])]
    tests += [Graph.from_masks(g.masks) for g in random.Random(1).sample(connected_graphs(7), 20)]
    for g in tests:
        ref = canonical_form(g)
        for _ in range(100):
            assert canonical_form(shuffled(g, rng)) == ref


def test_canonical_graph_is_a_relabeling():
    g = k_n_p((7, 2))
    h = canonical_graph(g)
    assert canonical_form(h) == canonical_form(g)
    assert sorted(h.degrees()) == sorted(g.degrees())
    assert canonical_graph(h) == h


def test_is_isomorphic():
    c5 = cycle(5)
    assert is_isomorphic(c5, c5.relabel([4, 2, 0, 3, 1]))
    assert not is_isomorphic(path(4), star(4))
    tadpole = join_by_path(cycle(3), 0, Graph(1), 0, 2)
    assert not is_isomorphic(k_n_p((5, 1)), tadpole)


def test_strongly_regular_like_graphs_distinguished():
    # cube vs. circular ladder with a twist (both 3-regular on 8 vertices)
    cube = Graph(8, [(a, b) for a in range(8) for b in range(a + 1, 8) if bin(a ^ b).count("1") == 1])
    mobius = Graph(8, [(i, (i + 1) % 8) for i in range(8)] + [(i, i + 4) for i in range(4)])
    assert not is_isomorphic(cube, mobius)
    assert is_isomorphic(cube, shuffled(cube, random.Random(3)))
