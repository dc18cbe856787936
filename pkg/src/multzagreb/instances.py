"""Seeded random graphs that satisfy each transform's pattern.

Every generator returns a :class:`PatternInstance` whose vertices have been
shuffled, so the transforms are exercised on arbitrary labelings rather
than on the tidy numbering used to build them. All instances have at most
ten vertices.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Callable

from .constructors import complete, cycle, join_by_path
from .graph import Graph


@dataclass(frozen=True)
class PatternInstance:
    graph: Graph
    args: tuple


def _shuffle(rng: random.Random, g: Graph, args: tuple) -> PatternInstance:
    perm = list(range(g.n))
    rng.shuffle(perm)

    def move(a):
        if isinstance(a, (list, tuple, set, frozenset)):
            return type(a)(perm[x] for x in a)
        return perm[a]

    return PatternInstance(g.relabel(perm), tuple(move(a) for a in args))


def _random_connected(rng: random.Random, n: int, extra: float = 0.4) -> Graph:
    edges = [(v, rng.randrange(v)) for v in range(1, n)]
    for u in range(n):
        for v in range(u + 1, n):
            if rng.random() < extra:
                edges.append((u, v))
    return Graph(n, edges)


def _cyclic_core(rng: random.Random, lo: int = 3, hi: int = 5) -> Graph:
    """A cycle with random chords: 2-connected, minimum degree 2."""
    c = rng.randint(lo, hi)
    g = cycle(c)
    chords = [(u, v) for u in range(c) for v in range(u + 2, c) if not g.has_edge(u, v)]
    return Graph(c, [*g.edges, *(e for e in chords if rng.random() < 0.3)])


def _attach(g: Graph, root: int, chain: int) -> tuple[Graph, list[int]]:
    """Hang a path with ``chain`` new vertices at ``root``; return it and the new vertices."""
    new = list(range(g.n, g.n + chain))
    walk = [root, *new]
    return Graph(g.n + chain, [*g.edges, *zip(walk, walk[1:])]), new


def rewire_instance(rng: random.Random) -> PatternInstance:
    a, b = rng.randint(3, 4), rng.randint(3, 4)
    g = join_by_path(cycle(a), 0, cycle(b), 0, rng.randint(1, 3))
    us = g.n - b
    v1, v2 = rng.sample([1, a - 1], 2)
    w1, w2 = rng.sample([us + 1, us + b - 1], 2)
    return _shuffle(rng, g, (0, v1, v2, us, w1, w2))


def slide_instance(rng: random.Random) -> PatternInstance:
    g1 = _random_connected(rng, rng.randint(2, 4))
    g2 = _random_connected(rng, rng.randint(2, 4))
    u, w = rng.randrange(g1.n), rng.randrange(g2.n)
    p = rng.randint(1, 3)
    g = join_by_path(g1, u, g2, w, p)
    return _shuffle(rng, g, (u, g1.n + p - 1 + w))


def tree_instance(rng: random.Random) -> PatternInstance:
    while True:
        g = _cyclic_core(rng)
        root = rng.randrange(g.n)
        size = rng.randint(2, 10 - g.n)
        pool = [root]
        edges = list(g.edges)
        for i in range(size):
            v = g.n + i
            edges.append((rng.choice(pool), v))
            pool.append(v)
        h = Graph(g.n + size, edges)
        if any(h.degree(v) > 1 for v in range(g.n, h.n)):
            return _shuffle(rng, h, (root,))


def relocate_instance(rng: random.Random) -> PatternInstance:
    while True:
        g = _cyclic_core(rng)
        u, v = rng.sample(range(g.n), 2)
        lengths = [
            (x, rng.randint(1, 2)) for x, count in ((u, rng.randint(1, 2)), (v, rng.randint(1, 2))) for _ in range(count)
        ]
        if g.n + sum(l for _, l in lengths) <= 10:
            break
    for root, length in lengths:
        g, _ = _attach(g, root, length)
    return _shuffle(rng, g, (u, v))


def merge_paths_instance(rng: random.Random) -> PatternInstance:
    while True:
        g = _cyclic_core(rng)
        a, b = rng.randrange(g.n), rng.randrange(g.n)
        la, lb = rng.randint(1, 3), rng.randint(1, 3)
        if g.n + la + lb <= 10:
            break
    g, p1 = _attach(g, a, la)
    g, p2 = _attach(g, b, lb)
    return _shuffle(rng, g, (p1[-1], b, p2[0]))


def endblock_instance(rng: random.Random) -> PatternInstance:
    a, b, mid = rng.randint(3, 4), rng.randint(3, 4), rng.randint(0, 2)
    k1, k2 = complete(a), complete(b)
    c1, c2 = rng.randrange(a), rng.randrange(b)
    if mid == 0:
        g = join_by_path(k1, c1, k2, c2, 1)
    else:
        g0 = _random_connected(rng, mid)
        left = join_by_path(k1, c1, g0, rng.randrange(mid), 1)
        g = join_by_path(left, a + rng.randrange(mid), k2, c2, 1)
    block1 = frozenset(range(a))
    block2 = frozenset(range(g.n - b, g.n))
    if rng.random() < 0.5:
        block1, block2 = block2, block1
    return _shuffle(rng, g, (block1, block2))


GENERATORS: dict[str, Callable[[random.Random], PatternInstance]] = {
    "cycle_path_cycle_rewire": rewire_instance,
    "slide_path": slide_instance,
    "tree_to_star": tree_instance,
    "relocate_pendent_paths": relocate_instance,
    "merge_pendent_paths": merge_paths_instance,
    "merge_endblocks": endblock_instance,
}
