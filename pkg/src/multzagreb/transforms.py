"""Edge rewirings that move the multiplicative indices in a known direction.

Each transform checks that its input really has the required shape and
raises :class:`PatternMismatch` otherwise. None of them add or remove
vertices.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable

from .errors import PatternMismatch
from .graph import Edge, Graph, bridges, components, is_connected


@dataclass(frozen=True)
class TransformOutcome:
    result: Graph
    removed: tuple[Edge, ...]
    added: tuple[Edge, ...]


def _norm(edges: Iterable[Edge]) -> tuple[Edge, ...]:
    return tuple(sorted((min(a, b), max(a, b)) for a, b in edges))


def _apply(g: Graph, remove: Iterable[Edge], add: Iterable[Edge]) -> TransformOutcome:
    remove, add = _norm(remove), _norm(add)
    for a, b in add:
        if g.has_edge(a, b):
            raise PatternMismatch(f"edge ({a}, {b}) already present")
    return TransformOutcome(g.with_edges(add=add, remove=remove), remove, add)


def _need_edge(g: Graph, a: int, b: int) -> None:
    if not (0 <= a < g.n and 0 <= b < g.n) or not g.has_edge(a, b):
        raise PatternMismatch(f"expected edge ({a}, {b})")


def _need_connected(g: Graph) -> frozenset[Edge]:
    if not is_connected(g):
        raise PatternMismatch("graph is not connected")
    return frozenset(bridges(g))


def pendent_path(g: Graph, root: int, first: int) -> list[int] | None:
    """Vertices of the pendent path leaving ``root`` through ``first``.

    Returns ``None`` unless every vertex after ``root`` has degree 2 and the
    walk ends at a vertex of degree 1.
    """
    prev, cur = root, first
    out = []
    while True:
        out.append(cur)
        d = g.degree(cur)
        if d == 1:
            return out
        if d != 2:
            return None
        a, b = g.neighbors(cur)
        prev, cur = cur, (b if a == prev else a)
        if cur == root or cur in out:
            return None


def pendent_paths_at(g: Graph, v: int) -> list[list[int]]:
    return [p for w in g.neighbors(v) if (p := pendent_path(g, v, w)) is not None]


def _cycle_component(g: Graph, cut: frozenset[Edge], v: int) -> set[int]:
    h = g.subgraph_without(cut)
    comp = next(c for c in components(h) if v in c)
    if len(comp) < 3 or any(h.degree(w) != 2 for w in comp):
        raise PatternMismatch(f"vertex {v} does not lie on a cycle block")
    return set(comp)


def _bridge_path(g: Graph, cut: frozenset[Edge], u: int, v: int) -> list[int]:
    """Shortest ``u``-``v`` path, required to consist of bridges only."""
    parent = {u: u}
    queue = deque([u])
    while queue:
        a = queue.popleft()
        for b in g.neighbors(a):
            if b not in parent:
                parent[b] = a
                queue.append(b)
    if v not in parent:
        raise PatternMismatch(f"no path from {u} to {v}")
    walk = [v]
    while walk[-1] != u:
        walk.append(parent[walk[-1]])
    walk.reverse()
    for a, b in zip(walk, walk[1:]):
        if (min(a, b), max(a, b)) not in cut:
            raise PatternMismatch(f"edge ({a}, {b}) on the {u}-{v} path is not a cut edge")
    return walk


def cycle_path_cycle_rewire(
    g: Graph, u1: int, v1: int, v2: int, us: int, w1: int, w2: int
) -> TransformOutcome:
    """Open both cycles of two cycles joined by a path into one big cycle.

    ``g`` must be exactly a cycle through ``u1`` (neighbours ``v1``, ``v2``),
    a cycle through ``us`` (neighbours ``w1``, ``w2``) and an internal path
    from ``u1`` to ``us``. Removes ``u1v2, usw1, usw2`` and adds
    ``v2w2, u1w1``, so ``us`` becomes a leaf and no other degree changes.
    """
    for a, b in ((u1, v1), (u1, v2), (us, w1), (us, w2)):
        _need_edge(g, a, b)
    if v1 == v2 or w1 == w2 or u1 == us:
        raise PatternMismatch("pattern vertices must be distinct")
    cut = _need_connected(g)
    c1 = _cycle_component(g, cut, u1)
    c2 = _cycle_component(g, cut, us)
    if c1 == c2 or not {v1, v2} <= c1 or not {w1, w2} <= c2:
        raise PatternMismatch("u1 and us must lie on two different cycles")
    walk = _bridge_path(g, cut, u1, us)
    inner = walk[1:-1]
    if any(g.degree(x) != 2 for x in inner):
        raise PatternMismatch("internal path has a branching vertex")
    if len(c1) + len(c2) + len(inner) != g.n:
        raise PatternMismatch("graph has parts beyond two cycles and a path")
    return _apply(g, [(u1, v2), (us, w1), (us, w2)], [(v2, w2), (u1, w1)])


def slide_path(g: Graph, u: int, v: int) -> TransformOutcome:
    """Turn an internal ``u``-``v`` path into a pendent one.

    Every edge of ``v`` off the path moves to ``u``: the far side is glued
    onto ``u`` and the path now hangs from ``u`` with ``v`` as its leaf.
    """
    if u == v:
        raise PatternMismatch("path endpoints must differ")
    cut = _need_connected(g)
    walk = _bridge_path(g, cut, u, v)
    if any(g.degree(x) != 2 for x in walk[1:-1]):
        raise PatternMismatch("internal path has a branching vertex")
    if g.degree(u) < 2 or g.degree(v) < 2:
        raise PatternMismatch("both path endpoints need a side graph attached")
    on_path = walk[-2]
    moved = [w for w in g.neighbors(v) if w != on_path]
    return _apply(g, [(v, w) for w in moved], [(u, w) for w in moved])


def hanging_tree(g: Graph, root: int) -> set[int]:
    """Vertices (other than ``root``) of the maximal tree hanging at ``root``."""
    cut = _need_connected(g)
    out: set[int] = set()
    for w in g.neighbors(root):
        if (min(root, w), max(root, w)) not in cut:
            continue
        h = g.subgraph_without([(root, w)])
        comp = next(c for c in components(h) if w in c)
        inside = set(comp)
        m = sum(1 for a, b in h.edges if a in inside)
        if m == len(comp) - 1:
            out |= inside
    return out


def tree_to_star(g: Graph, root: int) -> TransformOutcome:
    """Replace the tree hanging at ``root`` by the same number of pendent edges."""
    if not 0 <= root < g.n:
        raise PatternMismatch(f"vertex {root} not in graph")
    tree = hanging_tree(g, root)
    if not tree:
        raise PatternMismatch(f"no tree hangs at {root}")
    if all(g.degree(t) == 1 and g.has_edge(root, t) for t in tree):
        raise PatternMismatch(f"the tree at {root} is already a star centred there")
    if not any(w not in tree for w in g.neighbors(root)):
        raise PatternMismatch("root has no neighbours outside the hanging tree")
    span = tree | {root}
    tree_edges = [(a, b) for a, b in g.edges if a in span and b in span and (a in tree or b in tree)]
    targets = [(root, t) for t in sorted(tree)]
    keep = set(_norm(tree_edges)) & set(_norm(targets))
    return _apply(
        g,
        [e for e in _norm(tree_edges) if e not in keep],
        [e for e in _norm(targets) if e not in keep],
    )


def relocate_pendent_paths(g: Graph, u: int, v: int) -> tuple[TransformOutcome, TransformOutcome]:
    """Move all pendent paths of ``u`` to ``v``, and (separately) all of ``v``'s to ``u``."""
    if u == v:
        raise PatternMismatch("u and v must differ")
    _need_connected(g)
    pu, pv = pendent_paths_at(g, u), pendent_paths_at(g, v)
    if not pu or not pv:
        raise PatternMismatch("both u and v must carry at least one pendent path")
    su = {x for p in pu for x in p}
    sv = {x for p in pv for x in p}
    if su & sv or u in sv or v in su:
        raise PatternMismatch("the pendent paths of u and v overlap")
    if g.degree(u) == len(pu) or g.degree(v) == len(pv):
        raise PatternMismatch("u and v must keep a neighbour outside their pendent paths")
    if g.n - len(su) - len(sv) < 3:
        raise PatternMismatch("the residual graph needs at least 3 vertices")
    to_v = _apply(g, [(u, p[0]) for p in pu], [(v, p[0]) for p in pu])
    to_u = _apply(g, [(v, p[0]) for p in pv], [(u, p[0]) for p in pv])
    return to_v, to_u


def merge_pendent_paths(g: Graph, u_path_end: int, v1: int, v2: int) -> TransformOutcome:
    """Detach the pendent path ``v2...`` from branch vertex ``v1`` and append it at leaf ``u_path_end``."""
    us = u_path_end
    _need_edge(g, v1, v2)
    _need_connected(g)
    if g.degree(us) != 1:
        raise PatternMismatch(f"{us} is not a pendent vertex")
    if g.degree(v1) < 3:
        raise PatternMismatch(f"branch vertex {v1} needs degree >= 3")
    p2 = pendent_path(g, v1, v2)
    if p2 is None:
        raise PatternMismatch(f"{v1}-{v2} does not start a pendent path")
    if us in p2:
        raise PatternMismatch("the two pendent paths must be different")
    (nb,) = g.neighbors(us)
    prev, cur = us, nb
    while g.degree(cur) < 3:
        if cur in p2 or g.degree(cur) != 2:
            raise PatternMismatch(f"{us} does not end a pendent path off a branch vertex")
        a, b = g.neighbors(cur)
        prev, cur = cur, (b if a == prev else a)
    return _apply(g, [(v1, v2)], [(us, v2)])


def _is_clique(g: Graph, verts: set[int]) -> bool:
    return all(g.has_edge(a, b) for a in verts for b in verts if a < b)


def _endblock_cut_vertex(g: Graph, block: set[int]) -> int:
    attached = [v for v in block if any(w not in block for w in g.neighbors(v))]
    if len(attached) != 1:
        raise PatternMismatch(f"block {sorted(block)} is not an endblock")
    (c,) = attached
    if g.degree(c) != len(block):
        raise PatternMismatch(f"cut vertex {c} must have exactly one edge leaving its block")
    return c


def merge_endblocks(g: Graph, block1: Iterable[int], block2: Iterable[int]) -> TransformOutcome:
    """Fuse two clique endblocks ``K_a`` and ``K_b`` into one clique ``K_{a+b-1}``.

    The non-cut vertices of ``block2`` leave their cut vertex and join every
    vertex of ``block1``; the cut vertex of ``block2`` is left as a leaf.
    """
    b1, b2 = set(block1), set(block2)
    if b1 & b2:
        raise PatternMismatch("blocks must be disjoint")
    if len(b1) < 3 or len(b2) < 3:
        raise PatternMismatch("both blocks need at least 3 vertices")
    if not all(0 <= v < g.n for v in b1 | b2):
        raise PatternMismatch("block vertex outside the graph")
    if not _is_clique(g, b1) or not _is_clique(g, b2):
        raise PatternMismatch("both blocks must be cliques")
    _need_connected(g)
    _endblock_cut_vertex(g, b1)
    c2 = _endblock_cut_vertex(g, b2)
    rest = sorted(b2 - {c2})
    return _apply(g, [(c2, b) for b in rest], [(b, a) for b in rest for a in sorted(b1)])
