"""Simple undirected graphs on vertices ``0..n-1``.

Besides the :class:`Graph` carrier this module holds the structural
queries everything else leans on: connectivity, bridges, blocks,
2-connectivity and a canonical form used for isomorphism testing.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .errors import Disconnected, InvalidEdge, InvalidVertex, TooLarge, TooSmall

Edge = tuple[int, int]

CANON_MAX_N = 12


class Graph:
    """Immutable simple graph with dense integer vertices.

    Edges are stored as sorted pairs ``(u, v)`` with ``u < v``; equality and
    hashing depend only on ``n`` and the edge set.
    """

    __slots__ = ("n", "edges", "masks", "_hash")

    def __init__(self, n: int, edges: Iterable[Sequence[int]] = ()) -> None:
        if n < 0:
            raise InvalidVertex(f"vertex count must be nonnegative, got {n}")
        pairs = set()
        for e in edges:
            u, v = int(e[0]), int(e[1])
            if u == v:
                raise InvalidEdge(f"self-loop at {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise InvalidEdge(f"edge ({u}, {v}) has an endpoint outside 0..{n - 1}")
            pairs.add((u, v) if u < v else (v, u))
        masks = [0] * n
        for u, v in pairs:
            masks[u] |= 1 << v
            masks[v] |= 1 << u
        self.n = n
        self.edges: tuple[Edge, ...] = tuple(sorted(pairs))
        self.masks: tuple[int, ...] = tuple(masks)
        self._hash = hash((n, self.edges))

    @classmethod
    def from_masks(cls, masks: Sequence[int]) -> "Graph":
        n = len(masks)
        return cls(n, ((u, v) for u in range(n) for v in range(u + 1, n) if masks[u] >> v & 1))

    @property
    def m(self) -> int:
        return len(self.edges)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.edges == other.edges

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        return f"Graph({self.n}, {list(self.edges)})"

    def _check(self, v: int) -> None:
        if not 0 <= v < self.n:
            raise InvalidVertex(f"vertex {v} not in 0..{self.n - 1}")

    def neighbors(self, v: int) -> list[int]:
        self._check(v)
        mask = self.masks[v]
        return [w for w in range(self.n) if mask >> w & 1]

    def degree(self, v: int) -> int:
        self._check(v)
        return self.masks[v].bit_count()

    def degrees(self) -> list[int]:
        return [mask.bit_count() for mask in self.masks]

    def has_edge(self, u: int, v: int) -> bool:
        self._check(u)
        self._check(v)
        return bool(self.masks[u] >> v & 1)

    def with_edges(self, add: Iterable[Edge] = (), remove: Iterable[Edge] = ()) -> "Graph":
        """Return a copy with ``remove`` deleted and then ``add`` inserted."""
        drop = {(min(e), max(e)) for e in remove}
        present = set(self.edges)
        for e in drop:
            if e not in present:
                raise InvalidEdge(f"cannot remove missing edge {e}")
        kept = [e for e in self.edges if e not in drop]
        return Graph(self.n, [*kept, *add])

    def relabel(self, perm: Sequence[int]) -> "Graph":
        """Vertex ``v`` of ``self`` becomes vertex ``perm[v]`` of the result."""
        if sorted(perm) != list(range(self.n)):
            raise InvalidVertex("relabeling must be a permutation of 0..n-1")
        return Graph(self.n, ((perm[u], perm[v]) for u, v in self.edges))

    def subgraph_without(self, edges: Iterable[Edge]) -> "Graph":
        drop = {(min(e), max(e)) for e in edges}
        return Graph(self.n, [e for e in self.edges if e not in drop])


def new_graph(n: int, edges: Iterable[Sequence[int]]) -> Graph:
    return Graph(n, edges)


def degree(g: Graph, v: int) -> int:
    return g.degree(v)


def components(g: Graph) -> list[list[int]]:
    """Connected components as sorted vertex lists, ordered by smallest vertex."""
    seen = 0
    comps = []
    for s in range(g.n):
        if seen >> s & 1:
            continue
        comp = 1 << s
        frontier = 1 << s
        while frontier:
            nxt = 0
            f = frontier
            while f:
                low = f & -f
                nxt |= g.masks[low.bit_length() - 1]
                f ^= low
            frontier = nxt & ~comp
            comp |= nxt
        seen |= comp
        comps.append([v for v in range(g.n) if comp >> v & 1])
    return comps


def is_connected(g: Graph) -> bool:
    if g.n == 0:
        return False
    return len(components(g)) == 1


def _require_connected(g: Graph) -> None:
    if not is_connected(g):
        raise Disconnected("operation requires a connected graph")


def bridges(g: Graph) -> list[Edge]:
    """Cut edges of a connected graph, as sorted pairs in sorted order.

    One iterative depth-first search with discovery times and low links.
    """
    _require_connected(g)
    n = g.n
    disc = [-1] * n
    low = [0] * n
    adj = [g.neighbors(v) for v in range(n)]
    found = []
    t = 0
    disc[0] = low[0] = t
    # stack of (vertex, parent, iterator position)
    stack = [(0, -1, 0)]
    while stack:
        v, parent, i = stack[-1]
        if i < len(adj[v]):
            stack[-1] = (v, parent, i + 1)
            w = adj[v][i]
            if disc[w] == -1:
                t += 1
                disc[w] = low[w] = t
                stack.append((w, v, 0))
            elif w != parent:
                low[v] = min(low[v], disc[w])
        else:
            stack.pop()
            if parent >= 0:
                low[parent] = min(low[parent], low[v])
                if low[v] > disc[parent]:
                    found.append((min(v, parent), max(v, parent)))
    return sorted(found)


def bridges_by_deletion(g: Graph) -> list[Edge]:
    """Quadratic reference: an edge is a bridge iff deleting it disconnects ``g``."""
    _require_connected(g)
    return [e for e in g.edges if not is_connected(g.subgraph_without([e]))]


def blocks(g: Graph) -> list[tuple[int, ...]]:
    """Vertex sets of the blocks (biconnected components and K2 bridges)."""
    _require_connected(g)
    n = g.n
    if n == 1:
        return []
    disc = [-1] * n
    low = [0] * n
    adj = [g.neighbors(v) for v in range(n)]
    edge_stack: list[Edge] = []
    out = []
    t = 0
    disc[0] = low[0] = 0
    stack = [(0, -1, 0)]
    while stack:
        v, parent, i = stack[-1]
        if i < len(adj[v]):
            stack[-1] = (v, parent, i + 1)
            w = adj[v][i]
            if disc[w] == -1:
                t += 1
                disc[w] = low[w] = t
                edge_stack.append((v, w))
                stack.append((w, v, 0))
            elif w != parent and disc[w] < disc[v]:
                edge_stack.append((v, w))
                low[v] = min(low[v], disc[w])
        else:
            stack.pop()
            if parent >= 0:
                low[parent] = min(low[parent], low[v])
                if low[v] >= disc[parent]:
                    verts = set()
                    while True:
                        a, b = edge_stack.pop()
                        verts.update((a, b))
                        if (a, b) == (parent, v):
                            break
                    out.append(tuple(sorted(verts)))
    return sorted(out)


@dataclass(frozen=True)
class CutEdgeReport:
    bridges: list[Edge]
    pendent: list[Edge]
    internal: list[Edge]
    blocks: list[tuple[int, ...]] = field(default_factory=list)


def classify_cut_edges(g: Graph) -> CutEdgeReport:
    """Split the bridges of ``g`` into pendent and internal ones."""
    cut = bridges(g)
    deg = g.degrees()
    pendent = [e for e in cut if deg[e[0]] == 1 or deg[e[1]] == 1]
    internal = [e for e in cut if deg[e[0]] >= 2 and deg[e[1]] >= 2]
    return CutEdgeReport(cut, pendent, internal, blocks(g))


def is_two_connected(g: Graph) -> bool:
    if g.n < 3:
        raise TooSmall("2-connectivity is defined for n >= 3")
    if not is_connected(g):
        return False
    for v in range(g.n):
        keep = [u for u in range(g.n) if u != v]
        idx = {u: i for i, u in enumerate(keep)}
        h = Graph(g.n - 1, ((idx[a], idx[b]) for a, b in g.edges if v not in (a, b)))
        if not is_connected(h):
            return False
    return True


def cyclomatic_number(g: Graph) -> int:
    _require_connected(g)
    return g.m - g.n + 1


# --- canonical form -------------------------------------------------------


def _refine(masks: Sequence[int], cells: list[list[int]]) -> list[list[int]]:
    """Split cells by neighbour counts into every cell until nothing changes.

    Groups are ordered by their count signature, so the result depends only
    on the graph and the input partition, never on vertex names.
    """
    while True:
        cellmasks = []
        for c in cells:
            cm = 0
            for v in c:
                cm |= 1 << v
            cellmasks.append(cm)
        out = []
        changed = False
        for c in cells:
            if len(c) == 1:
                out.append(c)
                continue
            groups: dict[tuple[int, ...], list[int]] = {}
            for v in c:
                mv = masks[v]
                groups.setdefault(tuple((mv & cm).bit_count() for cm in cellmasks), []).append(v)
            if len(groups) > 1:
                changed = True
                out.extend(groups[key] for key in sorted(groups))
            else:
                out.append(c)
        cells = out
        if not changed:
            return cells


def _code(masks: Sequence[int], order: Sequence[int]) -> int:
    code = 0
    n = len(order)
    for i in range(n):
        row = masks[order[i]]
        for j in range(i + 1, n):
            code = (code << 1) | (row >> order[j] & 1)
    return code


def _twin_representatives(masks: Sequence[int], cell: list[int]) -> list[int]:
    reps: list[int] = []
    for v in cell:
        for r in reps:
            if masks[v] & ~(1 << r) == masks[r] & ~(1 << v):
                break
        else:
            reps.append(v)
    return reps


def canonical_labeling(masks: Sequence[int]) -> tuple[int, list[int]]:
    """Return ``(code, order)`` minimising the row-major upper-triangle code.

    ``order[i]`` is the original vertex placed at canonical position ``i``.
    Search is individualisation-refinement; exchanging two twin vertices is
    an automorphism, so only one vertex per twin class is branched on.
    """
    n = len(masks)
    best_code = -1
    best_order: list[int] = list(range(n))
    stack = [[list(range(n))]] if n else []
    while stack:
        cells = _refine(masks, stack.pop())
        target = next((i for i, c in enumerate(cells) if len(c) > 1), None)
        if target is None:
            order = [c[0] for c in cells]
            code = _code(masks, order)
            if best_code < 0 or code < best_code:
                best_code, best_order = code, order
            continue
        cell = cells[target]
        for v in _twin_representatives(masks, cell):
            rest = [w for w in cell if w != v]
            stack.append(cells[:target] + [[v], rest] + cells[target + 1 :])
    return max(best_code, 0), best_order


def _code_bytes(n: int, code: int) -> bytes:
    nbits = n * (n - 1) // 2
    return bytes([n]) + code.to_bytes((nbits + 7) // 8, "big")


def canonical_form(g: Graph) -> bytes:
    """Labeling-invariant byte string; equal iff the graphs are isomorphic."""
    if g.n > CANON_MAX_N:
        raise TooLarge(f"canonical form supports n <= {CANON_MAX_N}, got {g.n}")
    code, _ = canonical_labeling(g.masks)
    return _code_bytes(g.n, code)


def canonical_graph(g: Graph) -> Graph:
    """Relabel ``g`` into its canonical representative."""
    if g.n > CANON_MAX_N:
        raise TooLarge(f"canonical form supports n <= {CANON_MAX_N}, got {g.n}")
    _, order = canonical_labeling(g.masks)
    perm = [0] * g.n
    for pos, v in enumerate(order):
        perm[v] = pos
    return g.relabel(perm)


def is_isomorphic(g: Graph, h: Graph) -> bool:
    if g.n != h.n:
        if max(g.n, h.n) > CANON_MAX_N:
            raise TooLarge(f"isomorphism test supports n <= {CANON_MAX_N}")
        return False
    if g.m != h.m or sorted(g.degrees()) != sorted(h.degrees()):
        if g.n > CANON_MAX_N:
            raise TooLarge(f"isomorphism test supports n <= {CANON_MAX_N}")
        return False
    return canonical_form(g) == canonical_form(h)
