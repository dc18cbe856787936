"""Named graphs, the four extremal families, and their closed-form values.

Numbering convention: cycle or clique vertices come first with the hub at
vertex 0; pendent vertices or tail vertices are appended in order.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InvalidClass, InvalidVertex, TooSmall
from .graph import Graph


@dataclass(frozen=True, order=True)
class ClassSpec:
    """The pair ``(n, k)``: ``n`` vertices and exactly ``k`` cut edges."""

    n: int
    k: int

    def __post_init__(self) -> None:
        if self.n < 4 or not 1 <= self.k <= self.n - 3:
            raise InvalidClass(
                f"(n={self.n}, k={self.k}) is not a valid class: need n >= 4 and 1 <= k <= n - 3"
            )


def _spec(spec: ClassSpec | tuple[int, int]) -> ClassSpec:
    return spec if isinstance(spec, ClassSpec) else ClassSpec(*spec)


def path(n: int) -> Graph:
    if n < 1:
        raise TooSmall("path needs n >= 1")
    return Graph(n, ((i, i + 1) for i in range(n - 1)))


def cycle(n: int) -> Graph:
    if n < 3:
        raise TooSmall("cycle needs n >= 3")
    return Graph(n, ((i, (i + 1) % n) for i in range(n)))


def star(n: int) -> Graph:
    if n < 1:
        raise TooSmall("star needs n >= 1")
    return Graph(n, ((0, i) for i in range(1, n)))


def complete(n: int) -> Graph:
    if n < 1:
        raise TooSmall("complete graph needs n >= 1")
    return Graph(n, ((i, j) for i in range(n) for j in range(i + 1, n)))


def _with_pendents(core: Graph, k: int) -> Graph:
    n = core.n + k
    return Graph(n, [*core.edges, *((0, core.n + i) for i in range(k))])


def _with_tail(core: Graph, k: int) -> Graph:
    n = core.n + k
    chain = [0, *range(core.n, n)]
    return Graph(n, [*core.edges, *zip(chain, chain[1:])])


def c_n_s(spec: ClassSpec | tuple[int, int]) -> Graph:
    """Cycle on ``n - k`` vertices with ``k`` pendent edges at vertex 0."""
    s = _spec(spec)
    return _with_pendents(cycle(s.n - s.k), s.k)


def c_n_p(spec: ClassSpec | tuple[int, int]) -> Graph:
    """Cycle on ``n - k`` vertices with a ``k``-edge tail at vertex 0."""
    s = _spec(spec)
    return _with_tail(cycle(s.n - s.k), s.k)


def k_n_s(spec: ClassSpec | tuple[int, int]) -> Graph:
    s = _spec(spec)
    return _with_pendents(complete(s.n - s.k), s.k)


def k_n_p(spec: ClassSpec | tuple[int, int]) -> Graph:
    s = _spec(spec)
    return _with_tail(complete(s.n - s.k), s.k)


def coalesce(g1: Graph, v1: int, g2: Graph, v2: int) -> Graph:
    """Glue ``g2`` onto ``g1`` by identifying ``v2`` with ``v1``.

    ``g1`` keeps its labels; the other vertices of ``g2`` follow in order.
    """
    if not 0 <= v1 < g1.n:
        raise InvalidVertex(f"vertex {v1} not in first graph")
    if not 0 <= v2 < g2.n:
        raise InvalidVertex(f"vertex {v2} not in second graph")
    label = {}
    nxt = g1.n
    for v in range(g2.n):
        if v == v2:
            label[v] = v1
        else:
            label[v] = nxt
            nxt += 1
    return Graph(nxt, [*g1.edges, *((label[a], label[b]) for a, b in g2.edges)])


def join_by_path(g1: Graph, u: int, g2: Graph, w: int, edges: int) -> Graph:
    """Disjoint union of ``g1`` and ``g2`` plus a ``u``-``w`` path of ``edges`` edges."""
    if not 0 <= u < g1.n:
        raise InvalidVertex(f"vertex {u} not in first graph")
    if not 0 <= w < g2.n:
        raise InvalidVertex(f"vertex {w} not in second graph")
    if edges < 1:
        raise ValueError("path needs at least one edge")
    inner = list(range(g1.n, g1.n + edges - 1))
    off = g1.n + edges - 1
    chain = [u, *inner, off + w]
    return Graph(
        off + g2.n,
        [*g1.edges, *((a + off, b + off) for a, b in g2.edges), *zip(chain, chain[1:])],
    )


def bound_thm31(spec: ClassSpec | tuple[int, int]) -> int:
    """Minimum first multiplicative index: ``4**(n-k-1) * (k+2)**2``."""
    s = _spec(spec)
    return 4 ** (s.n - s.k - 1) * (s.k + 2) ** 2


def bound_thm32(spec: ClassSpec | tuple[int, int]) -> int:
    """Minimum second multiplicative index: ``27 * 4**(n-2)``, free of ``k``."""
    s = _spec(spec)
    return 27 * 4 ** (s.n - 2)


def bound_thm41(spec: ClassSpec | tuple[int, int]) -> int:
    s = _spec(spec)
    c = s.n - s.k
    return 4 ** (s.k - 1) * c**2 * (c - 1) ** (2 * (c - 1))


def bound_thm42(spec: ClassSpec | tuple[int, int]) -> int:
    s = _spec(spec)
    c = s.n - s.k - 1
    return (s.n - 1) ** (s.n - 1) * c ** (c * c)
