"""Isomorph-free generation of connected graphs and of the classes G(n, k).

Graphs on ``n`` vertices are grown from the canonical connected graphs on
``n - 1`` vertices by adding one vertex joined to each nonempty subset of
the old vertices. Every connected graph has a vertex whose removal leaves
it connected, so this reaches every isomorphism class. Duplicates are
removed through canonical forms and the result is sorted by canonical
code, which makes the output independent of the worker count.
"""

from __future__ import annotations

import itertools
from concurrent.futures import ProcessPoolExecutor
from typing import Iterable, Iterator

from .constructors import ClassSpec
from .errors import TooLarge
from .g6 import iter_records
from .graph import Graph, _code_bytes, bridges, canonical_labeling, is_connected

MAX_N = 8

_cache: dict[int, tuple[Graph, ...]] = {}


def _canonical_masks(masks: list[int]) -> tuple[int, tuple[int, ...]]:
    code, order = canonical_labeling(masks)
    pos = [0] * len(masks)
    for i, v in enumerate(order):
        pos[v] = i
    out = [0] * len(masks)
    for v, mv in enumerate(masks):
        w = pos[v]
        for u in range(len(masks)):
            if mv >> u & 1:
                out[w] |= 1 << pos[u]
    return code, tuple(out)


def _extend(parents: list[tuple[int, ...]]) -> dict[int, tuple[int, ...]]:
    """Canonical children of a chunk of parents, keyed by canonical code."""
    found: dict[int, tuple[int, ...]] = {}
    for masks in parents:
        k = len(masks)
        for subset in range(1, 1 << k):
            child = [mv | (1 << k) if subset >> v & 1 else mv for v, mv in enumerate(masks)]
            child.append(subset)
            code, canon = _canonical_masks(child)
            if code not in found:
                found[code] = canon
    return found


def _chunks(items: list, count: int) -> list[list]:
    return [items[i::count] for i in range(count) if items[i::count]]


def _grow(n: int, workers: int) -> tuple[Graph, ...]:
    if n == 1:
        return (Graph(1),)
    parents = [g.masks for g in connected_graphs(n - 1, workers)]
    if workers <= 1:
        merged = _extend(parents)
    else:
        merged = {}
        with ProcessPoolExecutor(max_workers=workers) as pool:
            for part in pool.map(_extend, _chunks(parents, workers * 4)):
                merged.update(part)
    return tuple(Graph.from_masks(merged[code]) for code in sorted(merged))


def connected_graphs(n: int, workers: int = 1) -> tuple[Graph, ...]:
    """All connected graphs on ``n`` vertices in canonical labeling, sorted.

    Results are memoised per ``n``; the worker count only affects speed.
    """
    if not 1 <= n <= MAX_N:
        raise TooLarge(f"enumeration supports 1 <= n <= {MAX_N}, got {n}")
    if n not in _cache:
        _cache[n] = _grow(n, workers)
    return _cache[n]


def clear_cache() -> None:
    _cache.clear()


def enumerate_connected(n: int, workers: int = 1) -> Iterator[Graph]:
    yield from connected_graphs(n, workers)


def enumerate_class(spec: ClassSpec, workers: int = 1) -> Iterator[Graph]:
    """Graphs of ``G(n, k)``: connected, ``n`` vertices, exactly ``k`` bridges."""
    for g in connected_graphs(spec.n, workers):
        if len(bridges(g)) == spec.k:
            yield g


def count_class(spec: ClassSpec, workers: int = 1) -> int:
    return sum(1 for _ in enumerate_class(spec, workers))


def bridge_count_histogram(n: int, workers: int = 1) -> dict[int, int]:
    hist: dict[int, int] = {}
    for g in connected_graphs(n, workers):
        k = len(bridges(g))
        hist[k] = hist.get(k, 0) + 1
    return dict(sorted(hist.items()))


def canonical_code(g: Graph) -> bytes:
    code, _ = canonical_labeling(g.masks)
    return _code_bytes(g.n, code)


def labeled_connected_forms(n: int) -> set[bytes]:
    """Brute force over every labeled graph on ``n`` vertices (test oracle)."""
    if n > 6:
        raise TooLarge("labeled brute force is limited to n <= 6")
    pairs = list(itertools.combinations(range(n), 2))
    forms = set()
    for bits in range(1 << len(pairs)):
        g = Graph(n, (p for i, p in enumerate(pairs) if bits >> i & 1))
        if is_connected(g):
            forms.add(canonical_code(g))
    return forms


def ingest_connected(lines: Iterable[str], n: int | None = None) -> tuple[Graph, ...]:
    """Build the universe from graph6 lines instead of self-generation.

    Records are canonicalised and deduplicated; disconnected graphs and
    graphs of the wrong order are dropped.
    """
    found: dict[tuple[int, int], tuple[int, ...]] = {}
    for _, g in iter_records(lines):
        if (n is not None and g.n != n) or not is_connected(g):
            continue
        code, canon = _canonical_masks(list(g.masks))
        found.setdefault((g.n, code), canon)
    return tuple(Graph.from_masks(found[key]) for key in sorted(found))
