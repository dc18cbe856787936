"""Exhaustive checks of the four extremal theorems and the lemma suites.

The per-graph work (bridge count and both multiplicative indices) is a
pure map that may run in a process pool; the reduction collects ties into
sets and sorts them, so reports do not depend on the worker count.
"""

from __future__ import annotations

import csv
import io
import json
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from enum import Enum
from typing import Callable

from . import constructors as con
from . import transforms as tf
from .constructors import ClassSpec
from .enumerate import MAX_N, connected_graphs
from .errors import EmptyClass, TooLarge
from .g6 import encode_g6
from .graph import Graph, bridges, canonical_form, is_isomorphic, is_two_connected
from .indices import pi1, pi2
from .instances import GENERATORS

SCHEMA = 1


class Index(str, Enum):
    PI1 = "PI1"
    PI2 = "PI2"


class Direction(str, Enum):
    MIN = "MIN"
    MAX = "MAX"


class Theorem(str, Enum):
    T31 = "T31"
    T32 = "T32"
    T41 = "T41"
    T42 = "T42"


# theorem -> (index, direction, closed form, named extremal construction)
THEOREMS: dict[Theorem, tuple[Index, Direction, Callable[[ClassSpec], int], Callable[[ClassSpec], Graph]]] = {
    Theorem.T31: (Index.PI1, Direction.MIN, con.bound_thm31, con.c_n_s),
    Theorem.T32: (Index.PI2, Direction.MIN, con.bound_thm32, con.c_n_p),
    Theorem.T41: (Index.PI1, Direction.MAX, con.bound_thm41, con.k_n_p),
    Theorem.T42: (Index.PI2, Direction.MAX, con.bound_thm42, con.k_n_s),
}


@dataclass(frozen=True)
class ExtremalCertificate:
    spec: ClassSpec
    index: Index
    direction: Direction
    value: int
    attainers: tuple[bytes, ...]
    attainer_g6: tuple[str, ...]
    class_size: int


@dataclass(frozen=True)
class TheoremReport:
    theorem: Theorem
    spec: ClassSpec
    bound: int
    achieved: int
    bound_matches: bool
    unique_extremal: bool
    extremal_is_named_graph: bool
    class_size: int
    attainer_g6: tuple[str, ...]

    @property
    def passed(self) -> bool:
        return self.bound_matches and self.unique_extremal and self.extremal_is_named_graph

    def as_row(self) -> dict:
        return {
            "theorem": self.theorem.value,
            "n": self.spec.n,
            "k": self.spec.k,
            "class_size": self.class_size,
            "bound": str(self.bound),
            "achieved": str(self.achieved),
            "bound_matches": self.bound_matches,
            "unique_extremal": self.unique_extremal,
            "extremal_is_named_graph": self.extremal_is_named_graph,
            "passed": self.passed,
            "attainers": list(self.attainer_g6),
        }


# --- per-graph evaluation -------------------------------------------------


@dataclass(frozen=True)
class _Row:
    graph: Graph
    k: int
    pi1: int
    pi2: int


def _evaluate(graphs: list[Graph]) -> list[tuple[int, int, int]]:
    return [(len(bridges(g)), pi1(g), pi2(g)) for g in graphs]


def _rows(n: int, workers: int) -> list[_Row]:
    graphs = list(connected_graphs(n, workers))
    if workers <= 1:
        values = _evaluate(graphs)
    else:
        size = max(1, len(graphs) // (workers * 4))
        chunks = [graphs[i : i + size] for i in range(0, len(graphs), size)]
        values = []
        with ProcessPoolExecutor(max_workers=workers) as pool:
            for part in pool.map(_evaluate, chunks):
                values.extend(part)
    return [_Row(g, *v) for g, v in zip(graphs, values)]


def _check_scale(spec: ClassSpec) -> None:
    if spec.n > MAX_N:
        raise TooLarge(f"exhaustive search supports n <= {MAX_N}, got {spec.n}")


def _extremum(spec: ClassSpec, index: Index, direction: Direction, rows: list[_Row]) -> ExtremalCertificate:
    members = [r for r in rows if r.k == spec.k]
    if not members:
        raise EmptyClass(f"no connected graph with n={spec.n} and k={spec.k} bridges")
    key = (lambda r: r.pi1) if index is Index.PI1 else (lambda r: r.pi2)
    value = min(map(key, members)) if direction is Direction.MIN else max(map(key, members))
    winners = sorted({canonical_form(r.graph): r.graph for r in members if key(r) == value}.items())
    return ExtremalCertificate(
        spec=spec,
        index=index,
        direction=direction,
        value=value,
        attainers=tuple(code for code, _ in winners),
        attainer_g6=tuple(encode_g6(g) for _, g in winners),
        class_size=len(members),
    )


def extremal_search(
    spec: ClassSpec | tuple[int, int], index: Index | str, direction: Direction | str, workers: int = 1
) -> ExtremalCertificate:
    """Exact extremum of an index over ``G(n, k)`` with every attaining graph."""
    spec = spec if isinstance(spec, ClassSpec) else ClassSpec(*spec)
    _check_scale(spec)
    return _extremum(spec, Index(index), Direction(direction), _rows(spec.n, workers))


def _report(theorem: Theorem, spec: ClassSpec, rows: list[_Row]) -> TheoremReport:
    index, direction, bound_fn, named_fn = THEOREMS[theorem]
    cert = _extremum(spec, index, direction, rows)
    bound = bound_fn(spec)
    named = canonical_form(named_fn(spec))
    return TheoremReport(
        theorem=theorem,
        spec=spec,
        bound=bound,
        achieved=cert.value,
        bound_matches=cert.value == bound,
        unique_extremal=len(cert.attainers) == 1,
        extremal_is_named_graph=named in cert.attainers,
        class_size=cert.class_size,
        attainer_g6=cert.attainer_g6,
    )


def verify_theorem(theorem: Theorem | str, spec: ClassSpec | tuple[int, int], workers: int = 1) -> TheoremReport:
    spec = spec if isinstance(spec, ClassSpec) else ClassSpec(*spec)
    _check_scale(spec)
    return _report(Theorem(theorem), spec, _rows(spec.n, workers))


@dataclass
class VerificationSummary:
    n_max: int
    reports: list[TheoremReport]
    class_sizes: dict[tuple[int, int], int] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.reports)

    def to_json(self) -> str:
        doc = {
            "schema": SCHEMA,
            "n_max": self.n_max,
            "passed": self.passed,
            "class_sizes": [{"n": n, "k": k, "count": c} for (n, k), c in sorted(self.class_sizes.items())],
            "reports": [r.as_row() for r in self.reports],
        }
        return json.dumps(doc, indent=2) + "\n"

    def to_csv(self) -> str:
        buf = io.StringIO()
        fields = list(self.reports[0].as_row()) if self.reports else ["theorem"]
        writer = csv.DictWriter(buf, fieldnames=fields, lineterminator="\n")
        writer.writeheader()
        for r in self.reports:
            row = r.as_row()
            row["attainers"] = " ".join(row["attainers"])
            writer.writerow(row)
        return buf.getvalue()

    def to_text(self) -> str:
        lines = [f"{'thm':<4} {'n':>2} {'k':>2} {'size':>6} {'bound':>36} {'achieved':>36}  result"]
        for r in self.reports:
            status = "PASS" if r.passed else "FAIL " + " ".join(r.attainer_g6)
            lines.append(
                f"{r.theorem.value:<4} {r.spec.n:>2} {r.spec.k:>2} {r.class_size:>6} "
                f"{r.bound:>36} {r.achieved:>36}  {status}"
            )
        total = len(self.reports)
        good = sum(r.passed for r in self.reports)
        lines.append(f"{good}/{total} reports passed")
        return "\n".join(lines) + "\n"


def verify_all(n_max: int, workers: int = 1) -> VerificationSummary:
    """Every theorem over every class ``(n, k)`` with ``4 <= n <= n_max``."""
    if n_max > MAX_N:
        raise TooLarge(f"verification supports n_max <= {MAX_N}, got {n_max}")
    if n_max < 4:
        raise ValueError("n_max must be at least 4")
    reports = []
    sizes = {}
    for n in range(4, n_max + 1):
        rows = _rows(n, workers)
        for k in range(1, n - 2):
            spec = ClassSpec(n, k)
            sizes[(n, k)] = sum(1 for r in rows if r.k == k)
            reports.extend(_report(t, spec, rows) for t in Theorem)
    return VerificationSummary(n_max, reports, sizes)


# --- lemma suites ---------------------------------------------------------


@dataclass
class LemmaResult:
    checked: int = 0
    violations: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return self.checked > 0 and not self.violations


@dataclass
class LemmaSuiteReport:
    seed: int
    trials: int
    results: dict[str, LemmaResult]

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.results.values())

    def to_json(self) -> str:
        doc = {
            "schema": SCHEMA,
            "seed": self.seed,
            "trials": self.trials,
            "passed": self.passed,
            "results": {
                name: {"checked": r.checked, "violations": r.violations} for name, r in self.results.items()
            },
        }
        return json.dumps(doc, indent=2) + "\n"

    def to_text(self) -> str:
        lines = [
            f"{name:<28} {r.checked:>7} checked  {'PASS' if r.passed else 'FAIL'}"
            for name, r in self.results.items()
        ]
        return "\n".join(lines) + "\n"


def check_edge_addition(n_max: int = 6) -> LemmaResult:
    """Adding any missing edge strictly raises both indices; deleting one lowers them.

    Deletion is checked from n = 3: in K2 both endpoints drop to degree 0 and
    ``1**1 == 0**0`` leaves the second index unchanged.
    """
    res = LemmaResult()
    for n in range(1, n_max + 1):
        for g in connected_graphs(n):
            before = (pi1(g), pi2(g))
            for u in range(n):
                for v in range(u + 1, n):
                    if g.has_edge(u, v) and n < 3:
                        continue
                    res.checked += 1
                    if g.has_edge(u, v):
                        h = g.with_edges(remove=[(u, v)])
                        ok = pi1(h) < before[0] and pi2(h) < before[1]
                    else:
                        h = g.with_edges(add=[(u, v)])
                        ok = pi1(h) > before[0] and pi2(h) > before[1]
                    if not ok:
                        res.violations.append(f"{encode_g6(g)} edge ({u},{v})")
    return res


def check_two_connected_extremes(n_max: int = 7) -> LemmaResult:
    """Among 2-connected graphs: K_n uniquely maximises, C_n uniquely minimises."""
    res = LemmaResult()
    for n in range(3, n_max + 1):
        family = [g for g in connected_graphs(n) if is_two_connected(g)]
        for fn in (pi1, pi2):
            res.checked += 1
            values = [fn(g) for g in family]
            hi, lo = max(values), min(values)
            tops = [g for g, x in zip(family, values) if x == hi]
            bottoms = [g for g, x in zip(family, values) if x == lo]
            if len(tops) != 1 or not is_isomorphic(tops[0], con.complete(n)):
                res.violations.append(f"n={n} {fn.__name__} max attained by {[encode_g6(g) for g in tops]}")
            if len(bottoms) != 1 or not is_isomorphic(bottoms[0], con.cycle(n)):
                res.violations.append(f"n={n} {fn.__name__} min attained by {[encode_g6(g) for g in bottoms]}")
    return res


def _direction_ok(name: str, g: Graph, out) -> bool:
    a1, a2 = pi1(g), pi2(g)
    if name == "relocate_pendent_paths":
        first, second = out
        b1, b2 = pi1(first.result), pi2(first.result)
        c1, c2 = pi1(second.result), pi2(second.result)
        return (a1 >= b1 and a2 <= b2) or (a1 > c1 and a2 < c2)
    b1, b2 = pi1(out.result), pi2(out.result)
    if name == "cycle_path_cycle_rewire":
        return a1 > b1 and a2 > b2
    if name == "slide_path":
        return a1 >= b1 and a2 <= b2
    if name == "tree_to_star":
        return a1 > b1 and a2 < b2
    if name == "merge_pendent_paths":
        return a1 < b1 and a2 > b2
    if name == "merge_endblocks":
        return a1 < b1
    raise KeyError(name)


def check_transform(name: str, seed: int, trials: int) -> LemmaResult:
    rng = random.Random(f"{name}:{seed}")
    gen = GENERATORS[name]
    fn = getattr(tf, name)
    res = LemmaResult()
    for _ in range(trials):
        inst = gen(rng)
        out = fn(inst.graph, *inst.args)
        res.checked += 1
        if not _direction_ok(name, inst.graph, out):
            res.violations.append(f"{encode_g6(inst.graph)} args={inst.args}")
    return res


def lemma_suite(seed: int = 0, trials: int = 200, exhaustive_add: int = 6, exhaustive_blocks: int = 7) -> LemmaSuiteReport:
    results = {
        "edge_addition": check_edge_addition(exhaustive_add),
        "two_connected_extremes": check_two_connected_extremes(exhaustive_blocks),
    }
    for name in GENERATORS:
        results[name] = check_transform(name, seed, trials)
    return LemmaSuiteReport(seed, trials, results)
