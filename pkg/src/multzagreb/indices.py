"""Exact first/second Zagreb indices and their multiplicative variants.

Every value is a Python ``int``; nothing passes through floating point
except the ``ln_*`` helpers, which exist for display only.
"""

from __future__ import annotations

import math
from fractions import Fraction

from .graph import Graph


def pi1(g: Graph) -> int:
    """Product of squared vertex degrees (an isolated vertex makes it 0)."""
    out = 1
    for d in g.degrees():
        out *= d * d
    return out


def pi2(g: Graph) -> int:
    """Product of ``d ** d`` over vertices, with ``0 ** 0 == 1``."""
    out = 1
    for d in g.degrees():
        out *= d**d
    return out


def pi2_edge_form(g: Graph) -> int:
    deg = g.degrees()
    out = 1
    for u, v in g.edges:
        out *= deg[u] * deg[v]
    return out


def m1(g: Graph) -> int:
    return sum(d * d for d in g.degrees())


def m2(g: Graph) -> int:
    deg = g.degrees()
    return sum(deg[u] * deg[v] for u, v in g.edges)


def ln_pi1(g: Graph) -> float:
    degs = g.degrees()
    if 0 in degs:
        return -math.inf
    return sum(2 * math.log(d) for d in degs)


def ln_pi2(g: Graph) -> float:
    return sum(d * math.log(d) for d in g.degrees() if d > 0)


def ratio_t(x: int, m: int) -> Fraction:
    """``x / (x + m)``, increasing in ``x`` for fixed ``m > 0``."""
    if x < 1 or m < 1:
        raise ValueError("ratio_t needs x >= 1 and m >= 1")
    return Fraction(x, x + m)


def ratio_l(x: int, m: int) -> Fraction:
    """``x**x / (x + m)**(x + m)``, decreasing in ``x`` for fixed ``m > 0``."""
    if x < 1 or m < 1:
        raise ValueError("ratio_l needs x >= 1 and m >= 1")
    return Fraction(x**x, (x + m) ** (x + m))
