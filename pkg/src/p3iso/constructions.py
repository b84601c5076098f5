"""Generators for the extremal families, with fixed vertex layouts.

Layouts (0-based labels):

* ``build_bk_star(k)``: block ``i`` (1-based) is ``v_i, v_i', w_i, w_i'`` at
  labels ``4(i-1) .. 4(i-1)+3``; the last block is the triangle
  ``v_k, v_k', w_k``.
* ``build_bn(n)``: ``B_k*`` followed by the pendant path, which hangs off
  ``v_1`` (label 0).
* ``build_bn_k3_h(n, h)``: spine vertices ``1..b_n`` at labels ``0..b_n-1``,
  then triangle ``F_i`` at labels ``b_n + 3(i-1) .. b_n + 3i - 1``.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .graph import Graph


class Family(str, Enum):
    BK_STAR = "bkstar"
    B_N = "bn"
    B_N_K3_H = "bnk3h"
    CYCLE = "cycle"
    PATH = "path"
    K4_MINUS = "k4minus"


def build_path(n: int) -> Graph:
    if n < 1:
        raise ValueError("path needs n >= 1")
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def build_cycle(n: int) -> Graph:
    if n < 3:
        raise ValueError("cycle needs n >= 3")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


# vertices 0..3 stand for 1..4; the missing edge is {3, 4}
K4_MINUS_EDGES = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)]


def build_k4_minus() -> Graph:
    return Graph.from_edges(4, K4_MINUS_EDGES)


def _bk_star_edges(k: int) -> list[tuple[int, int]]:
    edges = []
    for i in range(k - 1):
        base = 4 * i
        edges += [(base + a, base + b) for a, b in K4_MINUS_EDGES]
        # w_i v_{i+1} and w_i' v_{i+1}'
        edges += [(base + 2, base + 4), (base + 3, base + 5)]
    last = 4 * (k - 1)
    edges += [(last, last + 1), (last, last + 2), (last + 1, last + 2)]
    return edges


def build_bk_star(k: int) -> Graph:
    if k < 1:
        raise ValueError("B_k* needs k >= 1")
    return Graph.from_edges(4 * k - 1, _bk_star_edges(k))


def build_bn(n: int) -> Graph:
    if n < 1:
        raise ValueError("B_n needs n >= 1")
    k, r = divmod(n + 1, 4)
    if k == 0:
        return build_path(n)
    edges = _bk_star_edges(k)
    prev = 0
    for extra in range(4 * k - 1, n):
        edges.append((prev, extra))
        prev = extra
    return Graph.from_edges(n, edges)


def build_bn_k3_h(n: int, h: int) -> Graph:
    if h < 5 or n < 4 * (h - 2):
        raise ValueError(f"B_(n,K3,h) needs h >= 5 and n >= 4(h-2); got n={n}, h={h}")
    a = n // 4
    b = n - 3 * a
    # spine vertex i (1-based) has label i - 1
    edges = [(i - 1, i) for i in range(h - 2, b)]
    edges += [(0, i) for i in range(1, h - 2)]
    for i in range(a):
        t = b + 3 * i
        edges += [(t, t + 1), (t, t + 2), (t + 1, t + 2)]
        edges += [(i, t), (i, t + 1), (i, t + 2)]
    return Graph.from_edges(n, edges)


@dataclass(frozen=True)
class ConstructionParams:
    family: Family
    k: int | None = None
    n: int | None = None
    h: int | None = None

    @property
    def vertex_count(self) -> int:
        if self.family is Family.BK_STAR:
            return 4 * self.k - 1
        if self.family is Family.K4_MINUS:
            return 4
        return self.n

    def build(self) -> Graph:
        fam = self.family
        if fam is Family.BK_STAR:
            return build_bk_star(_need(self.k, "k"))
        if fam is Family.B_N:
            return build_bn(_need(self.n, "n"))
        if fam is Family.B_N_K3_H:
            return build_bn_k3_h(_need(self.n, "n"), _need(self.h, "h"))
        if fam is Family.CYCLE:
            return build_cycle(_need(self.n, "n"))
        if fam is Family.PATH:
            return build_path(_need(self.n, "n"))
        return build_k4_minus()


def _need(value: int | None, name: str) -> int:
    if value is None:
        raise ValueError(f"parameter {name} is required for this family")
    return value
