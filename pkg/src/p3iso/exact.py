"""Exact P3-isolation number by iterative-deepening branch and bound.

Every P3-isolating set meets ``N[{a, b, c}]`` for each P3 ``a-b-c`` that
survives in the residual graph, so branching on that closed neighbourhood is
complete. Components are solved independently and their witnesses unioned.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graph import Graph, VertexSet, iter_bits, members
from .patterns import find_residual_p3


@dataclass(frozen=True)
class ExactResult:
    iota: int
    witness: VertexSet

    @property
    def vertices(self) -> list[int]:
        return members(self.witness)


def _p3_packing(adj: tuple[int, ...], alive: VertexSet, allowed: VertexSet) -> int:
    """Number of P3s found greedily whose candidate sets are pairwise disjoint.

    Each such P3 needs its own vertex from ``allowed``, so this is a lower
    bound on the number of vertices still to be chosen.
    """
    count = 0
    used = 0
    rest = alive
    while True:
        found = None
        for b in iter_bits(rest):
            row = adj[b] & rest
            if row & (row - 1):
                a = (row & -row).bit_length() - 1
                row &= row - 1
                c = (row & -row).bit_length() - 1
                cover = adj[a] | adj[b] | adj[c] | (1 << a) | (1 << b) | (1 << c)
                if not cover & used & allowed:
                    found = cover
                    break
        if found is None:
            return count
        count += 1
        used |= found & allowed
        rest &= ~found


def _search(graph: Graph, covered: VertexSet, budget: int, forbidden: VertexSet) -> VertexSet | None:
    """Smallest-label-first DFS for a set of at most ``budget`` extra vertices."""
    alive = graph.vertices & ~covered
    p3 = find_residual_p3(graph, alive)
    if p3 is None:
        return 0
    if budget == 0:
        return None
    adj = graph.adj
    a, b, c = p3
    cand = (adj[a] | adj[b] | adj[c] | 1 << a | 1 << b | 1 << c) & ~forbidden
    if budget > 1 and _p3_packing(adj, alive, graph.vertices & ~forbidden) > budget:
        return None
    for u in iter_bits(cand):
        found = _search(graph, covered | adj[u] | 1 << u, budget - 1, forbidden)
        if found is not None:
            return found | 1 << u
        # any solution using u was reachable through this branch
        forbidden |= 1 << u
    return None


def _component_min(graph: Graph, comp: VertexSet, kmax: int) -> VertexSet | None:
    outside = graph.vertices & ~comp
    for k in range(kmax + 1):
        found = _search(graph, outside, k, outside)
        if found is not None:
            return found
    return None


def min_isolating_upto(graph: Graph, kmax: int) -> ExactResult | None:
    """Smallest P3-isolating set of size at most ``kmax``, or ``None``."""
    if kmax < 0:
        raise ValueError("budget must be non-negative")
    witness = 0
    spent = 0
    for comp in graph.component_masks():
        found = _component_min(graph, comp, kmax - spent)
        if found is None:
            return None
        witness |= found
        spent += found.bit_count()
    return ExactResult(spent, witness)


def iota_exact(graph: Graph) -> ExactResult:
    result = min_isolating_upto(graph, graph.n)
    assert result is not None  # D = V(G) always isolates
    return result


def is_tight(graph: Graph) -> bool:
    """Connected graph with iota(G, P3) = (n + 1) / 4."""
    if not graph.is_connected():
        raise ValueError("is_tight expects a connected graph")
    if graph.n % 4 != 3:
        return False
    target = (graph.n + 1) // 4
    result = min_isolating_upto(graph, target)
    return result is not None and result.iota == target

