"""P3 detection, isolating-set checks and induced cycle search."""

from __future__ import annotations

from .graph import Graph, VertexSet, iter_bits


def contains_p3(graph: Graph) -> bool:
    """A 3-vertex path exists exactly when some vertex has two neighbours."""
    return any(row & (row - 1) for row in graph.adj)


def is_matching(graph: Graph) -> bool:
    return not contains_p3(graph)


def residual_max_degree(graph: Graph, mask: VertexSet) -> int:
    """Maximum degree of ``G - N[mask]``, computed without relabelling."""
    alive = graph.vertices & ~graph.closed_neighborhood(mask)
    return max((graph.adj[v] & alive).bit_count() for v in iter_bits(alive)) if alive else 0


def find_residual_p3(graph: Graph, alive: VertexSet) -> tuple[int, int, int] | None:
    """A P3 ``(a, b, c)`` inside ``G[alive]``, or ``None`` if that graph is a matching.

    The centre ``b`` has maximum degree in ``G[alive]`` (smallest label on
    ties); ``a`` and ``c`` are its two smallest neighbours there.
    """
    best, best_deg = -1, 1
    for v in iter_bits(alive):
        d = (graph.adj[v] & alive).bit_count()
        if d > best_deg:
            best, best_deg = v, d
    if best < 0:
        return None
    nbrs = graph.adj[best] & alive
    a = (nbrs & -nbrs).bit_length() - 1
    nbrs &= nbrs - 1
    c = (nbrs & -nbrs).bit_length() - 1
    return a, best, c


def is_p3_isolating(graph: Graph, mask: VertexSet) -> bool:
    alive = graph.vertices & ~graph.closed_neighborhood(mask)
    adj = graph.adj
    for v in iter_bits(alive):
        row = adj[v] & alive
        if row & (row - 1):
            return False
    return True


def find_induced_cycle(graph: Graph, length: int) -> tuple[int, ...] | None:
    """First induced cycle on ``length`` vertices, or ``None``.

    Cycles are searched rooted at their smallest vertex ``s`` and oriented so
    that the second vertex is smaller than the last, so each induced cycle is
    met once. Paths are grown only through vertices that keep them chordless.
    """
    if length < 3:
        raise ValueError("cycle length must be at least 3")
    adj = graph.adj
    n = graph.n
    if n < length:
        return None

    for s in range(n):
        above = graph.vertices & ~((1 << (s + 1)) - 1)
        path = [s]

        def extend(last: int, blocked: VertexSet, used: VertexSet) -> bool:
            # ``blocked``: vertices adjacent to some path vertex other than ``last``.
            depth = len(path)
            cand = adj[last] & above & ~used & ~blocked
            if depth == length - 1:
                # closing vertex: adjacent to s, larger than path[1]
                cand &= adj[s] & ~((1 << (path[1] + 1)) - 1)
                if cand:
                    path.append((cand & -cand).bit_length() - 1)
                    return True
                return False
            if depth >= 2:
                cand &= ~adj[s]
            for u in iter_bits(cand):
                path.append(u)
                nb = blocked | (adj[last] if depth >= 2 else 0)
                if extend(u, nb, used | 1 << u):
                    return True
                path.pop()
            return False

        # The neighbours of s are blocked from depth 2 onwards through the
        # ``~adj[s]`` filter, so s itself contributes nothing to ``blocked``.
        for first in iter_bits(adj[s] & above):
            path.append(first)
            if extend(first, 0, 1 << s | 1 << first):
                return tuple(path)
            path.pop()
    return None


def is_induced_cycle(graph: Graph, cycle: tuple[int, ...]) -> bool:
    k = len(cycle)
    if k < 3 or len(set(cycle)) != k:
        return False
    for i in range(k):
        for j in range(i + 1, k):
            consecutive = j == i + 1 or (i == 0 and j == k - 1)
            if graph.has_edge(cycle[i], cycle[j]) != consecutive:
                return False
    return True


def has_induced_c6(graph: Graph) -> bool:
    return find_induced_cycle(graph, 6) is not None
