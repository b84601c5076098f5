"""Canonical labelling of small graphs by partition refinement and backtracking.

The search individualises vertices of the first non-singleton cell, refines to
an equitable partition, and keeps the leaf with the largest adjacency code.
Leaves that tie with the best one yield automorphisms, which prune sibling
branches lying in the same orbit of the pointwise stabiliser of the current
prefix. Intended for n up to about a dozen vertices.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graph import Graph


@dataclass(frozen=True)
class Canonical:
    code: int
    # labelling[v] is the canonical label of vertex v
    labelling: tuple[int, ...]
    generators: tuple[tuple[int, ...], ...]

    def orbits(self) -> list[int]:
        """``orbit[v]`` is the smallest vertex in the Aut(G)-orbit of ``v``."""
        return orbit_representatives(len(self.labelling), self.generators)


def orbit_representatives(n: int, generators) -> list[int]:
    parent = list(range(n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for gen in generators:
        for x, y in enumerate(gen):
            rx, ry = find(x), find(y)
            if rx != ry:
                parent[max(rx, ry)] = min(rx, ry)
    return [find(x) for x in range(n)]


def _refine(adj: tuple[int, ...], cells: list[list[int]]) -> list[list[int]]:
    while True:
        masks = []
        for cell in cells:
            m = 0
            for v in cell:
                m |= 1 << v
            masks.append(m)
        out = []
        changed = False
        for cell in cells:
            if len(cell) == 1:
                out.append(cell)
                continue
            sig = {v: tuple((adj[v] & m).bit_count() for m in masks) for v in cell}
            keys = sorted(set(sig.values()))
            if len(keys) == 1:
                out.append(cell)
                continue
            changed = True
            for key in keys:
                out.append([v for v in cell if sig[v] == key])
        cells = out
        if not changed:
            return cells


def _leaf_code(adj: tuple[int, ...], order: list[int]) -> int:
    n = len(order)
    code = 0
    for j in range(1, n):
        row = adj[order[j]]
        for i in range(j):
            code = code << 1 | (row >> order[i] & 1)
    return code


def canonical_form(graph: Graph) -> Canonical:
    adj = graph.adj
    n = graph.n
    if n == 0:
        return Canonical(0, (), ())
    degree_cells: dict[int, list[int]] = {}
    for v in range(n):
        degree_cells.setdefault(adj[v].bit_count(), []).append(v)
    start = _refine(adj, [degree_cells[d] for d in sorted(degree_cells)])

    best_code = -1
    best_order: list[int] = []
    autos: list[tuple[int, ...]] = []

    def visit(cells: list[list[int]], prefix: list[int]) -> None:
        nonlocal best_code, best_order
        target = next((i for i, c in enumerate(cells) if len(c) > 1), None)
        if target is None:
            order = [c[0] for c in cells]
            code = _leaf_code(adj, order)
            if code > best_code:
                best_code, best_order = code, order
            elif code == best_code:
                # vertex order[i] plays the role of best_order[i]
                perm = [0] * n
                for a, b in zip(best_order, order):
                    perm[a] = b
                autos.append(tuple(perm))
            return
        explored: list[int] = []
        for w in cells[target]:
            if explored:
                stab = [g for g in autos if all(g[p] == p for p in prefix)]
                if stab:
                    orb = orbit_representatives(n, stab)
                    if any(orb[w] == orb[e] for e in explored):
                        continue
            split = cells[:target] + [[w], [u for u in cells[target] if u != w]] + cells[target + 1 :]
            visit(_refine(adj, split), prefix + [w])
            explored.append(w)

    visit(start, [])
    labelling = [0] * n
    for label, v in enumerate(best_order):
        labelling[v] = label
    return Canonical(best_code, tuple(labelling), tuple(autos))


def canonical_graph6(graph: Graph) -> str:
    """graph6 string of the canonically relabelled graph (isomorphism certificate)."""
    canon = canonical_form(graph)
    adj = [0] * graph.n
    for u, v in graph.edges():
        a, b = canon.labelling[u], canon.labelling[v]
        adj[a] |= 1 << b
        adj[b] |= 1 << a
    return Graph(graph.n, tuple(adj)).to_graph6()
