"""Brute-force reference implementations, kept independent of the package's
search code. Only ``Graph`` (for adjacency lookup) is shared."""

from __future__ import annotations

from itertools import combinations, combinations_with_replacement

import networkx as nx

from p3iso.graph import Graph


def to_nx(graph: Graph) -> nx.Graph:
    g = nx.Graph()
    g.add_nodes_from(range(graph.n))
    g.add_edges_from(graph.edges())
    return g


def from_nx(g: nx.Graph) -> Graph:
    nodes = sorted(g.nodes())
    index = {v: i for i, v in enumerate(nodes)}
    return Graph.from_edges(len(nodes), [(index[u], index[v]) for u, v in g.edges()])


def reference_graph6(graph: Graph) -> str:
    return nx.to_graph6_bytes(to_nx(graph), header=False).decode().strip()


def closed_nbhd(graph: Graph, xs) -> set[int]:
    out = set(xs)
    for v in xs:
        out.update(u for u in range(graph.n) if graph.has_edge(u, v))
    return out


def brute_isolating(graph: Graph, d) -> bool:
    """No path a-b-c of edges survives outside N[d]."""
    covered = closed_nbhd(graph, d)
    alive = [v for v in range(graph.n) if v not in covered]
    for b in alive:
        for a, c in combinations(alive, 2):
            if b not in (a, c) and graph.has_edge(a, b) and graph.has_edge(b, c):
                return False
    return True


def naive_iota(graph: Graph) -> int:
    for k in range(graph.n + 1):
        for d in combinations(range(graph.n), k):
            if brute_isolating(graph, d):
                return k
    raise AssertionError("the full vertex set always isolates")


def brute_has_induced_cycle(graph: Graph, length: int) -> bool:
    for xs in combinations(range(graph.n), length):
        degs = [sum(graph.has_edge(u, v) for v in xs if v != u) for u in xs]
        if any(d != 2 for d in degs):
            continue
        sub = nx.Graph()
        sub.add_nodes_from(xs)
        sub.add_edges_from((u, v) for u, v in combinations(xs, 2) if graph.has_edge(u, v))
        if nx.is_connected(sub):
            return True
    return False


def brute_connected_classes(n: int) -> list[nx.Graph]:
    """Connected n-vertex graphs up to isomorphism via pairwise tests."""
    pairs = list(combinations(range(n), 2))
    reps: dict[tuple, list[nx.Graph]] = {}
    for bits in range(1 << len(pairs)):
        g = nx.Graph()
        g.add_nodes_from(range(n))
        g.add_edges_from(p for i, p in enumerate(pairs) if bits >> i & 1)
        if not nx.is_connected(g):
            continue
        key = tuple(sorted(d for _, d in g.degree()))
        bucket = reps.setdefault(key, [])
        if not any(nx.is_isomorphic(g, h) for h in bucket):
            bucket.append(g)
    return [g for bucket in reps.values() for g in bucket]


def disjoint_union(parts: list[Graph]) -> Graph:
    edges = []
    offset = 0
    for p in parts:
        edges += [(u + offset, v + offset) for u, v in p.edges()]
        offset += p.n
    return Graph.from_edges(offset, edges)


def all_graphs(n: int, connected_by_size: dict[int, list[Graph]]) -> list[Graph]:
    """Every n-vertex graph up to isomorphism, as multisets of connected parts."""

    def partitions(total: int, largest: int):
        if total == 0:
            yield []
            return
        for part in range(min(total, largest), 0, -1):
            for rest in partitions(total - part, part):
                yield [part] + rest

    out = []
    for sizes in partitions(n, n):
        counts: dict[int, int] = {}
        for s in sizes:
            counts[s] = counts.get(s, 0) + 1
        choices = [list(combinations_with_replacement(range(len(connected_by_size[s])), c)) for s, c in counts.items()]
        keys = list(counts)

        def build(i: int, acc: list[Graph]):
            if i == len(keys):
                out.append(disjoint_union(acc))
                return
            for pick in choices[i]:
                build(i + 1, acc + [connected_by_size[keys[i]][j] for j in pick])

        build(0, [])
    return out
