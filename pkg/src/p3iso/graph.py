"""Immutable simple graphs on vertices ``0..n-1`` with bitmask adjacency.

Vertex sets are plain ``int`` bitmasks (bit ``v`` set means ``v`` is a
member). Every operation that removes vertices returns a
:class:`DeletionResult`, which relabels the survivors densely and remembers
where each new label came from.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

VertexSet = int


class GraphError(ValueError):
    """Raised for malformed graph input (bad labels, loops, bad graph6)."""


def vset(vertices: Iterable[int]) -> VertexSet:
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


def members(mask: VertexSet) -> list[int]:
    """Sorted list of the vertices in ``mask``."""
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def iter_bits(mask: VertexSet) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def lowest(mask: VertexSet) -> int:
    return (mask & -mask).bit_length() - 1


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph; ``adj[v]`` is the neighbour bitmask of ``v``."""

    n: int
    adj: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.adj) != self.n:
            raise GraphError(f"expected {self.n} adjacency rows, got {len(self.adj)}")
        full = (1 << self.n) - 1
        for v, row in enumerate(self.adj):
            if row & ~full:
                raise GraphError(f"vertex {v} has a neighbour outside 0..{self.n - 1}")
            if row >> v & 1:
                raise GraphError(f"self-loop at vertex {v}")
            for u in iter_bits(row):
                if not self.adj[u] >> v & 1:
                    raise GraphError(f"adjacency not symmetric for edge {v}-{u}")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Sequence[int]]) -> Graph:
        if n < 0:
            raise GraphError("vertex count must be non-negative")
        adj = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge {u}-{v} has a label outside 0..{n - 1}")
            if u == v:
                raise GraphError(f"self-loop at vertex {u}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return cls(n, tuple(adj))

    @classmethod
    def empty(cls, n: int = 0) -> Graph:
        return cls(n, (0,) * n)

    # -- basic invariants -------------------------------------------------

    @property
    def vertices(self) -> VertexSet:
        return (1 << self.n) - 1

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def degrees(self) -> list[int]:
        return [row.bit_count() for row in self.adj]

    @property
    def max_degree(self) -> int:
        return max((row.bit_count() for row in self.adj), default=0)

    @property
    def min_degree(self) -> int:
        return min((row.bit_count() for row in self.adj), default=0)

    @property
    def num_edges(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in iter_bits(self.adj[u] >> (u + 1) << (u + 1))]

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    # -- neighbourhood algebra ---------------------------------------------

    def closed_neighborhood(self, mask: VertexSet) -> VertexSet:
        out = mask
        for v in iter_bits(mask):
            out |= self.adj[v]
        return out

    def open_neighborhood(self, mask: VertexSet) -> VertexSet:
        return self.closed_neighborhood(mask) & ~mask

    # -- vertex deletion ----------------------------------------------------

    def induced(self, keep: VertexSet) -> DeletionResult:
        """Subgraph induced by ``keep``, relabelled in increasing label order."""
        old = members(keep & self.vertices)
        new_of = {v: i for i, v in enumerate(old)}
        adj = []
        for v in old:
            row = 0
            for u in iter_bits(self.adj[v] & keep):
                row |= 1 << new_of[u]
            adj.append(row)
        return DeletionResult(Graph(len(old), tuple(adj)), tuple(old))

    def delete(self, removed: VertexSet) -> DeletionResult:
        return self.induced(self.vertices & ~removed)

    def delete_closed_neighborhood(self, mask: VertexSet) -> DeletionResult:
        return self.delete(self.closed_neighborhood(mask))

    def component_masks(self, within: VertexSet | None = None) -> list[VertexSet]:
        """Vertex masks of the components of ``G[within]``, ordered by smallest label."""
        remaining = self.vertices if within is None else within & self.vertices
        out = []
        while remaining:
            comp = frontier = remaining & -remaining
            while frontier:
                reach = 0
                for v in iter_bits(frontier):
                    reach |= self.adj[v]
                frontier = reach & remaining & ~comp
                comp |= frontier
            out.append(comp)
            remaining &= ~comp
        return out

    def components(self) -> list[DeletionResult]:
        return [self.induced(mask) for mask in self.component_masks()]

    def is_connected(self) -> bool:
        return len(self.component_masks()) <= 1

    # -- graph6 ------------------------------------------------------------

    def to_graph6(self) -> str:
        return to_graph6(self)

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.edges()})"


@dataclass(frozen=True)
class DeletionResult:
    """A relabelled subgraph; ``old_label[i]`` is the parent label of vertex ``i``."""

    graph: Graph
    old_label: tuple[int, ...]

    def lift(self, mask: VertexSet) -> VertexSet:
        """Translate a vertex set of ``graph`` back into parent labels."""
        out = 0
        for v in iter_bits(mask):
            out |= 1 << self.old_label[v]
        return out

    def lower(self, mask: VertexSet) -> VertexSet:
        """Translate a parent vertex set into ``graph`` labels, dropping non-survivors."""
        out = 0
        for i, v in enumerate(self.old_label):
            if mask >> v & 1:
                out |= 1 << i
        return out

    def new_label(self, v: int) -> int:
        return self.old_label.index(v)


def closed_neighborhood(graph: Graph, mask: VertexSet) -> VertexSet:
    return graph.closed_neighborhood(mask)


def delete_closed_neighborhood(graph: Graph, mask: VertexSet) -> DeletionResult:
    return graph.delete_closed_neighborhood(mask)


def components(graph: Graph) -> list[DeletionResult]:
    return graph.components()


# graph6: byte 63+n (or the 126-prefixed long forms), then the upper triangle
# read column by column (0,1),(0,2),(1,2),(0,3),... packed six bits per byte.

def _encode_n(n: int) -> str:
    if n < 63:
        return chr(63 + n)
    if n < 258048:
        return "~" + "".join(chr(63 + (n >> s & 63)) for s in (12, 6, 0))
    return "~~" + "".join(chr(63 + (n >> s & 63)) for s in (30, 24, 18, 12, 6, 0))


def to_graph6(graph: Graph) -> str:
    n = graph.n
    bits = [graph.adj[i] >> j & 1 for j in range(1, n) for i in range(j)]
    bits += [0] * (-len(bits) % 6)
    body = "".join(
        chr(63 + int("".join(map(str, bits[k : k + 6])), 2)) for k in range(0, len(bits), 6)
    )
    return _encode_n(n) + body


def parse_graph6(text: str) -> Graph:
    s = text.strip()
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<") :]
    if not s:
        raise GraphError("empty graph6 string")
    for pos, ch in enumerate(s):
        if not 63 <= ord(ch) <= 126:
            raise GraphError(f"invalid graph6 byte {ch!r} at position {pos}")
    vals = [ord(ch) - 63 for ch in s]
    if vals[0] != 63:
        n, rest = vals[0], vals[1:]
    elif len(vals) >= 2 and vals[1] == 63:
        if len(vals) < 8:
            raise GraphError("truncated graph6 size header")
        n, rest = 0, vals[8:]
        for x in vals[2:8]:
            n = n << 6 | x
    else:
        if len(vals) < 4:
            raise GraphError("truncated graph6 size header")
        n, rest = 0, vals[4:]
        for x in vals[1:4]:
            n = n << 6 | x
    needed = (n * (n - 1) // 2 + 5) // 6
    if len(rest) != needed:
        raise GraphError(f"graph6 body has {len(rest)} bytes, expected {needed} for n={n}")
    pad = -(n * (n - 1) // 2) % 6
    if rest and rest[-1] & ((1 << pad) - 1):
        raise GraphError("graph6 padding bits must be zero")
    adj = [0] * n
    k = 0
    for j in range(1, n):
        for i in range(j):
            if rest[k // 6] >> (5 - k % 6) & 1:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
            k += 1
    return Graph(n, tuple(adj))
