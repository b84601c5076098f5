"""Certified P3-isolating sets of size at most floor((n+1)/4) for connected
graphs without induced 6-cycles.

The recursion pivots on a maximum-degree vertex ``v`` and looks at the
components ``H`` of ``G - N[v]``. Components with ``|V(H)| = 3 mod 4`` and
``iota(H) = (|V(H)|+1)/4`` are *tight*; everything else is slack and costs at
most ``|V(H)|/4``. How the tight components attach to ``N(v)`` decides which
of the cases below assembles the answer:

``case1``      some neighbour ``x`` is linked to two or more tight components
``case2.1``    at least three neighbours are not used as anchors
``case2.2.1``  some tight component hangs off its anchor only
``case2.2.2``  every tight component has a second anchor (``d(v)`` is 3 or 4)

In ``exact-oracle`` mode tightness is decided with the exact solver and the
sets for contact-deleted tight components come from it as well, which is what
makes the size bound hold. ``fast`` mode replaces every oracle call by
recursion; its output is always isolating but may exceed the bound.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field

from .exact import iota_exact, is_tight
from .graph import Graph, VertexSet, iter_bits, lowest
from .patterns import find_induced_cycle, is_p3_isolating

log = logging.getLogger(__name__)

EXACT_ORACLE = "exact-oracle"
FAST = "fast"
MODES = (EXACT_ORACLE, FAST)


class PreconditionError(ValueError):
    """Input graph is outside the class the algorithm is defined for."""


class InternalInvariantError(RuntimeError):
    """A produced set failed verification; never returned to callers."""


@dataclass(frozen=True)
class CaseStep:
    case: str
    depth: int
    n: int
    pivot: int | None = None
    pivot_degree: int | None = None

    def as_dict(self) -> dict:
        out = {"case": self.case, "depth": self.depth, "n": self.n}
        if self.pivot is not None:
            out["pivot"] = self.pivot
            out["pivot_degree"] = self.pivot_degree
        return out


@dataclass(frozen=True)
class BoundedSetResult:
    set: VertexSet
    size_bound_used: int
    case_trace: tuple[CaseStep, ...] = field(default=())

    @property
    def size(self) -> int:
        return self.set.bit_count()

    @property
    def vertices(self) -> list[int]:
        return list(iter_bits(self.set))


@dataclass
class _Sub:
    """A subgraph of the current graph together with its labels one level up."""

    graph: Graph
    mask: VertexSet
    up: tuple[int, ...]

    def lift(self, inner: VertexSet) -> VertexSet:
        out = 0
        for v in iter_bits(inner):
            out |= 1 << self.up[v]
        return out


def _sub(graph: Graph, mask: VertexSet) -> _Sub:
    res = graph.induced(mask)
    return _Sub(res.graph, mask, res.old_label)


class _Builder:
    def __init__(self, mode: str):
        if mode not in MODES:
            raise ValueError(f"unknown mode {mode!r}; expected one of {MODES}")
        self.exact_mode = mode == EXACT_ORACLE
        self.trace: list[CaseStep] = []

    def _step(self, case: str, depth: int, graph: Graph, origin, pivot=None) -> None:
        if pivot is None:
            self.trace.append(CaseStep(case, depth, graph.n))
        else:
            self.trace.append(CaseStep(case, depth, graph.n, origin[pivot], graph.degree(pivot)))

    # -- helpers working on possibly disconnected graphs ---------------------

    def _exact(self, graph: Graph) -> VertexSet:
        return iota_exact(graph).witness

    def _per_component(self, graph: Graph, origin, depth: int) -> VertexSet:
        out = 0
        for comp in graph.component_masks():
            sub = _sub(graph, comp)
            inner = self.solve(sub.graph, tuple(origin[u] for u in sub.up), depth)
            out |= sub.lift(inner)
        return out

    def _child(self, graph: Graph, origin, sub: _Sub, depth: int) -> VertexSet:
        return sub.lift(self.solve(sub.graph, tuple(origin[u] for u in sub.up), depth))

    # -- the recursion --------------------------------------------------------

    def solve(self, graph: Graph, origin: tuple[int, ...], depth: int = 0) -> VertexSet:
        result = self._solve(graph, origin, depth)
        if not is_p3_isolating(graph, result):
            raise InternalInvariantError(
                f"produced set {list(iter_bits(result))} does not isolate {graph.to_graph6()}"
            )
        if self.exact_mode and result.bit_count() > (graph.n + 1) // 4:
            raise InternalInvariantError(
                f"set of size {result.bit_count()} exceeds floor((n+1)/4) on {graph.to_graph6()}"
            )
        return result

    def _solve(self, graph: Graph, origin: tuple[int, ...], depth: int) -> VertexSet:
        n = graph.n
        adj = graph.adj
        degs = graph.degrees()
        top = max(degs, default=0)

        if top <= 1:
            self._step("matching", depth, graph, origin)
            return 0
        if n == 3:
            self._step("three-vertex", depth, graph, origin)
            return 1 << degs.index(top)
        if top == 2:
            return self._path_or_cycle(graph, origin, depth, degs)

        v = degs.index(top)
        closed = adj[v] | 1 << v
        if closed == graph.vertices:
            self._step("spanning-star", depth, graph, origin, v)
            return 1 << v

        nbrs = adj[v]
        comps = [_sub(graph, m) for m in graph.component_masks(graph.vertices & ~closed)]
        linked = [[x for x in iter_bits(nbrs) if adj[x] & c.mask] for c in comps]

        recursed: dict[int, VertexSet] = {}

        def whole(i: int) -> VertexSet:
            if i not in recursed:
                recursed[i] = self._child(graph, origin, comps[i], depth + 1)
            return recursed[i]

        tight = []
        for i, c in enumerate(comps):
            size = c.graph.n
            if size % 4 != 3:
                tight.append(False)
            elif self.exact_mode:
                tight.append(is_tight(c.graph))
            else:
                tight.append(whole(i).bit_count() == (size + 1) // 4)

        def slack(i: int) -> VertexSet:
            got = whole(i)
            size = comps[i].graph.n
            if self.exact_mode and got.bit_count() > size // 4:
                # recursion overshot on a non-tight component; iota <= |V(H)|/4 still holds
                self._step("slack-exact", depth + 1, comps[i].graph, tuple(origin[u] for u in comps[i].up))
                got = comps[i].lift(self._exact(comps[i].graph))
                recursed[i] = got
            return got

        def contact_deleted(x: int, i: int) -> VertexSet:
            c = comps[i]
            y = lowest(adj[x] & c.mask)
            rest = _sub(graph, c.mask & ~(1 << y))
            if self.exact_mode:
                inner = self._exact(rest.graph)
            else:
                inner = self._per_component(rest.graph, tuple(origin[u] for u in rest.up), depth + 1)
            return rest.lift(inner)

        tight_ids = [i for i in range(len(comps)) if tight[i]]
        slack_ids = [i for i in range(len(comps)) if not tight[i]]

        if not tight_ids:
            self._step("no-tight", depth, graph, origin, v)
            out = 1 << v
            for i in slack_ids:
                out |= slack(i)
            return out

        by_anchor: dict[int, list[int]] = {}
        for i in tight_ids:
            for x in linked[i]:
                by_anchor.setdefault(x, []).append(i)

        crowded = [x for x in iter_bits(nbrs) if len(by_anchor.get(x, ())) >= 2]
        if crowded:
            x = crowded[0]
            self._step("case1", depth, graph, origin, v)
            out = 1 << v | 1 << x
            for i in tight_ids:
                anchor = x if x in linked[i] else linked[i][0]
                out |= 1 << anchor | contact_deleted(anchor, i)
            for i in slack_ids:
                out |= slack(i)
            return out

        anchor_of = {i: linked[i][0] for i in tight_ids}
        anchors = 0
        for x in anchor_of.values():
            anchors |= 1 << x
        spare = nbrs & ~anchors

        if spare.bit_count() >= 3:
            self._step("case2.1", depth, graph, origin, v)
            out = 1 << v
            for i in tight_ids:
                out |= 1 << anchor_of[i] | contact_deleted(anchor_of[i], i)
            for i in slack_ids:
                out |= slack(i)
            return out

        lonely = [i for i in tight_ids if len(linked[i]) == 1]
        if lonely:
            return self._case_221(graph, origin, depth, v, comps, lonely[0], anchor_of, slack, contact_deleted)

        self._step("case2.2.2", depth, graph, origin, v)
        out = 1 << v
        for i in tight_ids:
            out |= whole(i)
        for i in slack_ids:
            out |= slack(i)
        return out

    def _case_221(self, graph, origin, depth, v, comps, h, anchor_of, slack, contact_deleted) -> VertexSet:
        xh = anchor_of[h]
        survivors = graph.vertices & ~comps[h].mask & ~(1 << xh)
        pieces = graph.component_masks(survivors)
        main = next(m for m in pieces if m >> v & 1)
        index_of = {c.mask: i for i, c in enumerate(comps)}

        out = 1 << xh | contact_deleted(xh, h)
        for m in pieces:
            if m != main:
                out |= slack(index_of[m])

        core = _sub(graph, main)
        core_origin = tuple(origin[u] for u in core.up)
        inner = self.solve(core.graph, core_origin, depth + 1)
        if 4 * inner.bit_count() <= core.graph.n:
            self._step("case2.2.1", depth, graph, origin, v)
            return out | core.lift(inner)

        v_in_core = core.up.index(v)
        reduced = _sub(core.graph, core.graph.vertices & ~(1 << v_in_core))
        if self.exact_mode:
            if is_tight(core.graph):
                self._step("case2.2.1-drop-pivot", depth, graph, origin, v)
                return out | core.lift(reduced.lift(self._exact(reduced.graph)))
            self._step("case2.2.1-exact", depth, graph, origin, v)
            return out | core.lift(self._exact(core.graph))

        alt = self._per_component(reduced.graph, tuple(core_origin[u] for u in reduced.up), depth + 1)
        if alt.bit_count() < inner.bit_count():
            self._step("case2.2.1-drop-pivot", depth, graph, origin, v)
            return out | core.lift(reduced.lift(alt))
        self._step("case2.2.1", depth, graph, origin, v)
        return out | core.lift(inner)

    def _path_or_cycle(self, graph: Graph, origin, depth: int, degs: list[int]) -> VertexSet:
        adj = graph.adj
        n = graph.n
        ends = [u for u in range(n) if degs[u] == 1]
        start = ends[0] if ends else 0
        order = [start]
        prev, cur = -1, start
        nxt = adj[start]
        cur_next = lowest(nxt)
        while len(order) < n:
            prev, cur = cur, cur_next
            order.append(cur)
            rest = adj[cur] & ~(1 << prev)
            if not rest:
                break
            cur_next = lowest(rest)
        out = 0
        if ends:
            self._step("path", depth, graph, origin)
            for u in order[3::4]:
                out |= 1 << u
        else:
            self._step("cycle", depth, graph, origin)
            for u in order[0::5]:
                out |= 1 << u
        return out


def _check_preconditions(graph: Graph) -> None:
    if graph.n == 0 or not graph.is_connected():
        raise PreconditionError("graph must be connected")
    cycle = find_induced_cycle(graph, 6)
    if cycle is not None:
        raise PreconditionError(f"graph has an induced C6 on {list(cycle)}")


def isolating_set_bounded(graph: Graph, mode: str = EXACT_ORACLE) -> BoundedSetResult:
    """P3-isolating set for a connected graph with no induced 6-cycle.

    In ``exact-oracle`` mode the size is at most ``floor((n+1)/4)``.
    ``size_bound_used`` reports ``floor(n/4)`` whenever the set also meets
    that sharper bound.
    """
    _check_preconditions(graph)
    builder = _Builder(mode)
    found = builder.solve(graph, tuple(range(graph.n)))
    size = found.bit_count()
    bound = graph.n // 4 if size <= graph.n // 4 else (graph.n + 1) // 4
    log.debug("bounded set of size %d for n=%d via %s", size, graph.n, [s.case for s in builder.trace])
    return BoundedSetResult(found, bound, tuple(builder.trace))


def reduce_tight(graph: Graph, v: int) -> VertexSet:
    """P3-isolating set of ``G - v`` of size at most ``iota(G) - 1``, in ``G``'s labels."""
    _check_preconditions(graph)
    if not 0 <= v < graph.n:
        raise PreconditionError(f"vertex {v} is not in the graph")
    if not is_tight(graph):
        raise PreconditionError("graph is not tight: iota(G, P3) != (n+1)/4")
    rest = graph.delete(1 << v)
    found = rest.lift(iota_exact(rest.graph).witness)
    if found.bit_count() > (graph.n + 1) // 4 - 1:
        raise InternalInvariantError(f"G - {v} needs {found.bit_count()} vertices on {graph.to_graph6()}")
    return found
