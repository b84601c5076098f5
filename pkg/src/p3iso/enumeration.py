"""Exhaustive verification over all small connected graphs.

Connected graphs are generated by canonical augmentation: a vertex joined to
a non-empty neighbour set is added to a connected parent, and the child is
kept only if that vertex lies in the orbit of the child's canonical deletion
vertex (a non-cut vertex, chosen by a degree invariant and then by canonical
label). Neighbour sets are taken one per orbit of the parent's automorphism
group. Each isomorphism class is then emitted exactly once with no global
seen-set.
"""

from __future__ import annotations

import logging
import time
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Iterable, Iterator

from .canonical import canonical_form
from .constructive import InternalInvariantError, isolating_set_bounded
from .exact import min_isolating_upto
from .graph import Graph, GraphError, parse_graph6
from .patterns import find_induced_cycle

log = logging.getLogger(__name__)

MAX_BUILTIN_N = 9

CLAIM_BOUND = "bound_(n+1)/4"
CLAIM_DELTA5 = "delta_ge_5_bound_n/4"
CLAIM_TIGHT_DELETION = "tight_vertex_deletion"
CLAIM_CONSTRUCTIVE = "constructive_bound"
CLAIM_TRACE = "case2.2.2_degree"
CLAIM_F = "f(n)_equals_bound"


# -- generation -------------------------------------------------------------

def _is_cut_vertex(adj: list[int], n: int, u: int) -> bool:
    rest = ((1 << n) - 1) & ~(1 << u)
    if not rest:
        return False
    seen = frontier = rest & -rest
    while frontier:
        reach = 0
        while frontier:
            low = frontier & -frontier
            reach |= adj[low.bit_length() - 1]
            frontier ^= low
        frontier = reach & rest & ~seen
        seen |= frontier
    return seen != rest


def _invariant(adj: list[int], degs: list[int], u: int) -> tuple:
    nb = adj[u]
    out = []
    while nb:
        low = nb & -nb
        out.append(degs[low.bit_length() - 1])
        nb ^= low
    out.sort()
    return (degs[u], tuple(out))


def _accept(adj: list[int], n: int):
    """Canonical-deletion test for the newest vertex ``n - 1``.

    Returns ``(accepted, canonical_or_None)``.
    """
    new = n - 1
    degs = [row.bit_count() for row in adj]
    mine = _invariant(adj, degs, new)
    rivals = []
    for u in range(new):
        inv = _invariant(adj, degs, u)
        if inv > mine:
            if not _is_cut_vertex(adj, n, u):
                return False, None
        elif inv == mine and not _is_cut_vertex(adj, n, u):
            rivals.append(u)
    if not rivals:
        return True, None
    canon = canonical_form(Graph(n, tuple(adj)))
    pick = max(rivals + [new], key=lambda u: canon.labelling[u])
    orbit = canon.orbits()
    return orbit[pick] == orbit[new], canon


def _apply(perm: tuple[int, ...], mask: int) -> int:
    out = 0
    while mask:
        low = mask & -mask
        out |= 1 << perm[low.bit_length() - 1]
        mask ^= low
    return out


def _neighbour_sets(m: int, generators) -> Iterator[int]:
    """Non-empty subsets of ``0..m-1``, one per orbit of the group."""
    if not generators:
        yield from range(1, 1 << m)
        return
    seen = bytearray(1 << m)
    for s in range(1, 1 << m):
        if seen[s]:
            continue
        seen[s] = 1
        stack = [s]
        while stack:
            cur = stack.pop()
            for g in generators:
                img = _apply(g, cur)
                if not seen[img]:
                    seen[img] = 1
                    stack.append(img)
        yield s


def _grow(adj: list[int], m: int, n: int, generators) -> Iterator[Graph]:
    for s in _neighbour_sets(m, generators):
        child = adj[:]
        bit = 1 << m
        t = s
        while t:
            low = t & -t
            child[low.bit_length() - 1] |= bit
            t ^= low
        child.append(s)
        ok, canon = _accept(child, m + 1)
        if not ok:
            continue
        if m + 1 == n:
            yield Graph(n, tuple(child))
        else:
            if canon is None:
                canon = canonical_form(Graph(m + 1, tuple(child)))
            yield from _grow(child, m + 1, n, canon.generators)


def enumerate_connected(n: int) -> Iterator[Graph]:
    """One representative of every isomorphism class of connected n-vertex graphs."""
    if not 1 <= n <= MAX_BUILTIN_N:
        raise ValueError(f"built-in enumeration supports 1 <= n <= {MAX_BUILTIN_N}; use a graph6 catalog")
    if n == 1:
        yield Graph(1, (0,))
        return
    yield from _grow([0], 1, n, ())


def ingest_graph6_stream(lines: Iterable[str]) -> Iterator[Graph]:
    for lineno, line in enumerate(lines, start=1):
        text = line.strip()
        if not text:
            continue
        try:
            yield parse_graph6(text)
        except GraphError as exc:
            raise GraphError(f"line {lineno}: {exc}") from exc


# -- per-graph checks -------------------------------------------------------

@dataclass(frozen=True)
class GraphOutcome:
    g6: str
    c6free: bool
    iota: int | None = None
    tight: bool = False
    violations: tuple[str, ...] = ()
    cases: tuple[str, ...] = ()


def check_graph(graph: Graph, full: bool = True) -> GraphOutcome:
    """Run every claim on one connected graph."""
    g6 = graph.to_graph6()
    if find_induced_cycle(graph, 6) is not None:
        return GraphOutcome(g6, False)
    n = graph.n
    bound = (n + 1) // 4
    found = min_isolating_upto(graph, bound)
    if found is None:
        return GraphOutcome(g6, True, None, False, (CLAIM_BOUND,))
    iota = found.iota
    tight = n % 4 == 3 and iota == bound
    if not full:
        return GraphOutcome(g6, True, iota, tight)

    bad = []
    if graph.max_degree >= 5 and iota > n // 4:
        bad.append(CLAIM_DELTA5)
    if tight:
        for v in range(n):
            rest = graph.delete(1 << v).graph
            if min_isolating_upto(rest, iota - 1) is None:
                bad.append(CLAIM_TIGHT_DELETION)
                break
    cases: tuple[str, ...] = ()
    try:
        res = isolating_set_bounded(graph)
    except InternalInvariantError:
        bad.append(CLAIM_CONSTRUCTIVE)
    else:
        cases = tuple(step.case for step in res.case_trace)
        if not iota <= res.size <= bound:
            bad.append(CLAIM_CONSTRUCTIVE)
        if any(s.case == "case2.2.2" and s.pivot_degree not in (3, 4) for s in res.case_trace):
            bad.append(CLAIM_TRACE)
    return GraphOutcome(g6, True, iota, tight, tuple(bad), cases)


def _check_batch(args) -> list[GraphOutcome]:
    graphs, full = args
    return [check_graph(g, full) for g in graphs]


# -- reports ----------------------------------------------------------------

@dataclass
class VerificationReport:
    n: int
    connected: int = 0
    c6free: int = 0
    empirical_f: int = 0
    bound: int = 0
    tight_witnesses: list[str] = field(default_factory=list)
    violations: list[tuple[str, str]] = field(default_factory=list)
    wall_ms: float = 0.0
    case_counts: dict[str, int] = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return not self.violations and self.empirical_f <= self.bound

    def to_dict(self, timing: bool = True) -> dict:
        out = {
            "n": self.n,
            "counts": {"connected": self.connected, "c6free": self.c6free},
            "empirical_f": self.empirical_f,
            "bound": self.bound,
            "tight_witnesses": list(self.tight_witnesses),
            "violations": [{"claim": c, "g6": g} for c, g in self.violations],
            "case_counts": dict(sorted(self.case_counts.items())),
        }
        if timing:
            out["wall_ms"] = round(self.wall_ms, 1)
        return out


def _outcomes(graphs: list[Graph], full: bool, jobs: int) -> list[GraphOutcome]:
    if jobs <= 1 or len(graphs) < 2:
        return _check_batch((graphs, full))
    shards = [(graphs[i::jobs], full) for i in range(jobs)]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return [o for part in pool.map(_check_batch, shards) for o in part]


def summarize(
    n: int, graphs: list[Graph], full: bool = True, jobs: int = 1, complete: bool = False
) -> VerificationReport:
    """Check every connected graph in ``graphs`` (all on ``n`` vertices).

    With ``complete=True`` the graphs are taken to be the whole class, so an
    empirical maximum below the bound is also reported as a violation.
    """
    start = time.perf_counter()
    outcomes = sorted(_outcomes(graphs, full, jobs), key=lambda o: o.g6)
    report = VerificationReport(n=n, bound=(n + 1) // 4, connected=len(outcomes))
    cases: Counter[str] = Counter()
    for o in outcomes:
        if not o.c6free:
            continue
        report.c6free += 1
        if o.iota is not None:
            report.empirical_f = max(report.empirical_f, o.iota)
        else:
            report.empirical_f = max(report.empirical_f, report.bound + 1)
        if o.tight:
            report.tight_witnesses.append(o.g6)
        report.violations.extend((claim, o.g6) for claim in o.violations)
        cases.update(o.cases)
    if complete and report.empirical_f != report.bound:
        report.violations.append((CLAIM_F, ""))
    report.violations.sort()
    report.case_counts = dict(cases)
    report.wall_ms = (time.perf_counter() - start) * 1000
    log.info("n=%d: %d connected, %d without induced C6, f=%d", n, report.connected, report.c6free, report.empirical_f)
    return report


def compute_f(n: int, jobs: int = 1) -> VerificationReport:
    """Maximum iota over connected n-vertex graphs with no induced C6."""
    return summarize(n, list(enumerate_connected(n)), full=False, jobs=jobs, complete=True)


def verify_theorem(n_max: int, jobs: int = 1) -> list[VerificationReport]:
    """Check every claim on all connected graphs with 1..n_max vertices."""
    return [summarize(n, list(enumerate_connected(n)), full=True, jobs=jobs, complete=True)
            for n in range(1, n_max + 1)]


def verify_catalog(graphs: Iterable[Graph], jobs: int = 1) -> list[VerificationReport]:
    """Verify externally supplied graphs, grouped by order; disconnected ones are skipped."""
    by_n: dict[int, list[Graph]] = {}
    for g in graphs:
        if g.n and g.is_connected():
            by_n.setdefault(g.n, []).append(g)
    return [summarize(n, by_n[n], full=True, jobs=jobs) for n in sorted(by_n)]


# -- random instances ---------------------------------------------------------

def random_c6free_graph(n: int, rng, local: float = 0.5, far: float = 0.05, tries: int = 8) -> Graph:
    """Grow a connected graph with no induced C6 one vertex at a time.

    Each new vertex joins a random anchor, each anchor neighbour with
    probability ``local`` and any other vertex with probability ``far``.
    Attachments creating an induced C6 are redrawn; after ``tries`` failures
    the vertex becomes a pendant of the anchor, which cannot close a cycle.
    """
    if n < 1:
        raise ValueError("n must be positive")
    adj = [0]
    for m in range(1, n):
        chosen = None
        for _ in range(tries):
            anchor = rng.randrange(m)
            s = 1 << anchor
            for u in range(m):
                if u == anchor:
                    continue
                p = local if adj[anchor] >> u & 1 else far
                if rng.random() < p:
                    s |= 1 << u
            trial = _joined(adj, m, s)
            if find_induced_cycle(Graph(m + 1, tuple(trial)), 6) is None:
                chosen = trial
                break
        adj = chosen if chosen is not None else _joined(adj, m, 1 << anchor)
    return Graph(n, tuple(adj))


def _joined(adj: list[int], m: int, s: int) -> list[int]:
    out = [row | (1 << m if s >> u & 1 else 0) for u, row in enumerate(adj)]
    out.append(s)
    return out
