"""Exact data reduction rules for the maximum 2-packing set problem.

Each rule either includes a vertex into the solution (excluding its whole
closed conflict neighborhood) or excludes a dominated vertex.  Rules are
scheduled exhaustively in a per-variant order: after every successful
application the scheduler restarts at the first rule, and it stops once a
full pass applies nothing.  The log of decisions maps kernel solutions back
to solutions of the input graph.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from enum import Enum
from typing import Callable, Iterable, Optional

from .graph import GraphError, StaticGraph, TwoLevelGraph, VertexStatus


class ReductionKind(Enum):
    DOMINATION = "domination"
    CLIQUE = "clique"
    DEG_ZERO = "deg_zero"
    DEG_ZERO_TRIANGLE = "deg_zero_triangle"
    DEG_ONE = "deg_one"
    DEG_TWO_V_SHAPE = "deg_two_v_shape"
    DEG_TWO_TRIANGLE = "deg_two_triangle"
    DEG_TWO_FOUR_CYCLE = "deg_two_four_cycle"
    FAST_DOMINATION = "fast_domination"
    TWIN = "twin"


class ReductionVariant(Enum):
    """Reduction portfolio: none, the two general rules, or the full set."""

    TWO_PACK = "2pack"
    CORE = "core"
    ELABORATED = "elaborated"

    @property
    def rule_order(self) -> tuple[ReductionKind, ...]:
        return _VARIANT_ORDERS[self]


_VARIANT_ORDERS: dict[ReductionVariant, tuple[ReductionKind, ...]] = {
    ReductionVariant.TWO_PACK: (),
    ReductionVariant.CORE: (ReductionKind.CLIQUE, ReductionKind.DOMINATION),
    ReductionVariant.ELABORATED: (
        ReductionKind.DEG_ZERO,
        ReductionKind.DEG_ZERO_TRIANGLE,
        ReductionKind.DEG_ONE,
        ReductionKind.DEG_TWO_TRIANGLE,
        ReductionKind.DEG_TWO_FOUR_CYCLE,
        ReductionKind.DEG_TWO_V_SHAPE,
        ReductionKind.TWIN,
        ReductionKind.FAST_DOMINATION,
        ReductionKind.DOMINATION,
        ReductionKind.CLIQUE,
    ),
}


@dataclass(frozen=True)
class LogEntry:
    vertex: int
    decision: VertexStatus
    rule: ReductionKind


class ReductionLog:
    """Ordered record of include/exclude decisions taken during reduction."""

    def __init__(self) -> None:
        self.entries: list[LogEntry] = []
        self._seen: set[int] = set()
        self.offset = 0

    def record(self, vertex: int, decision: VertexStatus, rule: ReductionKind) -> None:
        if vertex in self._seen:
            raise GraphError(f"vertex {vertex} logged twice")
        if decision is VertexStatus.ACTIVE:
            raise GraphError("log decisions must be INCLUDED or EXCLUDED")
        self.entries.append(LogEntry(vertex, decision, rule))
        self._seen.add(vertex)
        if decision is VertexStatus.INCLUDED:
            self.offset += 1

    def included(self) -> set[int]:
        return {e.vertex for e in self.entries if e.decision is VertexStatus.INCLUDED}

    def vertices(self) -> set[int]:
        return set(self._seen)

    def __len__(self) -> int:
        return len(self.entries)


@dataclass
class KernelStats:
    n: int
    m: int
    m2: int
    rule_counts: dict[ReductionKind, int] = field(default_factory=dict)


@dataclass
class Kernel:
    """Residual graph plus the decision log that reconstructs full solutions."""

    graph: TwoLevelGraph
    log: ReductionLog
    stats: KernelStats


# -- shared helpers ----------------------------------------------------------


def _exclude(g: TwoLevelGraph, log: Optional[ReductionLog], rule: ReductionKind, u: int) -> None:
    g.remove_vertex(u, VertexStatus.EXCLUDED)
    if log is not None:
        log.record(u, VertexStatus.EXCLUDED, rule)


def _include(
    g: TwoLevelGraph,
    log: Optional[ReductionLog],
    rule: ReductionKind,
    v: int,
    excluded: Iterable[int],
) -> None:
    g.remove_vertex(v, VertexStatus.INCLUDED)
    if log is not None:
        log.record(v, VertexStatus.INCLUDED, rule)
    for u in sorted(excluded):
        _exclude(g, log, rule, u)


def _closed_one_subset(g: TwoLevelGraph, v: int, u: int) -> bool:
    """N[v] subset of N[u], for neighbors u of v."""
    nv = g.neighbors(v)
    nv.discard(u)
    return nv <= g.neighbors(u)


def two_neighborhood_confined(g: TwoLevelGraph, v: int, u: int) -> bool:
    """Counting test for whether all 2-neighbors of v are plain neighbors of u.

    Requires u in N(v) with N[v] subset of N[u].  When it returns true the
    2-neighborhood of v equals N[u] \\ N[v], so callers never need to look at
    the 2-neighborhood of u.
    """
    if not g.has_edge(v, u):
        raise GraphError(f"vertices {v} and {u} are not adjacent")
    if not _closed_one_subset(g, v, u):
        raise GraphError(f"closed neighborhood of {v} not contained in that of {u}")
    return g.degree2(v) + g.degree(v) <= g.degree(u)


# -- the rules ---------------------------------------------------------------


def try_domination(g: TwoLevelGraph, v: int, log: Optional[ReductionLog] = None) -> Optional[int]:
    """Exclude a vertex u whose closed 2-neighborhood contains that of v.

    Candidates are scanned in ascending ID among the conflict neighborhood of
    v; on equal closed 2-neighborhoods the larger ID is excluded.
    """
    two_v = g.two_neighbors_view(v)
    one_v = g.neighbors_view(v)
    size_v = len(one_v) + len(two_v) + 1
    candidates = sorted(two_v | one_v)
    for u in candidates:
        one_u = g.neighbors_view(u)
        two_u = g.two_neighbors_view(u)
        if len(one_u) + len(two_u) + 1 < size_v:
            continue
        if v not in one_u and v not in two_u:
            continue
        if all(x == u or x in one_u or x in two_u for x in one_v) and all(
            x == u or x in one_u or x in two_u for x in two_v
        ):
            equal = size_v == len(one_u) + len(two_u) + 1
            target = max(u, v) if equal else u
            _exclude(g, log, ReductionKind.DOMINATION, target)
            return target
    return None


def try_clique(g: TwoLevelGraph, v: int, log: Optional[ReductionLog] = None) -> Optional[int]:
    """Include v when its closed 2-neighborhood is pairwise in conflict."""
    members = sorted(g.two_neighbors_view(v) | g.neighbors_view(v))
    for i, x in enumerate(members):
        for y in members[i + 1 :]:
            if not g.in_conflict(x, y):
                return None
    _include(g, log, ReductionKind.CLIQUE, v, members)
    return v


def try_deg_zero(g: TwoLevelGraph, v: int, log: Optional[ReductionLog] = None) -> Optional[int]:
    """Include an edge-free vertex with at most one conflict neighbor."""
    if g.degree(v) != 0:
        return None
    two_v = g.two_neighbors(v)
    if len(two_v) > 1:
        return None
    _include(g, log, ReductionKind.DEG_ZERO, v, two_v)
    return v


def try_deg_zero_triangle(
    g: TwoLevelGraph, v: int, log: Optional[ReductionLog] = None
) -> Optional[int]:
    """Include an edge-free vertex whose two conflict neighbors conflict each other."""
    if g.degree(v) != 0:
        return None
    two_v = g.two_neighbors(v)
    if len(two_v) != 2:
        return None
    u, w = sorted(two_v)
    if not g.in_conflict(u, w):
        return None
    _include(g, log, ReductionKind.DEG_ZERO_TRIANGLE, v, two_v)
    return v


def try_deg_one(g: TwoLevelGraph, v: int, log: Optional[ReductionLog] = None) -> Optional[int]:
    """Include a degree-one vertex whose conflicts all route through its neighbor."""
    if g.degree(v) != 1:
        return None
    (u,) = g.neighbors(v)
    two_v = g.two_neighbors(v)
    if len(two_v) > g.degree(u) - 1:
        return None
    _include(g, log, ReductionKind.DEG_ONE, v, two_v | {u})
    return v


def try_v_shape(g: TwoLevelGraph, v: int, log: Optional[ReductionLog] = None) -> Optional[int]:
    """Include a degree-two vertex with an empty 2-neighborhood."""
    if g.degree(v) != 2:
        return None
    if g.degree2(v) != 0:
        return None
    _include(g, log, ReductionKind.DEG_TWO_V_SHAPE, v, g.neighbors(v))
    return v


def try_deg_two_triangle(
    g: TwoLevelGraph, v: int, log: Optional[ReductionLog] = None
) -> Optional[int]:
    """Triangle special case: degree-two vertex, both neighbors of degree two."""
    if g.degree(v) != 2:
        return None
    u, w = sorted(g.neighbors(v))
    if g.degree(u) != 2 or g.degree(w) != 2:
        return None
    if g.degree2(v) != 0:
        return None
    _include(g, log, ReductionKind.DEG_TWO_TRIANGLE, v, (u, w))
    return v


def try_four_cycle(g: TwoLevelGraph, v: int, log: Optional[ReductionLog] = None) -> Optional[int]:
    """Chordless 4-cycle: include v, exclude its neighbors and the opposite vertex."""
    if g.degree(v) != 2:
        return None
    u, w = sorted(g.neighbors(v))
    if g.degree(u) != 2 or g.degree(w) != 2:
        return None
    two_v = g.two_neighbors(v)
    if len(two_v) != 1:
        return None
    (x,) = two_v
    if not (g.has_edge(u, x) and g.has_edge(w, x)):
        return None
    _include(g, log, ReductionKind.DEG_TWO_FOUR_CYCLE, v, (u, w, x))
    return v


def try_fast_domination(
    g: TwoLevelGraph, v: int, log: Optional[ReductionLog] = None
) -> Optional[int]:
    """Domination restricted to plain neighbors, decided by the counting test.

    Never materializes the 2-neighborhood of the excluded vertex.
    """
    for u in sorted(g.neighbors(v)):
        if _closed_one_subset(g, v, u) and two_neighborhood_confined(g, v, u):
            _exclude(g, log, ReductionKind.FAST_DOMINATION, u)
            return u
    return None


def try_twin(g: TwoLevelGraph, v: int, log: Optional[ReductionLog] = None) -> Optional[int]:
    """Include a degree-two vertex whose neighbors have identical neighborhoods."""
    if g.degree(v) != 2:
        return None
    u, w = sorted(g.neighbors(v))
    if g.neighbors(u) != g.neighbors(w):
        return None
    two_v = g.two_neighbors(v)
    if len(two_v) > g.degree(u) - 1:
        return None
    _include(g, log, ReductionKind.TWIN, v, two_v | {u, w})
    return v


_RULE_FUNCS: dict[ReductionKind, Callable[..., Optional[int]]] = {
    ReductionKind.DOMINATION: try_domination,
    ReductionKind.CLIQUE: try_clique,
    ReductionKind.DEG_ZERO: try_deg_zero,
    ReductionKind.DEG_ZERO_TRIANGLE: try_deg_zero_triangle,
    ReductionKind.DEG_ONE: try_deg_one,
    ReductionKind.DEG_TWO_V_SHAPE: try_v_shape,
    ReductionKind.DEG_TWO_TRIANGLE: try_deg_two_triangle,
    ReductionKind.DEG_TWO_FOUR_CYCLE: try_four_cycle,
    ReductionKind.FAST_DOMINATION: try_fast_domination,
    ReductionKind.TWIN: try_twin,
}


def apply_rules_exhaustively(
    g: TwoLevelGraph,
    rule_order: Iterable[ReductionKind],
    log: ReductionLog,
    counts: Counter,
) -> None:
    """Run the ordered rules to exhaustion, restarting after every application.

    Each rule is tried on active vertices in ascending ID; the first success
    restarts the schedule at the first rule.  A probe that failed is not
    repeated until some vertex at conflict distance <= 2 of the probed vertex
    is removed: rule predicates depend only on that ball (conflicts between
    surviving pairs never change, neighborhoods only shrink), so this skips
    exactly the probes that would fail again and fires the same rule/vertex
    sequence as the plain restart policy.
    """
    order = tuple(rule_order)
    if not order:
        return
    pending: dict[ReductionKind, set[int]] = {k: set(range(g.n)) for k in order}

    def dirty(removed: int, ball: set[int]) -> None:
        for queue in pending.values():
            queue |= ball

    g.removal_listener = dirty
    try:
        while True:
            for kind in order:
                func = _RULE_FUNCS[kind]
                queue = pending[kind]
                fired = False
                for v in sorted(queue):
                    if not g.is_active(v):
                        queue.discard(v)
                        continue
                    if func(g, v, log) is not None:
                        counts[kind] += 1
                        fired = True
                        break
                    queue.discard(v)
                if fired:
                    break
            else:
                return
    finally:
        g.removal_listener = None


def reduce(static: StaticGraph, variant: ReductionVariant) -> Kernel:
    """Reduce the input exhaustively under the given variant.

    The 2pack variant performs no reductions and returns the unreduced graph
    with an empty log.
    """
    g = TwoLevelGraph(static)
    log = ReductionLog()
    counts: Counter = Counter()
    apply_rules_exhaustively(g, variant.rule_order, log, counts)
    stats = KernelStats(
        n=g.active_count,
        m=g.one_edge_count,
        m2=g.two_edge_count,
        rule_counts=dict(counts),
    )
    return Kernel(graph=g, log=log, stats=stats)


def reconstruct(log: ReductionLog, kernel_solution: Iterable[int]) -> set[int]:
    """Lift a kernel solution to the input graph by adding the included vertices."""
    solution = set(kernel_solution)
    overlap = solution & log.vertices()
    if overlap:
        raise GraphError(f"kernel solution contains logged vertices: {sorted(overlap)}")
    return solution | log.included()
