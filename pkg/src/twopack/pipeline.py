"""End-to-end solver: reduce, transform, solve, map back, verify.

The reduction and transformation phases are polynomial and run without a
deadline; whatever remains of the time budget goes to the MIS phase.  An
empty kernel short-circuits the MIS phase and is proven optimal by the
reductions alone.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from enum import Enum
from typing import Iterable

from .graph import GraphError, StaticGraph
from .mis import Deadline, exact_mis, heuristic_mis
from .reductions import ReductionKind, ReductionVariant, reconstruct, reduce
from .transform import DEFAULT_EDGE_CAP, EdgeCapExceeded, square


class SolverMode(Enum):
    EXACT = "exact"
    HEURISTIC = "heuristic"


@dataclass(frozen=True)
class SolverConfig:
    variant: ReductionVariant = ReductionVariant.ELABORATED
    mode: SolverMode = SolverMode.EXACT
    time_limit: float = 600.0
    seed: int = 0
    edge_cap: int = DEFAULT_EDGE_CAP
    verify: bool = False
    max_nodes: int | None = None
    poll: int = 256

    def __post_init__(self) -> None:
        if self.time_limit <= 0:
            raise ValueError("time_limit must be positive")
        if self.edge_cap <= 0:
            raise ValueError("edge_cap must be positive")


@dataclass
class KernelReport:
    """Kernel and square-graph sizes plus per-rule application counts."""

    n_kernel: int
    m_kernel: int
    m2_kernel: int
    n_square: int | None
    m_square: int | None
    rule_counts: dict[ReductionKind, int]
    offset: int


@dataclass
class PhaseTimings:
    reduce: float
    transform: float
    solve: float
    total: float


@dataclass
class Solution:
    vertices: frozenset[int]
    size: int
    proven_optimal: bool
    kernel: KernelReport
    timings: PhaseTimings
    time_to_best: float
    time_to_proof: float | None
    mis_nodes: int = 0


class MemoryCapError(RuntimeError):
    """Square construction hit the edge cap; carries partial kernel statistics
    and the partial solution collected by the reductions so far."""

    def __init__(self, kernel: KernelReport, partial: frozenset[int]):
        super().__init__(
            f"square graph edge cap exceeded (kernel n={kernel.n_kernel}, "
            f"m={kernel.m_kernel})"
        )
        self.kernel = kernel
        self.partial = partial


class VerificationError(RuntimeError):
    """A produced solution failed the distance-three check."""


def verify_2ps(g: StaticGraph, s: Iterable[int]) -> bool:
    """True iff every pair in ``s`` is at shortest-path distance >= 3 in ``g``.

    Runs a depth-2 BFS from each member and checks that it reaches no other
    member.
    """
    chosen = set(s)
    for v in chosen:
        if not isinstance(v, int) or not 0 <= v < g.n:
            raise GraphError(f"vertex {v} out of range 0..{g.n - 1}")
    for v in chosen:
        for u in g.neighbors(v):
            if u in chosen:
                return False
            for w in g.neighbors(u):
                if w != v and w in chosen:
                    return False
    return True


def solve_m2s(g: StaticGraph, cfg: SolverConfig) -> Solution:
    """Run the full pipeline on ``g`` under ``cfg`` and return the solution."""
    t0 = time.perf_counter()
    kernel = reduce(g, cfg.variant)
    t_reduce = time.perf_counter() - t0
    report = KernelReport(
        n_kernel=kernel.stats.n,
        m_kernel=kernel.stats.m,
        m2_kernel=kernel.stats.m2,
        n_square=None,
        m_square=None,
        rule_counts=kernel.stats.rule_counts,
        offset=kernel.log.offset,
    )

    if kernel.graph.active_count == 0:
        vertices = frozenset(kernel.log.included())
        report.n_square = 0
        report.m_square = 0
        total = time.perf_counter() - t0
        timings = PhaseTimings(reduce=t_reduce, transform=0.0, solve=0.0, total=total)
        solution = Solution(
            vertices=vertices,
            size=len(vertices),
            proven_optimal=True,
            kernel=report,
            timings=timings,
            time_to_best=t_reduce,
            time_to_proof=total,
        )
        _maybe_verify(g, cfg, solution)
        return solution

    t1 = time.perf_counter()
    try:
        sq = square(kernel.graph, edge_cap=cfg.edge_cap)
    except EdgeCapExceeded as exc:
        raise MemoryCapError(report, frozenset(kernel.log.included())) from exc
    t_transform = time.perf_counter() - t1
    report.n_square = sq.n
    report.m_square = sq.m

    remaining = cfg.time_limit - (time.perf_counter() - t0)
    deadline = Deadline(seconds=remaining, poll=cfg.poll, max_nodes=cfg.max_nodes)
    t2 = time.perf_counter()
    if cfg.mode is SolverMode.EXACT:
        result = exact_mis(sq, deadline, seed=cfg.seed)
    else:
        result = heuristic_mis(sq, deadline, seed=cfg.seed)
    t_solve = time.perf_counter() - t2

    vertices = frozenset(reconstruct(kernel.log, sq.original_ids(result.vertices)))
    proven = cfg.mode is SolverMode.EXACT and result.proven_optimal
    total = time.perf_counter() - t0
    timings = PhaseTimings(reduce=t_reduce, transform=t_transform, solve=t_solve, total=total)
    solution = Solution(
        vertices=vertices,
        size=len(vertices),
        proven_optimal=proven,
        kernel=report,
        timings=timings,
        time_to_best=t_reduce + t_transform + result.time_to_best,
        time_to_proof=total if proven else None,
        mis_nodes=result.nodes_explored,
    )
    _maybe_verify(g, cfg, solution)
    return solution


def _maybe_verify(g: StaticGraph, cfg: SolverConfig, solution: Solution) -> None:
    if cfg.verify and not verify_2ps(g, solution.vertices):
        raise VerificationError("solver produced a set violating the distance-three rule")


def kernel_ratios(g: StaticGraph, sol: Solution) -> tuple[float, float]:
    """Square-kernel size relative to the input, as percentages (n and m)."""
    n_sq = sol.kernel.n_square or 0
    m_sq = sol.kernel.m_square or 0
    n_ratio = 100.0 * n_sq / g.n if g.n else 0.0
    m_ratio = 100.0 * m_sq / g.m if g.m else 0.0
    return (n_ratio, m_ratio)
