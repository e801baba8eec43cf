"""Maximum independent set back ends for square graphs.

Two solvers over a shared bitmask representation: an exact branch-and-bound
with interleaved cheap reductions and a greedy clique-cover bound, and an
iterated (1,2)-swap local search.  All randomness flows from a single seed;
with a node budget instead of a wall clock, runs are bit-identical.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from random import Random
from typing import Callable, Optional

from .transform import SquareGraph


@dataclass(frozen=True)
class Deadline:
    """Cooperative stopping rule: wall-clock budget polled every ``poll`` nodes.

    ``max_nodes`` bounds the search in nodes for reproducible runs; wall-clock
    limits are advisory (checked only at poll points).
    """

    seconds: float
    poll: int = 256
    max_nodes: int | None = None


@dataclass
class MisResult:
    vertices: frozenset[int]
    size: int
    proven_optimal: bool
    nodes_explored: int
    elapsed: float
    time_to_best: float


def _adjacency_masks(sq: SquareGraph) -> list[int]:
    masks = [0] * sq.n
    for v in range(sq.n):
        for w in sq.adjacency[v]:
            masks[v] |= 1 << w
    return masks


def _mask_to_set(mask: int) -> frozenset[int]:
    out = []
    while mask:
        low = mask & -mask
        mask ^= low
        out.append(low.bit_length() - 1)
    return frozenset(out)


# -- construction and local search (shared by both solvers) -------------------


def _greedy_maximal(n: int, nb: list[int], rng: Random) -> int:
    """Maximal independent set by repeated minimum-residual-degree choice."""
    alive = (1 << n) - 1
    sol = 0
    while alive:
        best_d = n + 1
        ties: list[int] = []
        a = alive
        while a:
            low = a & -a
            a ^= low
            v = low.bit_length() - 1
            d = (nb[v] & alive).bit_count()
            if d < best_d:
                best_d = d
                ties = [v]
            elif d == best_d:
                ties.append(v)
        v = ties[0] if len(ties) == 1 else rng.choice(ties)
        sol |= 1 << v
        alive &= ~(nb[v] | (1 << v))
    return sol


def _maximalize(n: int, nb: list[int], sol: int, rng: Random) -> int:
    free = [v for v in range(n) if not sol >> v & 1 and nb[v] & sol == 0]
    rng.shuffle(free)
    for v in free:
        if nb[v] & sol == 0:
            sol |= 1 << v
    return sol


def _swap_pass(
    n: int,
    nb: list[int],
    sol: int,
    rng: Random,
    observer: Optional[Callable[[int, int], None]],
) -> tuple[int, bool]:
    """One (1,2)-swap attempt: trade a solution vertex for two of its 1-tight
    neighbors that are mutually non-adjacent."""
    members = [v for v in range(n) if sol >> v & 1]
    rng.shuffle(members)
    for v in members:
        bit_v = 1 << v
        candidates = []
        others = nb[v]
        while others:
            low = others & -others
            others ^= low
            u = low.bit_length() - 1
            if not sol >> u & 1 and nb[u] & sol == bit_v:
                candidates.append(u)
        for i, u1 in enumerate(candidates):
            for u2 in candidates[i + 1 :]:
                if not nb[u1] >> u2 & 1:
                    swapped = (sol & ~bit_v) | (1 << u1) | (1 << u2)
                    if observer is not None:
                        observer(sol, swapped)
                    return swapped, True
    return sol, False


def _local_optimum(
    n: int,
    nb: list[int],
    sol: int,
    rng: Random,
    observer: Optional[Callable[[int, int], None]] = None,
) -> int:
    sol = _maximalize(n, nb, sol, rng)
    while True:
        sol, improved = _swap_pass(n, nb, sol, rng, observer)
        if not improved:
            return sol
        sol = _maximalize(n, nb, sol, rng)


def heuristic_mis(
    sq: SquareGraph,
    deadline: Deadline,
    seed: int = 0,
    _swap_observer: Optional[Callable[[int, int], None]] = None,
) -> MisResult:
    """Iterated (1,2)-swap local search with perturbation restarts.

    Always returns a maximal independent set; optimality is only claimed in
    the trivial edgeless case.
    """
    start = time.perf_counter()
    n = sq.n
    if n == 0:
        return MisResult(frozenset(), 0, True, 0, time.perf_counter() - start, 0.0)
    rng = Random(seed)
    nb = _adjacency_masks(sq)
    sol = _greedy_maximal(n, nb, rng)
    sol = _local_optimum(n, nb, sol, rng, _swap_observer)
    best = sol
    best_size = best.bit_count()
    time_to_best = time.perf_counter() - start
    t_end = start + deadline.seconds
    iters = 0
    while best_size < n:
        if deadline.max_nodes is not None and iters >= deadline.max_nodes:
            break
        if time.perf_counter() >= t_end:
            break
        iters += 1
        # Perturb: force one outside vertex in, then re-optimize.
        outside = [v for v in range(n) if not sol >> v & 1]
        u = rng.choice(outside)
        sol = (sol & ~nb[u]) | (1 << u)
        sol = _local_optimum(n, nb, sol, rng, _swap_observer)
        size = sol.bit_count()
        if size > best_size:
            best = sol
            best_size = size
            time_to_best = time.perf_counter() - start
    assert all(nb[v] & best == 0 for v in _mask_to_set(best))
    return MisResult(
        vertices=_mask_to_set(best),
        size=best_size,
        proven_optimal=best_size == n,
        nodes_explored=iters,
        elapsed=time.perf_counter() - start,
        time_to_best=time_to_best,
    )


# -- exact branch and bound ----------------------------------------------------


def _clique_cover_bound(alive: int, nb: list[int], order: list[int]) -> int:
    """Greedy clique cover of the residual graph; its size bounds the MIS."""
    commons: list[int] = []
    bound = 0
    for v in order:
        bit = 1 << v
        if not alive & bit:
            continue
        nv = nb[v] & alive
        for i, common in enumerate(commons):
            if common & bit:
                commons[i] = common & nv
                break
        else:
            commons.append(nv)
            bound += 1
    return bound


def exact_mis(sq: SquareGraph, deadline: Deadline, seed: int = 0) -> MisResult:
    """Branch and bound on the maximum-degree vertex with include/exclude branches.

    Each node first applies cheap reductions to a fixed point (isolated and
    pendant vertices are included, vertices with a dominated closed
    neighborhood excluded), then prunes with a greedy clique-cover bound.
    The initial incumbent comes from the local-search heuristic.  When the
    deadline expires the best solution found so far is returned unproven.
    """
    start = time.perf_counter()
    if deadline.seconds <= 0:
        return MisResult(frozenset(), 0, False, 0, time.perf_counter() - start, 0.0)
    n = sq.n
    if n == 0:
        return MisResult(frozenset(), 0, True, 0, time.perf_counter() - start, 0.0)
    nb = _adjacency_masks(sq)
    rng = Random(seed)
    warm = _local_optimum(n, nb, _greedy_maximal(n, nb, rng), rng)
    best_mask = warm
    best = warm.bit_count()
    time_to_best = time.perf_counter() - start

    cover_order = sorted(range(n), key=lambda v: (nb[v].bit_count(), v))
    full = (1 << n) - 1
    t_end = start + deadline.seconds
    stack: list[tuple[int, int]] = [(full, 0)]
    nodes = 0
    aborted = False
    poll = max(1, deadline.poll)
    while stack:
        nodes += 1
        if nodes % poll == 0 and time.perf_counter() >= t_end:
            aborted = True
            break
        if deadline.max_nodes is not None and nodes > deadline.max_nodes:
            aborted = True
            break
        alive, chosen = stack.pop()

        while True:
            changed = False
            a = alive
            while a:
                low = a & -a
                a ^= low
                v = low.bit_length() - 1
                nv = nb[v] & alive
                d = nv.bit_count()
                if d == 0:
                    chosen |= low
                    alive ^= low
                    changed = True
                elif d == 1:
                    chosen |= low
                    alive &= ~(low | nv)
                    a &= alive
                    changed = True
            a = alive
            while a:
                low = a & -a
                a ^= low
                u = low.bit_length() - 1
                nu = nb[u] & alive
                closed_u = nu | low
                b = nu
                while b:
                    vb = b & -b
                    b ^= vb
                    if ((nb[vb.bit_length() - 1] & alive) | vb) & ~closed_u == 0:
                        alive ^= low
                        changed = True
                        break
            if not changed:
                break

        if alive == 0:
            size = chosen.bit_count()
            if size > best:
                best = size
                best_mask = chosen
                time_to_best = time.perf_counter() - start
            continue
        size = chosen.bit_count()
        if size + _clique_cover_bound(alive, nb, cover_order) <= best:
            continue
        branch_v, branch_d = -1, -1
        a = alive
        while a:
            low = a & -a
            a ^= low
            v = low.bit_length() - 1
            d = (nb[v] & alive).bit_count()
            if d > branch_d:
                branch_d = d
                branch_v = v
        bit = 1 << branch_v
        stack.append((alive & ~bit, chosen))
        stack.append((alive & ~(nb[branch_v] | bit), chosen | bit))

    assert all(nb[v] & best_mask == 0 for v in _mask_to_set(best_mask))
    return MisResult(
        vertices=_mask_to_set(best_mask),
        size=best,
        proven_optimal=not aborted,
        nodes_explored=nodes,
        elapsed=time.perf_counter() - start,
        time_to_best=time_to_best,
    )
