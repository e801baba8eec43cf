"""Brute-force ground truth for small instances.

Deliberately shares no search or distance logic with the solver modules:
squares come from per-vertex BFS, optima from plain recursive enumeration.
Only meant for tests and provenance, so inputs are capped.
"""

from __future__ import annotations

from collections import deque

from .graph import StaticGraph
from .transform import SquareGraph

DEFAULT_MAX_N = 20


class OracleLimitError(ValueError):
    """Input too large for brute-force enumeration."""


def _check_size(g, max_n: int) -> None:
    if g.n > max_n:
        raise OracleLimitError(f"brute force refuses n={g.n} > {max_n}")


def _bfs_ball(g: StaticGraph, start: int, depth: int) -> set[int]:
    seen = {start}
    frontier = deque([(start, 0)])
    while frontier:
        v, d = frontier.popleft()
        if d == depth:
            continue
        for w in g.neighbors(v):
            if w not in seen:
                seen.add(w)
                frontier.append((w, d + 1))
    seen.discard(start)
    return seen


def brute_square(g: StaticGraph, max_n: int = DEFAULT_MAX_N) -> SquareGraph:
    """Square graph via truncated BFS from every vertex."""
    _check_size(g, max_n)
    adjacency = [sorted(_bfs_ball(g, v, 2)) for v in range(g.n)]
    return SquareGraph.from_adjacency(adjacency)


def _max_independent_set(masks: list[int], alive: int) -> tuple[int, int]:
    # Plain recursion branching on a maximum-degree vertex; returns (size, mask).
    if alive == 0:
        return 0, 0
    best_v, best_d = -1, -1
    a = alive
    while a:
        low = a & -a
        a ^= low
        d = (masks[low.bit_length() - 1] & alive).bit_count()
        if d > best_d:
            best_d = d
            best_v = low.bit_length() - 1
    if best_d == 0:
        return alive.bit_count(), alive
    bit = 1 << best_v
    size_in, set_in = _max_independent_set(masks, alive & ~(masks[best_v] | bit))
    size_in += 1
    set_in |= bit
    size_out, set_out = _max_independent_set(masks, alive & ~bit)
    if size_in >= size_out:
        return size_in, set_in
    return size_out, set_out


def _masks(graph) -> list[int]:
    masks = [0] * graph.n
    for v in range(graph.n):
        for w in graph.adjacency[v]:
            masks[v] |= 1 << w
    return masks


def brute_alpha(graph, max_n: int = DEFAULT_MAX_N) -> int:
    """Independence number of any graph exposing ``n`` and ``adjacency``."""
    _check_size(graph, max_n)
    size, _ = _max_independent_set(_masks(graph), (1 << graph.n) - 1)
    return size


def brute_beta(g: StaticGraph, max_n: int = DEFAULT_MAX_N) -> tuple[int, frozenset[int]]:
    """Maximum 2-packing size and a witness, via the BFS square graph."""
    _check_size(g, max_n)
    sq = brute_square(g, max_n)
    size, mask = _max_independent_set(_masks(sq), (1 << g.n) - 1)
    witness = frozenset(v for v in range(g.n) if mask >> v & 1)
    from .pipeline import verify_2ps

    if not verify_2ps(g, witness):
        raise AssertionError("oracle witness failed the distance check")
    return size, witness
