"""
Breadth-first and greedy trivialization search.

Both searches key their visited set on the canonical form, mark states when
they are enqueued, and test the goal as each neighbor is generated. The
parent map stores, for every visited canonical form, the canonical form of
its parent and the move that produced it; replaying those moves from the
input reproduces the exact ordered states the search expanded.
"""

from __future__ import annotations

import heapq
import logging
import os
from collections import Counter, deque
from collections.abc import Callable, Sequence
from concurrent.futures import ProcessPoolExecutor

from ac_workbench.core.moves import LengthBound, apply_masked, neighbors
from ac_workbench.core.presentation import Presentation, canonicalize, is_trivial_state
from ac_workbench.core.series import DatasetEntry, MSIndex
from ac_workbench.enums import MoveSet, SearchAlgorithm
from ac_workbench.models.config import SearchConfig
from ac_workbench.models.results import BatchSummary, SearchResult

logger = logging.getLogger(__name__)

Goal = Callable[[Presentation], bool]
_ParentMap = dict[Presentation, tuple[Presentation, int] | None]


def _reconstruct(parents: _ParentMap, key: Presentation) -> list[int]:
    path: list[int] = []
    link = parents[key]
    while link is not None:
        key, move = link
        path.append(move)
        link = parents[key]
    path.reverse()
    return path


def _bfs(
    start: Presentation, move_set: MoveSet, bound: LengthBound, max_nodes: int, goal: Goal
) -> tuple[bool, list[int], int, int]:
    if goal(start):
        return True, [], 1, start.length
    root = canonicalize(start)
    parents: _ParentMap = {root: None}
    queue: deque[tuple[Presentation, Presentation]] = deque([(start, root)])
    max_seen = start.length
    while queue and len(parents) < max_nodes:
        state, key = queue.popleft()
        for move, child in neighbors(state, move_set, bound):
            child_key = canonicalize(child)
            if child_key in parents:
                continue
            parents[child_key] = (key, move.index)
            max_seen = max(max_seen, child.length)
            if goal(child):
                return True, _reconstruct(parents, child_key), len(parents), max_seen
            queue.append((child, child_key))
            if len(parents) >= max_nodes:
                break
    return False, [], len(parents), max_seen


def _greedy(
    start: Presentation, move_set: MoveSet, bound: LengthBound, max_nodes: int, goal: Goal
) -> tuple[bool, list[int], int, int]:
    if goal(start):
        return True, [], 1, start.length
    root = canonicalize(start)
    parents: _ParentMap = {root: None}
    counter = 0
    heap: list[tuple[int, int, int, Presentation, Presentation]] = [(start.length, 0, counter, start, root)]
    max_seen = start.length
    while heap and len(parents) < max_nodes:
        _, depth, _, state, key = heapq.heappop(heap)
        for move, child in neighbors(state, move_set, bound):
            child_key = canonicalize(child)
            if child_key in parents:
                continue
            parents[child_key] = (key, move.index)
            max_seen = max(max_seen, child.length)
            if goal(child):
                return True, _reconstruct(parents, child_key), len(parents), max_seen
            counter += 1
            heapq.heappush(heap, (child.length, depth + 1, counter, child, child_key))
            if len(parents) >= max_nodes:
                break
    return False, [], len(parents), max_seen


_ALGORITHMS = {SearchAlgorithm.BFS: _bfs, SearchAlgorithm.GREEDY: _greedy}


def search(
    p: Presentation,
    cfg: SearchConfig,
    index: MSIndex | None = None,
    goal: Goal = is_trivial_state,
) -> SearchResult:
    """Run the configured algorithm from ``p`` until ``goal`` holds or the node cap is hit."""
    bound = cfg.resolve_bound(p, index)
    solved, path, visited, max_seen = _ALGORITHMS[cfg.algorithm](p, cfg.move_set, bound, cfg.max_nodes, goal)
    if solved:
        _, max_seen = replay(p, path, cfg.move_set, bound)
    logger.debug("%s on %s: solved=%s nodes=%d", cfg.algorithm.value, p, solved, visited)
    return SearchResult(
        input=p,
        solved=solved,
        path=path,
        nodes_visited=visited,
        max_length_seen=max_seen,
        algorithm=cfg.algorithm,
        move_set=cfg.move_set,
        bound=bound,
        n=index.n if index else None,
    )


def bfs_trivialize(p: Presentation, cfg: SearchConfig, index: MSIndex | None = None) -> SearchResult:
    """Breadth-first search for a trivialization (FIFO frontier)."""
    return search(p, cfg.model_copy(update={"algorithm": SearchAlgorithm.BFS}), index)


def greedy_trivialize(p: Presentation, cfg: SearchConfig, index: MSIndex | None = None) -> SearchResult:
    """Greedy search ordered by (presentation length, path length, insertion order)."""
    return search(p, cfg.model_copy(update={"algorithm": SearchAlgorithm.GREEDY}), index)


def replay(
    p: Presentation, path: Sequence[int], move_set: MoveSet = MoveSet.PRIME, bound: LengthBound = None
) -> tuple[Presentation, int]:
    """Apply ``path`` with masking; return the terminal state and the largest length seen."""
    state, profile = walk(p, path, move_set, bound)
    return state, max(profile)


def walk(
    p: Presentation, path: Sequence[int], move_set: MoveSet = MoveSet.PRIME, bound: LengthBound = None
) -> tuple[Presentation, list[int]]:
    """Terminal state plus the lengths before the first move and after every move."""
    state = p
    profile = [state.length]
    for move in path:
        state = apply_masked(state, move, bound, move_set)
        profile.append(state.length)
    return state, profile


# ============================================================================
# Batches
# ============================================================================


def _solve_entry(args: tuple[DatasetEntry, SearchConfig]) -> SearchResult:
    entry, cfg = args
    return search(entry.presentation, cfg, entry.index)


def summarize(results: Sequence[SearchResult]) -> BatchSummary:
    """Solved counts by n and by initial length, plus length-increase and path statistics."""
    solved = [r for r in results if r.solved]
    total_by_n: Counter[int] = Counter(r.n for r in results if r.n is not None)
    solved_by_n: Counter[int] = Counter(r.n for r in solved if r.n is not None)
    total_by_length: Counter[int] = Counter(r.input.length for r in results)
    solved_by_length: Counter[int] = Counter(r.input.length for r in solved)
    path_lengths = [len(r.path) for r in solved]
    return BatchSummary(
        total=len(results),
        solved=len(solved),
        solved_by_n=dict(sorted(solved_by_n.items())),
        total_by_n=dict(sorted(total_by_n.items())),
        solved_by_length=dict(sorted(solved_by_length.items())),
        total_by_length=dict(sorted(total_by_length.items())),
        max_length_increase=max((r.length_increase for r in solved), default=0),
        max_path_length=max(path_lengths, default=0),
        mean_path_length=sum(path_lengths) / len(path_lengths) if path_lengths else 0.0,
    )


def batch_solve(
    dataset: Sequence[DatasetEntry], cfg: SearchConfig, threads: int | None = None
) -> tuple[list[SearchResult], BatchSummary]:
    """Search every dataset entry, in parallel across presentations.

    Results come back in dataset order.
    """
    workers = threads or os.cpu_count() or 1
    jobs = [(entry, cfg) for entry in dataset]
    logger.info("Solving %d presentations with %s on %d workers", len(jobs), cfg.algorithm.value, workers)
    if workers == 1:
        results = [_solve_entry(job) for job in jobs]
    else:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(_solve_entry, jobs, chunksize=max(1, len(jobs) // (workers * 8))))
    summary = summarize(results)
    logger.info("Solved %d/%d", summary.solved, summary.total)
    return results, summary
