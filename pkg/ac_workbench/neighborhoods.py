"""k-step neighborhoods and their size statistics over a dataset."""

from __future__ import annotations

import logging
import os
from collections.abc import Mapping, Sequence
from concurrent.futures import ProcessPoolExecutor

import numpy as np

from ac_workbench.core.moves import neighbors
from ac_workbench.core.presentation import Presentation, canonicalize
from ac_workbench.enums import MoveSet, SolveLabel
from ac_workbench.models.results import BandShare, NeighborhoodReport, NeighborhoodStats

logger = logging.getLogger(__name__)

HISTOGRAM_BINS = (6, 26)
SIZE_BANDS: tuple[tuple[int, int], ...] = ((89575, 89575), (89715, 89831), (89844, 89872))


def k_neighborhood(p: Presentation, k: int, move_set: MoveSet = MoveSet.PRIME) -> set[Presentation]:
    """Canonical forms reachable from ``p`` in at most ``k`` moves, unbounded lengths."""
    if k < 0:
        raise ValueError(f"k must be >= 0, got {k}")
    start = canonicalize(p)
    seen = {start}
    frontier = [start]
    for _ in range(k):
        nxt: list[Presentation] = []
        for state in frontier:
            for _, child in neighbors(state, move_set):
                key = canonicalize(child)
                if key not in seen:
                    seen.add(key)
                    nxt.append(key)
        frontier = nxt
    return seen


def _size(args: tuple[Presentation, int, MoveSet]) -> int:
    p, k, move_set = args
    return len(k_neighborhood(p, k, move_set))


def neighborhood_sizes(
    presentations: Sequence[Presentation], k: int = 5, move_set: MoveSet = MoveSet.PRIME, threads: int | None = None
) -> list[int]:
    """Neighborhood size for every presentation, parallel across seeds, in input order."""
    workers = threads or os.cpu_count() or 1
    jobs = [(p, k, move_set) for p in presentations]
    logger.info("Computing %d-step neighborhoods of %d presentations on %d workers", k, len(jobs), workers)
    if workers == 1:
        return [_size(job) for job in jobs]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(_size, jobs, chunksize=max(1, len(jobs) // (workers * 8))))


def size_stats(sizes: Sequence[int], k: int) -> NeighborhoodStats:
    if not sizes:
        raise ValueError("No neighborhood sizes to summarize")
    arr = np.asarray(sizes, dtype=np.int64)
    histograms: dict[int, list[int]] = {}
    edges: dict[int, list[float]] = {}
    for bins in HISTOGRAM_BINS:
        counts, bin_edges = np.histogram(arr, bins=bins)
        histograms[bins] = counts.tolist()
        edges[bins] = bin_edges.tolist()
    return NeighborhoodStats(
        k=k,
        sizes=arr.tolist(),
        min=int(arr.min()),
        max=int(arr.max()),
        mean=float(arr.mean()),
        median=float(np.median(arr)),
        distinct=int(np.unique(arr).shape[0]),
        histograms=histograms,
        bin_edges=edges,
    )


def band_shares(
    sizes: Sequence[int], labels: Mapping[int, SolveLabel], bands: Sequence[tuple[int, int]] = SIZE_BANDS
) -> list[BandShare]:
    """For each label and band, how many labelled presentations have a size inside the band.

    ``labels`` maps dataset line index to a label.
    """
    shares: list[BandShare] = []
    for label in SolveLabel:
        chosen = [sizes[i] for i, lab in labels.items() if lab is label]
        for low, high in bands:
            inside = sum(1 for s in chosen if low <= s <= high)
            shares.append(BandShare(label=label.value, low=low, high=high, inside=inside, total=len(chosen)))
    return shares


def neighborhood_report(
    presentations: Sequence[Presentation],
    k: int = 5,
    labels: Mapping[int, SolveLabel] | None = None,
    move_set: MoveSet = MoveSet.PRIME,
    threads: int | None = None,
    sizes: Sequence[int] | None = None,
) -> NeighborhoodReport:
    """Sizes, summary statistics, histograms and (with labels) band shares.

    Pass ``sizes`` to reuse precomputed neighborhood sizes.
    """
    if labels is not None:
        missing = [i for i in range(len(presentations)) if i not in labels]
        if missing:
            raise ValueError(f"Labels missing for {len(missing)} presentations (first: line {missing[0]})")
    if sizes is None:
        sizes = neighborhood_sizes(presentations, k, move_set, threads)
    stats = size_stats(sizes, k)
    bands = band_shares(sizes, labels) if labels is not None else []
    return NeighborhoodReport(stats=stats, bands=bands)
