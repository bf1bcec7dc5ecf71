"""
Phased random-walk dataset for language-model pretraining.

Each seed presentation is pushed through ``n_phases`` phases with a relator
bound rising from its longest relator toward ``l_max``. In every phase,
``per_phase`` presentations are produced by applying random prime moves with
no-op masking; phase ``i`` continues from the matching output of phase
``i - 1``.
"""

from __future__ import annotations

import logging
import math
import os
from collections.abc import Iterator, Sequence
from concurrent.futures import ProcessPoolExecutor

import numpy as np

from ac_workbench.analysis.tokenizer import tokenize
from ac_workbench.core.moves import NUM_MOVES, apply_masked
from ac_workbench.core.presentation import Presentation
from ac_workbench.enums import MoveSet
from ac_workbench.models.config import LMDatasetConfig
from ac_workbench.models.results import LMRecord

logger = logging.getLogger(__name__)

HISTOGRAM_BINS = 20


def phase_bounds(longest: int, phase: int, cfg: LMDatasetConfig) -> tuple[int, int]:
    """Integer range ``[low, high]`` that the phase's relator bound is drawn from."""
    increment = (cfg.l_max - longest) / cfg.n_phases
    low = math.floor(longest + phase * increment)
    high = math.floor(longest + (phase + 1) * increment)
    return low, max(low, high)


def seed_walk(p0: Presentation, seed_index: int, cfg: LMDatasetConfig, seed: int) -> list[LMRecord]:
    """All records for one seed presentation, in phase-major order."""
    rng = np.random.default_rng(np.random.SeedSequence([seed, seed_index]))
    longest = p0.max_relator_length
    out: list[LMRecord] = []
    for phase in range(cfg.n_phases):
        low, high = phase_bounds(longest, phase, cfg)
        for j in range(cfg.per_phase):
            bound = int(rng.integers(low, high + 1))
            state = p0 if phase == 0 else out[(phase - 1) * cfg.per_phase + j].presentation
            for move in rng.integers(1, NUM_MOVES + 1, size=cfg.moves_per_sample).tolist():
                state = apply_masked(state, move, bound, MoveSet.PRIME)
            out.append(LMRecord(presentation=state, seed_index=seed_index, phase=phase, l_i=bound))
    return out


def _seed_job(args: tuple[Presentation, int, LMDatasetConfig, int]) -> list[LMRecord]:
    return seed_walk(*args)


def gen_lm_dataset(
    dataset: Sequence[Presentation],
    cfg: LMDatasetConfig | None = None,
    seed: int = 0,
    threads: int | None = None,
) -> Iterator[LMRecord]:
    """Stream records seed by seed, in dataset order, parallel across seeds.

    The output for a fixed ``seed`` does not depend on ``threads``.
    """
    cfg = cfg or LMDatasetConfig()
    workers = threads or os.cpu_count() or 1
    jobs = [(p, i, cfg, seed) for i, p in enumerate(dataset)]
    logger.info(
        "Generating %d phases x %d samples for %d seeds on %d workers",
        cfg.n_phases,
        cfg.per_phase,
        len(jobs),
        workers,
    )
    if workers == 1:
        for job in jobs:
            yield from _seed_job(job)
        return
    with ProcessPoolExecutor(max_workers=workers) as pool:
        for records in pool.map(_seed_job, jobs):
            yield from records


def split_by_seed(
    records: Sequence[LMRecord], validation_fraction: float = 0.1, seed: int = 0
) -> tuple[list[LMRecord], list[LMRecord]]:
    """Train / validation split that keeps every seed's records on one side."""
    seeds = sorted({r.seed_index for r in records})
    rng = np.random.default_rng(seed)
    count = round(validation_fraction * len(seeds))
    held_out = {int(s) for s in rng.permutation(seeds)[:count]} if seeds else set()
    train = [r for r in records if r.seed_index not in held_out]
    validation = [r for r in records if r.seed_index in held_out]
    return train, validation


def length_histogram(records: Sequence[LMRecord], bins: int = HISTOGRAM_BINS) -> tuple[list[int], list[float]]:
    """Histogram of presentation lengths over ``bins`` equal-width bins."""
    lengths = np.asarray([r.presentation.length for r in records], dtype=np.int64)
    counts, edges = np.histogram(lengths, bins=bins)
    return counts.tolist(), edges.tolist()


def token_count(records: Sequence[LMRecord]) -> int:
    return len(tokenize([r.presentation for r in records]))
