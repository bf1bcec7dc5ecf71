"""Move-frequency profiles of trivialization paths."""

from __future__ import annotations

from collections import Counter
from collections.abc import Iterable, Sequence

from ac_workbench.core.moves import NUM_MOVES
from ac_workbench.models.results import AnatomyProfile


def anatomy(paths: Iterable[Sequence[int]], num_moves: int = NUM_MOVES) -> AnatomyProfile:
    """Count every move over all paths; moves that never occur get 0."""
    counts: Counter[int] = Counter()
    for path in paths:
        counts.update(path)
    unknown = [m for m in counts if not 1 <= m <= num_moves]
    if unknown:
        raise ValueError(f"Move indices outside 1..{num_moves}: {sorted(unknown)}")
    full = {m: counts.get(m, 0) for m in range(1, num_moves + 1)}
    return AnatomyProfile(counts=full, total=sum(full.values()))


def merge(profiles: Iterable[AnatomyProfile]) -> AnatomyProfile:
    """Profile of the union of the path sets behind ``profiles``."""
    counts: Counter[int] = Counter()
    for profile in profiles:
        counts.update(profile.counts)
    full = dict(sorted(counts.items()))
    return AnatomyProfile(counts=full, total=sum(full.values()))
