"""
Supermove mining and action-space adaptation.

A supermove is a contiguous run of moves that recurs across trivialization
paths. :class:`ActionSpaceAdapter` tracks which presentations become solvable
as training resources increase, then adds or drops supermoves based on the
paths of the hardest newly solved instances.
"""

from __future__ import annotations

import logging
import math
from collections import Counter
from collections.abc import Callable, Iterable, Sequence
from dataclasses import dataclass, field

from ac_workbench.core.moves import NUM_MOVES
from ac_workbench.models.config import AdaptConfig
from ac_workbench.models.results import Supermove

logger = logging.getLogger(__name__)

Action = tuple[int, ...]
Paths = list[list[int]]
WindowComparator = Callable[[Paths, Paths, AdaptConfig], list[Supermove]]


def mine_supermoves(
    paths: Iterable[Sequence[int]], max_len: int, top_k: int | None = None, min_support: int = 1
) -> list[Supermove]:
    """Rank contiguous n-grams (2 <= n <= max_len) by distinct-path support, then total count."""
    if max_len < 2:
        raise ValueError(f"max_len must be >= 2, got {max_len}")
    counts: Counter[Action] = Counter()
    support: Counter[Action] = Counter()
    for path in paths:
        seen: set[Action] = set()
        for size in range(2, max_len + 1):
            for start in range(len(path) - size + 1):
                gram = tuple(path[start : start + size])
                counts[gram] += 1
                seen.add(gram)
        support.update(seen)
    ranked = sorted(
        (g for g in counts if support[g] >= min_support),
        key=lambda g: (-support[g], -counts[g], len(g), g),
    )
    if top_k is not None:
        ranked = ranked[:top_k]
    return [Supermove(moves=g, count=counts[g], support=support[g]) for g in ranked]


def count_occurrences(path: Sequence[int], moves: Sequence[int]) -> int:
    """Overlapping occurrences of ``moves`` inside ``path``."""
    size = len(moves)
    target = tuple(moves)
    return sum(1 for i in range(len(path) - size + 1) if tuple(path[i : i + size]) == target)


def latest_window_comparator(earlier: Paths, latest: Paths, cfg: AdaptConfig) -> list[Supermove]:
    """Supermoves frequent in the latest hard window, ranked above those already common earlier."""
    earlier_support = {s.moves: s.support for s in mine_supermoves(earlier, cfg.max_len)}
    mined = mine_supermoves(latest, cfg.max_len, min_support=cfg.min_support)
    return sorted(mined, key=lambda s: (earlier_support.get(s.moves, 0) > s.support, -s.support, -s.count))


@dataclass
class SettingRecord:
    """Presentations solved at one resource setting (e.g. total environment interactions)."""

    resource: int
    solved: dict[int, list[int]]
    new: dict[int, list[int]] = field(default_factory=dict)
    hard: dict[int, list[int]] = field(default_factory=dict)


class ActionSpaceAdapter:
    """Grow and prune the action list as resource settings are recorded.

    Plain moves ``(1,) .. (12,)`` always stay; supermoves follow them.
    """

    def __init__(
        self,
        cfg: AdaptConfig | None = None,
        num_moves: int = NUM_MOVES,
        comparator: WindowComparator = latest_window_comparator,
    ) -> None:
        self.cfg = cfg or AdaptConfig()
        self.comparator = comparator
        self.actions: list[Action] = [(m,) for m in range(1, num_moves + 1)]
        self.history: list[SettingRecord] = []
        self._num_moves = num_moves

    @property
    def supermoves(self) -> list[Action]:
        return self.actions[self._num_moves :]

    def _hard(self, new: dict[int, list[int]]) -> dict[int, list[int]]:
        if not new:
            return {}
        keep = max(1, math.ceil(self.cfg.hard_fraction * len(new)))
        longest = sorted(new, key=lambda i: (-len(new[i]), i))[:keep]
        return {i: new[i] for i in longest}

    def record(self, resource: int, solved: dict[int, list[int]]) -> list[Action]:
        """Register the presentations solved at a new setting and return the adjusted action list."""
        earlier: set[int] = set()
        for rec in self.history:
            earlier.update(rec.solved)
        new = {i: path for i, path in solved.items() if i not in earlier}
        setting = SettingRecord(resource=resource, solved=dict(solved), new=new, hard=self._hard(new))
        self.history.append(setting)

        window = self.cfg.window
        if len(self.history) < window:
            return list(self.actions)

        first = self.history[-window]
        window_paths = [path for rec in self.history[-window:] for path in rec.new.values()]

        kept: list[Action] = []
        for action in self.supermoves:
            uses = sum(count_occurrences(path, action) for path in window_paths)
            if uses <= self.cfg.removal_floor:
                logger.info("Removing supermove %s (%d uses in window)", action, uses)
            else:
                kept.append(action)

        candidates = self.comparator(list(first.hard.values()), list(setting.hard.values()), self.cfg)
        added = 0
        for candidate in candidates:
            if added >= self.cfg.top_k:
                break
            if candidate.moves in kept:
                continue
            kept.append(candidate.moves)
            added += 1
            logger.info("Adding supermove %s (support %d)", candidate.moves, candidate.support)

        self.actions = self.actions[: self._num_moves] + kept
        return list(self.actions)
