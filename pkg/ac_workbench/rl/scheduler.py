"""Initial-state curriculum and the solved / unsolved registry."""

from __future__ import annotations

import logging
from collections.abc import Sequence

import numpy as np

from ac_workbench.core.presentation import Presentation

logger = logging.getLogger(__name__)


class CurriculumScheduler:
    """Serves dataset indices for environment resets.

    The first pass visits every index once, in dataset order. Afterwards an
    index is drawn from the solved pool with ``solved_probability`` and from
    the unsolved pool otherwise; an empty pool defers to the other.
    """

    def __init__(
        self,
        dataset: Sequence[Presentation],
        solved_probability: float = 0.25,
        rng: np.random.Generator | None = None,
    ) -> None:
        if not dataset:
            raise ValueError("Curriculum needs at least one presentation")
        self.dataset = list(dataset)
        self.solved_probability = solved_probability
        self.rng = rng if rng is not None else np.random.default_rng()
        self.solved: dict[int, list[int]] = {}
        self._unsolved = list(range(len(self.dataset)))
        self._unsolved_pos = {i: i for i in self._unsolved}
        self._cursor = 0

    @property
    def first_pass_done(self) -> bool:
        return self._cursor >= len(self.dataset)

    @property
    def unsolved(self) -> list[int]:
        return sorted(self._unsolved)

    def next(self) -> int:
        if not self.first_pass_done:
            index = self._cursor
            self._cursor += 1
            return index
        solved = list(self.solved)
        if not self._unsolved:
            pool = solved
        elif not solved:
            pool = self._unsolved
        else:
            pool = solved if self.rng.random() < self.solved_probability else self._unsolved
        return pool[int(self.rng.integers(len(pool)))]

    def record(self, index: int, path: Sequence[int]) -> bool:
        """Register a trivializing path; keeps the shortest per index.

        Returns True when the index was not solved before.
        """
        first = index not in self.solved
        if first:
            self._remove_unsolved(index)
            logger.info("Solved presentation %d in %d moves", index, len(path))
        if first or len(path) < len(self.solved[index]):
            self.solved[index] = list(path)
        return first

    def _remove_unsolved(self, index: int) -> None:
        # swap-remove keeps draws O(1)
        pos = self._unsolved_pos.pop(index)
        last = self._unsolved.pop()
        if last != index:
            self._unsolved[pos] = last
            self._unsolved_pos[last] = pos
