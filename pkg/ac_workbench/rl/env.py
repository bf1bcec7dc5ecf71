"""
Trivialization environment.

States are presentations encoded as two zero-padded signed-integer arrays of
width L. Actions are move sequences: plain prime moves are length-1 tuples
and supermoves are longer ones. An action whose intermediate states break
the relator bound is masked, and stepping with it leaves the presentation
unchanged.
"""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass, field
from typing import NamedTuple

import numpy as np
import numpy.typing as npt

from ac_workbench.core.moves import NUM_MOVES, apply_sequence
from ac_workbench.core.presentation import Presentation, is_trivial_state
from ac_workbench.core.words import from_signed, to_signed
from ac_workbench.enums import MoveSet
from ac_workbench.exceptions import TrainingError
from ac_workbench.models.config import EnvConfig

Action = tuple[int, ...]
PLAIN_ACTIONS: tuple[Action, ...] = tuple((m,) for m in range(1, NUM_MOVES + 1))


def encode(p: Presentation, max_relator_length: int) -> npt.NDArray[np.int8]:
    """Signed letters of r1 then r2, each zero-padded to ``max_relator_length``."""
    if len(p.r1) > max_relator_length or len(p.r2) > max_relator_length:
        raise ValueError(f"Presentation {p} does not fit relator width {max_relator_length}")
    out = np.zeros(2 * max_relator_length, dtype=np.int8)
    out[: len(p.r1)] = to_signed(p.r1)
    out[max_relator_length : max_relator_length + len(p.r2)] = to_signed(p.r2)
    return out


def decode(codes: npt.ArrayLike, max_relator_length: int) -> Presentation:
    arr = np.asarray(codes).tolist()
    return Presentation(from_signed(arr[:max_relator_length]), from_signed(arr[max_relator_length:]))


def observation(p: Presentation, max_relator_length: int) -> npt.NDArray[np.float32]:
    """Network input: the encoding scaled into [-1, 1]."""
    return encode(p, max_relator_length).astype(np.float32) / 2.0


@dataclass
class EnvState:
    presentation: Presentation
    t: int = 0
    path: list[int] = field(default_factory=list)


class StepResult(NamedTuple):
    observation: npt.NDArray[np.float32]
    reward: float
    done: bool
    solved: bool


class ACEnv:
    """One episode at a time over prime moves with a fixed relator bound."""

    def __init__(self, cfg: EnvConfig | None = None, actions: Sequence[Action] = PLAIN_ACTIONS) -> None:
        self.cfg = cfg or EnvConfig()
        self.actions: list[Action] = [tuple(a) for a in actions]
        self.state: EnvState | None = None

    @property
    def num_actions(self) -> int:
        return len(self.actions)

    @property
    def observation_size(self) -> int:
        return 2 * self.cfg.max_relator_length

    def _current(self) -> EnvState:
        if self.state is None:
            raise TrainingError("Environment stepped before reset")
        return self.state

    def reset(self, p: Presentation) -> npt.NDArray[np.float32]:
        self.state = EnvState(presentation=p)
        return observation(p, self.cfg.max_relator_length)

    def action_mask(self, p: Presentation | None = None) -> npt.NDArray[np.bool_]:
        """True where the action keeps every intermediate state within the relator bound."""
        if p is None:
            p = self._current().presentation
        bound = self.cfg.max_relator_length
        mask = np.array(
            [apply_sequence(p, a, MoveSet.PRIME, bound) is not None for a in self.actions], dtype=np.bool_
        )
        if not mask.any():
            raise TrainingError(f"Every action is masked at {p}")
        return mask

    def step(self, action: int) -> StepResult:
        state = self._current()
        if state.t >= self.cfg.horizon:
            raise TrainingError(f"Episode already reached the horizon {self.cfg.horizon}")
        moves = self.actions[action]
        result = apply_sequence(state.presentation, moves, MoveSet.PRIME, self.cfg.max_relator_length)
        if result is not None:
            state.presentation = result
            state.path.extend(moves)
        state.t += 1

        solved = is_trivial_state(state.presentation)
        if solved:
            reward = self.cfg.success_reward
        else:
            reward = -float(min(self.cfg.length_penalty_cap, state.presentation.length))
        done = solved or state.t >= self.cfg.horizon
        return StepResult(observation(state.presentation, self.cfg.max_relator_length), reward, done, solved)
