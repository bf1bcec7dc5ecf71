"""Configuration models for search, topology, neighborhoods, RL and dataset generation."""

from __future__ import annotations

from typing import Literal

from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from ac_workbench.core.moves import LengthBound, auto_bound, max_relator_bound
from ac_workbench.core.presentation import Presentation
from ac_workbench.core.series import MSIndex
from ac_workbench.enums import MoveSet, SearchAlgorithm

# ============================================================================
# Search
# ============================================================================


class SearchConfig(BaseModel):
    """Node cap, relator bound and move set for BFS / greedy search."""

    model_config = ConfigDict(frozen=True)

    algorithm: SearchAlgorithm = Field(default=SearchAlgorithm.GREEDY, description="bfs or greedy")
    max_nodes: int = Field(default=1_000_000, description="Maximum number of states to visit", ge=1)
    max_relator_length: int | Literal["auto", "unbounded"] = Field(
        default="auto",
        description="Relator length bound: an integer, 'auto' (MS formula or 2·longest+2), or 'unbounded'",
    )
    move_set: MoveSet = Field(default=MoveSet.PRIME, description="classical or prime")

    @field_validator("max_relator_length")
    @classmethod
    def validate_bound(cls, v: int | str) -> int | str:
        if isinstance(v, int) and v < 1:
            raise ValueError("max_relator_length must be positive")
        return v

    def resolve_bound(self, p: Presentation, index: MSIndex | None = None) -> LengthBound:
        """Concrete relator bound for one input presentation."""
        if self.max_relator_length == "unbounded":
            return None
        if self.max_relator_length == "auto":
            bound = max_relator_bound(index.n, index.w) if index is not None else auto_bound(p)
            return max(bound, p.max_relator_length)
        return self.max_relator_length


# ============================================================================
# Topology and neighborhoods
# ============================================================================


class TopologyConfig(BaseModel):
    """Persistence-table run settings."""

    lmax: int = Field(default=13, description="Largest presentation length enumerated", ge=3)
    move_set: MoveSet = Field(default=MoveSet.PRIME)
    allow_large: bool = Field(default=False, description="Permit lmax above 13 (tens of millions of vertices)")
    max_vertices: int | None = Field(default=None, description="Abort enumeration past this many vertices", ge=1)
    elder_bars: bool = Field(default=False, description="Also compute elder-rule H0 bars")

    @model_validator(mode="after")
    def check_lmax(self) -> TopologyConfig:
        if self.lmax > 13 and not self.allow_large:
            raise ValueError("lmax > 13 needs allow_large=True")
        return self


class NeighborhoodConfig(BaseModel):
    """k-step neighborhood run settings."""

    k: int = Field(default=5, description="Number of moves", ge=0, le=8)
    move_set: MoveSet = Field(default=MoveSet.PRIME)


# ============================================================================
# Reinforcement learning
# ============================================================================

GLOBAL_MAX_RELATOR_LENGTH = 36


class EnvConfig(BaseModel):
    """Environment settings for the trivialization MDP."""

    horizon: int = Field(default=200, description="Maximum episode length T", ge=1)
    max_relator_length: int = Field(
        default=GLOBAL_MAX_RELATOR_LENGTH, description="Global relator bound L (net input is 2L wide)", ge=1
    )
    success_reward: float = Field(default=1000.0)
    length_penalty_cap: int = Field(default=10, description="Step reward is -min(cap, length)", ge=1)
    solved_probability: float = Field(
        default=0.25, description="Chance of sampling from the solved pool after the first pass", ge=0.0, le=1.0
    )


class PPOConfig(BaseModel):
    """PPO hyperparameters."""

    actors: int = Field(default=28, ge=1)
    rollout_length: int = Field(default=200, description="Steps per actor per update (T')", ge=1)
    lr: float = Field(default=1e-4, gt=0.0)
    anneal_lr: bool = Field(default=True, description="Linear decay of the learning rate to 0")
    epochs: int = Field(default=1, ge=1)
    minibatches: int = Field(default=4, ge=1)
    minibatch_size: int = Field(default=1400, ge=1)
    gamma: float = Field(default=0.999, ge=0.0, le=1.0)
    gae_lambda: float = Field(default=0.95, ge=0.0, le=1.0)
    clip_coef: float = Field(default=0.2, gt=0.0)
    value_coef: float = Field(default=0.5, ge=0.0)
    entropy_coef: float = Field(default=0.01, ge=0.0)
    adam_eps: float = Field(default=1e-5, gt=0.0)
    target_kl: float | None = Field(default=0.01, description="Skip remaining minibatches above this KL")
    max_grad_norm: float = Field(default=0.5, gt=0.0)
    clip_value_loss: bool = Field(default=True)
    norm_advantages: bool = Field(default=True)
    hidden_size: int = Field(default=512, ge=1)
    hidden_layers: int = Field(default=2, ge=1)

    @model_validator(mode="after")
    def check_batch_split(self) -> PPOConfig:
        if self.actors * self.rollout_length != self.minibatches * self.minibatch_size:
            raise ValueError(
                f"actors·rollout_length ({self.actors * self.rollout_length}) must equal "
                f"minibatches·minibatch_size ({self.minibatches * self.minibatch_size})"
            )
        return self

    @property
    def batch_size(self) -> int:
        return self.actors * self.rollout_length


# ============================================================================
# Analysis
# ============================================================================


class AdaptConfig(BaseModel):
    """Action-space adaptation thresholds."""

    window: int = Field(default=2, description="Number of resource settings compared (n)", ge=1)
    hard_fraction: float = Field(
        default=0.1, description="Share of newly solved instances, longest paths first, kept as hard", gt=0.0, le=1.0
    )
    max_len: int = Field(default=6, description="Longest supermove considered", ge=2)
    top_k: int = Field(default=4, description="Supermoves added per adaptation", ge=0)
    min_support: int = Field(default=3, description="Distinct paths a supermove must occur in", ge=1)
    removal_floor: int = Field(default=0, description="Remove added supermoves used at most this often", ge=0)


class LMDatasetConfig(BaseModel):
    """Phased random-walk dataset settings."""

    n_phases: int = Field(default=128, ge=1)
    per_phase: int = Field(default=12, description="Presentations emitted per phase (m)", ge=1)
    moves_per_sample: int = Field(default=1000, description="Random prime moves per emitted presentation (N)", ge=1)
    l_max: int = Field(default=128, description="Final relator bound", ge=2)
    validation_fraction: float = Field(default=0.1, ge=0.0, lt=1.0)
