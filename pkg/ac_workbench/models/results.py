"""Result models returned by search, verification, topology and analysis runs."""

from __future__ import annotations

from pydantic import BaseModel, Field

from ac_workbench.core.presentation import Presentation
from ac_workbench.enums import MoveSet, SearchAlgorithm

# ============================================================================
# Search
# ============================================================================


class SearchResult(BaseModel):
    """Outcome of one BFS or greedy run."""

    input: Presentation
    solved: bool
    path: list[int] = Field(default_factory=list, description="Move indices, applied left to right")
    nodes_visited: int = 0
    max_length_seen: int = Field(
        default=0, description="Largest presentation length on the path when solved, else over visited states"
    )
    algorithm: SearchAlgorithm = SearchAlgorithm.GREEDY
    move_set: MoveSet = MoveSet.PRIME
    bound: int | None = None
    n: int | None = None

    @property
    def length_increase(self) -> int:
        return self.max_length_seen - self.input.length


class BatchSummary(BaseModel):
    """Aggregate counts for a batch of searches."""

    total: int
    solved: int
    solved_by_n: dict[int, int] = Field(default_factory=dict)
    total_by_n: dict[int, int] = Field(default_factory=dict)
    solved_by_length: dict[int, int] = Field(default_factory=dict)
    total_by_length: dict[int, int] = Field(default_factory=dict)
    max_length_increase: int = 0
    max_path_length: int = 0
    mean_path_length: float = 0.0


# ============================================================================
# Certificates
# ============================================================================


class Certificate(BaseModel):
    """A move sequence claimed to connect two presentations within a length ceiling."""

    start: Presentation
    moves: list[int]
    claimed_terminal: Presentation
    claimed_max_length: int
    move_set: MoveSet = MoveSet.PRIME


class VerificationReport(BaseModel):
    """Replay outcome for a certificate."""

    ok: bool
    terminal: Presentation
    max_length_seen: int
    first_divergence: int | None = Field(
        default=None, description="First step index at which an expectation fails (len(moves) = terminal mismatch)"
    )
    length_profile: list[int] = Field(default_factory=list)
    equivalence_path: list[int] | None = Field(
        default=None, description="Extra moves found by bounded BFS from the terminal to the claimed terminal"
    )


# ============================================================================
# Topology
# ============================================================================


class ComponentRecord(BaseModel):
    """An isolated component: vertices joining the base at one level, connected one level below."""

    conn: int
    birth: int
    members: int
    isolation: int


class PersistenceRow(BaseModel):
    lmax: int
    vertices: int
    edges: int
    ic1: int
    ic2: int
    ic3: int


class ElderBar(BaseModel):
    birth: int
    death: int


# ============================================================================
# Neighborhoods
# ============================================================================


class NeighborhoodStats(BaseModel):
    """Summary statistics of k-step neighborhood sizes."""

    k: int
    sizes: list[int]
    min: int
    max: int
    mean: float
    median: float
    distinct: int
    histograms: dict[int, list[int]] = Field(default_factory=dict, description="bin count → counts")
    bin_edges: dict[int, list[float]] = Field(default_factory=dict)


class BandShare(BaseModel):
    """How many presentations of one label fall in a size band."""

    label: str
    low: int
    high: int
    inside: int
    total: int

    @property
    def share(self) -> float:
        return self.inside / self.total if self.total else 0.0


class NeighborhoodReport(BaseModel):
    stats: NeighborhoodStats
    bands: list[BandShare] = Field(default_factory=list)


# ============================================================================
# Analysis
# ============================================================================


class AnatomyProfile(BaseModel):
    """Move counts over a set of paths."""

    counts: dict[int, int]
    total: int

    @property
    def frequencies(self) -> dict[int, float]:
        return {k: (v / self.total if self.total else 0.0) for k, v in self.counts.items()}


class Supermove(BaseModel):
    """A macro action: a fixed sequence of at least two moves."""

    moves: tuple[int, ...]
    count: int = 0
    support: int = Field(default=0, description="Number of distinct paths containing the sequence")


class LMRecord(BaseModel):
    presentation: Presentation
    seed_index: int
    phase: int
    l_i: int


# ============================================================================
# RL
# ============================================================================


class UpdateStats(BaseModel):
    """Losses from one PPO update."""

    policy_loss: float
    value_loss: float
    entropy: float
    approx_kl: float
    clip_frac: float
    minibatches_run: int
    early_stopped: bool
    learning_rate: float


class TrainingReport(BaseModel):
    updates: int
    env_steps: int
    solved: dict[int, list[int]] = Field(default_factory=dict, description="dataset index → shortest path found")
    history: list[UpdateStats] = Field(default_factory=list)
