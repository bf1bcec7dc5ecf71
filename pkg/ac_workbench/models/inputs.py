"""Input models for the AC workbench MCP tools."""

from __future__ import annotations

from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from ac_workbench.core.moves import NUM_MOVES
from ac_workbench.core.presentation import parse_presentation
from ac_workbench.enums import MoveSet, ResponseFormat, SearchAlgorithm, SeriesKind

_FORMAT_DESCRIPTION = "Output format: 'concise' (one line), 'markdown' (human-readable) or 'json' (all fields)"

# Tool-side caps; the CLI has no such limits.
TOOL_MAX_NODES = 1_000_000
TOOL_MAX_LMAX = 10
TOOL_MAX_K = 3


def _check_presentation(v: str) -> str:
    parse_presentation(v)
    return v


def _check_moves(v: str) -> str:
    for token in v.split():
        if not token.isdigit() or not 1 <= int(token) <= NUM_MOVES:
            raise ValueError(f"Move {token!r} is not an index in 1..{NUM_MOVES}")
    return v


# ============================================================================
# Series and search
# ============================================================================


class GenerateSeriesInput(BaseModel):
    """Input model for generating presentations."""

    model_config = ConfigDict(str_strip_whitespace=True)

    series: SeriesKind = Field(..., description="One of: ak, ms, ms_dataset, mms, gordon")
    n: int | None = Field(default=None, description="AK(n) / MS(n, w) parameter, or n_max for ms_dataset", ge=1)
    w: str | None = Field(default=None, description="MS word over x,y,X,Y with zero x-exponent sum (e.g. 'yxY')")
    gordon: list[int] | None = Field(
        default=None, description="Gordon parameters [m, n, p, q]", min_length=4, max_length=4
    )
    limit: int = Field(default=50, description="Maximum number of presentations returned", ge=1, le=2000)
    response_format: ResponseFormat = Field(default=ResponseFormat.MARKDOWN, description=_FORMAT_DESCRIPTION)

    @model_validator(mode="after")
    def check_parameters(self) -> GenerateSeriesInput:
        if self.series in (SeriesKind.AK, SeriesKind.MS) and self.n is None:
            raise ValueError(f"Series '{self.series.value}' needs n")
        if self.series is SeriesKind.MS and not self.w:
            raise ValueError("Series 'ms' needs w")
        if self.series is SeriesKind.GORDON and self.gordon is None:
            raise ValueError("Series 'gordon' needs gordon=[m, n, p, q]")
        return self


class SolveInput(BaseModel):
    """Input model for searching a trivialization path."""

    model_config = ConfigDict(str_strip_whitespace=True)

    presentation: str = Field(..., description="Presentation as 'r1,r2' (e.g. 'xxYYY,xyxYXY')", min_length=3)
    algorithm: SearchAlgorithm = Field(default=SearchAlgorithm.GREEDY, description="bfs or greedy")
    max_nodes: int = Field(default=100_000, description="Maximum states visited", ge=1, le=TOOL_MAX_NODES)
    max_relator_length: int | None = Field(
        default=None, description="Relator length bound; omit for the automatic bound", ge=1
    )
    move_set: MoveSet = Field(default=MoveSet.PRIME, description="prime or classical")
    response_format: ResponseFormat = Field(default=ResponseFormat.MARKDOWN, description=_FORMAT_DESCRIPTION)

    @field_validator("presentation")
    @classmethod
    def validate_presentation(cls, v: str) -> str:
        return _check_presentation(v)


class ReplayInput(BaseModel):
    """Input model for replaying a move path."""

    model_config = ConfigDict(str_strip_whitespace=True)

    presentation: str = Field(..., description="Start presentation as 'r1,r2'", min_length=3)
    moves: str = Field(..., description="Whitespace-separated move indices 1..12, applied left to right")
    move_set: MoveSet = Field(default=MoveSet.PRIME)
    max_relator_length: int | None = Field(
        default=None, description="Mask moves exceeding this relator length; omit for no masking", ge=1
    )
    response_format: ResponseFormat = Field(default=ResponseFormat.MARKDOWN, description=_FORMAT_DESCRIPTION)

    @field_validator("presentation")
    @classmethod
    def validate_presentation(cls, v: str) -> str:
        return _check_presentation(v)

    @field_validator("moves")
    @classmethod
    def validate_moves(cls, v: str) -> str:
        return _check_moves(v)


class VerifyCertificateInput(BaseModel):
    """Input model for certificate verification. Without ``start`` the built-in AK(3) certificate is checked."""

    model_config = ConfigDict(str_strip_whitespace=True)

    start: str | None = Field(default=None, description="Certificate start presentation 'r1,r2'")
    moves: str | None = Field(default=None, description="Whitespace-separated move indices")
    claimed_terminal: str | None = Field(default=None, description="Claimed end presentation 'r1,r2'")
    claimed_max_length: int | None = Field(default=None, description="Claimed length ceiling", ge=1)
    move_set: MoveSet = Field(default=MoveSet.PRIME)
    response_format: ResponseFormat = Field(default=ResponseFormat.MARKDOWN, description=_FORMAT_DESCRIPTION)

    @field_validator("start", "claimed_terminal")
    @classmethod
    def validate_presentations(cls, v: str | None) -> str | None:
        return None if v is None else _check_presentation(v)

    @field_validator("moves")
    @classmethod
    def validate_moves(cls, v: str | None) -> str | None:
        return None if v is None else _check_moves(v)

    @model_validator(mode="after")
    def check_complete(self) -> VerifyCertificateInput:
        given = [self.start, self.moves, self.claimed_terminal, self.claimed_max_length]
        if any(f is not None for f in given) and any(f is None for f in given):
            raise ValueError("A custom certificate needs start, moves, claimed_terminal and claimed_max_length")
        return self


# ============================================================================
# Topology and neighborhoods
# ============================================================================


class PersistenceTableInput(BaseModel):
    """Input model for the persistence table of the identity component."""

    model_config = ConfigDict(str_strip_whitespace=True)

    lmax: int = Field(default=8, description="Largest presentation length (tool cap 10)", ge=3, le=TOOL_MAX_LMAX)
    move_set: MoveSet = Field(default=MoveSet.PRIME)
    response_format: ResponseFormat = Field(default=ResponseFormat.MARKDOWN, description=_FORMAT_DESCRIPTION)


class NeighborhoodInput(BaseModel):
    """Input model for a k-step neighborhood size."""

    model_config = ConfigDict(str_strip_whitespace=True)

    presentation: str = Field(..., description="Seed presentation 'r1,r2'", min_length=3)
    k: int = Field(default=2, description="Number of moves (tool cap 3)", ge=0, le=TOOL_MAX_K)
    move_set: MoveSet = Field(default=MoveSet.PRIME)
    response_format: ResponseFormat = Field(default=ResponseFormat.MARKDOWN, description=_FORMAT_DESCRIPTION)

    @field_validator("presentation")
    @classmethod
    def validate_presentation(cls, v: str) -> str:
        return _check_presentation(v)


# ============================================================================
# Path analytics
# ============================================================================


class AnatomyInput(BaseModel):
    """Input model for move-frequency profiles."""

    model_config = ConfigDict(str_strip_whitespace=True)

    paths: list[str] = Field(..., description="Paths, each a whitespace-separated move string", max_length=10_000)
    response_format: ResponseFormat = Field(default=ResponseFormat.MARKDOWN, description=_FORMAT_DESCRIPTION)

    @field_validator("paths")
    @classmethod
    def validate_paths(cls, v: list[str]) -> list[str]:
        return [_check_moves(p) for p in v]


class MineSupermovesInput(BaseModel):
    """Input model for supermove mining."""

    model_config = ConfigDict(str_strip_whitespace=True)

    paths: list[str] = Field(..., description="Paths, each a whitespace-separated move string", max_length=10_000)
    max_len: int = Field(default=6, description="Longest n-gram considered", ge=2, le=20)
    top_k: int = Field(default=10, description="Number of supermoves returned", ge=1, le=200)
    min_support: int = Field(default=1, description="Minimum number of distinct paths", ge=1)
    response_format: ResponseFormat = Field(default=ResponseFormat.MARKDOWN, description=_FORMAT_DESCRIPTION)

    @field_validator("paths")
    @classmethod
    def validate_paths(cls, v: list[str]) -> list[str]:
        return [_check_moves(p) for p in v]
