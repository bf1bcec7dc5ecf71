"""Pydantic models for the AC workbench."""

from ac_workbench.models.config import (
    GLOBAL_MAX_RELATOR_LENGTH,
    AdaptConfig,
    EnvConfig,
    LMDatasetConfig,
    NeighborhoodConfig,
    PPOConfig,
    SearchConfig,
    TopologyConfig,
)
from ac_workbench.models.inputs import (
    AnatomyInput,
    GenerateSeriesInput,
    MineSupermovesInput,
    NeighborhoodInput,
    PersistenceTableInput,
    ReplayInput,
    SolveInput,
    VerifyCertificateInput,
)
from ac_workbench.models.results import (
    AnatomyProfile,
    BandShare,
    BatchSummary,
    Certificate,
    ComponentRecord,
    ElderBar,
    LMRecord,
    NeighborhoodReport,
    NeighborhoodStats,
    PersistenceRow,
    SearchResult,
    Supermove,
    TrainingReport,
    UpdateStats,
    VerificationReport,
)

__all__ = [
    # Configuration
    "GLOBAL_MAX_RELATOR_LENGTH",
    "SearchConfig",
    "TopologyConfig",
    "NeighborhoodConfig",
    "EnvConfig",
    "PPOConfig",
    "AdaptConfig",
    "LMDatasetConfig",
    # Tool input models
    "GenerateSeriesInput",
    "SolveInput",
    "ReplayInput",
    "VerifyCertificateInput",
    "PersistenceTableInput",
    "NeighborhoodInput",
    "AnatomyInput",
    "MineSupermovesInput",
    # Results
    "SearchResult",
    "BatchSummary",
    "Certificate",
    "VerificationReport",
    "ComponentRecord",
    "PersistenceRow",
    "ElderBar",
    "NeighborhoodStats",
    "BandShare",
    "NeighborhoodReport",
    "AnatomyProfile",
    "Supermove",
    "LMRecord",
    "UpdateStats",
    "TrainingReport",
]
