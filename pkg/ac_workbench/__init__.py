"""
Andrews-Curtis workbench.

Tools for balanced presentations of the trivial group on two generators:
AC moves, classical search, certificate replay, persistence of the
trivial component, neighborhood statistics, path analytics and a PPO
agent. The library, the ``ac-workbench`` command line and the MCP server
share one implementation.

The reinforcement-learning stack lives in :mod:`ac_workbench.rl` and is not
imported here, so using the rest of the package does not load torch.
"""

from importlib.metadata import version

__version__ = version("ac-workbench")

# Re-export analysis
from ac_workbench.analysis import (
    ActionSpaceAdapter,
    anatomy,
    detokenize,
    gen_lm_dataset,
    mine_supermoves,
    split_by_seed,
    tokenize,
)

# Re-export certificates
from ac_workbench.certificates import AK3_MOVES, ak3_certificate, reverse_certificate, verify

# Re-export core
from ac_workbench.core import (
    TRIVIAL,
    DatasetEntry,
    MoveId,
    MSIndex,
    Presentation,
    apply_masked,
    apply_move,
    apply_sequence,
    canonicalize,
    free_reduce,
    gen_AK,
    gen_Gordon,
    gen_MS,
    gen_MS_dataset,
    inverse_move,
    is_trivial_state,
    mms_length25,
    neighbors,
    parse_presentation,
)

# Re-export enums
from ac_workbench.enums import MoveSet, ResponseFormat, SearchAlgorithm, SeriesKind, SolveLabel, TableFormat

# Re-export exceptions
from ac_workbench.exceptions import (
    ACWorkbenchError,
    CheckpointError,
    EnumerationAborted,
    PathFormatError,
    PresentationFormatError,
    SeriesParameterError,
    TokenizationError,
    TrainingError,
    WordError,
)

# Re-export models
from ac_workbench.models import (
    AdaptConfig,
    Certificate,
    EnvConfig,
    LMDatasetConfig,
    NeighborhoodConfig,
    PPOConfig,
    SearchConfig,
    SearchResult,
    TopologyConfig,
    VerificationReport,
)
from ac_workbench.neighborhoods import k_neighborhood, neighborhood_report

# Re-export search
from ac_workbench.search import batch_solve, bfs_trivialize, greedy_trivialize, replay

# Re-export MCP server instance
from ac_workbench.server import mcp

# Re-export tools
from ac_workbench.tools import (
    ac_anatomy,
    ac_generate_series,
    ac_mine_supermoves,
    ac_neighborhood,
    ac_persistence_table,
    ac_replay,
    ac_solve,
    ac_verify_certificate,
)
from ac_workbench.topology import enumerate_identity_component, persistence_table, sweep

__all__ = [
    # Version
    "__version__",
    # Enums
    "MoveSet",
    "ResponseFormat",
    "SearchAlgorithm",
    "SeriesKind",
    "SolveLabel",
    "TableFormat",
    # Exceptions
    "ACWorkbenchError",
    "CheckpointError",
    "EnumerationAborted",
    "PathFormatError",
    "PresentationFormatError",
    "SeriesParameterError",
    "TokenizationError",
    "TrainingError",
    "WordError",
    # Core
    "TRIVIAL",
    "Presentation",
    "MoveId",
    "MSIndex",
    "DatasetEntry",
    "free_reduce",
    "canonicalize",
    "is_trivial_state",
    "parse_presentation",
    "apply_move",
    "apply_masked",
    "apply_sequence",
    "inverse_move",
    "neighbors",
    "gen_AK",
    "gen_MS",
    "gen_MS_dataset",
    "gen_Gordon",
    "mms_length25",
    # Models
    "SearchConfig",
    "TopologyConfig",
    "NeighborhoodConfig",
    "EnvConfig",
    "PPOConfig",
    "AdaptConfig",
    "LMDatasetConfig",
    "SearchResult",
    "Certificate",
    "VerificationReport",
    # Search and certificates
    "bfs_trivialize",
    "greedy_trivialize",
    "replay",
    "batch_solve",
    "AK3_MOVES",
    "ak3_certificate",
    "reverse_certificate",
    "verify",
    # Topology and neighborhoods
    "enumerate_identity_component",
    "sweep",
    "persistence_table",
    "k_neighborhood",
    "neighborhood_report",
    # Analysis
    "anatomy",
    "mine_supermoves",
    "ActionSpaceAdapter",
    "tokenize",
    "detokenize",
    "gen_lm_dataset",
    "split_by_seed",
    # Core tools
    "ac_generate_series",
    "ac_solve",
    "ac_replay",
    "ac_verify_certificate",
    # Analysis tools
    "ac_persistence_table",
    "ac_neighborhood",
    "ac_anatomy",
    "ac_mine_supermoves",
    # MCP server instance
    "mcp",
]
