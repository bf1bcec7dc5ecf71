"""MCP tool definitions for the AC workbench."""

# Import all tools to register them with the MCP server
from ac_workbench.tools.analysis import (
    ac_anatomy,
    ac_mine_supermoves,
    ac_neighborhood,
    ac_persistence_table,
)
from ac_workbench.tools.core import (
    ac_generate_series,
    ac_replay,
    ac_solve,
    ac_verify_certificate,
)

__all__ = [
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
]
