"""MCP tools for topology, neighborhoods and path analytics."""

from __future__ import annotations

import json

from mcp.types import ToolAnnotations

from ac_workbench.analysis.anatomy import anatomy
from ac_workbench.analysis.supermoves import mine_supermoves
from ac_workbench.core.presentation import format_presentation, parse_presentation
from ac_workbench.enums import ResponseFormat, TableFormat
from ac_workbench.models.inputs import AnatomyInput, MineSupermovesInput, NeighborhoodInput, PersistenceTableInput
from ac_workbench.neighborhoods import k_neighborhood
from ac_workbench.server import mcp
from ac_workbench.topology import persistence_table
from ac_workbench.utils.formatters import _format_anatomy, _format_persistence_rows, _format_supermoves
from ac_workbench.utils.jobs import _run_job

_TOOL_MAX_VERTICES = 2_000_000


def _paths(raw: list[str]) -> list[list[int]]:
    return [[int(m) for m in p.split()] for p in raw]


@mcp.tool(
    name="ac_persistence_table",
    annotations=ToolAnnotations(
        title="Persistence Table",
        readOnlyHint=True,
        destructiveHint=False,
        idempotentHint=True,
        openWorldHint=False,
    ),
)
async def ac_persistence_table(params: PersistenceTableInput) -> str:
    """
    Enumerate the component of the trivial presentation up to a total length and report its persistence.

    USE THIS WHEN:
    - You want vertex and edge counts and isolated-component counts per length bound
    - Comparing the prime and classical move sets on small bounds

    DO NOT USE WHEN:
    - lmax is above 10 → use the CLI 'persistence-table' subcommand (tens of millions of vertices)

    COLUMNS:
    - v, e: vertices and edges whose connectivity value is at most lmax
    - ic1, ic2, ic3: isolated components that stay disconnected for 1, 2 or 3 length levels

    Args:
        params: PersistenceTableInput containing lmax (3..10), move_set and response_format

    Returns:
        One row per length 3..lmax
    """
    success, result = await _run_job(persistence_table, params.lmax, params.move_set, _TOOL_MAX_VERTICES)
    if not success:
        return str(result)
    assert isinstance(result, list)

    if params.response_format == ResponseFormat.JSON:
        return json.dumps({"move_set": params.move_set.value, "rows": [r.model_dump() for r in result]}, indent=2)
    if params.response_format == ResponseFormat.CONCISE:
        return _format_persistence_rows(result, TableFormat.TSV)
    title = f"# Persistence ({params.move_set.value} moves, lmax={params.lmax})\n\n"
    return title + _format_persistence_rows(result, TableFormat.MARKDOWN)


@mcp.tool(
    name="ac_neighborhood",
    annotations=ToolAnnotations(
        title="Neighborhood Size",
        readOnlyHint=True,
        destructiveHint=False,
        idempotentHint=True,
        openWorldHint=False,
    ),
)
async def ac_neighborhood(params: NeighborhoodInput) -> str:
    """
    Count the presentations reachable from one presentation within k moves.

    USE THIS WHEN:
    - Comparing how "crowded" the surroundings of two presentations are
    - Sanity-checking neighborhood sizes before a dataset-wide CLI run

    DO NOT USE WHEN:
    - You need k above 3 or a whole dataset → use the CLI 'neighborhoods' subcommand

    NOTES:
    - States are compared by canonical form and relator lengths are unbounded

    Args:
        params: NeighborhoodInput containing presentation, k, move_set and response_format

    Returns:
        The neighborhood size
    """
    seed = parse_presentation(params.presentation)
    success, result = await _run_job(k_neighborhood, seed, params.k, params.move_set)
    if not success:
        return str(result)
    assert isinstance(result, set)
    size = len(result)

    if params.response_format == ResponseFormat.JSON:
        return json.dumps(
            {"presentation": format_presentation(seed), "k": params.k, "move_set": params.move_set.value, "size": size},
            indent=2,
        )
    if params.response_format == ResponseFormat.CONCISE:
        return str(size)
    return f"### {params.k}-step neighborhood of `{format_presentation(seed)}`\n**Size**: {size}"


@mcp.tool(
    name="ac_anatomy",
    annotations=ToolAnnotations(
        title="Path Anatomy",
        readOnlyHint=True,
        destructiveHint=False,
        idempotentHint=True,
        openWorldHint=False,
    ),
)
async def ac_anatomy(params: AnatomyInput) -> str:
    """
    Count how often each of the 12 moves occurs in a set of paths.

    USE THIS WHEN:
    - Characterizing which moves trivialization paths rely on
    - Comparing paths from different solvers

    Args:
        params: AnatomyInput containing paths (each a whitespace-separated move string)

    Returns:
        Per-move count, frequency and bar
    """
    success, result = await _run_job(anatomy, _paths(params.paths))
    if not success:
        return str(result)
    assert not isinstance(result, str)

    if params.response_format == ResponseFormat.JSON:
        return json.dumps(
            {"total": result.total, "counts": result.counts, "frequencies": result.frequencies}, indent=2
        )
    if params.response_format == ResponseFormat.CONCISE:
        return " ".join(f"{m}:{c}" for m, c in result.counts.items())
    header = f"# Move anatomy\n*{len(params.paths)} path(s), {result.total} move(s)*\n\n"
    return header + _format_anatomy(result, TableFormat.MARKDOWN)


@mcp.tool(
    name="ac_mine_supermoves",
    annotations=ToolAnnotations(
        title="Mine Supermoves",
        readOnlyHint=True,
        destructiveHint=False,
        idempotentHint=True,
        openWorldHint=False,
    ),
)
async def ac_mine_supermoves(params: MineSupermovesInput) -> str:
    """
    Find move sequences that recur across paths, ranked by how many paths contain them.

    USE THIS WHEN:
    - Looking for candidate macro actions to add to an RL action space
    - Spotting repeated patterns in hard-instance paths

    Args:
        params: MineSupermovesInput containing paths, max_len, top_k and min_support

    Returns:
        Ranked supermoves with length, support (distinct paths) and total count
    """
    success, result = await _run_job(
        mine_supermoves, _paths(params.paths), params.max_len, params.top_k, params.min_support
    )
    if not success:
        return str(result)
    assert isinstance(result, list)

    if params.response_format == ResponseFormat.JSON:
        return json.dumps({"supermoves": [s.model_dump() for s in result]}, indent=2)
    if params.response_format == ResponseFormat.CONCISE:
        return "\n".join(f"{' '.join(map(str, s.moves))} ({s.support}/{s.count})" for s in result)
    if not result:
        return "# Supermoves\n\nNo sequence reaches the minimum support."
    return "# Supermoves\n\n" + _format_supermoves(result, TableFormat.MARKDOWN)
