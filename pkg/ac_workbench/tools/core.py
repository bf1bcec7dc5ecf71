"""Core MCP tools: series generation, search, replay and certificates."""

from __future__ import annotations

import json

from mcp.types import ToolAnnotations

from ac_workbench.certificates import ak3_certificate, verify
from ac_workbench.core.presentation import format_presentation, parse_presentation
from ac_workbench.core.series import (
    DatasetEntry,
    MSIndex,
    gen_AK,
    gen_Gordon,
    gen_MS,
    gen_MS_dataset,
    mms_length25,
)
from ac_workbench.enums import ResponseFormat, SeriesKind, TableFormat
from ac_workbench.models.config import SearchConfig
from ac_workbench.models.inputs import GenerateSeriesInput, ReplayInput, SolveInput, VerifyCertificateInput
from ac_workbench.models.results import Certificate
from ac_workbench.search import search, walk
from ac_workbench.server import mcp
from ac_workbench.utils.formatters import (
    _format_presentations_concise,
    _format_profile,
    _format_search_concise,
    _format_search_markdown,
    _format_series,
    _format_verification_concise,
    _format_verification_markdown,
)
from ac_workbench.utils.jobs import _run_job


def _series_entries(params: GenerateSeriesInput) -> list[DatasetEntry]:
    if params.series is SeriesKind.AK:
        assert params.n is not None
        return [DatasetEntry(gen_AK(params.n))]
    if params.series is SeriesKind.MS:
        assert params.n is not None and params.w is not None
        return [DatasetEntry(gen_MS(params.n, params.w), MSIndex(params.n, params.w))]
    if params.series is SeriesKind.MS_DATASET:
        return gen_MS_dataset(n_max=params.n or 7)
    if params.series is SeriesKind.MMS:
        return [DatasetEntry(mms_length25())]
    assert params.gordon is not None
    m, n, p, q = params.gordon
    return [DatasetEntry(gen_Gordon(m, n, p, q))]


@mcp.tool(
    name="ac_generate_series",
    annotations=ToolAnnotations(
        title="Generate Presentations",
        readOnlyHint=True,
        destructiveHint=False,
        idempotentHint=True,
        openWorldHint=False,
    ),
)
async def ac_generate_series(params: GenerateSeriesInput) -> str:
    """
    Generate balanced two-generator presentations from a known family.

    USE THIS WHEN:
    - You need AK(n), MS(n, w), the Miller-Schupp dataset, the length-25 AK(3) companion, or a Gordon presentation
    - You want input presentations for ac_solve, ac_replay or ac_neighborhood

    DO NOT USE WHEN:
    - You already have the presentation text → pass it directly to ac_solve

    SERIES:
    - ak: needs n >= 2, e.g. AK(3) = xxxYYYY,xyxYXY
    - ms: needs n >= 1 and w with zero x-exponent sum, e.g. n=1, w="yx"
    - ms_dataset: all MS presentations with n <= n (default 7) and |w| <= 7, one per rotation class of w
    - mms: the length-25 presentation AC-equivalent to AK(3)
    - gordon: needs gordon=[m, n, p, q]

    Args:
        params: GenerateSeriesInput containing series, its parameters, limit and response_format

    Returns:
        Presentations as 'r1,r2' lines, a markdown table, or JSON
    """
    success, result = await _run_job(_series_entries, params)
    if not success:
        return f"{result}\nTip: Check the series parameters."
    assert isinstance(result, list)
    total = len(result)
    entries = result[: params.limit]

    if params.response_format == ResponseFormat.JSON:
        return json.dumps(
            {
                "total": total,
                "count": len(entries),
                "presentations": [
                    {
                        "presentation": format_presentation(e.presentation),
                        "n": e.index.n if e.index else None,
                        "w": e.index.w if e.index else None,
                        "length": e.presentation.length,
                    }
                    for e in entries
                ],
            },
            indent=2,
        )

    if params.response_format == ResponseFormat.CONCISE:
        return _format_presentations_concise([e.presentation for e in entries])

    header = f"# Series {params.series.value}\n*{len(entries)} of {total} presentation(s)*\n\n"
    return header + _format_series(entries, TableFormat.MARKDOWN)


@mcp.tool(
    name="ac_solve",
    annotations=ToolAnnotations(
        title="Search Trivialization",
        readOnlyHint=True,
        destructiveHint=False,
        idempotentHint=True,
        openWorldHint=False,
    ),
)
async def ac_solve(params: SolveInput) -> str:
    """
    Search for a sequence of moves that turns a presentation into the trivial one.

    USE THIS WHEN:
    - Checking whether a presentation is trivialized by BFS or greedy search within a node budget
    - You need an explicit move path (indices 1..12) for replay

    DO NOT USE WHEN:
    - You already have a path and want to check it → use ac_replay or ac_verify_certificate

    NOTES:
    - greedy explores shortest presentations first and usually needs far fewer nodes than bfs
    - the automatic relator bound is twice the longest relator plus 2
    - an unsolved answer only means the budget was exhausted

    Args:
        params: SolveInput containing presentation, algorithm, max_nodes, max_relator_length, move_set

    Returns:
        Search outcome with path, nodes visited and largest presentation length
    """
    cfg = SearchConfig(
        algorithm=params.algorithm,
        max_nodes=params.max_nodes,
        max_relator_length=params.max_relator_length or "auto",
        move_set=params.move_set,
    )
    success, result = await _run_job(search, parse_presentation(params.presentation), cfg)
    if not success:
        return str(result)
    assert not isinstance(result, str)

    if params.response_format == ResponseFormat.JSON:
        return json.dumps(result.model_dump(mode="json"), indent=2)
    if params.response_format == ResponseFormat.CONCISE:
        return _format_search_concise(result)
    return _format_search_markdown(result)


@mcp.tool(
    name="ac_replay",
    annotations=ToolAnnotations(
        title="Replay Move Path",
        readOnlyHint=True,
        destructiveHint=False,
        idempotentHint=True,
        openWorldHint=False,
    ),
)
async def ac_replay(params: ReplayInput) -> str:
    """
    Apply a move path to a presentation and report every intermediate length.

    USE THIS WHEN:
    - Following a path returned by ac_solve or read from a path file
    - Inspecting how long presentations get along a path

    DO NOT USE WHEN:
    - You want pass/fail against a claimed terminal and ceiling → use ac_verify_certificate

    Args:
        params: ReplayInput containing presentation, moves, move_set and optional max_relator_length

    Returns:
        Terminal presentation, largest length, and the length profile
    """
    start = parse_presentation(params.presentation)
    moves = [int(m) for m in params.moves.split()]
    success, result = await _run_job(walk, start, moves, params.move_set, params.max_relator_length)
    if not success:
        return str(result)
    assert isinstance(result, tuple)
    terminal, profile = result

    if params.response_format == ResponseFormat.JSON:
        return json.dumps(
            {
                "start": format_presentation(start),
                "terminal": format_presentation(terminal),
                "moves": moves,
                "max_length": max(profile),
                "length_profile": profile,
            },
            indent=2,
        )
    if params.response_format == ResponseFormat.CONCISE:
        return f"{format_presentation(terminal)} after {len(moves)} moves, max len {max(profile)}"
    lines = [
        f"### Replay of {len(moves)} moves from `{format_presentation(start)}`",
        f"**Terminal**: `{format_presentation(terminal)}` | **Max length**: {max(profile)}",
        "",
        _format_profile(profile, TableFormat.MARKDOWN),
    ]
    return "\n".join(lines)


@mcp.tool(
    name="ac_verify_certificate",
    annotations=ToolAnnotations(
        title="Verify Certificate",
        readOnlyHint=True,
        destructiveHint=False,
        idempotentHint=True,
        openWorldHint=False,
    ),
)
async def ac_verify_certificate(params: VerifyCertificateInput) -> str:
    """
    Replay a certificate and check its terminal presentation and length ceiling.

    USE THIS WHEN:
    - Confirming the built-in 53-move path from the length-25 presentation to AK(3) (no arguments)
    - Checking a user-supplied path against a claimed terminal and maximum length

    DO NOT USE WHEN:
    - You only need the length profile → use ac_replay

    NOTES:
    - The replay applies moves without masking
    - When the terminal differs, a bounded BFS toward the claimed terminal is reported separately;
      the certificate still fails

    Args:
        params: VerifyCertificateInput; leave all certificate fields empty for the built-in one

    Returns:
        OK/FAILED with terminal, maximum length, first divergence and length profile
    """
    if params.start is None:
        cert = ak3_certificate()
    else:
        assert params.moves is not None and params.claimed_terminal is not None
        assert params.claimed_max_length is not None
        cert = Certificate(
            start=parse_presentation(params.start),
            moves=[int(m) for m in params.moves.split()],
            claimed_terminal=parse_presentation(params.claimed_terminal),
            claimed_max_length=params.claimed_max_length,
            move_set=params.move_set,
        )
    success, result = await _run_job(verify, cert)
    if not success:
        return str(result)
    assert not isinstance(result, str)

    if params.response_format == ResponseFormat.JSON:
        return json.dumps(result.model_dump(mode="json"), indent=2)
    if params.response_format == ResponseFormat.CONCISE:
        return _format_verification_concise(result)
    return _format_verification_markdown(result)
