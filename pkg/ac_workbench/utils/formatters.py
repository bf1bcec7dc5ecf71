"""Formatting utilities for presentations, reports and tables."""

from __future__ import annotations

from collections.abc import Sequence

from ac_workbench.core.presentation import Presentation, format_presentation
from ac_workbench.core.series import DatasetEntry
from ac_workbench.enums import MoveSet, TableFormat
from ac_workbench.models.results import (
    AnatomyProfile,
    BatchSummary,
    NeighborhoodReport,
    PersistenceRow,
    SearchResult,
    Supermove,
    VerificationReport,
)

_BAR_WIDTH = 40


def format_move_path(path: Sequence[int], move_set: MoveSet = MoveSet.PRIME) -> str:
    """
    Move-path file contents.

    Output:
    set: prime
    9 7 4 8 11
    """
    return f"set: {move_set.value}\n{' '.join(str(m) for m in path)}\n"


def _format_table(headers: Sequence[str], rows: Sequence[Sequence[object]], fmt: TableFormat) -> str:
    """Tab-separated or markdown table with a header row."""
    cells = [[str(c) for c in row] for row in rows]
    if fmt is TableFormat.TSV:
        return "\n".join("\t".join(line) for line in [list(headers), *cells])
    lines = ["| " + " | ".join(headers) + " |", "|" + "|".join("---" for _ in headers) + "|"]
    lines.extend("| " + " | ".join(row) + " |" for row in cells)
    return "\n".join(lines)


# ============================================================================
# Series
# ============================================================================


def _format_series(entries: Sequence[DatasetEntry], fmt: TableFormat = TableFormat.TSV) -> str:
    """
    One presentation per row; MS entries also carry n and w.

    Output (tsv):
    presentation	n	w	length
    XyxYY,Xyx	1	yx	8
    """
    rows = [
        [
            format_presentation(e.presentation),
            e.index.n if e.index else "",
            e.index.w if e.index else "",
            e.presentation.length,
        ]
        for e in entries
    ]
    return _format_table(["presentation", "n", "w", "length"], rows, fmt)


def _format_dataset_file(entries: Sequence[DatasetEntry], title: str | None = None) -> str:
    """
    Presentation-file text, MS entries tagged with their index.

    Output:
    # ms dataset
    XyxYY,Xyx	# n=1 w=yx
    """
    lines = [f"# {title}"] if title else []
    for e in entries:
        text = format_presentation(e.presentation)
        lines.append(f"{text}\t# n={e.index.n} w={e.index.w}" if e.index else text)
    return "\n".join(lines)


def _format_presentations_concise(presentations: Sequence[Presentation]) -> str:
    return "\n".join(format_presentation(p) for p in presentations)


# ============================================================================
# Search
# ============================================================================


def _format_search_concise(result: SearchResult) -> str:
    """
    Output: "solved x,yx in 1 moves (nodes 1, max len 3): 3"
    """
    head = format_presentation(result.input)
    if not result.solved:
        return f"unsolved {head} (nodes {result.nodes_visited}, max len {result.max_length_seen})"
    moves = " ".join(str(m) for m in result.path)
    return (
        f"solved {head} in {len(result.path)} moves "
        f"(nodes {result.nodes_visited}, max len {result.max_length_seen}): {moves}"
    )


def _format_search_markdown(result: SearchResult) -> str:
    """Format a single search result as markdown."""
    status = "Solved" if result.solved else "Not solved"
    lines = [
        f"### {status}: `{format_presentation(result.input)}`",
        f"**Algorithm**: {result.algorithm.value} | **Moves**: {result.move_set.value} | "
        f"**Bound**: {result.bound if result.bound is not None else 'none'}",
        f"**Nodes visited**: {result.nodes_visited} | **Max length seen**: {result.max_length_seen}",
    ]
    if result.solved:
        lines.append(f"**Path** ({len(result.path)} moves): `{' '.join(str(m) for m in result.path)}`")
        lines.append(f"**Length increase**: {result.length_increase}")
    return "\n".join(lines)


def _format_search_rows(results: Sequence[SearchResult], fmt: TableFormat = TableFormat.TSV) -> str:
    rows = [
        [
            format_presentation(r.input),
            r.n if r.n is not None else "",
            "solved" if r.solved else "unsolved",
            len(r.path) if r.solved else "",
            r.nodes_visited,
            r.max_length_seen,
            " ".join(str(m) for m in r.path),
        ]
        for r in results
    ]
    return _format_table(["presentation", "n", "status", "path_length", "nodes", "max_length", "path"], rows, fmt)


def _format_batch_summary(summary: BatchSummary, fmt: TableFormat = TableFormat.TSV) -> str:
    """
    Solved counts per n and per initial length, then path statistics.

    Output (markdown):
    ## Solved 533/1190
    | n | solved | total |
    ...
    """
    by_n = [[n, summary.solved_by_n.get(n, 0), total] for n, total in summary.total_by_n.items()]
    by_len = [[k, summary.solved_by_length.get(k, 0), total] for k, total in summary.total_by_length.items()]
    stats = [
        ["max_length_increase", summary.max_length_increase],
        ["max_path_length", summary.max_path_length],
        ["mean_path_length", f"{summary.mean_path_length:.2f}"],
    ]
    title = f"Solved {summary.solved}/{summary.total}"
    parts = [f"## {title}" if fmt is TableFormat.MARKDOWN else f"# {title}"]
    if by_n:
        parts.append(_format_table(["n", "solved", "total"], by_n, fmt))
    parts.append(_format_table(["length", "solved", "total"], by_len, fmt))
    parts.append(_format_table(["statistic", "value"], stats, fmt))
    return "\n\n".join(parts)


# ============================================================================
# Certificates
# ============================================================================


def _format_verification_concise(report: VerificationReport) -> str:
    """
    Output: "OK terminal=xxxYYYY,xyxYXY max_len=25"
    """
    status = "OK" if report.ok else "FAILED"
    line = f"{status} terminal={format_presentation(report.terminal)} max_len={report.max_length_seen}"
    if report.first_divergence is not None:
        line += f" first_divergence={report.first_divergence}"
    if report.equivalence_path is not None:
        line += f" equivalence_path={' '.join(str(m) for m in report.equivalence_path) or '(empty)'}"
    return line


def _format_verification_markdown(report: VerificationReport) -> str:
    lines = [
        f"### Certificate {'verified' if report.ok else 'FAILED'}",
        f"**Terminal**: `{format_presentation(report.terminal)}`",
        f"**Max length seen**: {report.max_length_seen}",
    ]
    if report.first_divergence is not None:
        lines.append(f"**First divergence**: step {report.first_divergence}")
    if report.equivalence_path is not None:
        lines.append(f"**Equivalence path to claimed terminal**: `{' '.join(map(str, report.equivalence_path))}`")
    lines.append(f"**Length profile**: {' '.join(str(v) for v in report.length_profile)}")
    return "\n".join(lines)


def _format_profile(profile: Sequence[int], fmt: TableFormat = TableFormat.TSV) -> str:
    return _format_table(["step", "length"], list(enumerate(profile)), fmt)


# ============================================================================
# Topology
# ============================================================================


def _format_persistence_rows(rows: Sequence[PersistenceRow], fmt: TableFormat = TableFormat.TSV) -> str:
    """
    Output (tsv):
    lmax	v	e	ic1	ic2	ic3
    3	36	40	3	0	0
    """
    body = [[r.lmax, r.vertices, r.edges, r.ic1, r.ic2, r.ic3] for r in rows]
    return _format_table(["lmax", "v", "e", "ic1", "ic2", "ic3"], body, fmt)


# ============================================================================
# Neighborhoods
# ============================================================================


def _format_neighborhood_report(report: NeighborhoodReport, fmt: TableFormat = TableFormat.TSV) -> str:
    """Per-presentation sizes, then a summary block, histograms and band shares."""
    stats = report.stats
    parts = [_format_table(["index", "size"], list(enumerate(stats.sizes)), fmt)]
    summary = [
        ["k", stats.k],
        ["min", stats.min],
        ["max", stats.max],
        ["mean", f"{stats.mean:.2f}"],
        ["median", f"{stats.median:.1f}"],
        ["distinct", stats.distinct],
    ]
    parts.append(_format_table(["statistic", "value"], summary, fmt))
    for bins, counts in stats.histograms.items():
        edges = stats.bin_edges.get(bins, [])
        rows = [[f"{edges[i]:.0f}", f"{edges[i + 1]:.0f}", c] for i, c in enumerate(counts)] if edges else []
        parts.append(_format_table([f"low ({bins} bins)", "high", "count"], rows, fmt))
    if report.bands:
        rows = [[b.label, f"{b.low}-{b.high}", b.inside, b.total, f"{b.share:.3f}"] for b in report.bands]
        parts.append(_format_table(["label", "band", "inside", "total", "share"], rows, fmt))
    return "\n\n".join(parts)


# ============================================================================
# Analysis
# ============================================================================


def _format_anatomy(profile: AnatomyProfile, fmt: TableFormat = TableFormat.TSV) -> str:
    """
    Bar table of move frequencies.

    Output (tsv):
    move	count	frequency	bar
    5	12	0.226	#########
    """
    peak = max(profile.counts.values(), default=0)
    freqs = profile.frequencies
    rows = [
        [move, count, f"{freqs[move]:.3f}", "#" * (round(_BAR_WIDTH * count / peak) if peak else 0)]
        for move, count in profile.counts.items()
    ]
    return _format_table(["move", "count", "frequency", "bar"], rows, fmt)


def _format_supermoves(supermoves: Sequence[Supermove], fmt: TableFormat = TableFormat.TSV) -> str:
    rows = [
        [rank, " ".join(map(str, s.moves)), len(s.moves), s.support, s.count] for rank, s in enumerate(supermoves, 1)
    ]
    return _format_table(["rank", "moves", "length", "support", "count"], rows, fmt)
