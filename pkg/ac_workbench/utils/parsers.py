"""Parser helpers for dataset, move-path, label and certificate files."""

from __future__ import annotations

import re
from collections.abc import Iterable, Mapping
from typing import Any

from ac_workbench.core.moves import NUM_MOVES
from ac_workbench.core.presentation import Presentation, parse_presentation
from ac_workbench.core.series import DatasetEntry, MSIndex
from ac_workbench.enums import MoveSet, SolveLabel
from ac_workbench.exceptions import PathFormatError, PresentationFormatError
from ac_workbench.models.results import Certificate


def _content_lines(text: str) -> Iterable[tuple[int, str]]:
    """Non-blank lines with ``#`` comments removed, numbered from 1."""
    for number, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield number, line


def _parse_presentation_lines(text: str) -> list[Presentation]:
    """
    Parse a dataset file: one ``r1,r2`` per line.

    Only the first tab-separated column is read, so the TSV written by
    ``gen-series`` (header included) is accepted as input.

    Raises:
        PresentationFormatError: a line is not a valid presentation (message names the line)
    """
    return [e.presentation for e in _parse_dataset_entries(text)]


def _parse_moves(line: str, number: int = 1) -> list[int]:
    moves: list[int] = []
    for token in line.split():
        try:
            move = int(token)
        except ValueError:
            raise PathFormatError(f"line {number}: {token!r} is not a move index") from None
        if not 1 <= move <= NUM_MOVES:
            raise PathFormatError(f"line {number}: move {move} outside 1..{NUM_MOVES}")
        moves.append(move)
    return moves


def _parse_move_paths(text: str) -> tuple[list[list[int]], MoveSet]:
    """
    Parse a move-path file.

    An optional ``set: prime`` or ``set: classical`` header (default prime) is
    followed by one path per line, whitespace-separated indices 1..12.

    Returns:
        The paths in file order and the move set
    """
    move_set = MoveSet.PRIME
    paths: list[list[int]] = []
    for number, line in _content_lines(text):
        if line.lower().startswith("set:"):
            value = line.split(":", 1)[1].strip().lower()
            try:
                move_set = MoveSet(value)
            except ValueError:
                raise PathFormatError(f"line {number}: unknown move set {value!r}") from None
            continue
        paths.append(_parse_moves(line, number))
    return paths, move_set


def _parse_move_path(text: str) -> tuple[list[int], MoveSet]:
    """Single path; several path lines are concatenated in order."""
    paths, move_set = _parse_move_paths(text)
    return [m for path in paths for m in path], move_set


def _parse_labels(text: str) -> dict[int, SolveLabel]:
    """
    Parse ``index,solved|unsolved`` lines (dataset line indices start at 0).
    """
    labels: dict[int, SolveLabel] = {}
    for number, line in _content_lines(text):
        parts = [p.strip() for p in line.replace("\t", ",").split(",")]
        if len(parts) != 2:
            raise PathFormatError(f"line {number}: expected 'index,label', got {line!r}")
        try:
            labels[int(parts[0])] = SolveLabel(parts[1].lower())
        except ValueError:
            raise PathFormatError(f"line {number}: bad label line {line!r}") from None
    return labels


def _parse_certificate(data: Mapping[str, Any]) -> Certificate:
    """
    Build a certificate from a mapping (JSON or YAML file contents).

    ``start`` and ``claimed_terminal`` are ``r1,r2`` strings; ``moves`` is a
    list of integers or a whitespace-separated string.
    """
    missing = {"start", "moves", "claimed_terminal", "claimed_max_length"} - set(data)
    if missing:
        raise PathFormatError(f"Certificate is missing {', '.join(sorted(missing))}")
    moves = data["moves"]
    if isinstance(moves, str):
        moves = _parse_moves(moves)
    return Certificate(
        start=parse_presentation(str(data["start"])),
        moves=list(moves),
        claimed_terminal=parse_presentation(str(data["claimed_terminal"])),
        claimed_max_length=int(data["claimed_max_length"]),
        move_set=MoveSet(data.get("move_set", MoveSet.PRIME.value)),
    )


_MS_COMMENT = re.compile(r"n=(\d+)\s+w=([xyXY]+)")


def _parse_dataset_entries(text: str) -> list[DatasetEntry]:
    """
    Like :func:`_parse_presentation_lines`, but keeps the ``# n=<n> w=<w>``
    comment that ``gen-series`` writes after MS presentations as the entry index.
    """
    entries: list[DatasetEntry] = []
    for number, raw in enumerate(text.splitlines(), 1):
        body, _, comment = raw.partition("#")
        first = body.split("\t", 1)[0].strip()
        if not first or first == "presentation":
            continue
        try:
            p = parse_presentation(first)
        except PresentationFormatError as exc:
            raise PresentationFormatError(f"line {number}: {exc}") from exc
        match = _MS_COMMENT.search(comment)
        entries.append(DatasetEntry(p, MSIndex(int(match.group(1)), match.group(2)) if match else None))
    return entries
