"""Enums for the AC workbench."""

from enum import Enum


class ResponseFormat(str, Enum):
    """Output format for tool responses."""

    CONCISE = "concise"  # One line per record, for chaining
    MARKDOWN = "markdown"  # Human-readable (default)
    JSON = "json"  # Machine-readable with all fields


class TableFormat(str, Enum):
    """Output format for CLI tables."""

    TSV = "tsv"
    MARKDOWN = "markdown"


class MoveSet(str, Enum):
    """The two 12-move sets acting on 2-generator presentations."""

    CLASSICAL = "classical"  # concatenation, inversion, conjugation
    PRIME = "prime"  # h1..h12


class SearchAlgorithm(str, Enum):
    """Classical search strategies for trivialization."""

    BFS = "bfs"
    GREEDY = "greedy"


class SolveLabel(str, Enum):
    """Outcome label attached to a dataset presentation."""

    SOLVED = "solved"
    UNSOLVED = "unsolved"


class SeriesKind(str, Enum):
    """Presentation families the generator knows."""

    AK = "ak"
    MS = "ms"
    MS_DATASET = "ms_dataset"
    MMS = "mms"  # the length-25 AK(3) companion
    GORDON = "gordon"
