"""Utility functions for the AC workbench."""

from ac_workbench.utils.formatters import (
    _format_anatomy,
    _format_batch_summary,
    _format_dataset_file,
    _format_neighborhood_report,
    _format_persistence_rows,
    _format_presentations_concise,
    _format_profile,
    _format_search_concise,
    _format_search_markdown,
    _format_search_rows,
    _format_series,
    _format_supermoves,
    _format_table,
    _format_verification_concise,
    _format_verification_markdown,
    format_move_path,
)
from ac_workbench.utils.jobs import _run_job
from ac_workbench.utils.manifest import ManifestRecorder, RunManifest, file_digest, write_manifest
from ac_workbench.utils.parsers import (
    _parse_certificate,
    _parse_dataset_entries,
    _parse_labels,
    _parse_move_path,
    _parse_move_paths,
    _parse_presentation_lines,
)

__all__ = [
    "format_move_path",
    "_format_table",
    "_format_series",
    "_format_dataset_file",
    "_format_presentations_concise",
    "_format_search_concise",
    "_format_search_markdown",
    "_format_search_rows",
    "_format_batch_summary",
    "_format_verification_concise",
    "_format_verification_markdown",
    "_format_profile",
    "_format_persistence_rows",
    "_format_neighborhood_report",
    "_format_anatomy",
    "_format_supermoves",
    "_parse_presentation_lines",
    "_parse_dataset_entries",
    "_parse_move_path",
    "_parse_move_paths",
    "_parse_labels",
    "_parse_certificate",
    "_run_job",
    "RunManifest",
    "ManifestRecorder",
    "file_digest",
    "write_manifest",
]
