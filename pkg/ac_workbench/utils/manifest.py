"""Run manifests: what was run, with which settings and inputs."""

from __future__ import annotations

import hashlib
import json
import platform
import time
from collections.abc import Iterable
from datetime import datetime, timezone
from importlib.metadata import PackageNotFoundError, version
from pathlib import Path
from typing import Any

from pydantic import BaseModel, Field

MANIFEST_NAME = "manifest.json"
_TRACKED_PACKAGES = ("ac-workbench", "numpy", "torch", "pydantic", "mcp")


class RunManifest(BaseModel):
    """One manifest per output directory."""

    subcommand: str
    config: dict[str, Any] = Field(default_factory=dict)
    seed: int | None = None
    versions: dict[str, str] = Field(default_factory=dict)
    input_digests: dict[str, str] = Field(default_factory=dict, description="path → sha256 hex digest")
    started_at: str = ""
    wall_time_seconds: float = 0.0


def _package_versions() -> dict[str, str]:
    versions = {"python": platform.python_version()}
    for name in _TRACKED_PACKAGES:
        try:
            versions[name] = version(name)
        except PackageNotFoundError:
            continue
    return versions


def file_digest(path: Path) -> str:
    sha = hashlib.sha256()
    with path.open("rb") as fh:
        for chunk in iter(lambda: fh.read(1 << 20), b""):
            sha.update(chunk)
    return sha.hexdigest()


class ManifestRecorder:
    """Collects manifest fields around a run; ``finish`` stamps the wall time."""

    def __init__(self, subcommand: str, config: dict[str, Any], seed: int | None, inputs: Iterable[Path] = ()) -> None:
        self._start = time.perf_counter()
        self.manifest = RunManifest(
            subcommand=subcommand,
            config=config,
            seed=seed,
            versions=_package_versions(),
            input_digests={str(p): file_digest(p) for p in inputs},
            started_at=datetime.now(timezone.utc).isoformat(timespec="seconds"),
        )

    def finish(self) -> RunManifest:
        self.manifest.wall_time_seconds = round(time.perf_counter() - self._start, 3)
        return self.manifest


def write_manifest(directory: Path, manifest: RunManifest) -> Path:
    directory.mkdir(parents=True, exist_ok=True)
    target = directory / MANIFEST_NAME
    target.write_text(json.dumps(manifest.model_dump(mode="json"), indent=2, sort_keys=True) + "\n")
    return target
