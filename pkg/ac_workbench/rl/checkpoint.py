"""
Checkpoint files: a versioned JSON header followed by a flat parameter vector.

Layout: ``ACWBCKPT`` magic, u32 format version, u32 header byte length, the
UTF-8 JSON header, then every parameter as little-endian float32 in
``named_parameters`` order. Optimizer state is stored next to it with
``torch.save`` under the ``.optim`` suffix.
"""

from __future__ import annotations

import json
import logging
import struct
from pathlib import Path
from typing import Any

import numpy as np
import torch
import torch.nn as nn

from ac_workbench.exceptions import CheckpointError

logger = logging.getLogger(__name__)

MAGIC = b"ACWBCKPT"
FORMAT_VERSION = 1
_PREFIX = struct.Struct("<8sII")


def save_checkpoint(
    path: Path,
    model: nn.Module,
    optimizer: torch.optim.Optimizer | None = None,
    metadata: dict[str, Any] | None = None,
) -> None:
    params = [(name, p.detach().cpu()) for name, p in model.named_parameters()]
    header = {
        "version": FORMAT_VERSION,
        "dtype": "float32",
        "parameters": [[name, list(t.shape)] for name, t in params],
        "metadata": metadata or {},
    }
    header_bytes = json.dumps(header, sort_keys=True).encode()
    flat = torch.cat([t.reshape(-1) for _, t in params]).to(torch.float32).numpy().astype("<f4")
    path.parent.mkdir(parents=True, exist_ok=True)
    with path.open("wb") as fh:
        fh.write(_PREFIX.pack(MAGIC, FORMAT_VERSION, len(header_bytes)))
        fh.write(header_bytes)
        fh.write(flat.tobytes())
    if optimizer is not None:
        torch.save(optimizer.state_dict(), path.with_suffix(".optim"))
    logger.info("Saved checkpoint %s (%d parameters)", path, flat.shape[0])


def read_checkpoint(path: Path) -> tuple[dict[str, Any], np.ndarray]:
    """Header and flat float32 vector."""
    data = path.read_bytes()
    if len(data) < _PREFIX.size:
        raise CheckpointError(f"{path} is too short to be a checkpoint")
    magic, version, header_len = _PREFIX.unpack_from(data)
    if magic != MAGIC:
        raise CheckpointError(f"{path} is not a checkpoint file")
    if version != FORMAT_VERSION:
        raise CheckpointError(f"Unsupported checkpoint version {version} in {path}")
    start = _PREFIX.size
    header = json.loads(data[start : start + header_len].decode())
    flat = np.frombuffer(data, dtype="<f4", offset=start + header_len)
    return header, flat


def load_checkpoint(path: Path, model: nn.Module, optimizer: torch.optim.Optimizer | None = None) -> dict[str, Any]:
    """Restore parameters (and optimizer state when present); returns the header metadata."""
    header, flat = read_checkpoint(path)
    named = dict(model.named_parameters())
    expected = [[name, list(p.shape)] for name, p in named.items()]
    if header["parameters"] != expected:
        raise CheckpointError(f"Parameter layout in {path} does not match the model")
    offset = 0
    with torch.no_grad():
        for name, shape in header["parameters"]:
            param = named[name]
            size = param.numel()
            chunk = torch.from_numpy(flat[offset : offset + size].astype(np.float32)).reshape(shape)
            param.copy_(chunk.to(param.dtype))
            offset += size
    if offset != flat.shape[0]:
        raise CheckpointError(f"{path} holds {flat.shape[0]} values, model needs {offset}")
    optim_path = path.with_suffix(".optim")
    if optimizer is not None and optim_path.exists():
        optimizer.load_state_dict(torch.load(optim_path))
    metadata: dict[str, Any] = header.get("metadata", {})
    return metadata
