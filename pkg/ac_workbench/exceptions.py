"""Exception hierarchy for the AC workbench."""

from __future__ import annotations

from typing import Any


class ACWorkbenchError(Exception):
    """Base class for every error raised by the workbench."""


class WordError(ACWorkbenchError, ValueError):
    """A word contains letters outside x, y, X, Y or is not freely reduced."""


class PresentationFormatError(ACWorkbenchError, ValueError):
    """Presentation text does not match `<r1>,<r2>`."""


class SeriesParameterError(ACWorkbenchError, ValueError):
    """Invalid parameters for a presentation series."""


class TokenizationError(ACWorkbenchError, ValueError):
    """Malformed token stream."""


class EnumerationAborted(ACWorkbenchError):
    """Graph enumeration stopped early. Carries the statistics gathered so far."""

    def __init__(self, message: str, partial: dict[str, Any]) -> None:
        super().__init__(message)
        self.partial = partial


class TrainingError(ACWorkbenchError):
    """Unrecoverable state during PPO training (non-finite loss, fully masked state)."""


class CheckpointError(ACWorkbenchError):
    """Checkpoint file is unreadable or does not match the model."""


class PathFormatError(ACWorkbenchError, ValueError):
    """Move-path, label or certificate text cannot be parsed."""
