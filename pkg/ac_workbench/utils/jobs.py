"""Run library calls for the MCP tools, turning failures into error strings."""

from __future__ import annotations

import asyncio
import logging
from collections.abc import Callable
from typing import Any, TypeVar

from ac_workbench.exceptions import ACWorkbenchError, EnumerationAborted

logger = logging.getLogger(__name__)

T = TypeVar("T")


async def _run_job(fn: Callable[..., T], *args: Any, **kwargs: Any) -> tuple[bool, T | str]:
    """
    Execute a CPU-bound workbench call off the event loop.

    Args:
        fn: Library function to call
        *args: Positional arguments for ``fn``
        **kwargs: Keyword arguments for ``fn``

    Returns:
        Tuple of (success: bool, result | error message)
    """
    try:
        return True, await asyncio.to_thread(fn, *args, **kwargs)
    except EnumerationAborted as e:
        return False, f"Error: {e} (partial: {e.partial})\nTip: Lower lmax or use the CLI for large enumerations."
    except (ACWorkbenchError, ValueError) as e:
        return False, f"Error: {e}"
    except MemoryError:
        return False, "Error: Out of memory\nTip: Lower the node limit or the length bound."
    except Exception as e:
        logger.exception("Tool call %s failed", getattr(fn, "__name__", fn))
        return False, f"Error: Unexpected error - {type(e).__name__}: {str(e)}"
