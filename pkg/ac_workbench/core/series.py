"""
Presentation series: Akbulut-Kirby, Miller-Schupp, Gordon, and the length-25
presentation that starts the AK(3) certificate.
"""

from __future__ import annotations

import logging
from typing import NamedTuple

from ac_workbench.core.presentation import Presentation
from ac_workbench.core.words import (
    commutator,
    cyclic_reduce,
    exponent_sum,
    free_reduce,
    is_freely_reduced,
    iter_reduced_words,
    min_rotation,
    power,
    reduced_product,
    validate_word,
)
from ac_workbench.exceptions import SeriesParameterError

logger = logging.getLogger(__name__)

MS_PER_N = 170


class MSIndex(NamedTuple):
    """Parameters (n, w) of a Miller-Schupp presentation."""

    n: int
    w: str


class DatasetEntry(NamedTuple):
    """A dataset presentation, with its MS index when it has one."""

    presentation: Presentation
    index: MSIndex | None = None


def gen_AK(n: int) -> Presentation:  # noqa: N802
    """Akbulut-Kirby AK(n): (xⁿ Y^{n+1}, xyxYXY)."""
    if n < 2:
        raise SeriesParameterError(f"AK(n) requires n >= 2, got {n}")
    return Presentation("x" * n + "Y" * (n + 1), "xyxYXY")


def _check_ms_word(w: str) -> None:
    try:
        validate_word(w)
    except ValueError as e:
        raise SeriesParameterError(str(e)) from None
    if not w:
        raise SeriesParameterError("w must be non-empty")
    if not is_freely_reduced(w):
        raise SeriesParameterError(f"w={w!r} is not freely reduced")
    if exponent_sum(w, "x") != 0:
        raise SeriesParameterError(f"w={w!r} has x-exponent sum {exponent_sum(w, 'x')}, expected 0")


def gen_MS(n: int, w: str) -> Presentation:  # noqa: N802
    """Miller-Schupp MS(n, w): (X yⁿ x Y^{n+1}, X·w)."""
    if n < 1:
        raise SeriesParameterError(f"MS(n, w) requires n >= 1, got {n}")
    _check_ms_word(w)
    return Presentation("X" + "y" * n + "x" + "Y" * (n + 1), reduced_product("X", w))


def rotation_class(w: str) -> str:
    """Dedup key for MS words: smallest rotation of the cyclically reduced X·w."""
    return min_rotation(cyclic_reduce(reduced_product("X", w)))


def ms_words(wlen_max: int = 7) -> list[str]:
    """One word per rotation class of X·w, |w| <= wlen_max, zero x-exponent sum.

    The first word met in shortlex order labels its class, so the class of
    ``YXyxy`` is labelled ``yxyXY``. Words with X·w conjugate to X itself are
    skipped: the second relator would be a generator.
    """
    seen: set[str] = set()
    words: list[str] = []
    for w in iter_reduced_words(wlen_max, min_length=1):
        if exponent_sum(w, "x") != 0:
            continue
        key = rotation_class(w)
        if len(key) < 2 or key in seen:
            continue
        seen.add(key)
        words.append(w)
    return words


def gen_MS_dataset(n_max: int = 7, wlen_max: int = 7, rotate: bool = False) -> list[DatasetEntry]:  # noqa: N802
    """The deduplicated MS dataset ordered by (n, |w|, lex).

    The second relator is X·w reduced freely and cyclically. With ``rotate`` it
    is the class representative instead: the smallest rotation of that word.
    """
    words = ms_words(wlen_max)
    logger.debug("MS dataset: %d rotation classes for |w| <= %d", len(words), wlen_max)
    entries: list[DatasetEntry] = []
    for n in range(1, n_max + 1):
        first = "X" + "y" * n + "x" + "Y" * (n + 1)
        for w in words:
            second = rotation_class(w) if rotate else cyclic_reduce(reduced_product("X", w))
            entries.append(DatasetEntry(Presentation(first, second), MSIndex(n, w)))
    return entries


def mms_length25() -> Presentation:
    """The length-25 presentation (13 + 12) connected to AK(3) by 53 prime moves."""
    return Presentation("XYxYXyxYYxyXy", "YXyyXYxyxYYx")


def gen_Gordon(m: int, n: int, p: int, q: int) -> Presentation:  # noqa: N802
    """Gordon-type presentation (X·[xᵐ, yⁿ], Y·[yᵖ, x^q])."""
    first = free_reduce("X" + commutator(power("x", m), power("y", n)))
    second = free_reduce("Y" + commutator(power("y", p), power("x", q)))
    return Presentation(first, second)
