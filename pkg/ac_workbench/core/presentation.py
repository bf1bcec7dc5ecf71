"""Balanced two-generator presentations, canonical forms, and their text format."""

from __future__ import annotations

from typing import NamedTuple

from ac_workbench.core.words import ALPHABET, is_freely_reduced, word_key
from ac_workbench.exceptions import PresentationFormatError, WordError


class Presentation(NamedTuple):
    """⟨x, y | r1, r2⟩ as an ordered pair of freely reduced relators."""

    r1: str
    r2: str

    @property
    def length(self) -> int:
        return len(self.r1) + len(self.r2)

    @property
    def max_relator_length(self) -> int:
        return max(len(self.r1), len(self.r2))

    def swap(self) -> Presentation:
        return Presentation(self.r2, self.r1)

    def __str__(self) -> str:
        return format_presentation(self)


TRIVIAL = Presentation("x", "y")

_TRIVIAL_RELATORS = ({"x", "X"}, {"y", "Y"})


def length(p: Presentation) -> int:
    """Presentation length |r1| + |r2|."""
    return len(p.r1) + len(p.r2)


def is_trivial_state(p: Presentation) -> bool:
    """One relator is x or X and the other is y or Y (the 8 length-2 presentations)."""
    xs, ys = _TRIVIAL_RELATORS
    return (p.r1 in xs and p.r2 in ys) or (p.r1 in ys and p.r2 in xs)


def canonicalize(p: Presentation) -> Presentation:
    """Sort the relators by (length, lex) with x < y < X < Y. Words are not rotated or inverted."""
    if word_key(p.r2) < word_key(p.r1):
        return Presentation(p.r2, p.r1)
    return p


# ============================================================================
# Text format
# ============================================================================


def parse_presentation(text: str) -> Presentation:
    """Parse ``<r1>,<r2>``.

    Raises:
        PresentationFormatError: wrong relator count, empty relator, or bad letters.
    """
    parts = text.strip().split(",")
    if len(parts) != 2:
        raise PresentationFormatError(f"Expected 2 comma-separated relators, got {len(parts)} in {text!r}")
    for part in parts:
        if not part:
            raise PresentationFormatError(f"Empty relator in {text!r}")
        bad = set(part) - set(ALPHABET)
        if bad:
            raise PresentationFormatError(f"Invalid letters {''.join(sorted(bad))!r} in {text!r}")
        if not is_freely_reduced(part):
            raise PresentationFormatError(f"Relator {part!r} is not freely reduced")
    return Presentation(parts[0], parts[1])


def format_presentation(p: Presentation) -> str:
    return f"{p.r1},{p.r2}"


def make_presentation(r1: str, r2: str) -> Presentation:
    """Build a presentation from freely reduced relators, checking both."""
    for r in (r1, r2):
        if set(r) - set(ALPHABET) or not is_freely_reduced(r):
            raise WordError(f"Relator {r!r} is not a freely reduced word over {ALPHABET}")
    return Presentation(r1, r2)
