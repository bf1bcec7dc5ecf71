"""Six-token vocabulary for presentation language-model datasets."""

from __future__ import annotations

from collections.abc import Iterable, Sequence
from enum import IntEnum

from ac_workbench.core.presentation import Presentation
from ac_workbench.exceptions import TokenizationError


class Token(IntEnum):
    X = 0  # x
    Y = 1  # y
    X_INV = 2  # X
    Y_INV = 3  # Y
    SEP = 4  # between r1 and r2
    END = 5  # after r2


VOCAB_SIZE = len(Token)

_LETTER_TOKEN = {"x": Token.X, "y": Token.Y, "X": Token.X_INV, "Y": Token.Y_INV}
_TOKEN_LETTER = {int(t): letter for letter, t in _LETTER_TOKEN.items()}


def tokenize(presentations: Iterable[Presentation]) -> list[int]:
    """r1 letters, SEP, r2 letters, END for each presentation."""
    out: list[int] = []
    for p in presentations:
        out.extend(int(_LETTER_TOKEN[c]) for c in p.r1)
        out.append(int(Token.SEP))
        out.extend(int(_LETTER_TOKEN[c]) for c in p.r2)
        out.append(int(Token.END))
    return out


def detokenize(tokens: Sequence[int]) -> list[Presentation]:
    """Inverse of :func:`tokenize`.

    Raises:
        TokenizationError: unknown token, missing separator, or trailing letters.
    """
    presentations: list[Presentation] = []
    relators: list[str] = []
    current: list[str] = []
    for pos, tok in enumerate(tokens):
        if tok in _TOKEN_LETTER:
            current.append(_TOKEN_LETTER[tok])
        elif tok == Token.SEP:
            if relators:
                raise TokenizationError(f"Second separator at position {pos}")
            relators.append("".join(current))
            current = []
        elif tok == Token.END:
            if len(relators) != 1:
                raise TokenizationError(f"End token without separator at position {pos}")
            presentations.append(Presentation(relators[0], "".join(current)))
            relators, current = [], []
        else:
            raise TokenizationError(f"Unknown token {tok} at position {pos}")
    if relators or current:
        raise TokenizationError("Token stream ends inside a presentation")
    return presentations
