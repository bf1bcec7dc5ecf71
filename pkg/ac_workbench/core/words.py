"""
Free-group words on two generators.

Words are plain strings over the alphabet ``x, y, X, Y`` where ``X`` is the
inverse of ``x`` and ``Y`` the inverse of ``y``. Strings are immutable and
hashable, which makes them cheap visited-set keys for the search and graph
modules. Every function here assumes its inputs are freely reduced unless
the name says otherwise.
"""

from __future__ import annotations

from collections.abc import Iterable, Iterator

from ac_workbench.exceptions import WordError

ALPHABET = "xyXY"

_INVERSE_LETTER = {"x": "X", "y": "Y", "X": "x", "Y": "y"}
_INVERT_TABLE = str.maketrans("xyXY", "XYxy")
# Letter order x < y < X < Y for every lexicographic comparison.
_ORDER_TABLE = str.maketrans("xyXY", "abcd")

_SIGNED = {"x": 1, "y": 2, "X": -1, "Y": -2}
_FROM_SIGNED = {1: "x", 2: "y", -1: "X", -2: "Y"}


# ============================================================================
# Letters and validation
# ============================================================================


def inverse_letter(letter: str) -> str:
    """Return the inverse of a single letter."""
    try:
        return _INVERSE_LETTER[letter]
    except KeyError:
        raise WordError(f"'{letter}' is not a letter of the alphabet {ALPHABET}") from None


def validate_word(text: str) -> str:
    """Return ``text`` if it only uses x, y, X, Y; raise WordError otherwise."""
    bad = set(text) - set(ALPHABET)
    if bad:
        raise WordError(f"Invalid letters {''.join(sorted(bad))!r} in word {text!r}")
    return text


def is_freely_reduced(word: str) -> bool:
    """True when no adjacent pair of letters cancels."""
    return all(_INVERSE_LETTER[a] != b for a, b in zip(word, word[1:]))


# ============================================================================
# Reduction
# ============================================================================


def free_reduce(word: str) -> str:
    """Cancel adjacent inverse pairs until none remain."""
    stack: list[str] = []
    for letter in validate_word(word):
        if stack and stack[-1] == _INVERSE_LETTER[letter]:
            stack.pop()
        else:
            stack.append(letter)
    return "".join(stack)


def cyclic_reduce(word: str) -> str:
    """Strip matching inverse first/last letters from a freely reduced word."""
    start, end = 0, len(word)
    while end - start >= 2 and word[start] == _INVERSE_LETTER[word[end - 1]]:
        start += 1
        end -= 1
    return word[start:end]


def invert(word: str) -> str:
    """Inverse in the free group: reverse and swap case."""
    return word[::-1].translate(_INVERT_TABLE)


def reduced_product(left: str, right: str) -> str:
    """Freely reduced product of two freely reduced words.

    Only the junction can cancel, so this walks inward from the seam instead of
    re-reducing the whole concatenation.
    """
    limit = min(len(left), len(right))
    cancel = 0
    while cancel < limit and left[-1 - cancel] == _INVERSE_LETTER[right[cancel]]:
        cancel += 1
    if cancel == 0:
        return left + right
    return left[: len(left) - cancel] + right[cancel:]


def conjugate(word: str, letter: str) -> str:
    """Return ``letter · word · letter⁻¹`` freely reduced."""
    return reduced_product(reduced_product(letter, word), _INVERSE_LETTER[letter])


def power(letter: str, exponent: int) -> str:
    """``letter`` raised to an integer power."""
    if exponent >= 0:
        return letter * exponent
    return inverse_letter(letter) * (-exponent)


def commutator(a: str, b: str) -> str:
    """Freely reduced ``a b a⁻¹ b⁻¹``."""
    return free_reduce(a + b + invert(a) + invert(b))


def exponent_sum(word: str, generator: str) -> int:
    """Signed count of ``generator`` (lower-case letter) in ``word``."""
    return word.count(generator) - word.count(generator.upper())


# ============================================================================
# Ordering and rotation classes
# ============================================================================


def lex_key(word: str) -> str:
    """Sort key implementing the x < y < X < Y letter order."""
    return word.translate(_ORDER_TABLE)


def word_key(word: str) -> tuple[int, str]:
    """Shortlex key: length first, then lexicographic."""
    return len(word), word.translate(_ORDER_TABLE)


def rotations(word: str) -> Iterator[str]:
    for i in range(max(len(word), 1)):
        yield word[i:] + word[:i]


def min_rotation(word: str) -> str:
    """Lexicographically smallest cyclic rotation."""
    return min(rotations(word), key=lex_key)


def iter_reduced_words(max_length: int, min_length: int = 0) -> Iterator[str]:
    """All freely reduced words with ``min_length <= |w| <= max_length`` in shortlex order."""
    level = [""]
    for length in range(max_length + 1):
        if length >= min_length:
            yield from level
        if length == max_length:
            break
        level = [w + a for w in level for a in ALPHABET if not w or w[-1] != _INVERSE_LETTER[a]]


# ============================================================================
# Signed-integer encoding
# ============================================================================


def to_signed(word: str) -> list[int]:
    """Encode as integers: x=1, y=2, X=-1, Y=-2."""
    return [_SIGNED[letter] for letter in word]


def from_signed(codes: Iterable[int]) -> str:
    """Decode the signed-integer encoding; zeros are padding and are skipped."""
    try:
        return "".join(_FROM_SIGNED[int(c)] for c in codes if c != 0)
    except KeyError as e:
        raise WordError(f"Invalid letter code {e.args[0]}") from None
