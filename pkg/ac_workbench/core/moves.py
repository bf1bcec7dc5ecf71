"""
AC-move sets, length masking, and neighbor enumeration.

Two 12-move sets are provided. The prime set h1..h12 is closed under
inverses, so its move graph is undirected. The classical set (relator
concatenation, inversion, conjugation by a generator or its inverse) is not:
``r1 → r1·r2`` has no inverse inside the set.
"""

from __future__ import annotations

from collections.abc import Callable, Sequence
from typing import NamedTuple, Union

from ac_workbench.core.presentation import Presentation
from ac_workbench.core.words import conjugate, invert, reduced_product
from ac_workbench.enums import MoveSet

# A relator-length bound; None means unbounded.
LengthBound = Union[int, None]

MoveFn = Callable[[str, str], tuple[str, str]]

NUM_MOVES = 12


class MoveId(NamedTuple):
    """One move of a move set, indexed 1..12."""

    move_set: MoveSet
    index: int

    def __str__(self) -> str:
        prefix = "h" if self.move_set is MoveSet.PRIME else "c"
        return f"{prefix}{self.index}"


# ============================================================================
# Move tables
# ============================================================================


def _prime_moves() -> tuple[MoveFn, ...]:
    return (
        lambda r1, r2: (r1, reduced_product(r2, r1)),  # h1: r2 → r2 r1
        lambda r1, r2: (reduced_product(r1, invert(r2)), r2),  # h2: r1 → r1 r2⁻¹
        lambda r1, r2: (r1, reduced_product(r2, invert(r1))),  # h3: r2 → r2 r1⁻¹
        lambda r1, r2: (reduced_product(r1, r2), r2),  # h4: r1 → r1 r2
        lambda r1, r2: (r1, conjugate(r2, "X")),  # h5: r2 → x⁻¹ r2 x
        lambda r1, r2: (conjugate(r1, "Y"), r2),  # h6: r1 → y⁻¹ r1 y
        lambda r1, r2: (r1, conjugate(r2, "Y")),  # h7: r2 → y⁻¹ r2 y
        lambda r1, r2: (conjugate(r1, "x"), r2),  # h8: r1 → x r1 x⁻¹
        lambda r1, r2: (r1, conjugate(r2, "x")),  # h9: r2 → x r2 x⁻¹
        lambda r1, r2: (conjugate(r1, "y"), r2),  # h10: r1 → y r1 y⁻¹
        lambda r1, r2: (r1, conjugate(r2, "y")),  # h11: r2 → y r2 y⁻¹
        lambda r1, r2: (conjugate(r1, "X"), r2),  # h12: r1 → x⁻¹ r1 x
    )


def _classical_moves() -> tuple[MoveFn, ...]:
    return (
        lambda r1, r2: (reduced_product(r1, r2), r2),  # r1 → r1 r2
        lambda r1, r2: (r1, reduced_product(r2, r1)),  # r2 → r2 r1
        lambda r1, r2: (invert(r1), r2),  # r1 → r1⁻¹
        lambda r1, r2: (r1, invert(r2)),  # r2 → r2⁻¹
        lambda r1, r2: (conjugate(r1, "x"), r2),
        lambda r1, r2: (conjugate(r1, "y"), r2),
        lambda r1, r2: (conjugate(r1, "X"), r2),
        lambda r1, r2: (conjugate(r1, "Y"), r2),
        lambda r1, r2: (r1, conjugate(r2, "x")),
        lambda r1, r2: (r1, conjugate(r2, "y")),
        lambda r1, r2: (r1, conjugate(r2, "X")),
        lambda r1, r2: (r1, conjugate(r2, "Y")),
    )


_MOVES: dict[MoveSet, tuple[MoveFn, ...]] = {
    MoveSet.PRIME: _prime_moves(),
    MoveSet.CLASSICAL: _classical_moves(),
}

_MOVE_IDS: dict[MoveSet, tuple[MoveId, ...]] = {
    move_set: tuple(MoveId(move_set, i) for i in range(1, NUM_MOVES + 1)) for move_set in MoveSet
}

# index → inverse index (None when the set has no single-move inverse)
INVERSES: dict[MoveSet, dict[int, int | None]] = {
    MoveSet.PRIME: {1: 3, 3: 1, 2: 4, 4: 2, 5: 9, 9: 5, 6: 10, 10: 6, 7: 11, 11: 7, 8: 12, 12: 8},
    MoveSet.CLASSICAL: {1: None, 2: None, 3: 3, 4: 4, 5: 7, 7: 5, 6: 8, 8: 6, 9: 11, 11: 9, 10: 12, 12: 10},
}


def move_id(index: int, move_set: MoveSet = MoveSet.PRIME) -> MoveId:
    if not 1 <= index <= NUM_MOVES:
        raise ValueError(f"Move index must be in 1..{NUM_MOVES}, got {index}")
    return _MOVE_IDS[move_set][index - 1]


def inverse_move(index: int, move_set: MoveSet = MoveSet.PRIME) -> int | None:
    return INVERSES[move_set][index]


# ============================================================================
# Application
# ============================================================================


def _resolve(move: MoveId | int, move_set: MoveSet) -> tuple[MoveFn, int]:
    if isinstance(move, MoveId):
        move_set, index = move.move_set, move.index
    else:
        index = move
    if not 1 <= index <= NUM_MOVES:
        raise ValueError(f"Move index must be in 1..{NUM_MOVES}, got {index}")
    return _MOVES[move_set][index - 1], index


def apply_move(p: Presentation, move: MoveId | int, move_set: MoveSet = MoveSet.PRIME) -> Presentation:
    """Apply one move with free reduction and no masking."""
    fn, _ = _resolve(move, move_set)
    return Presentation(*fn(p.r1, p.r2))


def within_bound(p: Presentation, bound: LengthBound) -> bool:
    return bound is None or (len(p.r1) <= bound and len(p.r2) <= bound)


def apply_masked(
    p: Presentation, move: MoveId | int, bound: LengthBound, move_set: MoveSet = MoveSet.PRIME
) -> Presentation:
    """Apply a move, or return ``p`` unchanged when the result breaks the relator bound."""
    result = apply_move(p, move, move_set)
    return result if within_bound(result, bound) else p


def apply_sequence(
    p: Presentation, moves: Sequence[int], move_set: MoveSet = MoveSet.PRIME, bound: LengthBound = None
) -> Presentation | None:
    """Apply moves in order; None if any intermediate state breaks the bound."""
    state = p
    fns = _MOVES[move_set]
    for index in moves:
        state = Presentation(*fns[index - 1](state.r1, state.r2))
        if not within_bound(state, bound):
            return None
    return state


def neighbors(
    p: Presentation, move_set: MoveSet = MoveSet.PRIME, bound: LengthBound = None
) -> list[tuple[MoveId, Presentation]]:
    """All in-bound results that differ from ``p``, in move-index order."""
    r1, r2 = p
    out: list[tuple[MoveId, Presentation]] = []
    for mid, fn in zip(_MOVE_IDS[move_set], _MOVES[move_set]):
        a, b = fn(r1, r2)
        if bound is not None and (len(a) > bound or len(b) > bound):
            continue
        if a == r1 and b == r2:
            continue
        out.append((mid, Presentation(a, b)))
    return out


# ============================================================================
# Length bounds
# ============================================================================


def max_relator_bound(n: int, w: str) -> int:
    """Relator bound 2·max(2n+3, |w|+1) + 2 used for Miller-Schupp presentations."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    return 2 * max(2 * n + 3, len(w) + 1) + 2


def auto_bound(p: Presentation) -> int:
    """Twice the longest initial relator plus 2, for presentations without an MS index."""
    return 2 * p.max_relator_length + 2
