"""
Replayable trivialization certificates.

The built-in certificate connects the length-25 presentation returned by
:func:`ac_workbench.core.series.mms_length25` to AK(3) with 53 prime moves,
never exceeding length 25 along the way.
"""

from __future__ import annotations

import logging

from ac_workbench.core.moves import inverse_move
from ac_workbench.core.presentation import Presentation, canonicalize
from ac_workbench.core.series import gen_AK, mms_length25
from ac_workbench.enums import MoveSet, SearchAlgorithm
from ac_workbench.models.config import SearchConfig
from ac_workbench.models.results import Certificate, VerificationReport
from ac_workbench.search import search, walk

logger = logging.getLogger(__name__)

AK3_MOVES: tuple[int, ...] = (
    9, 7, 4, 8, 11, 5, 11, 9, 3, 10, 12, 7, 7, 9, 11, 5, 3, 5, 4, 3, 12, 5, 7, 7, 1, 9,
    11, 8, 3, 5, 10, 2, 6, 12, 9, 7, 5, 11, 10, 3, 8, 11, 9, 2, 10, 12, 5, 7, 9, 11, 1, 9, 8,
)  # fmt: skip


def ak3_certificate() -> Certificate:
    return Certificate(
        start=mms_length25(),
        moves=list(AK3_MOVES),
        claimed_terminal=gen_AK(3),
        claimed_max_length=25,
        move_set=MoveSet.PRIME,
    )


def reverse_certificate(cert: Certificate, terminal: Presentation | None = None) -> Certificate:
    """Certificate walking back from ``terminal`` (default: the replayed terminal) to the start.

    Only defined for move sets where every move has an inverse.
    """
    moves: list[int] = []
    for move in reversed(cert.moves):
        inv = inverse_move(move, cert.move_set)
        if inv is None:
            raise ValueError(f"Move {move} has no inverse in the {cert.move_set.value} set")
        moves.append(inv)
    if terminal is None:
        terminal, _ = walk(cert.start, cert.moves, cert.move_set)
    return Certificate(
        start=terminal,
        moves=moves,
        claimed_terminal=cert.start,
        claimed_max_length=cert.claimed_max_length,
        move_set=cert.move_set,
    )


def verify(
    cert: Certificate, equivalence_bound: int | None = 25, equivalence_max_nodes: int = 1_000_000
) -> VerificationReport:
    """Replay without masking and check the length ceiling and terminal canonical form.

    When the terminal differs from the claim, a bounded BFS toward the claimed
    terminal is run and reported in ``equivalence_path``; ``ok`` stays False.
    """
    terminal, profile = walk(cert.start, cert.moves, cert.move_set)
    max_seen = max(profile)

    first_divergence: int | None = None
    for step, value in enumerate(profile):
        if value > cert.claimed_max_length:
            first_divergence = step
            break

    terminal_ok = canonicalize(terminal) == canonicalize(cert.claimed_terminal)
    if not terminal_ok and first_divergence is None:
        first_divergence = len(cert.moves)

    ok = terminal_ok and max_seen <= cert.claimed_max_length
    equivalence_path: list[int] | None = None
    if not terminal_ok:
        logger.warning("Replay terminal %s differs from claimed %s", terminal, cert.claimed_terminal)
        if equivalence_bound is not None:
            target = canonicalize(cert.claimed_terminal)
            cfg = SearchConfig(
                algorithm=SearchAlgorithm.BFS,
                max_nodes=equivalence_max_nodes,
                max_relator_length=equivalence_bound,
                move_set=cert.move_set,
            )
            if terminal.max_relator_length <= equivalence_bound:
                found = search(terminal, cfg, goal=lambda p: canonicalize(p) == target)
                if found.solved:
                    equivalence_path = found.path
    return VerificationReport(
        ok=ok,
        terminal=terminal,
        max_length_seen=max_seen,
        first_divergence=first_divergence,
        length_profile=profile,
        equivalence_path=equivalence_path,
    )
