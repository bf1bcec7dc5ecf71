"""Word, presentation, move and series primitives."""

from ac_workbench.core.moves import (
    INVERSES,
    NUM_MOVES,
    LengthBound,
    MoveId,
    apply_masked,
    apply_move,
    apply_sequence,
    auto_bound,
    inverse_move,
    max_relator_bound,
    move_id,
    neighbors,
    within_bound,
)
from ac_workbench.core.presentation import (
    TRIVIAL,
    Presentation,
    canonicalize,
    format_presentation,
    is_trivial_state,
    length,
    make_presentation,
    parse_presentation,
)
from ac_workbench.core.series import (
    MS_PER_N,
    DatasetEntry,
    MSIndex,
    gen_AK,
    gen_Gordon,
    gen_MS,
    gen_MS_dataset,
    mms_length25,
    ms_words,
    rotation_class,
)
from ac_workbench.core.words import (
    ALPHABET,
    commutator,
    conjugate,
    cyclic_reduce,
    exponent_sum,
    free_reduce,
    from_signed,
    invert,
    is_freely_reduced,
    iter_reduced_words,
    min_rotation,
    reduced_product,
    to_signed,
    word_key,
)

__all__ = [
    # Words
    "ALPHABET",
    "commutator",
    "conjugate",
    "cyclic_reduce",
    "exponent_sum",
    "free_reduce",
    "from_signed",
    "invert",
    "is_freely_reduced",
    "iter_reduced_words",
    "min_rotation",
    "reduced_product",
    "to_signed",
    "word_key",
    # Presentations
    "TRIVIAL",
    "Presentation",
    "canonicalize",
    "format_presentation",
    "is_trivial_state",
    "length",
    "make_presentation",
    "parse_presentation",
    # Moves
    "INVERSES",
    "NUM_MOVES",
    "LengthBound",
    "MoveId",
    "apply_masked",
    "apply_move",
    "apply_sequence",
    "auto_bound",
    "inverse_move",
    "max_relator_bound",
    "move_id",
    "neighbors",
    "within_bound",
    # Series
    "MS_PER_N",
    "DatasetEntry",
    "MSIndex",
    "gen_AK",
    "gen_Gordon",
    "gen_MS",
    "gen_MS_dataset",
    "mms_length25",
    "ms_words",
    "rotation_class",
]
