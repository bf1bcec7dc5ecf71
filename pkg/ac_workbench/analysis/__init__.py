"""Path anatomy, supermoves, tokenization and LM dataset generation."""

from ac_workbench.analysis.anatomy import anatomy, merge
from ac_workbench.analysis.lm_dataset import (
    gen_lm_dataset,
    length_histogram,
    phase_bounds,
    seed_walk,
    split_by_seed,
    token_count,
)
from ac_workbench.analysis.supermoves import (
    ActionSpaceAdapter,
    SettingRecord,
    count_occurrences,
    latest_window_comparator,
    mine_supermoves,
)
from ac_workbench.analysis.tokenizer import VOCAB_SIZE, Token, detokenize, tokenize

__all__ = [
    # Anatomy
    "anatomy",
    "merge",
    # Supermoves
    "ActionSpaceAdapter",
    "SettingRecord",
    "count_occurrences",
    "latest_window_comparator",
    "mine_supermoves",
    # Tokens
    "Token",
    "VOCAB_SIZE",
    "detokenize",
    "tokenize",
    # LM dataset
    "gen_lm_dataset",
    "length_histogram",
    "phase_bounds",
    "seed_walk",
    "split_by_seed",
    "token_count",
]
