"""Infinite systems of word equations over permutation groups and free groups."""

from ._wordsys import (
    DSeq,
    FreeElem,
    Perm,
    Solution,
    WordsysError,
    build_scale,
    chain_run,
    enumerate_h,
    find_witness,
    is_automorphism,
    metric,
    metric_exponent,
    nu_word,
    parse_word,
    report_failed,
    run_contrast,
    run_diagonalize,
    run_solve,
    run_verify_blocked,
    scale_violation,
    word_length,
)

__all__ = [
    "DSeq",
    "FreeElem",
    "Perm",
    "Solution",
    "WordsysError",
    "build_scale",
    "chain_run",
    "enumerate_h",
    "find_witness",
    "is_automorphism",
    "metric",
    "metric_exponent",
    "nu_word",
    "parse_word",
    "report_failed",
    "run_contrast",
    "run_diagonalize",
    "run_solve",
    "run_verify_blocked",
    "scale_violation",
    "word_length",
]
