"""Exact braid group computations: normal forms, conjugacy, Nielsen-Thurston
classification and centralizer generating sets."""

from .core import (BraidWord, cable, exponent_sum, forget_strand, free_reduce,
                   invert, parse_word, permutation_of)
from .garside import commutes, delta_word, nf_equal, normal_form

__all__ = [
    "BraidWord", "cable", "commutes", "delta_word", "exponent_sum",
    "forget_strand", "free_reduce", "invert", "nf_equal", "normal_form",
    "parse_word", "permutation_of",
]
