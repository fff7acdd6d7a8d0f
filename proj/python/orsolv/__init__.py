"""Residual rational solvability of one-relator groups.

Words use the text convention: lowercase letter = generator, uppercase = its
inverse, whitespace ignored, empty string = identity.
"""

from ._core import (
    BudgetExceededError,
    UnknownGeneratorError,
    build_ball,
    chain_multiple_check,
    cyclic_reduce,
    decide,
    divisibility,
    enumerate_candidates,
    exponent_vector,
    find_witness,
    fox_derivative,
    h1,
    in_normal_closure,
    is_conjugate,
    primitive_root,
    reduce_word,
    smith_normal_form,
    wp_is_trivial,
)

__all__ = [
    "BudgetExceededError",
    "UnknownGeneratorError",
    "build_ball",
    "chain_multiple_check",
    "cyclic_reduce",
    "decide",
    "divisibility",
    "enumerate_candidates",
    "exponent_vector",
    "find_witness",
    "fox_derivative",
    "h1",
    "in_normal_closure",
    "is_conjugate",
    "primitive_root",
    "reduce_word",
    "smith_normal_form",
    "wp_is_trivial",
]
