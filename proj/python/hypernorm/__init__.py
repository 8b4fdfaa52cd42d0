"""Exact set-family norms, projection inequalities and cost-function tools.

Rationals are ``fractions.Fraction``; intervals are ``(lo, hi)`` tuples of
fractions. Coordinates and set members are 1-indexed.
"""

from ._hypernorm import (
    InvariantViolation,
    ball_bound_check,
    ball_size,
    change_set,
    cost,
    cyclic_family,
    degenerate_certificates,
    degenerate_family,
    degenerate_norm,
    delta_threshold,
    entropy,
    geometric_witness,
    hamming_density,
    i_weak_total_cost,
    k_subsets_family,
    k_subsets_norm,
    loomis_whitney,
    n_stages,
    norm,
    relative_size,
    shearer_check,
    sharp_box,
    total_cost,
    weak_total_cost,
)

__all__ = [
    "InvariantViolation",
    "ball_bound_check",
    "ball_size",
    "change_set",
    "cost",
    "cyclic_family",
    "degenerate_certificates",
    "degenerate_family",
    "degenerate_norm",
    "delta_threshold",
    "entropy",
    "geometric_witness",
    "hamming_density",
    "i_weak_total_cost",
    "k_subsets_family",
    "k_subsets_norm",
    "loomis_whitney",
    "n_stages",
    "norm",
    "relative_size",
    "shearer_check",
    "sharp_box",
    "total_cost",
    "weak_total_cost",
]
