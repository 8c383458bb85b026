"""Extended affine permutations: window arithmetic, Bruhat order, double
cosets, the orbit/coset bijection, and moment-graph edge sets."""

from .cosets import (
    DoubleCoset,
    coset_reps,
    double_coset_elements,
    paff,
    paff0,
    paff_inverse,
    right_coset_max,
    right_coset_min,
    stabilizer_composition_of_coset,
    young_subgroup,
)
from .gkm import GKMEdge, GKMEdgeSet, gkm_edges, lambda_weight, leading_term, root_weight
from .perms import (
    AffinePerm,
    bruhat_leq,
    covers_down,
    dinv_k_window,
    from_finite,
    identity,
    inv,
    inv_k_pair,
    inv_k_total,
    inv_pair,
    inversions,
    left_descents,
    lower_set,
    reduced_word,
    rho,
    simple_reflection,
    translation,
    translation_vec,
    transposition,
)

__all__ = [
    "AffinePerm",
    "DoubleCoset",
    "GKMEdge",
    "GKMEdgeSet",
    "bruhat_leq",
    "coset_reps",
    "covers_down",
    "dinv_k_window",
    "double_coset_elements",
    "from_finite",
    "gkm_edges",
    "identity",
    "inv",
    "inv_k_pair",
    "inv_k_total",
    "inv_pair",
    "inversions",
    "lambda_weight",
    "leading_term",
    "left_descents",
    "lower_set",
    "paff",
    "paff0",
    "paff_inverse",
    "reduced_word",
    "rho",
    "right_coset_max",
    "right_coset_min",
    "simple_reflection",
    "stabilizer_composition_of_coset",
    "translation",
    "translation_vec",
    "transposition",
    "young_subgroup",
]
