"""Label and Dyck-path combinatorics: sorted orbits, dinv, attack paths,
LLT and chromatic symmetric functions, signed open-locus characters, and
the orbit sums they assemble into."""

from .dyck import DyckPath, PartialDyckPath, all_dyck_paths, attack_path
from .llt import Vanishing, chi_pil, chi_prime, chromatic, llt_xi, vanishing
from .orbits import (
    LabeledOrbit,
    aut_q,
    canonicalize,
    dinv_k,
    dinv_k_raw,
    epsilon,
    letter_key,
    negate_labels,
    standardize,
    standardize_desc,
)
from .orbitsum import (
    orbit_sum_llt,
    orbit_sum_raw,
    q_multinomial,
    rhs_orbit_sum,
    signed_char_sum,
    sorted_orbits_one_label,
    sorted_orbits_two_labels,
)

__all__ = [
    "DyckPath",
    "LabeledOrbit",
    "PartialDyckPath",
    "Vanishing",
    "all_dyck_paths",
    "attack_path",
    "aut_q",
    "canonicalize",
    "chi_pil",
    "chi_prime",
    "chromatic",
    "dinv_k",
    "dinv_k_raw",
    "epsilon",
    "letter_key",
    "llt_xi",
    "negate_labels",
    "orbit_sum_llt",
    "orbit_sum_raw",
    "q_multinomial",
    "rhs_orbit_sum",
    "signed_char_sum",
    "sorted_orbits_one_label",
    "sorted_orbits_two_labels",
    "standardize",
    "standardize_desc",
    "vanishing",
]
