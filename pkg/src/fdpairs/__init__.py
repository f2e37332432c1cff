"""Exact construction, verification and search of formally dual pairs in finite abelian groups."""

__version__ = "0.1.0"

from .characters import char_sum, char_sum_table, character_spectrum, fourier_invert, sq_spectrum
from .constructions import (
    LiftedPair, dircon1, dircon1_spectrum, dircon2, dircon2_inductive, dircon2_theta, lift_pair,
    mix, mix_theta, predict, recur_combine, theta_product_law,
)
from .cyclotomic import CyclotomicInteger, cyclotomic_poly
from .duality import (
    DualPairReport, PrimitivityReport, chi_square_real, is_formally_dual, lifting_condition,
    required_partner_weights, verify_formally_dual, verify_primitive,
)
from .errors import FormalDualityError
from .group_ring import GroupRingElement, SpectrumMultiset, difference_spectrum, theta, weight_enumerator
from .groups import Automorphism, FiniteAbelianGroup, automorphisms, make_group
from .io import PairFile, parse_pair_file, read_pair_file
from .search import (
    SearchTask, classify_by_invariants, equivalence_bruteforce, exhaustive_pairs, invariant_key,
)

__all__ = [
    "Automorphism", "CyclotomicInteger", "DualPairReport", "FiniteAbelianGroup", "FormalDualityError",
    "GroupRingElement", "LiftedPair", "PairFile", "PrimitivityReport", "SearchTask", "SpectrumMultiset",
    "automorphisms", "char_sum", "char_sum_table", "character_spectrum", "chi_square_real",
    "classify_by_invariants", "cyclotomic_poly", "difference_spectrum", "dircon1", "dircon1_spectrum",
    "dircon2", "dircon2_inductive", "dircon2_theta", "equivalence_bruteforce", "exhaustive_pairs",
    "fourier_invert", "invariant_key", "is_formally_dual", "lift_pair", "lifting_condition", "make_group",
    "mix", "mix_theta", "parse_pair_file", "predict", "read_pair_file", "recur_combine",
    "required_partner_weights", "sq_spectrum", "theta", "theta_product_law", "verify_formally_dual",
    "verify_primitive", "weight_enumerator",
]
