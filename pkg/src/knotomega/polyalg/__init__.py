"""Exact Laurent-polynomial algebra: arithmetic, factorization, factor counts."""

from .factorization import MAX_DEGREE, Factorization, factor
from .laurent import LaurentPoly, format_poly, parse_poly, poly_from_json, poly_to_json
from .omega import (NEG_INF, OmegaValue, SubstitutedReduction, UnimodularMap,
                    apply_unimodular, complete_to_unimodular, is_primitive,
                    monomial_equivalent, omega_module, omega_ring,
                    omega_substituted, substitute_monomial, substituted_reduction)
from .perturbed import PerturbedElement, is_projectively_integral
from .rings import GF2, INT, RAT, RING_TAGS, Ring, ring_tag

__all__ = [
    "GF2", "INT", "MAX_DEGREE", "NEG_INF", "RAT", "RING_TAGS",
    "Factorization", "LaurentPoly", "OmegaValue", "PerturbedElement", "Ring",
    "SubstitutedReduction", "UnimodularMap", "apply_unimodular",
    "complete_to_unimodular", "factor", "format_poly", "is_primitive",
    "is_projectively_integral", "monomial_equivalent", "omega_module",
    "omega_ring", "omega_substituted", "parse_poly", "poly_from_json",
    "poly_to_json", "ring_tag", "substitute_monomial", "substituted_reduction",
]
