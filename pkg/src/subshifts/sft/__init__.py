"""Presentations of subshifts of finite type and sofic subshifts, with their
constructions and decision procedures."""
from .certificates import EmptyAt, NonemptyWitness, Unknown
from .constructions import (
    disjoint_union,
    free_extension,
    image_language,
    pair,
    product,
    pullback_codings,
    pullback_to_free,
    rice_reduction,
    sofic_reduction,
    unpair,
)
from .free import Empty, arc_consistent_alphabet, greedy_free_configuration
from .language import (
    LocalLanguage,
    WindowCSP,
    check_empty,
    entropy_upper_bound,
    fixed_points,
    has_fixed_point,
    locally_admissible,
    locally_admissible_on,
    periodic_witness,
    satisfiable_on,
)
from .presentation import SftPresentation, SoficPresentation
from .zshift import ZDecision, subshift_distance, z_decide

__all__ = [
    "EmptyAt", "NonemptyWitness", "Unknown", "disjoint_union", "free_extension",
    "image_language", "pair", "product", "pullback_codings", "pullback_to_free",
    "rice_reduction", "sofic_reduction", "unpair", "Empty", "arc_consistent_alphabet",
    "greedy_free_configuration", "LocalLanguage", "WindowCSP", "check_empty",
    "entropy_upper_bound", "fixed_points", "has_fixed_point", "locally_admissible",
    "locally_admissible_on", "periodic_witness", "satisfiable_on", "SftPresentation",
    "SoficPresentation", "ZDecision", "subshift_distance", "z_decide",
]
