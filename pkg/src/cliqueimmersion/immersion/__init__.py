"""Weak immersions of complete graphs: certificates, verification, construction."""

from .certificate import WeakImmersion, identity_immersion, verify_weak_immersion
from .construct import (
    ImmersionConstruction,
    ImmersionError,
    construct_immersion,
    construct_immersion_detailed,
)
from .semirandom import (
    SemiRandomConfig,
    SemiRandomState,
    check_semirandom_invariants,
    degree_threshold,
    phi,
    semirandom_split,
)
from .split import InjectionError, PartSplit, build_H, choose_injections, h_edge_pairs, matched_pairs

__all__ = [
    "ImmersionConstruction", "ImmersionError", "InjectionError", "PartSplit",
    "SemiRandomConfig", "SemiRandomState", "WeakImmersion", "build_H",
    "check_semirandom_invariants", "choose_injections", "construct_immersion",
    "construct_immersion_detailed", "degree_threshold", "h_edge_pairs",
    "identity_immersion", "matched_pairs", "phi", "semirandom_split",
    "verify_weak_immersion",
]
