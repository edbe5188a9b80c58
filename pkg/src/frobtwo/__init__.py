"""Exact computation with modular two-weight codes over finite Frobenius rings.

Typical use::

    from frobtwo import parse_ring_spec, LinearCode, analyze_code

    ring = parse_ring_spec("Z4")
    report = analyze_code(LinearCode(ring, [[1, 0, 1], [0, 1, 1]]))
"""
from .characters import is_frobenius
from .codes import CodeAnalysis, LinearCode, compute_alpha, modularity, weight_distribution
from .config import DEFAULT_CAPS, Caps, caps_from_env
from .duality import build_dual, verify_dual_theorem, verify_gamma_dual
from .errors import (
    AxiomError,
    CapExceededError,
    FrobtwoError,
    IdentityMismatch,
    NotApplicable,
    NotFrobeniusError,
    RingSpecError,
)
from .graphs import build_gamma, build_omega, verify_equivalence_theorem, verify_pds, verify_srg
from .homweight import WeightTable, compute_weight_table
from .kernels import BACKEND
from .report import analysis_report, analyze_code
from .rings import FiniteRing, parse_ring_spec
from .search import SearchSpace, canonical_key, scan

__version__ = "0.1.0"

__all__ = [
    "AxiomError",
    "BACKEND",
    "CapExceededError",
    "Caps",
    "CodeAnalysis",
    "DEFAULT_CAPS",
    "FiniteRing",
    "FrobtwoError",
    "IdentityMismatch",
    "LinearCode",
    "NotApplicable",
    "NotFrobeniusError",
    "RingSpecError",
    "SearchSpace",
    "WeightTable",
    "analysis_report",
    "analyze_code",
    "build_dual",
    "build_gamma",
    "build_omega",
    "canonical_key",
    "caps_from_env",
    "compute_alpha",
    "compute_weight_table",
    "is_frobenius",
    "modularity",
    "parse_ring_spec",
    "scan",
    "verify_dual_theorem",
    "verify_equivalence_theorem",
    "verify_gamma_dual",
    "verify_pds",
    "verify_srg",
    "weight_distribution",
]
