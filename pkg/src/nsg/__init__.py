"""Numerical semigroups: gaps, even-gap counts, weights and sumset bounds,
with exhaustive checks over every semigroup of a given genus."""
from .core import (
    NumericalSemigroup,
    StructureProfile,
    from_gaps,
    from_generators,
    gcd_chain,
    nongap,
    profile,
)
from .enumeration import FamilySpec, brute_force_enumerate, census, enumerate_genus, family
from .exceptions import HypothesisError, InfiniteComplementError, InvariantViolation
from .hyperelliptic import is_gamma_hyperelliptic, p2_holds, p3_holds, p3_weak
from .sumsets import castelnuovo_check, double_sumset, freiman_check, residue_sumset_bound
from .verify import TheoremReport, verify_theorem
from .weights import (
    bound_g_threshold,
    classify_weight,
    opt_weight_cap,
    weight,
    weight_bounds,
    weight_formula_quartic,
    weight_formula_triadic,
)

__all__ = [
    "NumericalSemigroup", "StructureProfile", "from_gaps", "from_generators", "gcd_chain",
    "nongap", "profile", "FamilySpec", "brute_force_enumerate", "census",
    "enumerate_genus", "family", "HypothesisError", "InfiniteComplementError",
    "InvariantViolation", "is_gamma_hyperelliptic", "p2_holds", "p3_holds", "p3_weak",
    "castelnuovo_check", "double_sumset", "freiman_check", "residue_sumset_bound",
    "TheoremReport", "verify_theorem", "bound_g_threshold", "classify_weight",
    "opt_weight_cap", "weight", "weight_bounds", "weight_formula_quartic",
    "weight_formula_triadic",
]
