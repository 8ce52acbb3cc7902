"""Exact computations for finite set-theoretic solutions of the Yang-Baxter
equation: validation, retracts, racks, the structure monoid word calculus,
nilpotency tests and finite skew braces."""

from .brace import (SkewBrace, additive_commutator, brace_solution, socle_series,
                    validate_brace)
from .errors import YBEError
from .monoid import (a_equal, a_normalize, compute_d, m_equal, pi_forward, pi_inverse,
                     reachable_lambdas, sim_classes, subset_state)
from .nilpotency import (lyubashenko_criterion, malcev_falsify, nc_search,
                         nc_verify_witness, nilpotency_report, uniform_components)
from .rack import Rack, RackData, build_rack_from_data, classify_abelian_rack, validate_rack
from .report import analyze
from .retract import mpl_tower, retract, retract_classes
from .solution import (Solution, derived, invert, lyubashenko, perm_group_report,
                       solution_stats, validate_solution)

__all__ = [
    "a_equal",
    "a_normalize",
    "additive_commutator",
    "analyze",
    "brace_solution",
    "build_rack_from_data",
    "classify_abelian_rack",
    "compute_d",
    "derived",
    "invert",
    "lyubashenko",
    "lyubashenko_criterion",
    "m_equal",
    "malcev_falsify",
    "mpl_tower",
    "nc_search",
    "nc_verify_witness",
    "nilpotency_report",
    "perm_group_report",
    "pi_forward",
    "pi_inverse",
    "Rack",
    "RackData",
    "reachable_lambdas",
    "retract",
    "retract_classes",
    "sim_classes",
    "SkewBrace",
    "socle_series",
    "Solution",
    "solution_stats",
    "subset_state",
    "uniform_components",
    "validate_brace",
    "validate_rack",
    "validate_solution",
    "YBEError",
]

__version__ = "0.1.0"
