"""Exact calculus of log surface singularities and a verifier for the δ = 1 catalog."""

from .catalog import CaseRecord, VerificationReport, load_catalog, verify_all, verify_case
from .cyclic import (
    CyclicQuot,
    LatticeValuation,
    chain_discrepancies,
    enumerate_deep_valuations,
    hj_expand,
    hj_reconstruct,
    toric_log_discrepancy,
)
from .delta import DeltaReport, delta, delta_sweep
from .exact import AffineForm, fmt_rat, parse_form, rat
from .germs import Axis, Branch, Germ, Newton, Tangent, classify_germ, count_deep_divisors, solve_blowup_weights
from .surface import WPS, GraphSurface, Handle, LogSurface, adjunction, complement_index, solve_b, t_max

__all__ = [
    "AffineForm", "Axis", "Branch", "CaseRecord", "CyclicQuot", "DeltaReport", "GraphSurface", "Germ",
    "Handle", "LatticeValuation", "LogSurface", "Newton", "Tangent", "VerificationReport", "WPS",
    "adjunction", "chain_discrepancies", "classify_germ", "complement_index", "count_deep_divisors",
    "delta", "delta_sweep", "enumerate_deep_valuations", "fmt_rat", "hj_expand", "hj_reconstruct",
    "load_catalog", "parse_form", "rat", "solve_b", "solve_blowup_weights", "t_max",
    "toric_log_discrepancy", "verify_all", "verify_case",
]
