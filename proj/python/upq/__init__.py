"""Exact wall and Toledo-bound computations for U(p,q)-Hitchin pairs.

Rationals cross the boundary as fractions.Fraction; ints and "n/d" strings
are accepted wherever a rational is expected.
"""

from ._core import (
    AlphaWindow,
    BoundInterval,
    Chamber,
    ChamberReport,
    HitchinPairType,
    IrreducibilityCertificate,
    IrreducibilityCondition,
    MwVerdict,
    Wall,
    alpha_slope,
    brute_force_walls,
    c_pair,
    certify_irreducibility,
    chamber_report,
    enumerate_walls,
    higgs_rank_bounds,
    mw_check,
    selftest,
    toledo,
    toledo_bounds,
)

__all__ = [
    "AlphaWindow",
    "BoundInterval",
    "Chamber",
    "ChamberReport",
    "HitchinPairType",
    "IrreducibilityCertificate",
    "IrreducibilityCondition",
    "MwVerdict",
    "Wall",
    "alpha_slope",
    "brute_force_walls",
    "c_pair",
    "certify_irreducibility",
    "chamber_report",
    "enumerate_walls",
    "higgs_rank_bounds",
    "mw_check",
    "selftest",
    "toledo",
    "toledo_bounds",
]
