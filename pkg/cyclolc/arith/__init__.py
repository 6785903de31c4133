"""Number theory, GF(2) polynomials and GF(2^n) arithmetic."""
from cyclolc.arith.f2poly import F2Poly, LCResult, berlekamp_massey, lc_via_gcd
from cyclolc.arith.numtheory import CaseClass, Residue, SequenceParams, classify_case

__all__ = [
    "F2Poly",
    "LCResult",
    "berlekamp_massey",
    "lc_via_gcd",
    "CaseClass",
    "Residue",
    "SequenceParams",
    "classify_case",
]
