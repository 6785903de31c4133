"""The per-instance analysis report and its two renderings."""
from typing import Any, Dict, List, Optional

from pydantic import BaseModel, ConfigDict, Field

from cyclolc.analysis.field_check import FieldCheckResult
from cyclolc.analysis.predictor import Prediction, Verdict
from cyclolc.arith.numtheory import CaseClass, SequenceParams
from cyclolc.sequences.cyclotomy import Variant

RECORD_FIELDS = (
    "p", "m", "f", "e", "b", "g", "variant", "n", "h", "case_p", "case_p2",
    "lc_bm", "lc_gcd", "zero_count", "predicted_lo", "predicted_hi", "conjectured", "verdict",
)


class LCReport(BaseModel):
    """Measured LC of one sequence tied to its theorem case."""
    model_config = ConfigDict(frozen=True)

    params: SequenceParams
    variant: Variant
    case: CaseClass
    lc_bm: int
    lc_gcd: int
    prediction: Prediction
    verdict: Verdict
    conjecture_mismatch: bool = False
    zero_count: Optional[int] = None
    gcd_degree: Optional[int] = None
    minimal_poly: Optional[str] = None
    field: Optional[FieldCheckResult] = None
    notes: List[str] = Field(default_factory=list)

    @property
    def lc(self) -> int:
        return self.lc_gcd

    def bracket(self) -> Optional[tuple]:
        if self.zero_count is None:
            return None
        n = self.params.period
        return n - 2 * self.zero_count, n - self.zero_count

    def to_record(self) -> Dict[str, Any]:
        """Flat key/value document with the fixed field names."""
        p = self.params
        return {
            "p": p.p,
            "m": p.m,
            "f": p.f,
            "e": p.e,
            "b": p.b,
            "g": p.g,
            "variant": self.variant.value,
            "n": self.case.n,
            "h": self.case.h,
            "case_p": self.case.e_residue_mod_p.value,
            "case_p2": self.case.e_residue_mod_p2.value,
            "lc_bm": self.lc_bm,
            "lc_gcd": self.lc_gcd,
            "zero_count": self.zero_count,
            "predicted_lo": self.prediction.lo,
            "predicted_hi": self.prediction.hi,
            "conjectured": self.prediction.conjectured,
            "verdict": self.verdict.value,
        }

    def to_text(self) -> str:
        p = self.params
        lines = [
            f"{p.label()} variant={self.variant.value} N={p.period}",
            f"  2^e mod p: {self.case.e_residue_mod_p.value}  mod p^2: {self.case.e_residue_mod_p2.value}"
            f"  h={self.case.h}  n={self.case.n}",
            f"  order of 2 lifts from p to p^m: {'yes' if self.case.order_lifts else 'no'}"
            f"{' (Wieferich)' if self.case.wieferich else ''}",
            f"  LC (Berlekamp-Massey) = {self.lc_bm}",
            f"  LC (gcd)              = {self.lc_gcd}",
            f"  predicted: {self.prediction.describe()}",
        ]
        bracket = self.bracket()
        if bracket is not None:
            lines.append(f"  zeros Z = {self.zero_count}; bracket {bracket[0]} <= LC <= {bracket[1]}")
        if self.minimal_poly is not None:
            lines.append(f"  minimal polynomial: {self.minimal_poly}")
        verdict = self.verdict.value
        if self.conjecture_mismatch:
            verdict += " (conjecture mismatch)"
        lines.append(f"  verdict: {verdict}")
        lines.extend(f"  note: {note}" for note in self.notes)
        return "\n".join(lines)
