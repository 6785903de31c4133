"""Theorem predictions for the linear complexity and the verdict against a measurement."""
import logging
from enum import Enum
from typing import Optional, Tuple

from pydantic import BaseModel, ConfigDict

from cyclolc.arith.numtheory import CaseClass, Residue, SequenceParams
from cyclolc.sequences.cyclotomy import Variant

logger = logging.getLogger(__name__)


class PredictionKind(str, Enum):
    EXACT = "EXACT"
    RANGE = "RANGE"
    UNCOVERED = "UNCOVERED"


class Verdict(str, Enum):
    MATCHES_THEOREM = "MATCHES_THEOREM"
    MATCHES_CONJECTURE = "MATCHES_CONJECTURE"
    WITHIN_RANGE_ONLY = "WITHIN_RANGE_ONLY"
    VIOLATION = "VIOLATION"


class Prediction(BaseModel):
    """Exact(value) has lo == hi; Range carries an optional conjectured value; Uncovered has no bounds."""
    model_config = ConfigDict(frozen=True)

    kind: PredictionKind
    lo: Optional[int] = None
    hi: Optional[int] = None
    conjectured: Optional[int] = None

    @classmethod
    def exact(cls, value: int) -> "Prediction":
        return cls(kind=PredictionKind.EXACT, lo=value, hi=value)

    @classmethod
    def range(cls, lo: int, hi: int, conjectured: Optional[int] = None) -> "Prediction":
        return cls(kind=PredictionKind.RANGE, lo=lo, hi=hi, conjectured=conjectured)

    @classmethod
    def uncovered(cls) -> "Prediction":
        return cls(kind=PredictionKind.UNCOVERED)

    def contains(self, lc: int) -> bool:
        if self.kind == PredictionKind.UNCOVERED:
            return True
        return self.lo <= lc <= self.hi

    def describe(self) -> str:
        if self.kind == PredictionKind.EXACT:
            return f"Exact({self.lo})"
        if self.kind == PredictionKind.RANGE:
            text = f"Range({self.lo}, {self.hi})"
            if self.conjectured is not None:
                text += f", conjectured {self.conjectured}"
            return text
        return "none (uncovered)"


def predict(params: SequenceParams, variant: Variant, case: CaseClass) -> Prediction:
    """Predicted LC for the classified case."""
    n = params.period
    p = params.p
    mod_p, mod_p2 = case.e_residue_mod_p, case.e_residue_mod_p2
    low, high = n - 2 * (p - 1), n - (p - 1)

    if variant == Variant.STANDARD:
        if mod_p == Residue.NEITHER:
            return Prediction.exact(n)
        if mod_p == Residue.PLUS_ONE and mod_p2 != Residue.PLUS_ONE:
            return Prediction.exact(n)
        if mod_p == Residue.MINUS_ONE and mod_p2 != Residue.MINUS_ONE:
            return Prediction.range(low, high, conjectured=high)
    else:
        if mod_p != Residue.PLUS_ONE:
            return Prediction.exact(n)
        if mod_p2 != Residue.PLUS_ONE:
            return Prediction.range(low, high, conjectured=high - params.e)

    logger.info("no theorem clause covers %s (%s): 2^e = %s mod p^2",
                params.label(), variant.value, mod_p2.value)
    return Prediction.uncovered()


def judge(prediction: Prediction, lc: int,
          bracket: Optional[Tuple[int, int]] = None) -> Tuple[Verdict, bool]:
    """Verdict for a measured LC and whether a conjecture was contradicted.

    ``bracket`` is (N - 2Z, N - Z) when the field check ran; leaving it is a violation.
    """
    if bracket is not None and not bracket[0] <= lc <= bracket[1]:
        return Verdict.VIOLATION, False
    if prediction.kind == PredictionKind.UNCOVERED:
        return Verdict.WITHIN_RANGE_ONLY, False
    if not prediction.contains(lc):
        return Verdict.VIOLATION, False
    if prediction.conjectured is None:
        return Verdict.MATCHES_THEOREM, False
    if lc == prediction.conjectured:
        return Verdict.MATCHES_CONJECTURE, False
    return Verdict.MATCHES_THEOREM, True
