"""Zero count and the field identities for one parameter set."""
import logging
from typing import List, Optional, Tuple

from pydantic import BaseModel, ConfigDict, Field

from cyclolc.arith import galois
from cyclolc.arith.f2poly import F2Poly
from cyclolc.arith.numtheory import CaseClass, SequenceParams
from cyclolc.config import AnalysisConfig
from cyclolc.sequences.cyclotomy import Variant
from cyclolc.sequences.sequence import generate

logger = logging.getLogger(__name__)


class FieldCheckResult(BaseModel):
    """What the GF(2^n) path found for one parameter set."""
    model_config = ConfigDict(frozen=True)

    n: int
    modulus: str
    zero_count: int
    zeros: List[int]
    identities: List[galois.IdentityCheck] = Field(default_factory=list)
    membership: Optional[galois.MembershipReport] = None

    def bracket(self, period: int) -> Tuple[int, int]:
        """(N - 2Z, N - Z)."""
        return period - 2 * self.zero_count, period - self.zero_count

    @property
    def identities_passed(self) -> bool:
        passed = all(check.passed for check in self.identities)
        return passed and (self.membership is None or self.membership.passed)


class FieldChecker:
    """Runs the root-of-unity evaluation and the identity suite."""

    def __init__(self, config: Optional[AnalysisConfig] = None, modulus: Optional[F2Poly] = None):
        self.config = config or AnalysisConfig()
        self.modulus = modulus

    def run(self, params: SequenceParams, variant: Variant, case: CaseClass,
            identities: bool = True) -> FieldCheckResult:
        """Raises FieldTooLargeError when the extension degree exceeds the configured limit."""
        ctx = galois.FieldCtx.build(params.p, params.m, modulus=self.modulus,
                                    max_degree=self.config.max_field_degree)
        beta = galois.find_root_of_unity(ctx)
        standard = galois.eval_support_at_roots(ctx, beta, generate(params, Variant.STANDARD))
        modified = galois.eval_support_at_roots(ctx, beta, generate(params, Variant.MODIFIED))
        evaluation = standard if variant == Variant.STANDARD else modified

        checks = []
        membership = None
        if identities:
            checks = [
                galois.complementary_sum_check(ctx, beta, params),
                galois.shifted_evaluation_check(ctx, beta, params),
                galois.complement_check(ctx, beta, params),
                galois.frobenius_check(ctx, beta, params),
                galois.squaring_check(ctx, beta, params, case),
                galois.support_formula_check(ctx, beta, params, standard, modified),
            ]
            membership = galois.subfield_membership_check(ctx, beta, params, case)
        logger.info("field check %s (%s): n=%d Z=%d", params.label(), variant.value, ctx.n,
                    evaluation.zero_count)
        return FieldCheckResult(
            n=ctx.n,
            modulus=str(ctx.modulus),
            zero_count=evaluation.zero_count,
            zeros=evaluation.zeros(),
            identities=checks,
            membership=membership,
        )
