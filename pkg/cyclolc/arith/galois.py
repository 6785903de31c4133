"""GF(2^n) arithmetic and evaluation of support polynomials at p^m-th roots of unity.

Field elements are integers below 2^n (polynomials in x reduced modulo an
irreducible of degree n). Contexts are limited to n <= 64 so a table of
powers fits a numpy uint64 array and sums are a single XOR reduction.
"""
import logging
from functools import lru_cache
from typing import Dict, Iterable, List, Optional, Tuple

import numpy as np
from pydantic import BaseModel, ConfigDict, Field
from sympy import primefactors

from cyclolc.arith.f2poly import F2Poly, _gcd, _mod, _mul
from cyclolc.arith.numtheory import (
    CaseClass,
    Residue,
    SequenceParams,
    discrete_log,
    multiplicative_order,
    p_adic_valuation,
)
from cyclolc.errors import FieldTooLargeError, ParameterError
from cyclolc.sequences.cyclotomy import h2p_residues, hbar_residues
from cyclolc.sequences.sequence import BinarySequence

logger = logging.getLogger(__name__)

MAX_FIELD_DEGREE = 64


def _powmod(base: int, exponent: int, modulus: int) -> int:
    result = 1
    base = _mod(base, modulus)
    while exponent:
        if exponent & 1:
            result = _mod(_mul(result, base), modulus)
        exponent >>= 1
        if exponent:
            base = _mod(_mul(base, base), modulus)
    return result


def _frobenius(value: int, times: int, modulus: int) -> int:
    """value^(2^times) mod modulus."""
    for _ in range(times):
        value = _mod(_mul(value, value), modulus)
    return value


def is_irreducible(poly: F2Poly) -> bool:
    """Rabin's test: x^(2^n) = x mod f and gcd(x^(2^(n/q)) - x, f) = 1 for primes q | n."""
    n = poly.degree
    if n < 1:
        return False
    f = poly.value
    x = _mod(0b10, f)
    if _frobenius(x, n, f) != x:
        return False
    for q in primefactors(n):
        h = _frobenius(x, n // q, f)
        if _gcd(f, h ^ x) != 1:
            return False
    return True


def next_irreducible(after: F2Poly) -> F2Poly:
    """Smallest irreducible of the same degree that is larger than ``after``."""
    n = after.degree
    value = after.value + 1
    if value % 2 == 0:
        value += 1
    while value < 1 << (n + 1):
        candidate = F2Poly(value)
        if is_irreducible(candidate):
            return candidate
        value += 2
    raise ParameterError(f"no irreducible of degree {n} above {after}")


def find_irreducible(n: int, skip: int = 0) -> F2Poly:
    """Lexicographically smallest irreducible of degree n with nonzero constant term.

    ``skip`` steps over that many smaller ones (skip=1 gives the second-smallest).
    """
    if n < 1:
        raise ParameterError("degree must be at least 1")
    poly = next_irreducible(F2Poly(1 << n))
    for _ in range(skip):
        poly = next_irreducible(poly)
    return poly


class FieldCtx(BaseModel):
    """GF(2^n) with n the order of 2 modulo p^m, so it holds the p^m-th roots of unity."""
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    n: int
    modulus: F2Poly
    p: int
    m: int

    @classmethod
    def build(cls, p: int, m: int, modulus: Optional[F2Poly] = None,
              max_degree: int = MAX_FIELD_DEGREE) -> "FieldCtx":
        pm = p ** m
        n = multiplicative_order(2, pm)
        if n > min(max_degree, MAX_FIELD_DEGREE):
            raise FieldTooLargeError(n, min(max_degree, MAX_FIELD_DEGREE))
        if modulus is None:
            modulus = find_irreducible(n)
        elif modulus.degree != n or not is_irreducible(modulus):
            raise ParameterError(f"modulus {modulus} is not irreducible of degree {n}")
        logger.debug("field context GF(2^%d) mod %s for p^m=%d", n, modulus, pm)
        return cls(n=n, modulus=modulus, p=p, m=m)

    @property
    def pm(self) -> int:
        return self.p ** self.m

    def element(self, value: int) -> "FieldElement":
        return FieldElement(self, _mod(value, self.modulus.value))

    @property
    def zero(self) -> "FieldElement":
        return FieldElement(self, 0)

    @property
    def one(self) -> "FieldElement":
        return FieldElement(self, 1)

    def __hash__(self) -> int:
        return hash((self.n, self.modulus.value, self.p, self.m))


class FieldElement:
    """An element of a FieldCtx; arithmetic reduces modulo the context's modulus."""

    __slots__ = ("ctx", "value")

    def __init__(self, ctx: FieldCtx, value: int):
        self.ctx = ctx
        self.value = value

    def _check(self, other: "FieldElement"):
        if other.ctx.modulus != self.ctx.modulus:
            raise ValueError("elements belong to different fields")

    def __add__(self, other: "FieldElement") -> "FieldElement":
        self._check(other)
        return FieldElement(self.ctx, self.value ^ other.value)

    __sub__ = __add__

    def __mul__(self, other: "FieldElement") -> "FieldElement":
        self._check(other)
        return FieldElement(self.ctx, _mod(_mul(self.value, other.value), self.ctx.modulus.value))

    def __pow__(self, exponent: int) -> "FieldElement":
        if exponent < 0:
            raise ValueError("negative powers are not supported")
        return FieldElement(self.ctx, _powmod(self.value, exponent, self.ctx.modulus.value))

    def square(self) -> "FieldElement":
        return self * self

    def in_f2(self) -> bool:
        """x^2 = x."""
        return self.square() == self

    def in_f4(self) -> bool:
        """x^4 = x."""
        return self.square().square() == self

    def is_one(self) -> bool:
        return self.value == 1

    def __bool__(self) -> bool:
        return self.value != 0

    def __eq__(self, other) -> bool:
        if isinstance(other, FieldElement):
            return self.ctx.modulus == other.ctx.modulus and self.value == other.value
        if isinstance(other, int) and other in (0, 1):
            return self.value == other
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.ctx.modulus.value, self.value))

    def __repr__(self) -> str:
        return f"FieldElement({F2Poly(self.value)} mod {self.ctx.modulus})"


def find_root_of_unity(ctx: FieldCtx) -> FieldElement:
    """Deterministic primitive p^m-th root of unity.

    Candidates c = x, x+1, x^2, ... are raised to (2^n - 1)/p^m until the
    result has order exactly p^m.
    """
    pm = ctx.pm
    order = (1 << ctx.n) - 1
    if order % pm != 0:
        raise ParameterError(f"p^m={pm} does not divide 2^{ctx.n}-1")
    cofactor = order // pm
    for c in range(2, 1 << ctx.n):
        beta = ctx.element(c) ** cofactor
        if not (beta ** (pm // ctx.p)).is_one():
            return beta
    raise ParameterError("no primitive root of unity found")


class RootEvaluator:
    """Evaluates sums of x^t at beta^a using a table of the powers of beta."""

    def __init__(self, ctx: FieldCtx, beta: FieldElement):
        self.ctx = ctx
        self.beta = beta
        self.pm = ctx.pm
        powers = np.empty(self.pm, dtype=np.uint64)
        x = ctx.one
        for k in range(self.pm):
            powers[k] = x.value
            x = x * beta
        if not x.is_one():
            raise ParameterError("beta is not a p^m-th root of unity")
        self.powers = powers

    def eval_exponents(self, exponents: Iterable[int], a: int = 1) -> FieldElement:
        """sum over t of beta^(a t); exponents are reduced mod p^m."""
        exps = np.fromiter(exponents, dtype=np.int64)
        if exps.size == 0:
            return self.ctx.zero
        idx = (exps % self.pm) * (a % self.pm) % self.pm
        return FieldElement(self.ctx, int(np.bitwise_xor.reduce(self.powers[idx])))


@lru_cache(maxsize=16)
def _evaluator(ctx: FieldCtx, beta: FieldElement) -> RootEvaluator:
    return RootEvaluator(ctx, beta)


def hbar_eval(ctx: FieldCtx, beta: FieldElement, params: SequenceParams,
              v: int, j: int, a: int = 1) -> FieldElement:
    """H-bar_v^(p^j)(beta^a) = sum of beta^(a t) over t in union_{i<delta_j} p^(m-j) D_{i+v}^(p^j)."""
    return _evaluator(ctx, beta).eval_exponents(hbar_residues(params, v, j), a)


def a_sum(ctx: FieldCtx, beta: FieldElement, params: SequenceParams, l: int, v: int) -> FieldElement:
    """A_{l,v} = sum_{s=1}^{l} H-bar_v^(p^s), evaluated at beta_l = beta^(p^(m-l)).

    H-bar at level s carries the factor p^(m-s), so evaluating it at beta gives
    the same value as the level-l sum at beta_l.
    """
    if not 1 <= l <= params.m:
        raise ParameterError(f"l={l} outside 1..{params.m}")
    total = ctx.zero
    for s in range(1, l + 1):
        total = total + hbar_eval(ctx, beta, params, v, s)
    return total


class SupportEvaluation(BaseModel):
    """Values s(beta^a) for a in Z_{p^m} and the zero count Z."""
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    zero_count: int
    values: Tuple[FieldElement, ...]

    def zeros(self) -> List[int]:
        return [a for a, value in enumerate(self.values) if not value]


def eval_support_at_roots(ctx: FieldCtx, beta: FieldElement, seq: BinarySequence) -> SupportEvaluation:
    """Evaluate the support polynomial at every beta^a and count the zeros."""
    if seq.period != 2 * ctx.pm:
        raise ParameterError(f"sequence period {seq.period} does not match 2p^m={2 * ctx.pm}")
    evaluator = _evaluator(ctx, beta)
    support = np.flatnonzero(seq.bits)
    # x^t at beta^a depends only on t mod p^m; a doubled residue cancels
    parity = np.bincount(support % ctx.pm, minlength=ctx.pm) & 1
    folded = np.flatnonzero(parity)
    values = tuple(evaluator.eval_exponents(folded, a) for a in range(ctx.pm))
    zero_count = sum(1 for value in values if not value)
    logger.debug("support evaluation over %d roots: Z=%d", ctx.pm, zero_count)
    return SupportEvaluation(zero_count=zero_count, values=values)


class MembershipRow(BaseModel):
    """Subfield membership of A_{1,v} and A_{m,v} for one v."""
    model_config = ConfigDict(frozen=True)

    v: int
    a1_in_f2: bool
    a1_in_f4: bool
    am_in_f2: bool
    am_in_f4: bool
    expectations: Dict[str, bool] = Field(default_factory=dict)
    passed: bool = True


class MembershipReport(BaseModel):
    """Subfield membership verdicts across all v in [0, d_m)."""
    model_config = ConfigDict(frozen=True)

    clauses: List[str]
    observations: List[str] = Field(default_factory=list)
    rows: List[MembershipRow]

    @property
    def passed(self) -> bool:
        return all(row.passed for row in self.rows)


def membership_clauses(params: SequenceParams, case: CaseClass) -> List[str]:
    """Names of the membership statements that apply to this case."""
    m, f, h = params.m, params.f, case.h
    delta1 = f // 2
    clauses = []
    if h % params.d(m) == 0:
        clauses.append("am_in_f2")
    if h % f != 0:
        clauses.append("am_not_in_f2")
    if case.e_residue_mod_p == Residue.PLUS_ONE:
        clauses.append("a1_in_f2")
        if m >= 2 and case.e_residue_mod_p2 != Residue.PLUS_ONE:
            clauses.append("am_not_in_f4")
    if case.e_residue_mod_p == Residue.MINUS_ONE:
        clauses.append("a1_in_f4_minus_f2")
        if m >= 2 and case.e_residue_mod_p2 != Residue.MINUS_ONE:
            clauses.append("am_not_in_f4")
    if h % delta1 != 0:
        clauses.append("am_not_in_f4")
    return list(dict.fromkeys(clauses))


def _expect(clause: str, row: Dict[str, bool]) -> bool:
    if clause == "am_in_f2":
        return row["am_in_f2"]
    if clause == "am_not_in_f2":
        return not row["am_in_f2"]
    if clause == "a1_in_f2":
        return row["a1_in_f2"]
    if clause == "a1_in_f4_minus_f2":
        return row["a1_in_f4"] and not row["a1_in_f2"]
    if clause == "am_not_in_f4":
        return not row["am_in_f4"]
    raise ValueError(f"unknown clause {clause}")


def subfield_membership_check(ctx: FieldCtx, beta: FieldElement, params: SequenceParams,
                              case: CaseClass) -> MembershipReport:
    """Test subfield membership of A_{1,v} and A_{m,v} for every v against the classified case."""
    clauses = membership_clauses(params, case)
    observations = []
    if case.wieferich and case.e_residue_mod_p2 != Residue.NEITHER:
        observations.append(
            f"2^e = {case.e_residue_mod_p2.value} mod p^2 (Wieferich prime): "
            "higher-level membership is reported, not asserted"
        )
    rows = []
    for v in range(params.d(params.m)):
        a1 = a_sum(ctx, beta, params, 1, v)
        am = a_sum(ctx, beta, params, params.m, v)
        flags = {
            "a1_in_f2": a1.in_f2(),
            "a1_in_f4": a1.in_f4(),
            "am_in_f2": am.in_f2(),
            "am_in_f4": am.in_f4(),
        }
        expectations = {clause: _expect(clause, flags) for clause in clauses}
        rows.append(MembershipRow(v=v, expectations=expectations,
                                  passed=all(expectations.values()), **flags))
    report = MembershipReport(clauses=clauses, observations=observations, rows=rows)
    if not report.passed:
        logger.warning("membership check failed for %s", params.label())
    return report


class IdentityCheck(BaseModel):
    """Outcome of one field identity checked over many instances."""
    model_config = ConfigDict(frozen=True)

    name: str
    checked: int
    failures: List[str] = Field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures


class _Collector:
    MAX_REPORTED = 5

    def __init__(self, name: str):
        self.name = name
        self.checked = 0
        self.failures: List[str] = []
        self.failed = 0

    def expect(self, ok: bool, detail: str):
        self.checked += 1
        if not ok:
            self.failed += 1
            if len(self.failures) < self.MAX_REPORTED:
                self.failures.append(detail)

    def result(self) -> IdentityCheck:
        if self.failed:
            logger.warning("identity %s failed on %d of %d instances", self.name, self.failed, self.checked)
        return IdentityCheck(name=self.name, checked=self.checked, failures=self.failures)


def _scalar(ctx: FieldCtx, value: int) -> FieldElement:
    return ctx.one if value % 2 else ctx.zero


def complementary_sum_check(ctx: FieldCtx, beta: FieldElement, params: SequenceParams) -> IdentityCheck:
    """H-bar_v + H-bar_{v+delta_j} is 1 at level 1 and 0 at every higher level."""
    out = _Collector("complementary_sums")
    for j in range(1, params.m + 1):
        expected = ctx.one if j == 1 else ctx.zero
        delta = params.delta(j)
        for v in range(params.d(j)):
            total = hbar_eval(ctx, beta, params, v, j) + hbar_eval(ctx, beta, params, v + delta, j)
            out.expect(total == expected, f"j={j} v={v}: got {total}")
    return out.result()


def _split(params: SequenceParams, a: int) -> Tuple[int, int]:
    """a = p^l u with u in D_k^(p^(m-l)); returns (l, k)."""
    l = p_adic_valuation(a, params.p)
    level = params.m - l
    modulus = params.p ** level
    k = discrete_log(params.g, (a // params.p ** l) % modulus, modulus) % params.d(level)
    return l, k


def shifted_evaluation_check(ctx: FieldCtx, beta: FieldElement, params: SequenceParams) -> IdentityCheck:
    """Value of H-bar_b^(p^j)(beta^a) for every nonzero a and level j, split by v_p(a)."""
    out = _Collector("shifted_evaluation")
    p, b = params.p, params.b
    for a in range(1, params.pm):
        l, k = _split(params, a)
        for j in range(1, params.m + 1):
            got = hbar_eval(ctx, beta, params, b, j, a)
            if j <= l:
                expected = _scalar(ctx, p ** (j - 1) * (p - 1) // 2)
            elif j == l + 1:
                expected = _scalar(ctx, (p ** l - 1) // 2) + hbar_eval(ctx, beta, params, b + k, 1)
            else:
                expected = hbar_eval(ctx, beta, params, b + k, j - l)
            out.expect(got == expected, f"a={a} j={j}: got {got}, expected {expected}")
    return out.result()


def squaring_check(ctx: FieldCtx, beta: FieldElement, params: SequenceParams,
                   case: CaseClass) -> IdentityCheck:
    """A_v^2 = A_{v+h} where 2 lies in D_h^(p^m)."""
    out = _Collector("squaring")
    for v in range(params.d(params.m)):
        lhs = a_sum(ctx, beta, params, params.m, v).square()
        rhs = a_sum(ctx, beta, params, params.m, v + case.h)
        out.expect(lhs == rhs, f"v={v}")
    return out.result()


def complement_check(ctx: FieldCtx, beta: FieldElement, params: SequenceParams) -> IdentityCheck:
    """A_{l,v} + A_{l,v+delta_l} = 1 for every level l and every v."""
    out = _Collector("complementary_a_sums")
    for l in range(1, params.m + 1):
        delta = params.delta(l)
        for v in range(params.d(l)):
            total = a_sum(ctx, beta, params, l, v) + a_sum(ctx, beta, params, l, v + delta)
            out.expect(total.is_one(), f"l={l} v={v}")
    return out.result()


def frobenius_check(ctx: FieldCtx, beta: FieldElement, params: SequenceParams) -> IdentityCheck:
    """H_b^(2p^j)(beta^a) = H-bar_b(beta^a) and H_b^(p^j)(beta^a) = H-bar_b(beta^a)^2."""
    out = _Collector("frobenius")
    evaluator = _evaluator(ctx, beta)
    for j in range(1, params.m + 1):
        plain = hbar_residues(params, params.b, j)
        doubled = [2 * t for t in plain]
        lifted = h2p_residues(params, params.b, j)
        for a in range(params.pm):
            hbar = evaluator.eval_exponents(plain, a)
            out.expect(evaluator.eval_exponents(lifted, a) == hbar, f"j={j} a={a}: odd lift")
            out.expect(evaluator.eval_exponents(doubled, a) == hbar.square(), f"j={j} a={a}: even part")
    return out.result()


def support_formula_check(ctx: FieldCtx, beta: FieldElement, params: SequenceParams,
                          standard: SupportEvaluation, modified: SupportEvaluation) -> IdentityCheck:
    """Direct values s(beta^a), s~(beta^a) against 1 + S + S^2 and S + S^2."""
    out = _Collector("support_formula")
    for a in range(params.pm):
        if a == 0:
            out.expect(standard.values[0].is_one() and modified.values[0].is_one(), "a=0")
            continue
        l, k = _split(params, a)
        total = a_sum(ctx, beta, params, params.m - l, params.b + k)
        modified_expected = total + total.square()
        out.expect(standard.values[a] == ctx.one + modified_expected, f"a={a}: standard")
        out.expect(modified.values[a] == modified_expected, f"a={a}: modified")
    return out.result()
