"""Modular arithmetic primitives and sequence parameters.

Everything here is a pure function of its arguments. Primality, factoring,
orders and discrete logarithms come from ``sympy.ntheory``; this module adds
the domain types and the error contract on top.
"""
import logging
from enum import Enum
from math import gcd
from typing import Any, Optional

from pydantic import BaseModel, ConfigDict, ValidationError, model_validator
from sympy import isprime, primefactors, totient
from sympy.ntheory import discrete_log as _sympy_discrete_log
from sympy.ntheory import n_order

from cyclolc.errors import InconsistencyError, NotAUnitError, ParameterError

logger = logging.getLogger(__name__)


class Residue(str, Enum):
    """Where 2^e lands modulo p or p^2."""
    PLUS_ONE = "PlusOne"
    MINUS_ONE = "MinusOne"
    NEITHER = "Neither"


def multiplicative_order(a: int, modulus: int) -> int:
    """Least k >= 1 with a^k = 1 (mod modulus)."""
    if modulus < 2:
        raise ParameterError(f"modulus must be at least 2, got {modulus}")
    if gcd(a, modulus) != 1:
        raise NotAUnitError(a, modulus)
    return int(n_order(a % modulus, modulus))


def _is_generator(g: int, modulus: int) -> bool:
    phi = int(totient(modulus))
    if gcd(g, modulus) != 1:
        return False
    return all(pow(g, phi // q, modulus) != 1 for q in primefactors(phi))


def validate_primitive_root(g: int, p: int, m: int) -> bool:
    """True iff g is odd and generates the units mod p and mod p^2.

    The check at p^2 lifts to every p^j (j <= m), and oddness lifts it to 2p^j.
    For m = 1 only the modulus p is checked.
    """
    if g < 2 or g % 2 == 0:
        return False
    if not _is_generator(g, p):
        return False
    if m >= 2 and not _is_generator(g, p * p):
        return False
    return True


def find_common_odd_primitive_root(p: int, m: int) -> int:
    """Smallest odd g >= 3 that is a common primitive root mod p^j and 2p^j."""
    if p < 3 or not isprime(p):
        raise ParameterError("p must be an odd prime")
    if m < 1:
        raise ParameterError("m must be a positive integer")
    g = 3
    while not validate_primitive_root(g, p, m):
        g += 2
    return g


def discrete_log(g: int, x: int, modulus: int) -> int:
    """k in [0, phi(modulus)) with g^k = x (mod modulus), g a primitive root."""
    if gcd(x, modulus) != 1:
        raise NotAUnitError(x, modulus)
    phi = int(totient(modulus))
    if x % modulus == 1 % modulus:
        return 0
    # sympy scans small groups and switches to baby-step/giant-step or
    # Pohlig-Hellman for larger orders.
    k = int(_sympy_discrete_log(modulus, x % modulus, g % modulus))
    return k % phi


def p_adic_valuation(a: int, p: int) -> int:
    """Largest l with p^l | a; a must be nonzero."""
    if a == 0:
        raise ValueError("valuation of zero is undefined")
    l = 0
    while a % p == 0:
        a //= p
        l += 1
    return l


def _is_power_of_two(x: int) -> bool:
    return x > 0 and x & (x - 1) == 0


class SequenceParams(BaseModel):
    """Validated parameter set (p, m, f, e, b, g) for period 2p^m."""
    model_config = ConfigDict(frozen=True)

    p: int
    m: int
    f: int
    e: int
    b: int = 0
    g: int

    @model_validator(mode="before")
    @classmethod
    def _reduce_shift(cls, data: Any) -> Any:
        if not isinstance(data, dict):
            return data
        p, m, f = data.get("p"), data.get("m"), data.get("f")
        if all(isinstance(v, int) and v > 0 for v in (p, m, f)):
            data = dict(data)
            data["b"] = int(data.get("b", 0)) % (p ** (m - 1) * f)
        return data

    @model_validator(mode="after")
    def _check_invariants(self) -> "SequenceParams":
        if self.p < 3 or not isprime(self.p):
            raise ParameterError("p must be an odd prime")
        if self.m < 1:
            raise ParameterError("m must be a positive integer")
        if self.f < 2 or not _is_power_of_two(self.f):
            raise ParameterError("f must be a power of two, at least 2")
        if (self.p - 1) % self.f != 0:
            raise ParameterError(f"f={self.f} does not divide p-1={self.p - 1}")
        if self.e * self.f != self.p - 1:
            raise ParameterError(f"e*f must equal p-1 (e={self.e}, f={self.f}, p={self.p})")
        if self.g % 2 == 0:
            raise ParameterError("g must be odd")
        if not validate_primitive_root(self.g, self.p, self.m):
            raise ParameterError(
                f"g={self.g} is not a common primitive root modulo p^j and 2p^j for p={self.p}"
            )
        return self

    @classmethod
    def build(
        cls,
        p: int,
        m: int,
        f: Optional[int] = None,
        e: Optional[int] = None,
        b: int = 0,
        g: Optional[int] = None,
    ) -> "SequenceParams":
        """Construct from user input; exactly one of f and e is required.

        g defaults to the smallest odd common primitive root. Every failure is
        reported as a single-line ParameterError.
        """
        if p < 3 or not isprime(p):
            raise ParameterError("p must be an odd prime")
        if m < 1:
            raise ParameterError("m must be a positive integer")
        if f is None and e is None:
            raise ParameterError("exactly one of f and e must be given")
        if f is not None and e is not None and e * f != p - 1:
            raise ParameterError(f"e*f must equal p-1 (e={e}, f={f}, p={p})")
        if f is None:
            if e <= 0 or (p - 1) % e != 0:
                raise ParameterError(f"e={e} does not divide p-1={p - 1}")
            f = (p - 1) // e
        if e is None:
            if f <= 0 or (p - 1) % f != 0:
                raise ParameterError(f"f={f} does not divide p-1={p - 1}")
            e = (p - 1) // f
        if g is None:
            g = find_common_odd_primitive_root(p, m)
            logger.debug("auto-selected g=%d for p=%d m=%d", g, p, m)
        try:
            return cls(p=p, m=m, f=f, e=e, b=b, g=g)
        except ValidationError as exc:
            first = exc.errors()[0]
            cause = first.get("ctx", {}).get("error")
            if isinstance(cause, ParameterError):
                raise cause from None
            raise ParameterError(first.get("msg", str(exc))) from None

    def with_shift(self, b: int) -> "SequenceParams":
        """Same parameters with a different shift b."""
        return SequenceParams(p=self.p, m=self.m, f=self.f, e=self.e, b=b, g=self.g)

    @property
    def pm(self) -> int:
        """p^m."""
        return self.p ** self.m

    @property
    def period(self) -> int:
        """N = 2p^m."""
        return 2 * self.pm

    def d(self, j: int) -> int:
        """d_j = p^(j-1) f, the number of classes at level j."""
        self._check_level(j)
        return self.p ** (j - 1) * self.f

    def delta(self, j: int) -> int:
        """delta_j = d_j / 2."""
        return self.d(j) // 2

    def phi(self, j: int) -> int:
        """phi(p^j)."""
        self._check_level(j)
        return self.p ** (j - 1) * (self.p - 1)

    def _check_level(self, j: int):
        if not 1 <= j <= self.m:
            raise ParameterError(f"level j={j} outside 1..{self.m}")

    def label(self) -> str:
        return f"p={self.p} m={self.m} f={self.f} e={self.e} b={self.b} g={self.g}"


class CaseClass(BaseModel):
    """Where 2 sits among the cyclotomic classes; drives every theorem case."""
    model_config = ConfigDict(frozen=True)

    tau: int
    e_residue_mod_p: Residue
    e_residue_mod_p2: Residue
    wieferich: bool
    h: int
    n: int
    order_lifts: bool


def _residue(x: int, modulus: int) -> Residue:
    if x % modulus == 1:
        return Residue.PLUS_ONE
    if x % modulus == modulus - 1:
        return Residue.MINUS_ONE
    return Residue.NEITHER


def classify_case(params: SequenceParams) -> CaseClass:
    """Classify 2^e mod p and p^2 and locate 2 in D_h^(p^m)."""
    p, m, e = params.p, params.m, params.e
    p2 = p * p
    tau = multiplicative_order(2, p)
    h = discrete_log(params.g, 2, params.pm) % params.d(m)
    n = multiplicative_order(2, params.pm)
    order_lifts = all(
        multiplicative_order(2, p ** j) == tau * p ** (j - 1) for j in range(2, m + 1)
    )
    case = CaseClass(
        tau=tau,
        e_residue_mod_p=_residue(pow(2, e, p), p),
        e_residue_mod_p2=_residue(pow(2, e, p2), p2),
        wieferich=pow(2, p - 1, p2) == 1,
        h=h,
        n=n,
        order_lifts=order_lifts,
    )
    if not case.wieferich and not case.order_lifts:
        raise InconsistencyError(
            f"order of 2 does not lift from p to p^j although p is not Wieferich: {params.label()}"
        )
    logger.debug("classified %s: %s", params.label(), case)
    return case
