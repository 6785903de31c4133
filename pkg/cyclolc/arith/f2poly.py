"""Polynomials over GF(2), Berlekamp-Massey, and the GCD route to linear complexity.

A polynomial b_n x^n + ... + b_1 x + b_0 is stored as the nonnegative integer
b_n 2^n + ... + b_1 2 + b_0, so Python's big integers act as the packed word
array and XOR is addition.
"""
import logging
from enum import Enum
from typing import TYPE_CHECKING, Iterable, List, Optional

from pydantic import BaseModel, ConfigDict

from cyclolc.errors import ParameterError

if TYPE_CHECKING:
    from cyclolc.sequences.sequence import BinarySequence

logger = logging.getLogger(__name__)


def _mul(a: int, b: int) -> int:
    if a.bit_length() < b.bit_length():
        a, b = b, a
    c = 0
    while b:
        low = b & -b
        c ^= a << (low.bit_length() - 1)
        b ^= low
    return c


def _divmod(a: int, b: int):
    if b == 0:
        raise ZeroDivisionError("division by zero polynomial")
    db = b.bit_length()
    q = 0
    while a.bit_length() >= db:
        shift = a.bit_length() - db
        q |= 1 << shift
        a ^= b << shift
    return q, a


def _mod(a: int, b: int) -> int:
    if b == 0:
        raise ZeroDivisionError("division by zero polynomial")
    db = b.bit_length()
    while a.bit_length() >= db:
        a ^= b << (a.bit_length() - db)
    return a


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, _mod(a, b)
    return a


class F2Poly:
    """Immutable dense polynomial over the two-element field."""

    __slots__ = ("_value",)

    def __init__(self, value: int = 0):
        if value < 0:
            raise ValueError("polynomial value must be nonnegative")
        self._value = int(value)

    @classmethod
    def from_exponents(cls, exponents: Iterable[int]) -> "F2Poly":
        """Sum of x^k over the given exponents (repeated exponents cancel)."""
        value = 0
        for k in exponents:
            value ^= 1 << k
        return cls(value)

    @classmethod
    def from_bits(cls, bits: Iterable[int]) -> "F2Poly":
        """Coefficient list, index = exponent."""
        value = 0
        for k, bit in enumerate(bits):
            if bit:
                value |= 1 << k
        return cls(value)

    @classmethod
    def x_pow_plus_one(cls, n: int) -> "F2Poly":
        """x^n + 1 (which is x^n - 1 over this field)."""
        return cls((1 << n) | 1)

    @property
    def value(self) -> int:
        return self._value

    @property
    def degree(self) -> int:
        """Degree; -1 stands for the zero polynomial's negative infinity."""
        return self._value.bit_length() - 1

    def coefficient(self, k: int) -> int:
        return (self._value >> k) & 1

    def exponents(self) -> List[int]:
        """Exponents of nonzero terms, descending."""
        out = []
        v = self._value
        while v:
            top = v.bit_length() - 1
            out.append(top)
            v ^= 1 << top
        return out

    def weight(self) -> int:
        return bin(self._value).count("1")

    def eval_at_one(self) -> int:
        """Value at x = 1 over GF(2): the parity of the number of terms."""
        return self.weight() & 1

    def __add__(self, other: "F2Poly") -> "F2Poly":
        return F2Poly(self._value ^ _coerce(other))

    __sub__ = __add__
    __radd__ = __add__

    def __mul__(self, other: "F2Poly") -> "F2Poly":
        return F2Poly(_mul(self._value, _coerce(other)))

    __rmul__ = __mul__

    def __divmod__(self, other: "F2Poly"):
        q, r = _divmod(self._value, _coerce(other))
        return F2Poly(q), F2Poly(r)

    def __floordiv__(self, other: "F2Poly") -> "F2Poly":
        return divmod(self, other)[0]

    def __mod__(self, other: "F2Poly") -> "F2Poly":
        return F2Poly(_mod(self._value, _coerce(other)))

    def __eq__(self, other) -> bool:
        if isinstance(other, F2Poly):
            return self._value == other._value
        if isinstance(other, int):
            return self._value == other
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self._value)

    def __bool__(self) -> bool:
        return self._value != 0

    def __repr__(self) -> str:
        return f"F2Poly({self})"

    def __str__(self) -> str:
        terms = []
        for k in self.exponents():
            if k == 0:
                terms.append("1")
            elif k == 1:
                terms.append("x")
            else:
                terms.append(f"x^{k}")
        return " + ".join(terms) if terms else "0"


def _coerce(other) -> int:
    if isinstance(other, F2Poly):
        return other.value
    if isinstance(other, int) and other >= 0:
        return other
    raise TypeError(f"cannot combine F2Poly with {type(other).__name__}")


def poly_add(a: F2Poly, b: F2Poly) -> F2Poly:
    return a + b


def poly_mul(a: F2Poly, b: F2Poly) -> F2Poly:
    return a * b


def poly_mod(a: F2Poly, b: F2Poly) -> F2Poly:
    return a % b


def poly_gcd(a: F2Poly, b: F2Poly) -> F2Poly:
    """Greatest common divisor by Euclid; monic automatically over GF(2)."""
    if not a and not b:
        raise ValueError("gcd of two zero polynomials is undefined")
    return F2Poly(_gcd(a.value, b.value))


class LCMethod(str, Enum):
    """How a linear complexity value was obtained."""
    BM = "BM"
    GCD = "GCD"


class LCResult(BaseModel):
    """Linear complexity of one periodic sequence."""
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    lc: int
    method: LCMethod
    minimal_poly: Optional[F2Poly] = None
    gcd_degree: Optional[int] = None


def linear_complexity_gcd(packed: int, period: int) -> LCResult:
    """LC = N - deg gcd(x^N - 1, c^N(x)) and m(x) = (x^N - 1) / gcd."""
    if period < 1:
        raise ParameterError("period must be positive")
    modulus = F2Poly.x_pow_plus_one(period)
    c = F2Poly(packed & ((1 << period) - 1))
    if not c:
        # zero sequence: gcd is x^N - 1 itself
        return LCResult(lc=0, method=LCMethod.GCD, minimal_poly=F2Poly(1), gcd_degree=period)
    g = poly_gcd(modulus, c)
    minimal, rem = divmod(modulus, g)
    if rem:
        raise ArithmeticError("gcd does not divide x^N - 1")
    return LCResult(
        lc=period - g.degree,
        method=LCMethod.GCD,
        minimal_poly=minimal,
        gcd_degree=g.degree,
    )


def lfsr_length(s: int, length: int) -> int:
    """Length of the shortest LFSR generating bits s_0..s_{length-1} (bit i of s).

    Keeps the products s*B and s*C as shifted integers and updates them
    incrementally, so the inner loop is a handful of big-integer operations.
    """
    if length < 0:
        raise ValueError("bit sequence cannot have negative length")
    sb, sc = s, s
    deg_c = 0
    shift = 0
    for n in range(length):
        disc = sc & (1 << shift)
        shift += 1
        if disc:
            sc >>= shift
            shift = 0
            if 2 * deg_c <= n:
                sb, sc = sc, sb
                deg_c = n + 1 - deg_c
            sc ^= sb
    return deg_c


def linear_complexity_bm(packed: int, period: int, periods: int = 2) -> LCResult:
    """Berlekamp-Massey over ``periods`` concatenated copies of one period."""
    if periods < 2:
        raise ParameterError("Berlekamp-Massey needs at least two periods")
    one = packed & ((1 << period) - 1)
    stream = 0
    for k in range(periods):
        stream |= one << (k * period)
    return LCResult(lc=lfsr_length(stream, periods * period), method=LCMethod.BM)


def lc_via_gcd(seq: "BinarySequence") -> LCResult:
    return linear_complexity_gcd(seq.packed, seq.period)


def berlekamp_massey(seq: "BinarySequence", periods: int = 2) -> LCResult:
    return linear_complexity_bm(seq.packed, seq.period, periods)


def lfsr_regenerate(connection: F2Poly, seed: List[int], length: int) -> List[int]:
    """Extend ``seed`` to ``length`` bits with s_i = sum_{k>=1} c_k s_{i-k}.

    ``connection`` is a polynomial with constant term 1 (a minimal polynomial
    m(x) as returned by ``linear_complexity_gcd``); its degree L is the number
    of seed bits consumed.
    """
    L = connection.degree
    if L < 0 or not connection.coefficient(0):
        raise ValueError("connection polynomial needs constant term 1")
    if len(seed) < L:
        raise ValueError(f"need {L} seed bits, got {len(seed)}")
    taps = [k for k in connection.exponents() if k >= 1]
    out = list(seed[:L])
    for i in range(L, length):
        bit = 0
        for k in taps:
            bit ^= out[i - k]
        out.append(bit)
    return out[:length]


def annihilates(connection: F2Poly, bits: List[int]) -> bool:
    """True iff the recurrence from ``connection`` regenerates ``bits`` from its prefix."""
    L = connection.degree
    if L == 0:
        return not any(bits)
    return lfsr_regenerate(connection, bits[:L], len(bits)) == list(bits)
