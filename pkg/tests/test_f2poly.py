"""Tests for GF(2) polynomials and the two linear complexity routes."""
import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cyclolc.arith.f2poly import (
    F2Poly,
    LCMethod,
    annihilates,
    berlekamp_massey,
    lc_via_gcd,
    lfsr_length,
    lfsr_regenerate,
    linear_complexity_bm,
    linear_complexity_gcd,
    poly_gcd,
)
from cyclolc.errors import ParameterError
from cyclolc.sequences.sequence import BinarySequence


def _random_sequence(n: int, seed: int) -> BinarySequence:
    rng = np.random.default_rng(seed)
    bits = rng.integers(0, 2, size=n, dtype=np.uint8)
    return BinarySequence(bits=bits)


def test_polynomial_text_format():
    """Test the debugging text format."""
    assert str(F2Poly.from_exponents([98, 3, 0])) == "x^98 + x^3 + 1"
    assert str(F2Poly.from_exponents([1])) == "x"
    assert str(F2Poly(0)) == "0"


def test_degree_and_weight():
    """Test degree (zero polynomial is -1) and term count."""
    assert F2Poly(0).degree == -1
    assert F2Poly(1).degree == 0
    poly = F2Poly.from_bits([1, 0, 1, 1])
    assert poly.degree == 3
    assert poly.weight() == 3
    assert poly.exponents() == [3, 2, 0]
    assert poly.eval_at_one() == 1


def test_arithmetic():
    """Test addition, multiplication and division."""
    x_plus_1 = F2Poly(0b11)
    assert x_plus_1 * x_plus_1 == F2Poly(0b101)
    assert x_plus_1 + x_plus_1 == F2Poly(0)
    q, r = divmod(F2Poly.x_pow_plus_one(3), x_plus_1)
    assert q == F2Poly(0b111)
    assert not r
    assert F2Poly(0b1011) % F2Poly(0b11) == F2Poly(1)


def test_repeated_exponents_cancel():
    """Test that x^k + x^k = 0."""
    assert F2Poly.from_exponents([2, 2, 0]) == F2Poly(1)


def test_division_by_zero_polynomial():
    """Test that dividing by the zero polynomial raises."""
    with pytest.raises(ZeroDivisionError):
        F2Poly(0b101) % F2Poly(0)
    with pytest.raises(ValueError):
        poly_gcd(F2Poly(0), F2Poly(0))


def test_gcd():
    """Test gcd(x^4 + 1, x^2 + 1) = x^2 + 1."""
    assert poly_gcd(F2Poly.x_pow_plus_one(4), F2Poly(0b101)) == F2Poly(0b101)
    assert poly_gcd(F2Poly(0), F2Poly(0b11)) == F2Poly(0b11)


@pytest.mark.parametrize("bits, expected", [
    ("0000", 0),
    ("1111", 1),
    ("1000000", 7),
    ("10", 2),
    ("1100", 3),
    ("1010", 2),
])
def test_small_linear_complexities(bits, expected):
    """Test hand-computed linear complexities with both methods."""
    seq = BinarySequence.from_bitstring(bits)
    assert lc_via_gcd(seq).lc == expected
    assert berlekamp_massey(seq).lc == expected


def test_zero_sequence_gcd_result():
    """Test that the zero sequence has minimal polynomial 1."""
    result = linear_complexity_gcd(0, 6)
    assert result.lc == 0
    assert result.minimal_poly == F2Poly(1)
    assert result.gcd_degree == 6
    assert result.method == LCMethod.GCD


def test_lfsr_length_of_msequence():
    """Test that an m-sequence of x^3 + x + 1 has complexity 3."""
    period = lfsr_regenerate(F2Poly(0b1011), [1, 0, 0], 7)
    assert sorted(period) == [0, 0, 0, 1, 1, 1, 1]
    packed = sum(bit << i for i, bit in enumerate(period * 2))
    assert lfsr_length(packed, 14) == 3


def test_bm_needs_two_periods():
    """Test the periods lower bound."""
    with pytest.raises(ParameterError):
        linear_complexity_bm(0b1011, 4, periods=1)


def test_regenerate_rejects_bad_connection():
    """Test connection polynomial validation."""
    with pytest.raises(ValueError):
        lfsr_regenerate(F2Poly(0b110), [1, 0], 5)
    with pytest.raises(ValueError):
        lfsr_regenerate(F2Poly(0b1011), [1], 5)


@settings(max_examples=200, deadline=None)
@given(n=st.integers(min_value=8, max_value=2000), seed=st.integers(min_value=0, max_value=2**32 - 1))
def test_bm_matches_gcd_on_random_sequences(n, seed):
    """Property: Berlekamp-Massey and the gcd route agree."""
    seq = _random_sequence(n, seed)
    bm = berlekamp_massey(seq)
    gcd = lc_via_gcd(seq)
    assert bm.lc == gcd.lc
    assert gcd.minimal_poly.degree == gcd.lc
    assert gcd.lc + gcd.gcd_degree == n


@settings(max_examples=100, deadline=None)
@given(n=st.integers(min_value=8, max_value=200), seed=st.integers(min_value=0, max_value=2**32 - 1))
def test_minimal_polynomial_regenerates_sequence(n, seed):
    """Property: the minimal polynomial regenerates two periods from a prefix."""
    seq = _random_sequence(n, seed)
    result = lc_via_gcd(seq)
    bits = [int(bit) for bit in seq.bits] * 2
    assert annihilates(result.minimal_poly, bits)
