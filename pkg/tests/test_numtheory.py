"""Tests for number-theoretic primitives and parameter validation."""
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from sympy import primerange

from cyclolc.arith import numtheory
from cyclolc.arith.numtheory import (
    Residue,
    SequenceParams,
    classify_case,
    discrete_log,
    find_common_odd_primitive_root,
    multiplicative_order,
    p_adic_valuation,
    validate_primitive_root,
)
from cyclolc.errors import InconsistencyError, NotAUnitError, ParameterError

# (p, m, f) with f a power of two dividing p-1
CASE_GRID = [
    (p, m, f)
    for p in primerange(3, 200)
    for f in (2, 4, 8, 16)
    if (p - 1) % f == 0
    for m in (1, 2)
]


def test_multiplicative_order():
    """Test orders of 2 for the moduli used in the examples."""
    assert multiplicative_order(2, 7) == 3
    assert multiplicative_order(2, 49) == 21
    assert multiplicative_order(2, 5) == 4
    assert multiplicative_order(2, 25) == 20
    assert multiplicative_order(2, 31) == 5


def test_multiplicative_order_not_a_unit():
    """Test that a non-unit is rejected with a parameter error."""
    with pytest.raises(NotAUnitError) as excinfo:
        multiplicative_order(2, 8)
    assert isinstance(excinfo.value, ParameterError)
    assert "not a unit" in str(excinfo.value)


def test_find_common_odd_primitive_root():
    """Test the smallest odd common primitive root."""
    assert find_common_odd_primitive_root(7, 2) == 3
    assert find_common_odd_primitive_root(5, 2) == 3
    assert find_common_odd_primitive_root(31, 1) == 3
    # 3 and 5 have order 5 modulo 11
    assert find_common_odd_primitive_root(11, 2) == 7


def test_validate_primitive_root():
    """Test primitive root validation including oddness."""
    assert validate_primitive_root(3, 7, 2)
    assert validate_primitive_root(5, 7, 2)
    assert not validate_primitive_root(2, 5, 1)
    assert not validate_primitive_root(9, 7, 1)


def test_discrete_log():
    """Test that the discrete logarithm inverts modular exponentiation."""
    for x in (2, 3, 10, 48):
        k = discrete_log(3, x, 49)
        assert 0 <= k < 42
        assert pow(3, k, 49) == x
    assert discrete_log(3, 1, 49) == 0


def test_discrete_log_not_a_unit():
    """Test discrete log of a multiple of p."""
    with pytest.raises(NotAUnitError):
        discrete_log(3, 7, 49)


def test_p_adic_valuation():
    """Test p-adic valuation."""
    assert p_adic_valuation(50, 5) == 2
    assert p_adic_valuation(7, 5) == 0
    with pytest.raises(ValueError):
        p_adic_valuation(0, 5)


def test_build_derives_f_and_e():
    """Test that exactly one of f and e is needed."""
    from_f = SequenceParams.build(7, 2, f=2, g=3)
    from_e = SequenceParams.build(7, 2, e=3, g=3)
    assert from_f == from_e
    assert from_f.e == 3


def test_build_auto_selects_g():
    """Test the default primitive root."""
    params = SequenceParams.build(11, 2, e=5)
    assert params.g == 7


@pytest.mark.parametrize("kwargs, message", [
    (dict(p=4, m=1, f=2), "p must be an odd prime"),
    (dict(p=2, m=1, f=2), "p must be an odd prime"),
    (dict(p=7, m=0, f=2), "m must be a positive integer"),
    (dict(p=7, m=1, f=3), "f must be a power of two"),
    (dict(p=7, m=1, e=5), "does not divide"),
    (dict(p=7, m=1), "exactly one of f and e"),
    (dict(p=7, m=1, f=2, e=2), "e*f must equal p-1"),
    (dict(p=5, m=1, f=2, g=2), "g must be odd"),
    (dict(p=7, m=1, f=2, g=9), "not a common primitive root"),
])
def test_build_rejects_invalid(kwargs, message):
    """Test one-line validation errors."""
    with pytest.raises(ParameterError) as excinfo:
        SequenceParams.build(**kwargs)
    assert message in str(excinfo.value)
    assert "\n" not in str(excinfo.value)


def test_shift_reduced_mod_d_m():
    """Test that b is reduced modulo d_m."""
    params = SequenceParams.build(5, 2, f=2, b=12, g=3)
    assert params.b == 2
    assert SequenceParams.build(5, 2, f=2, b=2, g=3) == params


def test_level_quantities():
    """Test d_j, delta_j and phi(p^j)."""
    params = SequenceParams.build(5, 2, f=2, g=3)
    assert params.d(1) == 2
    assert params.d(2) == 10
    assert params.delta(2) == 5
    assert params.phi(2) == 20
    assert params.period == 50
    with pytest.raises(ParameterError):
        params.d(3)


def test_classify_plus_one_case(example1_params):
    """Test 2^3 = 1 mod 7 but not mod 49."""
    case = classify_case(example1_params)
    assert case.e_residue_mod_p == Residue.PLUS_ONE
    assert case.e_residue_mod_p2 == Residue.NEITHER
    assert case.tau == 3
    assert case.n == 21
    assert case.h % 2 == 0
    assert case.h % 14 != 0
    assert not case.wieferich
    assert case.order_lifts


def test_classify_minus_one_case(example2_params):
    """Test 2^2 = -1 mod 5 but not mod 25."""
    case = classify_case(example2_params)
    assert case.e_residue_mod_p == Residue.MINUS_ONE
    assert case.e_residue_mod_p2 == Residue.NEITHER
    assert case.n == 20
    assert case.h % 2 == 1
    assert any(pow(3, case.h + 10 * t, 25) == 2 for t in range(2))


def test_classify_neither_case(example2ii_params):
    """Test 2^1 is neither 1 nor -1 mod 5."""
    case = classify_case(example2ii_params)
    assert case.e_residue_mod_p == Residue.NEITHER
    # 2 = 3^3 mod 5
    assert case.h % 4 == 3


def test_classify_flags_wieferich_prime():
    """Test the Wieferich flag on p=1093."""
    params = SequenceParams.build(1093, 1, f=4)
    assert classify_case(params).wieferich
    assert classify_case(params).order_lifts


def test_classify_rejects_order_that_does_not_lift(monkeypatch, example1_params):
    """Test that a non-Wieferich prime whose order of 2 fails to lift is an inconsistency."""
    real_order = numtheory.multiplicative_order
    monkeypatch.setattr(numtheory, "multiplicative_order", lambda a, modulus: real_order(a, 7))
    with pytest.raises(InconsistencyError, match="does not lift"):
        classify_case(example1_params)


@settings(max_examples=80, deadline=None)
@given(case=st.sampled_from(CASE_GRID))
def test_classify_residue_matches_class_of_two(case):
    """Test 2^e = 1 iff d_1 | h and 2^e = -1 iff h = delta_1 mod d_1, plus the p^2 analogue."""
    p, m, f = case
    params = SequenceParams.build(p, m, f=f)
    result = classify_case(params)
    d1, delta1 = params.d(1), params.delta(1)
    assert (result.e_residue_mod_p == Residue.PLUS_ONE) == (result.h % d1 == 0)
    assert (result.e_residue_mod_p == Residue.MINUS_ONE) == (result.h % d1 == delta1)
    if m >= 2:
        d2, delta2 = params.d(2), params.delta(2)
        assert (result.e_residue_mod_p2 == Residue.PLUS_ONE) == (result.h % d2 == 0)
        assert (result.e_residue_mod_p2 == Residue.MINUS_ONE) == (result.h % d2 == delta2)
    assert result.order_lifts
