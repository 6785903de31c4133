"""Tests for cyclotomic classes, partitions and support sets."""
import pytest

from cyclolc.arith.numtheory import SequenceParams
from cyclolc.sequences.cyclotomy import (
    ModulusKind,
    Variant,
    build_class,
    build_support,
    h2p_residues,
    hbar_residues,
    iter_level_residues,
    verify_partitions,
)
from tests.conftest import structural_params


def test_build_class_mod_p(example1_params):
    """Test D_0 and D_1 modulo 7 for g=3, f=2."""
    assert build_class(example1_params, 1, 0, ModulusKind.P_POWER).elements == (1, 2, 4)
    assert build_class(example1_params, 1, 1, ModulusKind.P_POWER).elements == (3, 5, 6)


def test_build_class_mod_2p(example1_params):
    """Test D_0 modulo 14."""
    cls = build_class(example1_params, 1, 0, ModulusKind.TWO_P_POWER)
    assert cls.elements == (1, 9, 11)
    assert 9 in cls
    assert 23 in cls
    assert len(cls) == example1_params.e


def test_class_index_wraps(example1_params):
    """Test that the class index is taken modulo d_j."""
    assert build_class(example1_params, 1, 2, ModulusKind.P_POWER).index == 0


def test_scaled_class(example1_params):
    """Test 2p^(m-j) D_0^(p) inside Z_98."""
    cls = build_class(example1_params, 1, 0, ModulusKind.P_POWER, scaled=True)
    assert cls.multiplier == 14
    assert cls.modulus == 98
    assert cls.elements == (14, 28, 56)


def test_iter_level_residues_odd_lift(example1_params):
    """Test that the residue modulo 2p^j is odd and congruent modulo p^j."""
    for index, x, y in iter_level_residues(example1_params, 2):
        assert y % 2 == 1
        assert y % 49 == x
        assert 0 <= index < example1_params.d(2)


@pytest.mark.parametrize("params", structural_params(), ids=lambda p: f"p{p.p}-m{p.m}-f{p.f}")
def test_partitions_hold(params):
    """Test that the classes tile the unit groups, Z_(p^m) and Z_(2p^m)."""
    check = verify_partitions(params)
    assert check, check.diagnostic
    assert check.diagnostic is None


def test_partition_failure_is_reported():
    """Test the diagnostic when a g that is not a primitive root slips through."""
    params = SequenceParams.model_construct(p=7, m=1, f=2, e=3, b=0, g=9)
    check = verify_partitions(params)
    assert not check
    assert "covered" in check.diagnostic


@pytest.mark.parametrize("variant", list(Variant))
def test_support_size(example2_params, variant):
    """Test that |C_1| = p^m, 0 is a one and p^m is a zero."""
    support = build_support(example2_params, variant)
    assert len(support.ones) == 25
    assert len(support.zeros) == 25
    assert 0 in support
    assert 25 not in support
    assert not support.bitmap.flags.writeable


def test_hbar_residue_counts(example1_params):
    """Test |H-bar_v^(p^j)| = phi(p^j)/2 for both levels."""
    for j in (1, 2):
        assert len(hbar_residues(example1_params, 0, j)) == example1_params.phi(j) // 2
        assert len(h2p_residues(example1_params, 0, j)) == example1_params.phi(j) // 2


def test_hbar_complementary_halves(example1_params):
    """Test that H-bar_v and H-bar_(v+delta_j) split the level-j units."""
    for j in (1, 2):
        delta = example1_params.delta(j)
        low = set(hbar_residues(example1_params, 0, j))
        high = set(hbar_residues(example1_params, delta, j))
        assert not low & high
        assert len(low | high) == example1_params.phi(j)
