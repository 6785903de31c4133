"""Generalized cyclotomic classes and the support sets of both sequence families."""
import logging
from enum import Enum
from functools import lru_cache
from typing import Iterator, List, Optional, Tuple

import numpy as np
from pydantic import BaseModel, ConfigDict

from cyclolc.arith.numtheory import SequenceParams

logger = logging.getLogger(__name__)


class ModulusKind(str, Enum):
    """s = p^j or s = 2p^j."""
    P_POWER = "P_POWER"
    TWO_P_POWER = "TWO_P_POWER"


class Variant(str, Enum):
    """STANDARD builds s (sets C_0, C_1); MODIFIED builds s~ (sets C~_0, C~_1)."""
    STANDARD = "STANDARD"
    MODIFIED = "MODIFIED"


class CyclotomicClass(BaseModel):
    """D_i^(s) or its scaled copy a*D_i^(s) inside Z_{a*s}."""
    model_config = ConfigDict(frozen=True)

    level: int
    index: int
    kind: ModulusKind
    multiplier: int
    modulus: int
    elements: Tuple[int, ...]

    def scaled_by(self, a: int) -> "CyclotomicClass":
        """a*D = {a*x mod a*s}; multipliers compose."""
        modulus = self.modulus * a
        return CyclotomicClass(
            level=self.level,
            index=self.index,
            kind=self.kind,
            multiplier=self.multiplier * a,
            modulus=modulus,
            elements=tuple(sorted((a * x) % modulus for x in self.elements)),
        )

    def __contains__(self, x: int) -> bool:
        return x % self.modulus in self.elements

    def __len__(self) -> int:
        return len(self.elements)


def _base_modulus(params: SequenceParams, j: int, kind: ModulusKind) -> int:
    pj = params.p ** j
    return pj if kind == ModulusKind.P_POWER else 2 * pj


def build_class(
    params: SequenceParams,
    j: int,
    i: int,
    kind: ModulusKind,
    scaled: bool = False,
) -> CyclotomicClass:
    """D_i^(s) = {g^(i + d_j t) mod s : 0 <= t < e} for s = p^j or 2p^j.

    With ``scaled`` the class is placed inside Z_{2p^m} the way the period
    decomposes: 2p^(m-j) D_i^(p^j) for P_POWER and p^(m-j) D_i^(2p^j) for
    TWO_P_POWER.
    """
    d = params.d(j)
    index = i % d
    s = _base_modulus(params, j, kind)
    step = pow(params.g, d, s)
    x = pow(params.g, index, s)
    elements = []
    for _ in range(params.e):
        elements.append(x)
        x = (x * step) % s
    cls = CyclotomicClass(
        level=j,
        index=index,
        kind=kind,
        multiplier=1,
        modulus=s,
        elements=tuple(sorted(elements)),
    )
    if not scaled:
        return cls
    a = params.p ** (params.m - j)
    if kind == ModulusKind.P_POWER:
        a *= 2
    return cls.scaled_by(a)


def iter_level_residues(params: SequenceParams, j: int) -> Iterator[Tuple[int, int, int]]:
    """Yield (k mod d_j, g^k mod p^j, g^k mod 2p^j) for 0 <= k < phi(p^j)."""
    pj = params.p ** j
    d = params.d(j)
    x = 1
    g = params.g % pj
    for k in range(params.phi(j)):
        # g is odd, so the residue mod 2p^j is the odd lift of x
        yield k % d, x, x if x % 2 else x + pj
        x = (x * g) % pj


class PartitionCheck(BaseModel):
    """Outcome of the partition checks; falsy when any tiling fails."""
    model_config = ConfigDict(frozen=True)

    ok: bool
    diagnostic: Optional[str] = None

    def __bool__(self) -> bool:
        return self.ok


def _tiling_error(counts: np.ndarray, what: str) -> Optional[str]:
    over = np.flatnonzero(counts > 1)
    if over.size:
        return f"{what}: residue {int(over[0])} covered {int(counts[over[0]])} times"
    gap = np.flatnonzero(counts == 0)
    if gap.size:
        return f"{what}: residue {int(gap[0])} not covered"
    return None


def verify_partitions(params: SequenceParams) -> PartitionCheck:
    """Check that the classes tile Z_{p^j}^*, Z_{p^m} and Z_{2p^m}."""
    p, m = params.p, params.m
    pm = params.pm
    whole_pm = np.zeros(pm, dtype=np.int64)
    whole_2pm = np.zeros(2 * pm, dtype=np.int64)
    whole_pm[0] += 1
    whole_2pm[0] += 1
    whole_2pm[pm] += 1

    for j in range(1, m + 1):
        pj = p ** j
        units = np.zeros(pj, dtype=np.int64)
        for i in range(params.d(j)):
            plain = build_class(params, j, i, ModulusKind.P_POWER)
            np.add.at(units, list(plain.elements), 1)
            np.add.at(whole_pm, list(plain.scaled_by(p ** (m - j)).elements), 1)
            np.add.at(whole_2pm, list(build_class(params, j, i, ModulusKind.P_POWER, scaled=True).elements), 1)
            np.add.at(whole_2pm, list(build_class(params, j, i, ModulusKind.TWO_P_POWER, scaled=True).elements), 1)
        # units covered exactly once, multiples of p never
        expected = (np.arange(pj) % p != 0).astype(np.int64)
        mismatch = np.flatnonzero(units != expected)
        if mismatch.size:
            r = int(mismatch[0])
            error = f"Z_(p^{j})^*: residue {r} covered {int(units[r])} times"
            logger.warning("partition failure for %s: %s", params.label(), error)
            return PartitionCheck(ok=False, diagnostic=error)

    for counts, what in ((whole_pm, "Z_(p^m)"), (whole_2pm, "Z_(2p^m)")):
        error = _tiling_error(counts, what)
        if error:
            logger.warning("partition failure for %s: %s", params.label(), error)
            return PartitionCheck(ok=False, diagnostic=error)
    return PartitionCheck(ok=True)


class SupportSet(BaseModel):
    """Membership bitmap of the ones (C_1 or C~_1) over Z_{2p^m}."""
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    variant: Variant
    bitmap: np.ndarray

    @property
    def ones(self) -> frozenset:
        return frozenset(int(x) for x in np.flatnonzero(self.bitmap))

    @property
    def zeros(self) -> frozenset:
        return frozenset(int(x) for x in np.flatnonzero(self.bitmap == 0))

    def __contains__(self, x: int) -> bool:
        return bool(self.bitmap[x % self.bitmap.size])


def _ones_positions(params: SequenceParams, variant: Variant) -> List[int]:
    p, m, b = params.p, params.m, params.b
    pm = params.pm
    n = 2 * pm
    ones = [0]
    for j in range(1, m + 1):
        d, delta = params.d(j), params.delta(j)
        a = p ** (m - j)
        for cls_index, x, y in iter_level_residues(params, j):
            # residue g^k sits in D_{k mod d_j}; relative to the shift it is D_{i+b}
            low = (cls_index - b) % d < delta
            even_pos = (2 * a * x) % n
            odd_pos = (a * y) % n
            if variant == Variant.STANDARD:
                if low:
                    ones.append(even_pos)
                    ones.append(odd_pos)
            else:
                ones.append(odd_pos if low else even_pos)
    return ones


def build_support(params: SequenceParams, variant: Variant) -> SupportSet:
    """C_1 (STANDARD) or C~_1 (MODIFIED) as a bitmap of length 2p^m."""
    bitmap = np.zeros(params.period, dtype=np.uint8)
    bitmap[_ones_positions(params, variant)] = 1
    bitmap.setflags(write=False)
    return SupportSet(variant=variant, bitmap=bitmap)


@lru_cache(maxsize=4096)
def hbar_residues(params: SequenceParams, v: int, j: int) -> Tuple[int, ...]:
    """Elements of H-bar_v^(p^j) = union_{i < delta_j} p^(m-j) D_{i+v}^(p^j), as residues mod p^m."""
    d, delta = params.d(j), params.delta(j)
    a = params.p ** (params.m - j)
    return tuple(
        (a * x) % params.pm
        for cls_index, x, _ in iter_level_residues(params, j)
        if (cls_index - v) % d < delta
    )


@lru_cache(maxsize=4096)
def h2p_residues(params: SequenceParams, v: int, j: int) -> Tuple[int, ...]:
    """Elements of H_v^(2p^j) = union_{i < delta_j} p^(m-j) D_{i+v}^(2p^j), as residues mod 2p^m."""
    d, delta = params.d(j), params.delta(j)
    a = params.p ** (params.m - j)
    return tuple(
        (a * y) % params.period
        for cls_index, _, y in iter_level_residues(params, j)
        if (cls_index - v) % d < delta
    )
