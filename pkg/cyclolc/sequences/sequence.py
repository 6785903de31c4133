"""One period of the standard or modified generalized cyclotomic sequence."""
import struct
from typing import Optional

import numpy as np
from pydantic import BaseModel, ConfigDict

from cyclolc.arith.f2poly import F2Poly
from cyclolc.arith.numtheory import SequenceParams
from cyclolc.sequences.cyclotomy import Variant, build_support


class BinarySequence(BaseModel):
    """bits[i] = s_i for 0 <= i < N."""
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    bits: np.ndarray
    params: Optional[SequenceParams] = None
    variant: Optional[Variant] = None

    @classmethod
    def from_bitstring(cls, text: str, params: Optional[SequenceParams] = None,
                       variant: Optional[Variant] = None) -> "BinarySequence":
        """Parse '0'/'1' text, s_0 leftmost; whitespace is ignored."""
        cleaned = "".join(text.split())
        if not cleaned or set(cleaned) - {"0", "1"}:
            raise ValueError("bitstring must be a nonempty string of '0' and '1'")
        bits = np.frombuffer(cleaned.encode("ascii"), dtype=np.uint8) - ord("0")
        bits.setflags(write=False)
        return cls(bits=bits, params=params, variant=variant)

    @property
    def period(self) -> int:
        return int(self.bits.size)

    @property
    def packed(self) -> int:
        """Bit i of the integer is s_i."""
        raw = np.packbits(self.bits, bitorder="little").tobytes()
        return int.from_bytes(raw, "little")

    def to_bitstring(self) -> str:
        return (self.bits + ord("0")).astype(np.uint8).tobytes().decode("ascii")

    def to_bytes(self) -> bytes:
        """8-byte little-endian period, then bits packed LSB-first."""
        header = struct.pack("<Q", self.period)
        return header + np.packbits(self.bits, bitorder="little").tobytes()

    @classmethod
    def from_bytes(cls, data: bytes) -> "BinarySequence":
        if len(data) < 8:
            raise ValueError(f"binary sequence needs an 8-byte header, got {len(data)} bytes")
        (period,) = struct.unpack_from("<Q", data)
        needed = 8 + (period + 7) // 8
        if len(data) < needed:
            raise ValueError(f"binary sequence of period {period} needs {needed} bytes, got {len(data)}")
        packed = np.frombuffer(data[8:], dtype=np.uint8)
        bits = np.unpackbits(packed, count=period, bitorder="little")
        bits.setflags(write=False)
        return cls(bits=bits)

    def __eq__(self, other) -> bool:
        if not isinstance(other, BinarySequence):
            return NotImplemented
        return self.period == other.period and bool(np.array_equal(self.bits, other.bits))

    __hash__ = None


def generate(params: SequenceParams, variant: Variant = Variant.STANDARD) -> BinarySequence:
    """bits[i] = 1 iff i is in C_1 (STANDARD) or C~_1 (MODIFIED)."""
    support = build_support(params, variant)
    return BinarySequence(bits=support.bitmap, params=params, variant=variant)


def weight(seq: BinarySequence) -> int:
    """Number of ones in one period."""
    return int(np.count_nonzero(seq.bits))


def support_polynomial(seq: BinarySequence) -> F2Poly:
    """c^N(x) = sum of bits[i] x^i, i.e. s(x) or s~(x)."""
    return F2Poly(seq.packed)
