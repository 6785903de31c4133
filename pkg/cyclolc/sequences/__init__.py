"""Cyclotomic classes and the sequences built from them."""
from cyclolc.sequences.cyclotomy import Variant, build_support, verify_partitions
from cyclolc.sequences.sequence import BinarySequence, generate

__all__ = [
    "Variant",
    "build_support",
    "verify_partitions",
    "BinarySequence",
    "generate",
]
