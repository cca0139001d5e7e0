"""Quantum codes from classical BCH codes: CSS codes and their enlargement."""

from .bch import BchSpec, bch_code, coset, cyclotomic_cosets, defining_set, max_dual_containing_delta, scan_nonprimitive
from .codes import LinearCode, Unverified, contains, dual, even_weight_code, extend_parity, min_distance
from .enlarge import EnlargementRecord, enlarge
from .gf2 import BitMatrix, BitVector
from .stabilizer import StabilizerCode, css, quantum_distance

__all__ = [
    "BchSpec",
    "BitMatrix",
    "BitVector",
    "EnlargementRecord",
    "LinearCode",
    "StabilizerCode",
    "Unverified",
    "bch_code",
    "contains",
    "coset",
    "css",
    "cyclotomic_cosets",
    "defining_set",
    "dual",
    "enlarge",
    "even_weight_code",
    "extend_parity",
    "max_dual_containing_delta",
    "min_distance",
    "quantum_distance",
    "scan_nonprimitive",
]
