"""Enlarging a dual-containing CSS code with a larger classical code.

Given ``C = [n, k, d]`` with ``C^perp`` inside ``C`` and a code
``C' = [n, k', d']`` containing ``C`` with ``k' > k + 1``, the rows

    generator:  (D | A D), (G | 0), (0 | G)
    stabilizer: (T B | B), (H' | 0), (0 | H')

define a pure ``[[n, k + k' - n, min(d, ceil(3 d' / 2))]]`` code. Here ``D``
completes ``G`` to a basis of ``C'``, ``B`` completes ``H'`` to a basis of
``C^perp``, ``A`` is fixed-point free and ``T`` is chosen so that the mixed
stabilizer rows commute with the mixed generator rows.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import gf2
from .codes import LinearCode, contains, dual, puncture_last
from .errors import (
    DimensionOrder,
    DualConditionViolated,
    InsufficientEnlargement,
    NotApplicable,
    NotASubcode,
    SingularMatrix,
    SizeTooSmall,
)
from .gf2 import BitMatrix
from .stabilizer import StabilizerCode, check_commutativity


def claimed_distance(d: int, d_prime: int) -> int:
    """``min(d, ceil(3 d' / 2))`` in integer arithmetic."""
    return min(d, (3 * d_prime + 1) // 2)


def coset_complement(c: LinearCode, cprime: LinearCode) -> BitMatrix:
    """Rows ``D`` such that ``G`` and ``D`` together span ``C'``.

    ``D`` is the row-reduced basis of ``C'`` modulo ``C``; it has ``k' - k`` rows.
    """
    if cprime.k < c.k:
        raise DimensionOrder(f"outer dimension {cprime.k} is below inner dimension {c.k}")
    if not contains(cprime, c):
        raise NotASubcode("C is not contained in C'")
    return _complement(c.generator, cprime.generator)


def _complement(inner: BitMatrix, outer: BitMatrix) -> BitMatrix:
    basis, pivots, r = gf2.rref(inner)
    residual = gf2.reduce_rows(basis[:r], pivots, outer)
    return gf2.row_basis(residual)


def extra_checks(c: LinearCode, cprime: LinearCode) -> BitMatrix:
    """Rows ``B`` such that ``H'`` and ``B`` together check ``C``."""
    return _complement(cprime.check, c.check)


def fixed_point_free_map(size: int) -> BitMatrix:
    """The cyclic-shift-like map: row ``i`` is ``e_{i+1}``, the last row is ``e_0 + e_1``.

    Both the map and the map plus identity are invertible, so ``u A = u`` has
    only the zero solution.
    """
    if size < 2:
        raise SizeTooSmall(f"a fixed-point-free map needs at least 2 rows, got {size}")
    bits = np.zeros((size, size), dtype=np.uint8)
    bits[np.arange(size - 1), np.arange(1, size)] = 1
    bits[size - 1, :2] = 1
    a = BitMatrix.from_bits(bits)
    gf2.inverse(a)
    gf2.inverse(a + BitMatrix.identity(size))
    return a


def stabilizer_twist(a: BitMatrix, b: BitMatrix, d: BitMatrix) -> BitMatrix:
    """``T = (B D^T) (A^T)^{-1} (B D^T)^{-1}``, so that ``T B (A D)^T = B D^T``."""
    pairing = b @ d.T
    try:
        pairing_inv = gf2.inverse(pairing)
    except SingularMatrix as exc:
        raise SingularMatrix("B D^T is singular; the coset bases are not paired") from exc
    twist = pairing @ gf2.inverse(a.T) @ pairing_inv
    if twist @ b @ (a @ d).T != pairing:
        raise AssertionError("twist does not satisfy T B (A D)^T = B D^T")
    return twist


@dataclass(frozen=True, eq=False)
class EnlargementRecord:
    """Every intermediate of the construction, kept for verification.

    ``coset_reps`` is ``D``, ``extra_checks`` is ``B``, ``outer_checks`` is
    ``H'``, ``shift`` is ``A`` and ``twist`` is ``T``.
    """

    c: LinearCode
    cprime: LinearCode
    coset_reps: BitMatrix
    extra_checks: BitMatrix
    outer_checks: BitMatrix
    shift: BitMatrix
    twist: BitMatrix
    code: StabilizerCode
    distance_basis: str

    @property
    def params(self) -> tuple[int, int, int | None]:
        return self.code.n, self.code.K, self.code.claimed_distance


def enlarge(c: LinearCode, cprime: LinearCode) -> EnlargementRecord:
    if c.n != cprime.n:
        raise NotASubcode(f"lengths {c.n} and {cprime.n} differ")
    if not contains(c, dual(c)):
        raise DualConditionViolated("C does not contain its dual")
    if not contains(cprime, c):
        raise NotASubcode("C is not contained in C'")
    if cprime.k <= c.k + 1:
        raise InsufficientEnlargement(f"need k' > k + 1, got k={c.k}, k'={cprime.k}")

    n = c.n
    d_rows = coset_complement(c, cprime)
    b_rows = extra_checks(c, cprime)
    # normalise B against D so that B D^T = I; always possible since the pairing is nondegenerate
    b_rows = gf2.inverse(b_rows @ d_rows.T) @ b_rows
    a = fixed_point_free_map(d_rows.rows)
    twist = stabilizer_twist(a, b_rows, d_rows)

    g, h_outer = c.generator, cprime.check
    zeros_g = BitMatrix.zeros(c.k, n)
    zeros_h = BitMatrix.zeros(h_outer.rows, n)
    gx = gf2.vstack(d_rows, g, zeros_g)
    gz = gf2.vstack(a @ d_rows, zeros_g, g)
    hx = gf2.vstack(twist @ b_rows, h_outer, zeros_h)
    hz = gf2.vstack(b_rows, zeros_h, h_outer)

    if c.distance is not None and cprime.distance is not None:
        basis = "verified"
    else:
        basis = "designed"
    d, d_prime = c.known_distance, cprime.known_distance
    claimed = claimed_distance(d, d_prime) if d is not None and d_prime is not None else None

    code = StabilizerCode(gx, gz, hx, hz, claimed_distance=claimed, notes={"distance_basis": basis})
    if not check_commutativity(code):
        raise AssertionError("enlarged code violates the commutativity conditions")
    return EnlargementRecord(c, cprime, d_rows, b_rows, h_outer, a, twist, code, basis)


def verify_record(record: EnlargementRecord) -> dict[str, bool]:
    """Re-check the algebraic identities of a construction from scratch."""
    a, b, d = record.shift, record.extra_checks, record.coset_reps
    size = a.rows
    c, cprime = record.c, record.cprime
    code = record.code
    hh = code.hx @ code.hz.T + code.hz @ code.hx.T
    hg = code.hx @ code.gz.T + code.hz @ code.gx.T
    stacked_checks = gf2.vstack(record.outer_checks, b)
    return {
        "stabilizers_commute": hh.is_zero(),
        "stabilizers_commute_with_generators": hg.is_zero(),
        "twist_identity": record.twist @ b @ (a @ d).T == b @ d.T,
        "G_and_D_span_C_prime": gf2.rank(gf2.vstack(c.generator, d)) == cprime.k
        and gf2.row_space_contains(cprime.generator, d),
        "H_prime_and_B_check_C": gf2.rank(stacked_checks) == c.n - c.k
        and (stacked_checks @ c.generator.T).is_zero(),
        "shift_fixed_point_free": _invertible(a) and _invertible(a + BitMatrix.identity(size)),
        "D_and_AD_same_span": gf2.row_space_equal(d, a @ d),
        "pairing_invertible": _invertible(b @ d.T),
        "dimension": code.K == c.k + cprime.k - c.n,
    }


def _invertible(m: BitMatrix) -> bool:
    return m.rows == m.cols and gf2.rank(m) == m.rows


def mixed_span_is_fixed_point_free(record: EnlargementRecord, limit: int = 20) -> bool:
    """Exhaustively check that every nonzero ``u = mD, v = mAD`` has ``u + v`` nonzero and in ``C'``."""
    size = record.shift.rows
    if size > limit:
        raise ValueError(f"2^{size} messages exceed the exhaustive limit 2^{limit}")
    from .search import span_table

    diff_rows = (record.shift + BitMatrix.identity(size)) @ record.coset_reps
    sums = span_table(np.array(diff_rows.words))[1:]
    if not np.any(sums, axis=1).all():
        return False
    as_matrix = BitMatrix(sums, record.c.n)
    return (as_matrix @ record.cprime.check.T).is_zero()


def unextended_variant(record: EnlargementRecord) -> EnlargementRecord:
    """Rebuild from the punctured (unextended) pair; expect ``[[n-1, K+1, D-1]]``."""
    n, K, D = record.params
    if D is None or D <= 3:
        raise NotApplicable(f"the unextended rule needs D > 3, got D={D}")
    inner, outer = puncture_last(record.c), puncture_last(record.cprime)
    smaller = enlarge(inner, outer)
    expected = (n - 1, K + 1, D - 1)
    if smaller.params != expected:
        raise AssertionError(f"unextended construction gave {smaller.params}, expected {expected}")
    return smaller
