from __future__ import annotations

import numpy as np
import pytest

from enlarged_css import bch, gf2
from enlarged_css.codes import LinearCode, is_dual_containing, even_weight_code, extend_parity, hamming_code
from enlarged_css.enlarge import (
    claimed_distance,
    coset_complement,
    enlarge,
    extra_checks,
    fixed_point_free_map,
    mixed_span_is_fixed_point_free,
    stabilizer_twist,
    unextended_variant,
    verify_record,
)
from enlarged_css.errors import (
    DimensionOrder,
    DualConditionViolated,
    InsufficientEnlargement,
    NotApplicable,
    NotASubcode,
    SingularMatrix,
    SizeTooSmall,
)
from enlarged_css.gf2 import BitMatrix
from enlarged_css.stabilizer import check_commutativity, css, quantum_distance
from enlarged_css.tables import build_pair, load_table


def ext_bch(n: int, d: int) -> LinearCode:
    return extend_parity(bch.bch_code(bch.defining_set(n - 1, 1, d - 1)))


def ext_hamming() -> LinearCode:
    return extend_parity(hamming_code(3))


def test_claimed_distance_uses_integer_ceiling():
    assert claimed_distance(4, 2) == 3
    assert claimed_distance(6, 4) == 6
    assert claimed_distance(16, 10) == 15
    assert claimed_distance(8, 3) == 5
    for dp in range(1, 40):
        assert claimed_distance(100, dp) == -(-3 * dp // 2)


def test_coset_complement_examples():
    c, cp = ext_hamming(), even_weight_code(8)
    d = coset_complement(c, cp)
    assert d.rows == 3
    assert gf2.rank(gf2.vstack(c.generator, d)) == 7
    assert coset_complement(c, c).rows == 0
    c22, cp22 = ext_bch(22, 6), ext_bch(22, 4)
    assert coset_complement(c22, cp22).rows == 3
    with pytest.raises(DimensionOrder):
        coset_complement(cp, c)
    with pytest.raises(NotASubcode):
        coset_complement(c, LinearCode.from_generator(BitMatrix.identity(8)[:5]))


def test_extra_checks_complete_outer_checks():
    c, cp = ext_bch(22, 6), ext_bch(22, 4)
    b = extra_checks(c, cp)
    stacked = gf2.vstack(cp.check, b)
    assert b.rows == cp.k - c.k
    assert gf2.row_space_equal(stacked, c.check)


def test_shift_map_examples():
    assert fixed_point_free_map(2) == BitMatrix.from_rows(["01", "11"])
    assert fixed_point_free_map(2) + BitMatrix.identity(2) == BitMatrix.from_rows(["11", "10"])
    assert fixed_point_free_map(3) == BitMatrix.from_rows(["010", "001", "110"])
    with pytest.raises(SizeTooSmall):
        fixed_point_free_map(1)


@pytest.mark.parametrize("size", range(2, 40))
def test_shift_map_and_its_sum_with_identity_are_invertible(size):
    a = fixed_point_free_map(size)
    assert gf2.rank(a) == size
    assert gf2.rank(a + BitMatrix.identity(size)) == size


def test_twist_collapses_to_inverse_for_identity_pairing():
    a = BitMatrix.from_rows(["110", "100", "001"])
    assert a == a.T and gf2.rank(a) == 3
    d = BitMatrix.identity(3)
    twist = stabilizer_twist(a, BitMatrix.identity(3), d)
    assert twist == gf2.inverse(a)


def test_twist_rejects_degenerate_pairing():
    a = fixed_point_free_map(2)
    with pytest.raises(SingularMatrix):
        stabilizer_twist(a, BitMatrix.from_rows(["10", "10"]), BitMatrix.identity(2))


def test_smallest_code():
    record = enlarge(ext_hamming(), even_weight_code(8))
    assert record.params == (8, 3, 3)
    assert check_commutativity(record.code)
    assert all(verify_record(record).values())
    assert record.extra_checks @ record.coset_reps.T == BitMatrix.identity(3)
    assert mixed_span_is_fixed_point_free(record)
    result = quantum_distance(record.code)
    assert (result.distance, result.pure) == (3, True)


def test_row_blocks_have_the_documented_shape():
    record = enlarge(ext_hamming(), even_weight_code(8))
    code, g = record.code, record.c.generator
    m = record.coset_reps.rows
    assert code.gx[:m] == record.coset_reps
    assert code.gz[:m] == record.shift @ record.coset_reps
    assert code.gx[m : m + g.rows] == g and code.gz[m : m + g.rows].is_zero()
    assert code.gz[m + g.rows :] == g and code.gx[m + g.rows :].is_zero()
    assert code.hz[:m] == record.extra_checks
    assert code.hx[:m] == record.twist @ record.extra_checks


def test_thirty_two_qubit_code():
    record = enlarge(ext_bch(32, 6), ext_bch(32, 4))
    assert record.params == (32, 15, 6)
    assert all(verify_record(record).values())
    assert mixed_span_is_fixed_point_free(record)


def test_preconditions():
    c = ext_hamming()
    with pytest.raises(InsufficientEnlargement):
        enlarge(c, LinearCode.from_generator(gf2.vstack(c.generator, BitMatrix.from_rows(["10000001"]))))
    with pytest.raises(NotASubcode):
        enlarge(c, LinearCode.from_generator(BitMatrix.identity(8)[:6]))
    inner, outer = bch.bch_code(bch.defining_set(15, 1, 5)), bch.bch_code(bch.defining_set(15, 1, 3))
    with pytest.raises(DualConditionViolated):
        enlarge(inner, outer)


def test_unextended_variants():
    small = unextended_variant(enlarge(ext_bch(32, 6), ext_bch(32, 4)))
    assert small.params == (31, 16, 5)
    assert all(verify_record(small).values())
    big = unextended_variant(enlarge(ext_bch(64, 8), ext_bch(64, 6)))
    assert big.params == (63, 33, 7)
    with pytest.raises(NotApplicable):
        unextended_variant(enlarge(ext_hamming(), even_weight_code(8)))


def test_unextended_distance_by_enumeration():
    small = unextended_variant(enlarge(ext_bch(22, 6), ext_bch(22, 4)))
    assert small.params == (21, 6, 5)
    result = quantum_distance(small.code)
    assert (result.distance, result.pure) == (5, True)


def test_pairing_identity_on_table_rows():
    for row in load_table(1) + load_table(2):
        c, cp, checks = build_pair(row.n, row.d, row.d_prime)
        if not is_dual_containing(c):
            continue
        record = enlarge(c, cp)
        assert record.extra_checks @ record.coset_reps.T == BitMatrix.identity(cp.k - c.k)
        assert all(verify_record(record).values())


def test_enlarged_code_beats_plain_css_dimension():
    c = ext_bch(32, 6)
    plain = css(c, c)
    bigger = enlarge(c, ext_bch(32, 4)).code
    assert bigger.K > plain.K and bigger.claimed_distance == plain.claimed_distance


def test_parallel_distance_search_agrees():
    record = enlarge(ext_bch(16, 4), even_weight_code(16))
    serial = quantum_distance(record.code)
    parallel = quantum_distance(record.code, workers=2)
    assert serial == parallel
    assert (serial.distance, serial.pure) == (3, True)


def test_random_invertible_change_of_d_keeps_row_space():
    record = enlarge(ext_bch(32, 6), ext_bch(32, 4))
    rng = np.random.default_rng(5)
    size = record.shift.rows
    d = record.coset_reps
    for _ in range(20):
        while True:
            m = BitMatrix.from_bits(rng.integers(0, 2, (size, size)))
            if gf2.rank(m) == size:
                break
        assert gf2.row_space_equal(d, m @ d)
        assert gf2.row_space_equal(d, record.shift @ d)
