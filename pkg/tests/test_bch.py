from __future__ import annotations

import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from enlarged_css import bch
from enlarged_css.codes import contains, dual, is_dual_containing, min_distance
from enlarged_css.errors import EvenLength
from enlarged_css.field import make_field, multiplicative_order_of_two, nth_root_of_unity, poly_divmod, poly_eval

# n - 1 is in the coset of 1 exactly when some power of 2 is -1 mod n
SCAN_127 = [
    7, 15, 21, 23, 31, 35, 39, 45, 47, 49, 51, 55, 63, 69, 71, 73, 75, 77, 79, 85,
    87, 89, 91, 93, 95, 103, 105, 111, 115, 117, 119, 123, 127,
]

odd_lengths = st.integers(1, 90).map(lambda i: 2 * i + 1)
buildable_lengths = odd_lengths.filter(lambda n: 5 <= n <= 63 and multiplicative_order_of_two(n) <= 12)


def power_of_two_is_minus_one(n: int) -> bool:
    x = 1
    for _ in range(n):
        x = 2 * x % n
        if x == n - 1:
            return True
    return False


def test_coset_examples():
    assert bch.coset(15, 0).elements == (0,)
    assert bch.coset(15, 1).elements == (1, 2, 4, 8)
    assert bch.coset(21, 7).elements == (7, 14)
    assert bch.coset(15, 9).representative == 3
    with pytest.raises(EvenLength):
        bch.coset(16, 1)


def test_cosets_of_15():
    got = [set(c.elements) for c in bch.cyclotomic_cosets(15)]
    assert got == [{0}, {1, 2, 4, 8}, {3, 6, 9, 12}, {5, 10}, {7, 11, 13, 14}]


@settings(max_examples=100, deadline=None)
@given(odd_lengths)
def test_cosets_partition_and_divide_order(n):
    cosets = bch.cyclotomic_cosets(n)
    seen = [i for c in cosets for i in c.elements]
    assert sorted(seen) == list(range(n))
    m1 = math.lcm(*(c.size for c in cosets)) if n > 1 else 1
    for c in cosets:
        assert all((2 * i) % n in c.elements for i in c.elements)
        assert m1 % c.size == 0
        assert (c.representative * pow(2, c.size, n)) % n == c.representative


def test_defining_set_examples():
    s = bch.defining_set(15, 1, 3)
    assert s.defining_set == {1, 2, 4, 8} and s.k == 11
    assert bch.defining_set(31, 1, 7).k == 16
    s = bch.defining_set(21, 1, 5)
    assert s.defining_set == set(bch.coset(21, 1).elements) | set(bch.coset(21, 3).elements)
    assert len(s.defining_set) == 9 and s.k == 12


def test_generator_examples():
    hamming = bch.bch_code(bch.defining_set(7, 1, 3))
    assert (hamming.n, hamming.k) == (7, 4)
    assert bch.generator_polynomial(bch.defining_set(7, 1, 3)) == 0b1011
    assert bch.bch_code(bch.defining_set(15, 1, 3)).k == 11
    spec = bch.defining_set(15, 1, 7)
    assert bch.generator_polynomial(spec).bit_length() - 1 == 10
    assert bch.bch_code(spec).k == 5


def test_both_cubic_moduli_give_same_hamming_parameters():
    for modulus in (0b1011, 0b1101):
        code = bch.bch_code(bch.defining_set(7, 1, 3), make_field(3, modulus))
        assert (code.n, code.k, min_distance(code)) == (7, 4, 3)


@pytest.mark.parametrize("n, delta", [(7, 3), (15, 5), (21, 5), (23, 5), (31, 7), (45, 7), (51, 5)])
def test_codewords_vanish_on_defining_set(n, delta):
    spec = bch.defining_set(n, 1, delta)
    code = bch.bch_code(spec)
    _, alpha = nth_root_of_unity(n)
    g = bch.generator_polynomial(spec)
    assert poly_divmod((1 << n) | 1, g)[1] == 0
    h, _ = poly_divmod((1 << n) | 1, g)
    assert h.bit_length() - 1 == code.k
    for row in code.generator:
        word = sum(int(b) << j for j, b in enumerate(row.to_bits()))
        for i in spec.defining_set:
            assert not poly_eval(word, alpha**i)


@settings(max_examples=60, deadline=None)
@given(buildable_lengths, st.integers(2, 9), st.integers(2, 9))
def test_codes_are_nested(n, d1, d2):
    lo, hi = sorted((d1, d2))
    small, big = bch.defining_set(n, 1, lo), bch.defining_set(n, 1, hi)
    assert small.defining_set <= big.defining_set
    assert contains(bch.bch_code(small), bch.bch_code(big))


def test_dual_containing_examples():
    assert bch.is_dual_containing(bch.defining_set(15, 1, 3))
    spec = bch.defining_set(15, 1, 5)
    assert 3 in spec.defining_set and 12 in spec.defining_set
    assert not bch.is_dual_containing(spec)
    assert bch.is_dual_containing(bch.defining_set(31, 1, 7))


@settings(max_examples=60, deadline=None)
@given(buildable_lengths, st.integers(2, 12))
def test_coset_criterion_agrees_with_matrices(n, delta):
    spec = bch.defining_set(n, 1, delta)
    if spec.k == 0:
        return
    code = bch.bch_code(spec)
    assert bch.is_dual_containing(spec) == is_dual_containing(code)
    if bch.is_dual_containing(spec):
        assert contains(code, dual(code))


@pytest.mark.parametrize("m, expected", [(3, 3), (4, 3), (5, 7), (6, 7), (7, 15), (8, 15), (9, 31)])
def test_max_dual_containing_delta(m, expected):
    assert bch.max_dual_containing_delta((1 << m) - 1) == expected


def test_scan_small_limits():
    assert bch.scan_nonprimitive(7) == [7]
    assert bch.scan_nonprimitive(127) == SCAN_127


def test_scan_agrees_with_power_oracle():
    expected = [n for n in range(3, 400, 2) if not power_of_two_is_minus_one(n)]
    assert bch.scan_nonprimitive(399) == expected


def test_121_is_excluded_because_two_is_a_primitive_root():
    assert pow(2, 55, 121) == 120
    assert 120 in bch.coset(121, 1).elements
    assert 121 not in bch.scan_nonprimitive(127)


def test_small_coset_lengths():
    assert bch.lengths_with_small_cosets(3, 127, 12) == [
        n for n in SCAN_127 if bch.coset(n, 1).size <= 12
    ]
    assert bch.lengths_with_small_cosets(3, 127, 3) == [7]
    for n in (21, 23, 45, 51, 73, 85, 89, 93, 105, 117):
        assert n in bch.lengths_with_small_cosets(3, 127, 12)


@pytest.mark.parametrize("n, delta", [(15, 5), (21, 5), (23, 5), (31, 7), (45, 7)])
def test_bch_bound_holds(n, delta):
    code = bch.bch_code(bch.defining_set(n, 1, delta))
    assert min_distance(code) >= code.designed_distance >= delta


def test_bose_distance_exceeds_delta_when_cosets_spill():
    spec = bch.defining_set(23, 1, 3)
    assert spec.bose_distance == 5
