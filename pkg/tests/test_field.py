from __future__ import annotations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from enlarged_css import bch
from enlarged_css.errors import ContextMismatch, EvenLength, UnsupportedDegree
from enlarged_css.field import (
    field_mul,
    field_pow,
    is_irreducible,
    make_field,
    minimal_polynomial,
    multiplicative_order_of_two,
    nth_root_of_unity,
    poly_divmod,
    poly_eval,
    poly_mul,
)


def oracle_mul(a: int, b: int, modulus: int, m: int) -> int:
    """Schoolbook product on coefficient lists, then long division by the modulus."""
    prod = [0] * (2 * m)
    for i in range(m):
        for j in range(m):
            prod[i + j] ^= (a >> i & 1) & (b >> j & 1)
    mod = [modulus >> i & 1 for i in range(m + 1)]
    for top in range(2 * m - 1, m - 1, -1):
        if prod[top]:
            for i in range(m + 1):
                prod[top - m + i] ^= mod[i]
    return sum(bit << i for i, bit in enumerate(prod[:m]))


def test_small_fields():
    gf2 = make_field(1)
    assert gf2.generator == 1 and gf2.primitive.order == 1
    gf8 = make_field(3)
    assert gf8.modulus == 0b1011
    assert gf8.primitive.order == 7
    assert make_field(4).primitive.order == 15


def test_modulus_is_least_irreducible():
    for m in range(2, 10):
        ctx = make_field(m)
        assert all(not is_irreducible(p) for p in range(1 << m, ctx.modulus))
        assert is_irreducible(ctx.modulus)


def test_unsupported_degree():
    with pytest.raises(UnsupportedDegree):
        make_field(0)
    with pytest.raises(UnsupportedDegree):
        make_field(17)


def test_multiplication_examples():
    gf8 = make_field(3)
    x, x2 = gf8.element(0b010), gf8.element(0b100)
    assert field_mul(x, x2) == gf8.element(0b011)
    for v in range(1, 8):
        a = gf8.element(v)
        assert a * gf8.one == a
        assert a * field_pow(a, 6) == gf8.one
        assert a * a.inverse() == gf8.one


def test_context_mismatch():
    with pytest.raises(ContextMismatch):
        _ = make_field(3).one * make_field(4).one


def test_order_of_two():
    assert multiplicative_order_of_two(7) == 3
    assert multiplicative_order_of_two(15) == 4
    assert multiplicative_order_of_two(21) == 6
    with pytest.raises(EvenLength):
        multiplicative_order_of_two(22)


@pytest.mark.parametrize("n, m", [(7, 3), (15, 4), (21, 6), (23, 11), (89, 11), (117, 12)])
def test_root_of_unity_has_exact_order(n, m):
    ctx, alpha = nth_root_of_unity(n)
    assert ctx.m == m
    assert alpha.order == n


def test_root_of_unity_rejects_even_length():
    with pytest.raises(EvenLength):
        nth_root_of_unity(8)


def test_minimal_polynomial_examples():
    _, alpha = nth_root_of_unity(7)
    assert minimal_polynomial(alpha, 0, 7) == 0b11
    assert minimal_polynomial(alpha, 1, 7) in (0b1011, 0b1101)
    _, alpha15 = nth_root_of_unity(15)
    assert minimal_polynomial(alpha15, 5, 15).bit_length() - 1 == 2


def test_other_cubic_modulus_gives_reciprocal_polynomial():
    ctx = make_field(3, modulus=0b1101)
    _, alpha = nth_root_of_unity(7, ctx)
    assert minimal_polynomial(alpha, 1, 7) in (0b1011, 0b1101)


@pytest.mark.parametrize("n", [7, 15, 21, 23, 31, 45, 51, 73])
def test_minimal_polynomials_factor_x_n_plus_1(n):
    _, alpha = nth_root_of_unity(n)
    x_n_1 = (1 << n) | 1
    product = 1
    for c in bch.cyclotomic_cosets(n):
        p = minimal_polynomial(alpha, c.representative, n)
        assert p.bit_length() - 1 == c.size
        assert poly_divmod(x_n_1, p)[1] == 0
        assert not poly_eval(p, alpha ** c.representative)
        for s in c.elements:
            assert minimal_polynomial(alpha, s, n) == p
        product = poly_mul(product, p)
    assert product == x_n_1


@settings(max_examples=300, deadline=None)
@given(st.integers(2, 12), st.data())
def test_multiplication_matches_oracle(m, data):
    ctx = make_field(m)
    a = data.draw(st.integers(0, (1 << m) - 1))
    b = data.draw(st.integers(0, (1 << m) - 1))
    assert ctx.mul(a, b) == oracle_mul(a, b, ctx.modulus, m)


@settings(max_examples=200, deadline=None)
@given(st.integers(2, 12), st.data())
def test_frobenius_is_additive(m, data):
    ctx = make_field(m)
    a = ctx.element(data.draw(st.integers(0, (1 << m) - 1)))
    b = ctx.element(data.draw(st.integers(0, (1 << m) - 1)))
    assert a**2 == field_mul(a, a)
    assert (a + b) ** 2 == a**2 + b**2
