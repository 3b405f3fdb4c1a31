import random

import pytest

from cyclocode.errors import (
    DegreeTooLarge,
    DivisionByZero,
    NotCompatible,
    NotPrime,
)
from cyclocode.field import (
    element_order,
    find_primitive_element,
    inv,
    make_extension,
    make_prime_field,
    nth_root_of_unity,
    parse_field,
)


def test_make_prime_field_smallest():
    f2 = make_prime_field(2)
    assert f2.q == 2
    assert sorted([f2.add(0, 1), f2.add(1, 1)]) == [0, 1]


def test_prime_field_arithmetic():
    f5 = make_prime_field(5)
    assert f5.add(3, 4) == 2
    assert f5.mul(3, 4) == 2


@pytest.mark.parametrize("bad", [0, 1, 4, 6, 9, 100])
def test_make_prime_field_rejects_composites(bad):
    with pytest.raises(NotPrime):
        make_prime_field(bad)


def test_inverse_examples():
    assert inv(make_prime_field(5), 2) == 3
    assert inv(make_prime_field(7), 3) == 5
    assert inv(make_prime_field(2), 1) == 1


def test_inverse_of_zero_rejected():
    with pytest.raises(DivisionByZero):
        make_prime_field(5).inv(0)


def test_primitive_elements():
    assert find_primitive_element(make_prime_field(5)) == 2
    assert find_primitive_element(make_prime_field(2)) == 1
    # 2 has order 3 mod 7, so 3 is the smallest generator
    assert find_primitive_element(make_prime_field(7)) == 3


def test_element_order_examples():
    f7 = make_prime_field(7)
    assert element_order(f7, 2) == 3
    assert element_order(f7, 1) == 1
    assert element_order(make_prime_field(5), 4) == 2
    with pytest.raises(DivisionByZero):
        element_order(f7, 0)


@pytest.mark.parametrize("literal", ["2", "3", "5", "2^2", "2^3", "3^2", "2^4"])
def test_element_order_divides_group_order(literal):
    ctx = parse_field(literal)
    for a in range(1, ctx.q):
        assert (ctx.q - 1) % ctx.element_order(a) == 0


def test_nth_root_of_unity():
    f7 = make_prime_field(7)
    zeta = nth_root_of_unity(f7, 3)
    assert zeta == 2
    assert f7.element_order(zeta) == 3
    assert nth_root_of_unity(f7, 1) == 1
    f4 = parse_field("2^2")
    zeta4 = nth_root_of_unity(f4, 3)
    assert f4.element_order(zeta4) == 3
    with pytest.raises(NotCompatible):
        nth_root_of_unity(f7, 5)


def test_make_extension_basic():
    f2 = make_prime_field(2)
    ext = make_extension(f2, 3)
    assert ext.field.q == 8
    same = make_extension(f2, 1)
    assert same.field is f2


def test_make_extension_cap():
    with pytest.raises(DegreeTooLarge):
        make_extension(make_prime_field(2), 25)


def test_f4_in_f16_fixed_by_frobenius():
    f4 = parse_field("2^2")
    ext = make_extension(f4, 2)
    big = ext.field
    assert big.q == 16
    for a in range(4):
        img = ext.embed(a)
        assert big.pow(img, 4) == img  # embedded elements satisfy a^4 = a


@pytest.mark.parametrize("literal,m", [("2", 2), ("2", 3), ("3", 2), ("2^2", 2), ("2^3", 2), ("3^2", 2)])
def test_embedding_is_injective_ring_hom(literal, m):
    base = parse_field(literal)
    ext = make_extension(base, m)
    big = ext.field
    images = [ext.embed(a) for a in range(base.q)]
    assert len(set(images)) == base.q  # injective
    for c in range(base.p):
        assert ext.embed(c) == c  # fixes the prime field
    for a in range(base.q):
        for b in range(base.q):
            assert ext.embed(base.add(a, b)) == big.add(images[a], images[b])
            assert ext.embed(base.mul(a, b)) == big.mul(images[a], images[b])


@pytest.mark.parametrize("literal", ["2", "3", "5", "7", "2^2", "2^3", "3^2", "2^4", "5^2"])
def test_field_axioms_random_triples(literal):
    ctx = parse_field(literal)
    rng = random.Random(42)
    for _ in range(200):
        a, b, c = (rng.randrange(ctx.q) for _ in range(3))
        assert ctx.add(a, b) == ctx.add(b, a)
        assert ctx.mul(a, b) == ctx.mul(b, a)
        assert ctx.add(ctx.add(a, b), c) == ctx.add(a, ctx.add(b, c))
        assert ctx.mul(ctx.mul(a, b), c) == ctx.mul(a, ctx.mul(b, c))
        assert ctx.mul(a, ctx.add(b, c)) == ctx.add(ctx.mul(a, b), ctx.mul(a, c))
        assert ctx.add(a, ctx.neg(a)) == 0
        if a:
            assert ctx.mul(a, ctx.inv(a)) == 1


@pytest.mark.parametrize("literal", ["2^4", "3^2", "5^2", "2^6", "3^4", "2^12"])
def test_frobenius_fixes_every_element(literal):
    ctx = parse_field(literal)
    assert ctx.q <= 4096
    for a in range(ctx.q):
        assert ctx.pow(a, ctx.q) == a


def test_parse_field_literals():
    assert parse_field("5").q == 5
    assert parse_field("2^3").q == 8
    with pytest.raises(NotPrime):
        parse_field("4")


def test_canonical_modulus_is_deterministic():
    a = parse_field("2^3")
    b = parse_field("2^3")
    assert a.modulus == b.modulus == (1, 1, 0, 1)  # x^3 + x + 1
