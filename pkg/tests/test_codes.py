import random

import numpy as np
import pytest

from helpers import naive_min_distance, naive_weight_distribution

from cyclocode.codes import (
    GenMatrix,
    build_Cn,
    build_Cn1,
    build_repetition,
    direct_sum,
    dual,
    from_generator,
    min_distance,
    same_code,
    sum_codes,
    weight_distribution,
    zero_sum_subcode,
    zeros_and_nonzeros,
)
from cyclocode.cyclotomic import cosets, minimal_poly, profile
from cyclocode.errors import (
    BudgetExceeded,
    CharacteristicDividesN,
    FieldMismatch,
    LengthMismatch,
    NotADivisor,
    NotMonic,
    PrimeLength,
)
from cyclocode.field import make_prime_field, parse_field
from cyclocode.poly import Poly, poly_order

F2 = make_prime_field(2)
F3 = make_prime_field(3)
F5 = make_prime_field(5)


def test_from_generator_repetition():
    c = from_generator(Poly(F2, [1, 1, 1]), 3)
    assert (c.n, c.k) == (3, 1)
    assert same_code(c, build_repetition(3, F2))


def test_from_generator_parity():
    c = from_generator(Poly(F5, [-1, 1]), 4)
    assert (c.n, c.k) == (4, 3)


def test_from_generator_rejects_non_divisor():
    with pytest.raises(NotADivisor):
        from_generator(Poly(F2, [1, 1, 1]), 4)


def test_from_generator_rejects_non_monic():
    with pytest.raises(NotMonic):
        from_generator(Poly(F5, [1, 2]), 4)


def test_build_Cn():
    assert build_Cn(6, F5).params() == (6, 4)
    assert build_Cn(15, F2).params() == (15, 7)
    with pytest.raises(CharacteristicDividesN):
        build_Cn(3, F3)


def test_build_Cn1():
    assert build_Cn1(15, F2).params() == (15, 6)
    assert build_Cn1(6, F5).params() == (6, 3)
    with pytest.raises(PrimeLength):
        build_Cn1(7, F2)


def test_repetition_code():
    r5 = build_repetition(5, F2)
    assert r5.params() == (5, 1)
    assert min_distance(r5).d == 5
    d = dual(r5)
    assert d.params() == (5, 4)
    assert min_distance(d).d == 2
    assert build_repetition(1, F3).params() == (1, 1)


def test_dual_involution():
    for c in [
        build_Cn(15, F2),
        build_Cn1(15, F2),
        build_Cn(6, F5),
        build_repetition(7, F3),
        build_Cn(5, parse_field("2^2")),
    ]:
        assert same_code(dual(dual(c)), c)
        assert dual(c).k == c.n - c.k


def test_dual_of_repetition_3():
    d = dual(build_repetition(3, F2))
    assert d.g == Poly(F2, [1, 1])  # x - 1 over F_2
    assert d.params() == (3, 2)
    assert min_distance(d).d == 2


def test_dual_of_C6_over_F5():
    d = dual(build_Cn(6, F5))
    assert d.params() == (6, 2)
    assert min_distance(d).d == 4  # 2^omega(6)


def test_generator_times_check_is_xn_minus_1():
    for c in [build_Cn(15, F2), build_Cn(6, F5), build_Cn1(12, F5)]:
        assert c.g * c.h == Poly.x_n_minus_1(c.ctx, c.n)
        assert c.g.degree + c.h.degree == c.n


def test_parity_check_orthogonality():
    for c in [
        build_Cn(15, F2),
        build_Cn1(15, F2),
        build_Cn(6, F5),
        build_Cn(10, F3),
        dual(build_Cn(10, F3)),
        build_Cn(5, parse_field("2^2")),
    ]:
        ctx = c.ctx
        g = c.generator_matrix().rows
        h = dual(c).generator_matrix().rows
        for grow in g:
            for hrow in h:
                s = 0
                for a, b in zip(map(int, grow), map(int, hrow)):
                    s = ctx.add(s, ctx.mul(a, b))
                assert s == 0


def test_rref():
    ident = GenMatrix(F2, [[1, 0], [0, 1]])
    assert np.array_equal(ident.rref().rows, ident.rows)
    dropped = GenMatrix(F2, [[1, 1], [0, 0]]).rref()
    assert dropped.rows.tolist() == [[1, 1]]
    c3 = GenMatrix(F2, [[1, 1, 1]]).rref()
    assert same_code(build_Cn(3, F2), c3)


def test_same_code_checks():
    c6 = build_Cn(6, F5)
    assert same_code(c6, c6)
    assert not same_code(c6, dual(c6))
    with pytest.raises(LengthMismatch):
        same_code(c6, build_Cn(8, F5))
    with pytest.raises(FieldMismatch):
        same_code(build_Cn(4, F5), build_Cn(4, F3))


def test_sum_codes():
    c = build_Cn(15, F2)
    assert same_code(sum_codes(c, c), c)
    lhs = sum_codes(dual(c), build_repetition(15, F2))
    assert same_code(lhs, dual(build_Cn1(15, F2)))
    zero_dim = from_generator(Poly.x_n_minus_1(F2, 15), 15)
    assert same_code(sum_codes(zero_dim, c), c)


def test_zero_sum_subcode():
    assert same_code(zero_sum_subcode(build_Cn(15, F2)), build_Cn1(15, F2))
    # repetition code: n*lambda = 0 decides everything over F_2
    assert same_code(zero_sum_subcode(build_repetition(4, F2)), build_repetition(4, F2))
    assert zero_sum_subcode(build_repetition(5, F2)).num_rows == 0
    full = GenMatrix(F3, np.eye(3, dtype=np.int64))
    z = zero_sum_subcode(full)
    assert z.num_rows == 2
    assert min_distance(z).d == 2


def test_direct_sum():
    ds = direct_sum(build_repetition(2, F2), build_repetition(3, F2))
    assert (ds.num_rows, ds.n) == (2, 5)
    assert min_distance(ds).d == 2
    dd = direct_sum(dual(build_repetition(3, F2)), dual(build_repetition(3, F2)))
    assert (dd.rref().num_rows, dd.n) == (4, 6)
    assert min_distance(dd).d == 2
    a = build_Cn(6, F5).generator_matrix()
    empty = GenMatrix(F5, [], n=0)
    assert same_code(direct_sum(a, empty), a)
    with pytest.raises(FieldMismatch):
        direct_sum(build_repetition(2, F2), build_repetition(2, F3))


def test_min_distance_known_values():
    assert min_distance(build_Cn(15, F2)).d == 3
    assert min_distance(build_Cn1(15, F2)).d == 6
    r = min_distance(dual(build_Cn(15, F2)))
    assert r.d == 4
    assert r.codewords_enumerated == 2 ** 8 - 1
    assert r.method == "exhaustive-messages"


def test_min_distance_budget():
    with pytest.raises(BudgetExceeded) as exc:
        min_distance(build_Cn(15, F2), budget=100)
    assert exc.value.required == 127


def _random_divisor_code(rng, ctx, n):
    reps = [c.representative for c in cosets(n, ctx.q)]
    chosen = [s for s in reps if rng.random() < 0.5]
    if not chosen or len(chosen) == len(reps):
        chosen = reps[:1]
    g = Poly.one(ctx)
    for s in chosen:
        g = g * minimal_poly(s, n, ctx)
    return from_generator(g, n)


@pytest.mark.parametrize("literal,lengths", [("2", [7, 9, 15]), ("3", [8, 10, 13]), ("5", [6, 8, 12]), ("2^2", [5, 9, 15])])
def test_min_distance_matches_naive_oracle(literal, lengths):
    ctx = parse_field(literal)
    rng = random.Random(11)
    for n in lengths:
        for _ in range(3):
            c = _random_divisor_code(rng, ctx, n)
            if ctx.q ** c.k > 1 << 14:
                continue
            assert min_distance(c).d == naive_min_distance(c)


def test_low_order_generator_gives_distance_at_most_2():
    rng = random.Random(5)
    checked = 0
    while checked < 100:
        lit = rng.choice(["2", "3", "5", "2^2"])
        ctx = parse_field(lit)
        n = rng.choice([6, 8, 9, 10, 12, 14, 15])
        if n % ctx.p == 0:
            continue
        divisors = [e for e in range(1, n) if n % e == 0]
        e = rng.choice(divisors)
        c_small = _random_divisor_code(rng, ctx, e)
        g = c_small.g
        if poly_order(g) >= n or (Poly.x_n_minus_1(ctx, n) % g).is_zero is False:
            continue
        c = from_generator(g, n)
        if ctx.q ** c.k - 1 > 1 << 16:
            continue
        assert min_distance(c).d <= 2
        checked += 1


def test_weight_distribution():
    assert weight_distribution(build_repetition(3, F2)) == [1, 0, 0, 1]
    assert weight_distribution(dual(build_repetition(3, F2))) == [1, 0, 3, 0]
    for c in [build_Cn(15, F2), build_Cn(6, F5), build_Cn(5, parse_field("2^2"))]:
        wd = weight_distribution(c)
        assert sum(wd) == c.ctx.q ** c.k
        assert wd[0] == 1
        assert wd == naive_weight_distribution(c)


def test_weight_distribution_budget():
    with pytest.raises(BudgetExceeded):
        weight_distribution(build_Cn(15, F2), budget=100)


def test_zeros_and_nonzeros():
    import math

    c15 = build_Cn(15, F2)
    zeros, nonzeros = zeros_and_nonzeros(c15)
    assert set(zeros) == {i for i in range(15) if math.gcd(i, 15) == 1}
    assert len(zeros) == c15.g.degree

    r7 = build_repetition(7, F2)
    zr, _ = zeros_and_nonzeros(r7)
    assert set(zr) == set(range(1, 7))

    _, nz = zeros_and_nonzeros(dual(c15))
    assert set(nz) == {i for i in range(15) if math.gcd(i, 15) == 1}

    # defining sets are unions of cyclotomic cosets
    for c in [c15, build_Cn1(15, F2), build_Cn(8, F5), dual(build_Cn(8, F5))]:
        zeros, _ = zeros_and_nonzeros(c)
        zset = set(zeros)
        for coset in cosets(c.n, c.ctx.q):
            inter = zset & set(coset.members)
            assert inter == set() or inter == set(coset.members)


def test_distance_theorems_small_sweep():
    for lit in ("2", "3", "2^2", "5"):
        ctx = parse_field(lit)
        for n in range(2, 16):
            if n % ctx.p == 0:
                continue
            pr = profile(n)
            budget = 1 << 20
            cn = build_Cn(n, ctx)
            if ctx.q ** cn.k - 1 <= budget:
                assert min_distance(cn).d == pr.lpf
            if ctx.q ** pr.phi - 1 <= budget:
                assert min_distance(dual(cn)).d == 2 ** pr.omega
            if not (pr.omega == 1 and pr.factorization[0][1] == 1):
                cn1 = build_Cn1(n, ctx)
                if ctx.q ** cn1.k - 1 <= budget:
                    assert min_distance(cn1).d == 2 * pr.lpf
