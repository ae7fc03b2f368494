import math
import random
from decimal import Decimal, ROUND_FLOOR, localcontext
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from genscale.errors import HypothesisViolated, ParseError
from genscale.generation import enumerate_generators
from genscale.numtheory import is_prime, totient
from genscale.realgen import (
    RationalPoint,
    alpha_stability_interval,
    cyclic_closure,
    difference_set,
    generators_of_points,
    j_sequence,
    j_set,
    p_generators_finite,
    p_infinite_generators,
    p_set,
    parse_rational,
)
from genscale.scale import Scale

from oracles import naive_p_generators

F = Fraction
P = RationalPoint.of


class TestRationalPoint:
    def test_reduced_mod_one(self):
        p = RationalPoint(F(19, 12))
        assert (p.numerator, p.denominator) == (7, 12)
        assert RationalPoint(F(-1, 4)) == P(3, 4)
        assert str(P(0)) == "0/1"

    def test_parse(self):
        assert RationalPoint.parse("3/12") == P(1, 4)
        assert parse_rational("12/7") == F(12, 7)
        for bad in ("0.5", "1/0", "x"):
            with pytest.raises(ParseError):
                parse_rational(bad)

    def test_floats_refused(self):
        with pytest.raises(TypeError):
            RationalPoint(0.5)
        with pytest.raises(TypeError):
            j_set(1.5, 12, 3)

    def test_group_operations(self):
        assert P(7, 12) + P(7, 12) == P(1, 6)
        assert -P(1, 3) == P(2, 3)
        assert P(7, 12) * 3 == P(3, 4)
        assert sorted([P(3, 4), P(0), P(1, 3)]) == [P(0), P(1, 3), P(3, 4)]


class TestJSet:
    def test_maximally_even_seven_in_twelve(self):
        s = j_set(F(12, 7), 12, 7)
        assert s == Scale(12, (0, 1, 3, 5, 6, 8, 10))
        assert enumerate_generators(s).steps == (5, 7)

    def test_integer_alpha_is_a_cluster(self):
        assert j_set(1, 12, 5) == Scale(12, (0, 1, 2, 3, 4))
        assert j_set(1, 5, 7) == Scale.full(5)

    def test_pentatonic(self):
        assert j_set(F(12, 5), 12, 5) == Scale(12, (0, 2, 4, 7, 9))

    def test_exact_floor_matches_decimal_evaluation(self):
        rng = random.Random(20090521)
        with localcontext() as ctx:
            ctx.prec = 60
            for _ in range(1000):
                alpha = F(rng.randint(0, 400), rng.randint(1, 60))
                c, d = rng.randint(1, 40), rng.randint(1, 40)
                expected = tuple(
                    int((Decimal(k * alpha.numerator) / Decimal(alpha.denominator))
                        .to_integral_value(rounding=ROUND_FLOOR)) % c
                    for k in range(d)
                )
                assert j_sequence(alpha, c, d) == expected


class TestStability:
    def test_twelve_sevenths(self):
        lo, hi = alpha_stability_interval(F(12, 7), 12, 7)
        assert lo == F(12, 7)
        assert hi == min(F(math.floor(F(12 * k, 7)) + 1, k) for k in range(1, 7)) == F(7, 4)
        rng = random.Random(7)
        base = j_sequence(lo, 12, 7)
        for _ in range(100):
            beta = lo + (hi - lo) * F(rng.randrange(10**6), 10**6)
            assert j_sequence(beta, 12, 7) == base
        assert j_sequence(hi, 12, 7) != base

    def test_integer_alpha_length_two(self):
        for a in range(5):
            assert alpha_stability_interval(a, 12, 2) == (a, a + 1)

    @given(st.fractions(min_value=0, max_value=50), st.integers(2, 30), st.integers(2, 30))
    def test_interval_is_nondegenerate_and_maximal(self, alpha, c, d):
        lo, hi = alpha_stability_interval(alpha, c, d)
        assert hi > lo
        assert j_sequence((lo + hi) / 2, c, d) == j_sequence(lo, c, d)
        assert j_sequence(hi, c, d) != j_sequence(lo, c, d)

    def test_length_one_rejected(self):
        with pytest.raises(ValueError):
            alpha_stability_interval(F(1, 2), 12, 1)


class TestPSet:
    def test_fifths(self):
        ps = p_set(F(7, 12), 7)
        assert ps.points == tuple(P(k, 12) for k in (0, 2, 4, 6, 7, 9, 11))

    def test_zero(self):
        assert p_set(0, 5).points == (P(0),)

    def test_tritone_analogue(self):
        assert p_set(F(1, 2), 2).points == (P(0), P(1, 2))


class TestFiniteGenerators:
    @pytest.mark.parametrize(
        "x, d, expected",
        [
            (F(7, 12), 5, {P(7, 12), P(5, 12)}),
            (F(1, 9), 2, {P(1, 9), P(8, 9)}),
            (F(3, 31), 7, {P(3, 31), P(28, 31)}),
        ],
    )
    def test_examples(self, x, d, expected):
        assert p_generators_finite(p_set(x, d)) == expected
        assert {RationalPoint(y) for y in naive_p_generators(x, d)} == expected

    def test_hypothesis_enforced(self):
        with pytest.raises(HypothesisViolated):
            p_generators_finite(p_set(F(1, 6), 4))  # 6 <= 2*3
        with pytest.raises(HypothesisViolated):
            p_generators_finite(p_set(F(1, 7), 1))

    def test_translated_sets(self):
        for x, d, tau in [(F(7, 12), 5, F(1, 12)), (F(4, 29), 9, F(17, 29)), (F(2, 5), 2, F(1, 5))]:
            moved = [p + RationalPoint(tau) for p in p_set(x, d).points]
            assert generators_of_points(moved) == {RationalPoint(x), RationalPoint(-x)}

    def test_agrees_with_naive_search_on_composite_grids(self):
        for q in range(3, 26):
            for k in range(1, q):
                if math.gcd(k, q) != 1:
                    continue
                x = F(k, q)
                for d in range(2, q):
                    if q <= 2 * (d - 1):
                        break
                    got = p_generators_finite(p_set(x, d))
                    assert got == {RationalPoint(y) for y in naive_p_generators(x, d)}
                    assert got == {RationalPoint(x), RationalPoint(-x)}


class TestInfiniteGenerators:
    def test_tritone(self):
        assert p_infinite_generators(F(1, 2)) == {P(1, 2)}

    def test_quarter(self):
        assert p_infinite_generators(F(3, 12)) == {P(1, 4), P(3, 4)}

    def test_depends_only_on_denominator(self):
        for a in (1, 2, 4, 5, 7, 8):
            assert p_infinite_generators(F(a, 9)) == p_infinite_generators(F(1, 9))

    def test_integer_x(self):
        assert p_infinite_generators(3) == {P(0)}

    def test_counts_and_closure(self):
        for b in range(1, 101):
            gens = p_infinite_generators(F(1, b))
            assert len(gens) == totient(b)
            group = {P(k, b) for k in range(b)}
            for g in gens:
                assert cyclic_closure(g) == group

    def test_half_infinite_scale_regenerates_the_group(self):
        for b in range(1, 40):
            for a in range(b):
                if math.gcd(a, b) != 1:
                    continue
                x = P(a, b)
                tau = P(5, 7)
                truncated = [tau + x * k for k in range(b)]
                assert difference_set(truncated) == {P(k, b) for k in range(b)}


def test_prime_grid_surrogate_small():
    for q in (3, 5, 7, 11, 13):
        assert is_prime(q)
        for k in range(1, q):
            for d in range(2, (q - 1) // 2 + 1):
                x = F(k, q)
                assert p_generators_finite(p_set(x, d)) == {RationalPoint(x), RationalPoint(1 - x)}
