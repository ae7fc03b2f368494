import math
from itertools import combinations

import pytest
from hypothesis import given, settings, strategies as st

from genscale.errors import EmptyScale
from genscale.generation import (
    GenSpec,
    Kind,
    classify,
    enumerate_generators,
    generate,
    geometric_support,
    theorem_count,
)
from genscale.numtheory import is_totient_number, order, totient
from genscale.scale import Scale, translate

from oracles import naive_generators

C_MAJOR = Scale(12, (0, 2, 4, 5, 7, 9, 11))


def generated_cases(c_max, d_min=2):
    for c in range(2, c_max + 1):
        for f in range(1, c):
            for d in range(d_min, order(f, c) + 1):
                yield c, f, d, generate(GenSpec(c, 0, f, d))


class TestGenerate:
    def test_fifths_reduce_mod_12(self):
        spec = GenSpec(12, 0, 7, 7)
        assert spec.terms() == (0, 7, 2, 9, 4, 11, 6)
        assert generate(spec) == Scale(12, (0, 2, 4, 6, 7, 9, 11))

    def test_starting_on_f_gives_c_major(self):
        assert GenSpec(12, 5, 7, 7).terms() == (5, 0, 7, 2, 9, 4, 11)
        assert generate(GenSpec(12, 5, 7, 7)) == C_MAJOR

    def test_zero_step_collapses(self):
        spec = GenSpec(12, 0, 0, 5)
        assert generate(spec) == Scale(12, (0,))
        assert not spec.is_injective

    def test_whole_tone_in_14(self):
        assert generate(GenSpec(14, 0, 2, 7)) == Scale(14, (0, 2, 4, 6, 8, 10, 12))

    def test_reduces_start_and_step(self):
        assert GenSpec(12, 17, -5, 3) == GenSpec(12, 5, 7, 3)

    @pytest.mark.parametrize("d", [0, 13])
    def test_length_bounds(self, d):
        with pytest.raises(ValueError):
            GenSpec(12, 0, 1, d)


class TestEnumerateGenerators:
    def test_c_major(self):
        rep = enumerate_generators(C_MAJOR)
        assert rep.steps == (5, 7)
        assert rep.count == 2
        # (5 0 7 2 9 4 11) and (11 4 9 2 7 0 5)
        assert rep.starts(7) == (5,)
        assert rep.starts(5) == (11,)

    def test_tritone(self):
        rep = enumerate_generators(Scale(12, (0, 6)))
        assert rep.steps == (6,)
        assert rep.count == 1

    def test_incomplete_polygon_in_16(self):
        rep = enumerate_generators(Scale(16, (0, 2, 4, 6, 8, 10, 12)))
        assert rep.steps == (2, 6, 10, 14)
        assert [rep.starts(f) for f in rep.steps] == [(0,), (4,), (8,), (12,)]

    def test_regular_polygon_any_start(self):
        rep = enumerate_generators(Scale(12, (0, 2, 4, 6, 8, 10)))
        assert rep.steps == (2, 10)
        assert rep.starts(2) == (0, 2, 4, 6, 8, 10)

    def test_one_note_convention(self):
        rep = enumerate_generators(Scale(12, (4,)))
        assert rep.steps == tuple(range(12))
        assert all(rep.starts(f) == (4,) for f in rep.steps)

    def test_empty_scale_rejected(self):
        with pytest.raises(EmptyScale):
            enumerate_generators(Scale(12, ()))

    def test_agrees_with_naive_search(self):
        for c in range(1, 11):
            for r in range(1, c + 1):
                for pcs in combinations(range(c), r):
                    rep = enumerate_generators(Scale(c, pcs))
                    expected = naive_generators(c, pcs)
                    assert {f: sorted(a) for f, a in rep.generators.items()} == expected

    def test_listed_pairs_reproduce_the_scale(self):
        for c, f, d, s in generated_cases(14):
            rep = enumerate_generators(s)
            for g, starts in rep.generators.items():
                for a in starts:
                    spec = GenSpec(c, a, g, d)
                    assert spec.is_injective and generate(spec) == s


class TestClassify:
    @pytest.mark.parametrize(
        "scale, kind, predicted",
        [
            (Scale(12, (0, 2, 4, 6, 8, 10)), Kind.REGULAR_POLYGON, 2),
            (Scale(10, (1, 3, 5, 7)), Kind.INCOMPLETE_POLYGON, 4),
            (Scale(12, (0, 1, 3)), Kind.NOT_GENERATED, 0),
            (C_MAJOR, Kind.TWO_GENERATOR, 2),
            (Scale(12, (3, 9)), Kind.TRITONE, 1),
            (Scale(12, (5,)), Kind.ONE_NOTE, 12),
            (Scale.full(12), Kind.FULL_AGGREGATE, 4),
            (Scale(12, tuple(range(1, 12))), Kind.ALMOST_FULL, 4),
            (Scale(14, (0, 2, 4, 6, 8, 10, 12)), Kind.REGULAR_POLYGON, 6),
            (Scale(16, (0, 2, 4, 6, 8, 10, 12)), Kind.INCOMPLETE_POLYGON, 4),
            (Scale(12, (0, 2, 4)), Kind.TWO_GENERATOR, 2),
            (Scale(2, (0, 1)), Kind.FULL_AGGREGATE, 1),
        ],
    )
    def test_examples(self, scale, kind, predicted):
        cl = classify(scale)
        assert cl.kind is kind
        assert cl.predicted_count == predicted

    def test_m_is_the_gcd_of_a_generator(self):
        assert classify(Scale(10, (1, 3, 5, 7))).m == 2
        assert classify(C_MAJOR).m == 1
        assert classify(Scale(12, (0, 1, 3))).m is None

    def test_not_generated_oracle(self):
        assert naive_generators(12, (0, 1, 3)) == {}

    def test_empty_scale_rejected(self):
        with pytest.raises(EmptyScale):
            classify(Scale(5, ()))

    def test_agrees_with_brute_force_on_every_subset(self):
        for c in range(1, 13):
            for r in range(1, c + 1):
                for pcs in combinations(range(c), r):
                    s = Scale(c, pcs)
                    count = enumerate_generators(s).count
                    cl = classify(s)
                    assert cl.predicted_count == count, s
                    assert (cl.kind is Kind.NOT_GENERATED) == (count == 0), s

    def test_predicted_counts_are_totients(self):
        for c, f, d, s in generated_cases(20):
            cl = classify(s)
            assert cl.generated
            assert is_totient_number(cl.predicted_count)

    def test_matches_theorem_formula(self):
        for c, f, d, s in generated_cases(24):
            assert classify(s).predicted_count == theorem_count(c, f, d), (c, f, d)


def test_geometric_support():
    expected = Scale(32, (1, 3, 9, 11, 17, 19, 25, 27))
    for r in (3, 11, 19, 27):
        assert geometric_support(32, r, 1, 8) == expected
    assert geometric_support(17, 1, 1, 5) == Scale(17, (1,))


# -- theorem-level properties of the generator sets ------------------------


def test_generator_counts_are_totient_numbers_up_to_30():
    counts = set()
    for c, f, d, s in generated_cases(30):
        n = enumerate_generators(s).count
        counts.add(n)
        assert is_totient_number(n), (c, f, d, n)
        assert n != 14
    assert 1 in counts and 2 in counts


def test_sign_symmetry():
    for c, f, d, s in generated_cases(20, d_min=1):
        steps = set(enumerate_generators(s).steps)
        assert steps == {(-g) % c for g in steps}


def test_equal_gcd_of_co_generators():
    for c, f, d, s in generated_cases(24):
        steps = enumerate_generators(s).steps
        assert len({math.gcd(c, g) for g in steps}) == 1, (c, f, d)


def test_incomplete_polygons_have_distinct_starts():
    seen = 0
    for c, f, d, s in generated_cases(24):
        if classify(s).kind not in (Kind.INCOMPLETE_POLYGON, Kind.ALMOST_FULL):
            continue
        rep = enumerate_generators(s)
        starts = [rep.starts(g) for g in rep.steps]
        assert all(len(st_) == 1 for st_ in starts)
        assert len({st_[0] for st_ in starts}) == len(starts)
        seen += 1
    assert seen > 0


def test_regular_polygons_have_totient_many_generators_of_order_d():
    for c in range(2, 31):
        for sub in range(1, c + 1):
            if c % sub or sub == 1:
                continue
            step = c // sub
            for t in (0, 1, step - 1):
                s = translate(generate(GenSpec(c, 0, step, sub)), t)
                rep = enumerate_generators(s)
                assert rep.count == totient(sub)
                assert all(order(g, c) == sub for g in rep.steps)


@settings(max_examples=300, deadline=None)
@given(st.integers(2, 24).flatmap(lambda c: st.tuples(
    st.just(c), st.sets(st.integers(0, c - 1), min_size=1), st.integers(0, c - 1))))
def test_translation_invariance(args):
    c, pcs, t = args
    s = Scale(c, tuple(pcs))
    assert enumerate_generators(translate(s, t)).steps == enumerate_generators(s).steps
    assert classify(translate(s, t)) == classify(s)
