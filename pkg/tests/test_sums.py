"""Evaluation oracle tests and order/bound properties of the sum families."""

from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from oddharmonic.sums import (
    Composition,
    STAR_ODD,
    STAR_STANDARD,
    STRICT_ODD,
    STRICT_STANDARD,
    SumSpec,
    WorkLimitExceeded,
    compositions,
    dominates,
    harmonic_sum,
    harmonic_sum_brute,
    odd_harmonic,
    odd_harmonic_star,
    ones_power_bound,
)

F = Fraction

ALL_SPECS = (STRICT_STANDARD, STAR_STANDARD, STRICT_ODD, STAR_ODD)


# -- composition plumbing ----------------------------------------------------

def test_composition_parse_and_format():
    c = Composition.parse("1, 2,-3")
    assert c.indices == (1, 2, -3)
    assert str(c) == "1,2,-3"
    assert c.depth == 3 and c.weight == 6
    assert not c.all_positive
    assert Composition.parse(str(c)) == c


def test_composition_validation():
    with pytest.raises(ValueError):
        Composition(())
    with pytest.raises(ValueError):
        Composition((1, 0, 2))
    with pytest.raises(ValueError):
        Composition.parse("1,,2")


def test_composition_repeat():
    assert Composition.repeat(1, 4).indices == (1, 1, 1, 1)
    assert Composition.repeat(2, 1).weight == 2


def test_spec_validation():
    with pytest.raises(ValueError):
        SumSpec("loose", "odd")
    with pytest.raises(ValueError):
        harmonic_sum(STRICT_ODD, 2, (1, 1, 1))     # depth > n
    with pytest.raises(ValueError):
        harmonic_sum(STAR_ODD, 2, (1, 1, 1))       # star also rejects depth > n
    with pytest.raises(ValueError):
        harmonic_sum(STRICT_STANDARD, 5, (1, -2))  # alternating needs odd parity
    assert harmonic_sum(STRICT_STANDARD, 5, (-2,)) is not None  # depth 1 ok


# -- frozen values (checked against the enumeration oracle) ------------------

def test_known_values_strict_standard():
    for s in range(1, 11):
        assert harmonic_sum(STRICT_STANDARD, 1, (s,)) == 1
    assert harmonic_sum(STRICT_STANDARD, 3, (1, 1)) == 1
    assert harmonic_sum(STRICT_STANDARD, 2, (1,)) == F(3, 2)


def test_known_values_odd():
    assert odd_harmonic(2, (1,)) == F(4, 3)
    assert odd_harmonic(3, (1,)) == F(23, 15)
    assert odd_harmonic(2, (-1,)) == F(2, 3)
    assert odd_harmonic(2, (1, 1)) == F(1, 3)
    assert odd_harmonic_star(2, (1, 1)) == F(13, 9)
    assert harmonic_sum(STAR_STANDARD, 1, (7,)) == 1


def test_frozen_regression_values():
    # independently computed (enumeration + Newton identity)
    assert odd_harmonic(12, (1, 1)) == F(65616235922, 35137127025)
    assert odd_harmonic(26, (1, 1)) == F(66784782068185875410609, 23884257395269078782975)


def test_input_coercion_forms():
    spec_value = harmonic_sum(STRICT_ODD, 3, Composition((1,)))
    assert spec_value == harmonic_sum(STRICT_ODD, 3, "1")
    assert spec_value == harmonic_sum(STRICT_ODD, 3, (1,))
    assert harmonic_sum(STRICT_ODD, 3, 1) == spec_value  # bare int is depth 1


def test_values_match_oracle_spot():
    cases = [
        (STRICT_ODD, 3, (1,)),
        (STRICT_ODD, 2, (1, 1)),
        (STAR_ODD, 2, (1, 1)),
        (STAR_STANDARD, 4, (2, 1)),
        (STRICT_STANDARD, 5, (1, 2)),
        (STRICT_ODD, 6, (1, -2, 1)),
        (STAR_ODD, 5, (-1, 1)),
    ]
    for spec, n, comp in cases:
        assert harmonic_sum(spec, n, comp) == harmonic_sum_brute(spec, n, comp)


def test_work_limit():
    with pytest.raises(WorkLimitExceeded):
        harmonic_sum_brute(STRICT_ODD, 60, (1,) * 10, work_limit=1000)


# -- hypothesis: oracle equivalence and order properties ----------------------

@st.composite
def sum_instances(draw, max_n=9, max_depth=3, max_mag=4, signed=True):
    spec = draw(st.sampled_from(ALL_SPECS))
    n = draw(st.integers(1, max_n))
    r = draw(st.integers(1, min(n, max_depth)))
    mags = draw(st.lists(st.integers(1, max_mag), min_size=r, max_size=r))
    if signed and (spec.parity == "odd" or r == 1):
        signs = draw(st.lists(st.sampled_from((1, -1)), min_size=r, max_size=r))
    else:
        signs = [1] * r
    comp = tuple(m * s for m, s in zip(mags, signs))
    return spec, n, comp


@settings(max_examples=120, deadline=None)
@given(sum_instances())
def test_eval_equals_bruteforce(instance):
    spec, n, comp = instance
    assert harmonic_sum(spec, n, comp) == harmonic_sum_brute(spec, n, comp)


@settings(max_examples=60, deadline=None)
@given(sum_instances(signed=False))
def test_strict_le_star_and_monotone_in_n(instance):
    spec, n, comp = instance
    strict = SumSpec("strict", spec.parity)
    star = SumSpec("star", spec.parity)
    assert harmonic_sum(strict, n, comp) <= harmonic_sum(star, n, comp)
    assert harmonic_sum(spec, n, comp) <= harmonic_sum(spec, n + 1, comp)


@settings(max_examples=60, deadline=None)
@given(sum_instances(max_n=8, max_mag=3))
def test_alternating_dominated_by_all_positive(instance):
    spec, n, comp = instance
    positive = tuple(abs(c) for c in comp)
    if spec.parity == "standard" and len(comp) > 1:
        comp = positive
    assert abs(harmonic_sum(spec, n, comp)) <= harmonic_sum(spec, n, positive)


# -- dominance order ----------------------------------------------------------

def test_dominates_examples():
    assert dominates((1, 2, 1), (1, 1, 1))
    assert dominates((2, 3), (2, 3))           # split at l = 0 with equality
    assert not dominates((1, 1), (2, 1))       # weight clause fails
    with pytest.raises(ValueError):
        dominates((1, 1), (1, 1, 1))
    with pytest.raises(ValueError):
        dominates((1, -1), (1, 1))


def test_dominance_forces_order_exhaustively():
    comps = [c for c in compositions(5) if len(c) in (2, 3)]
    for s in comps:
        for t in comps:
            if len(s) != len(t) or not dominates(s, t):
                continue
            for n in (3, 6):
                assert odd_harmonic(n, s) <= odd_harmonic(n, t), (s, t, n)


def test_ones_power_bound():
    assert ones_power_bound(1, 1) == 1
    assert ones_power_bound(2, 1) == F(4, 3)
    assert ones_power_bound(2, 2) == F(8, 9)
    with pytest.raises(ValueError):
        ones_power_bound(2, 3)


def test_all_ones_chain_bound():
    for n in range(1, 15):
        for r in range(1, min(n, 6) + 1):
            assert odd_harmonic(n, (1,) * r) <= ones_power_bound(n, r)


# -- composition generator -----------------------------------------------------

def test_compositions_graded_lex_order():
    got = list(compositions(4))
    expected_prefix = [
        (1,),
        (2,), (1, 1),
        (3,), (1, 2), (2, 1), (1, 1, 1),
        (4,), (1, 3), (2, 2), (3, 1),
    ]
    assert got[: len(expected_prefix)] == expected_prefix
    # 2^(w-1) compositions of weight w
    assert len(got) == sum(2 ** (w - 1) for w in range(1, 5))
    assert len(set(got)) == len(got)


def test_compositions_depth_cap():
    got = list(compositions(4, depth_max=2))
    assert all(len(c) <= 2 for c in got)
    assert (1, 1, 1) not in got
    assert (2, 2) in got
