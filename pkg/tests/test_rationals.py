"""Exact rational layer: canonical form, counted arithmetic, text round trips."""
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from faulhaber import (
    OpCounter,
    format_rational,
    parse_rational,
    rat_add,
    rat_mul,
    rat_normalize,
    rat_sub,
)


def test_normalize_reduces_to_lowest_terms():
    assert rat_normalize(4, 6) == Fraction(2, 3)


def test_normalize_moves_sign_to_numerator():
    value = rat_normalize(3, -6)
    assert value == Fraction(-1, 2)
    assert value.denominator == 2


def test_normalize_zero_is_zero_over_one():
    value = rat_normalize(0, 7)
    assert value.numerator == 0
    assert value.denominator == 1


def test_normalize_rejects_zero_denominator():
    with pytest.raises(ZeroDivisionError):
        rat_normalize(1, 0)


def test_add_examples():
    assert rat_add(Fraction(1, 2), Fraction(1, 3)) == Fraction(5, 6)
    folded = rat_add(rat_add(Fraction(1, 6), Fraction(1, 2)), Fraction(1, 3))
    assert folded == 1
    assert rat_add(Fraction(7, 9), Fraction(0)) == Fraction(7, 9)


def test_mul_examples():
    assert rat_mul(Fraction(2, 3), Fraction(1, 2)) == Fraction(1, 3)
    assert rat_mul(Fraction(-5, 7), Fraction(1)) == Fraction(-5, 7)
    assert rat_mul(Fraction(3), Fraction(1, 6)) == Fraction(1, 2)


def test_counter_tallies_each_counted_operation():
    counter = OpCounter()
    rat_add(Fraction(1), Fraction(2), counter)
    rat_sub(Fraction(1), Fraction(2), counter)  # shares the additions tally
    rat_mul(Fraction(1), Fraction(2), counter)
    assert counter.additions == 2
    assert counter.multiplications == 1


def test_operations_without_counter_are_uncounted():
    counter = OpCounter()
    rat_add(Fraction(1), Fraction(2))
    rat_mul(Fraction(1), Fraction(2))
    assert counter == OpCounter(0, 0)


@given(st.fractions(), st.fractions())
def test_add_and_mul_commute(x, y):
    assert rat_add(x, y) == rat_add(y, x)
    assert rat_mul(x, y) == rat_mul(y, x)


@given(st.fractions(), st.fractions(), st.fractions())
def test_add_and_mul_associate(x, y, z):
    assert rat_add(rat_add(x, y), z) == rat_add(x, rat_add(y, z))
    assert rat_mul(rat_mul(x, y), z) == rat_mul(x, rat_mul(y, z))


@given(st.fractions(), st.fractions(), st.fractions())
def test_mul_distributes_over_add(x, y, z):
    assert rat_mul(x, rat_add(y, z)) == rat_add(rat_mul(x, y), rat_mul(x, z))


@given(st.fractions())
def test_identities(x):
    assert rat_add(x, Fraction(0)) == x
    assert rat_mul(x, Fraction(1)) == x


@given(st.fractions())
def test_results_are_canonical_and_round_trip(x):
    from math import gcd

    assert gcd(abs(x.numerator), x.denominator) == 1
    assert x.denominator >= 1
    assert rat_normalize(x.numerator, x.denominator) == x


def test_parse_accepts_fraction_and_integer_shorthand():
    assert parse_rational("-3/4") == Fraction(-3, 4)
    assert parse_rational("5") == Fraction(5)
    assert parse_rational(" 4/6 ") == Fraction(2, 3)


@pytest.mark.parametrize("bad", ["", "1.5", "3e2", "/4", "1/-2", "one"])
def test_parse_rejects_non_rational_literals(bad):
    with pytest.raises(ValueError):
        parse_rational(bad)


def test_parse_rejects_zero_denominator():
    with pytest.raises(ZeroDivisionError):
        parse_rational("1/0")


def test_format_omits_unit_denominator():
    assert format_rational(Fraction(-3, 4)) == "-3/4"
    assert format_rational(Fraction(5)) == "5"
    assert format_rational(Fraction(0)) == "0"


@given(st.fractions())
def test_parse_format_round_trip(x):
    assert parse_rational(format_rational(x)) == x
