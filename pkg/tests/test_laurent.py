"""Laurent polynomial arithmetic, parsing, and serialization."""

import random
from fractions import Fraction

import pytest

from knotomega.errors import DimensionMismatch, MixedRings, ParseError
from knotomega.polyalg import (GF2, INT, RAT, LaurentPoly, format_poly,
                               parse_poly, poly_from_json, poly_to_json)


def test_zero_is_empty_map():
    z = LaurentPoly.zero(INT)
    assert z.is_zero()
    assert z.terms == {}
    assert (z + z).is_zero()


def test_zero_coefficients_dropped():
    p = LaurentPoly(INT, 1, {(0,): 1, (1,): 0})
    assert list(p.terms) == [(0,)]
    q = LaurentPoly.univariate(INT, [1, -1]) + LaurentPoly.univariate(INT, [0, 1])
    assert q == LaurentPoly.one(INT)


def test_gf2_coefficients_normalize():
    p = LaurentPoly.univariate(GF2, [3, 2, 5])
    assert p == LaurentPoly.univariate(GF2, [1, 0, 1])


def test_addition_cancels_over_gf2():
    p = parse_poly("t + 1", GF2)
    assert (p + p).is_zero()


def test_multiplication_matches_hand_expansion():
    p = parse_poly("t^-1 + 1 + t", INT)
    q = parse_poly("t - 1", INT)
    # telescoping product: t^2 - t^-1
    assert p * q == LaurentPoly(INT, 1, {(2,): 1, (-1,): -1})


def test_power_by_squaring():
    p = parse_poly("1 + t", GF2)
    assert p ** 2 == parse_poly("1 + t^2", GF2)
    assert p ** 0 == LaurentPoly.one(GF2)


def test_mixed_rings_rejected():
    with pytest.raises(MixedRings):
        parse_poly("t", INT) + parse_poly("t", RAT)
    with pytest.raises(DimensionMismatch):
        LaurentPoly.one(INT, 1) * LaurentPoly.one(INT, 2)


def test_reverse_and_evaluate():
    p = parse_poly("t^-1 + -1 + t", INT)
    assert p.reverse() == p
    assert p.evaluate([1]) == 1
    assert p.evaluate([-1]) == -3


def test_support_order_is_lexicographic():
    p = LaurentPoly(INT, 2, {(1, 0): 1, (0, 2): 3, (-1, 5): 2})
    assert p.support() == [(-1, 5), (0, 2), (1, 0)]


# ---------------------------------------------------------------- text syntax


def test_parse_textual_examples():
    p = parse_poly("t^-1 + 1 + t", INT)
    assert p.terms == {(-1,): 1, (0,): 1, (1,): 1}
    q = parse_poly("2*z1^2*z2^-1 + -1", INT)
    assert q.terms == {(2, -1): 2, (0, 0): -1}
    r = parse_poly("3/4*t", RAT)
    assert r.terms == {(1,): Fraction(3, 4)}


def test_parse_subtraction_and_signs():
    assert parse_poly("t - 1", INT) == parse_poly("t + -1", INT)
    assert parse_poly("-t^2 - -1", INT) == parse_poly("1 + -1*t^2", INT)


def test_format_matches_cli_convention():
    p = LaurentPoly(INT, 1, {(-1,): 1, (0,): -1, (1,): 1})
    assert format_poly(p) == "t^-1 + -1 + t"
    assert format_poly(LaurentPoly.zero(INT)) == "0"
    assert format_poly(LaurentPoly(INT, 2, {(1, -2): -1})) == "-z1*z2^-2"


def test_parse_format_round_trip(rng):
    for _ in range(60):
        ring = rng.choice([GF2, INT, RAT])
        terms = {}
        for _ in range(rng.randint(1, 6)):
            exp = (rng.randint(-5, 5),)
            terms[exp] = rng.randint(1, 7) if ring is not RAT else Fraction(
                rng.randint(1, 9), rng.randint(1, 9))
        p = LaurentPoly(ring, 1, terms)
        assert parse_poly(format_poly(p), ring) == p


def test_parse_errors_carry_position():
    with pytest.raises(ParseError):
        parse_poly("", INT)
    with pytest.raises(ParseError):
        parse_poly("t^", INT)
    with pytest.raises(ParseError):
        parse_poly("t + + ", INT)
    with pytest.raises(ParseError):
        parse_poly("q^2", INT)


# ---------------------------------------------------------------- JSON form


def test_json_round_trip(rng):
    for _ in range(40):
        ring = rng.choice([GF2, INT, RAT])
        dim = rng.randint(1, 3)
        terms = {}
        for _ in range(rng.randint(1, 5)):
            exp = tuple(rng.randint(-4, 4) for _ in range(dim))
            val = Fraction(rng.randint(1, 5), rng.randint(1, 5)) if ring is RAT \
                else rng.randint(1, 5)
            terms[exp] = val
        p = LaurentPoly(ring, dim, terms)
        blob = poly_to_json(p)
        assert poly_from_json(blob, ring) == p
        assert blob["dim"] == dim
        assert all(isinstance(t["coeff"], str) for t in blob["terms"])
