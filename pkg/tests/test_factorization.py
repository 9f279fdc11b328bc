"""Factorization engine: frozen examples, oracles, soundness, determinism."""

import random
from fractions import Fraction

import pytest

from conftest import (gf2_bits, gf2_factor_count_bruteforce,
                      gf2_irreducible_bruteforce, quadratic_irreducible_over_q,
                      random_univariate)
from knotomega.errors import DegreeCapExceeded, UnsupportedRing, ZeroPolynomial
from knotomega.polyalg import (GF2, INT, RAT, LaurentPoly, factor, format_poly,
                               parse_poly)


def test_gf2_biquadratic_example():
    # brute-force oracle first: t^4 + t^2 + 1 has two irreducible factors
    assert gf2_factor_count_bruteforce(0b10101) == 2
    fac = factor(parse_poly("t^4 + t^2 + 1", GF2))
    assert [(format_poly(p), m) for p, m in fac.factors] == [("1 + t + t^2", 2)]


def test_gf2_quadratic_irreducible():
    assert gf2_irreducible_bruteforce(0b111)
    fac = factor(parse_poly("t^2 + t + 1", GF2))
    assert [(format_poly(p), m) for p, m in fac.factors] == [("1 + t + t^2", 1)]


def test_rational_difference_of_squares():
    fac = factor(parse_poly("t^2 - 1", RAT))
    assert [(format_poly(p), m) for p, m in fac.factors] == \
        [("-1 + t", 1), ("1 + t", 1)]
    assert fac.unit == LaurentPoly.one(RAT)


def test_rational_unit_and_shift_extraction():
    fac = factor(parse_poly("3*t^-2 + 3*t^-1", RAT))
    # 3 t^-2 (1 + t): unit 3 t^-2, single factor 1 + t
    assert fac.unit == LaurentPoly.monomial(RAT, (-2,), 3)
    assert [(format_poly(p), m) for p, m in fac.factors] == [("1 + t", 1)]


def test_quadratic_discriminant_oracle_agreement(rng):
    for _ in range(80):
        c0, c1 = rng.randint(-9, 9), rng.randint(-9, 9)
        if c0 == 0:
            continue
        poly = LaurentPoly.univariate(RAT, [c0, c1, 1])
        fac = factor(poly)
        irreducible = len(fac.factors) == 1 and fac.factors[0][1] == 1
        assert irreducible == quadratic_irreducible_over_q(c0, c1, 1)


def test_soundness_reexpansion(rng):
    for trial in range(120):
        ring = GF2 if trial % 2 == 0 else RAT
        p = random_univariate(rng, ring, max_degree=20)
        fac = factor(p)
        assert fac.expand() == p
        for g, _ in fac.factors:
            _, coeffs = g.univariate_coeffs()
            assert coeffs[0] != 0, "factor has a zero constant term"
            assert coeffs[-1] == (1 if ring is GF2 else Fraction(1)), "factor not monic"


def test_gf2_counts_match_bruteforce(rng):
    for _ in range(60):
        p = random_univariate(rng, GF2, max_degree=12)
        assert factor(p).count() == gf2_factor_count_bruteforce(gf2_bits(p))


def test_determinism_across_runs(rng):
    for _ in range(20):
        p = random_univariate(rng, rng.choice([GF2, RAT]), max_degree=16)
        first = [(format_poly(g), m) for g, m in factor(p).factors]
        again = [(format_poly(g), m) for g, m in factor(p).factors]
        assert first == again
        degrees = [g.max_exp() for g, _ in factor(p).factors]
        assert degrees == sorted(degrees)


def test_sympy_cross_check(rng):
    sympy = pytest.importorskip("sympy")
    t = sympy.Symbol("t")
    for trial in range(30):
        ring = GF2 if trial % 2 == 0 else RAT
        p = random_univariate(rng, ring, max_degree=14, shift_range=0)
        _, coeffs = p.univariate_coeffs()
        expr = sum(sympy.Rational(c) * t ** i for i, c in enumerate(coeffs))
        if ring is GF2:
            factors = sympy.factor_list(sympy.Poly(expr, t, modulus=2))[1]
        else:
            factors = sympy.factor_list(sympy.Poly(expr, t))[1]
        count = sum(m for g, m in factors if sympy.Poly(g, t).degree() >= 1)
        assert factor(p).count() == count


def test_zero_polynomial_rejected():
    with pytest.raises(ZeroPolynomial):
        factor(LaurentPoly.zero(GF2))


def test_integer_ring_rejected():
    with pytest.raises(UnsupportedRing):
        factor(parse_poly("t + 2", INT))


def test_degree_cap():
    big = LaurentPoly.monomial(GF2, (70,)) + LaurentPoly.one(GF2)
    with pytest.raises(DegreeCapExceeded):
        factor(big)
