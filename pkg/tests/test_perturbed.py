"""Projective integrality of rational-exponent elements."""

from fractions import Fraction

import pytest

from knotomega.polyalg import PerturbedElement, is_projectively_integral


def _frac_parts_agree_bruteforce(x):
    """Oracle: scan all pairs of exponent vectors for integral differences."""
    terms = sorted(x.terms)
    for exp_a, _ in terms:
        for exp_b, _ in terms:
            for a, b in zip(exp_a, exp_b):
                if (a - b).denominator != 1:
                    return False
    return True


def test_half_shift_witness():
    x = PerturbedElement.build(1, 1, [((Fraction(1, 2),), 0), ((Fraction(3, 2),), 0)])
    assert is_projectively_integral(x) == (Fraction(1, 2),)


def test_mixed_fractional_parts_fail():
    x = PerturbedElement.build(1, 1, [((0,), 0), ((Fraction(1, 2),), 0)])
    assert is_projectively_integral(x) is None


def test_empty_element_vacuous():
    x = PerturbedElement.zero(3, 2)
    assert is_projectively_integral(x) == (Fraction(0), Fraction(0), Fraction(0))


def test_witness_makes_translate_integral(rng):
    for _ in range(200):
        dim = rng.randint(1, 4)
        basis = rng.randint(1, 3)
        terms = set()
        for _ in range(rng.randint(1, 6)):
            exp = tuple(Fraction(rng.randint(-20, 20), rng.randint(1, 12))
                        for _ in range(dim))
            terms.add((exp, rng.randint(0, basis - 1)))
        x = PerturbedElement(dim, basis, frozenset(terms))
        witness = is_projectively_integral(x)
        oracle = _frac_parts_agree_bruteforce(x)
        assert (witness is not None) == oracle
        if witness is not None:
            assert x.translate(witness).is_integral()


def test_duplicate_terms_rejected():
    with pytest.raises(ValueError):
        PerturbedElement.build(1, 1, [((Fraction(1, 2),), 0), ((Fraction(1, 2),), 0)])


def test_basis_index_bounds():
    with pytest.raises(IndexError):
        PerturbedElement.build(1, 1, [((Fraction(0),), 1)])


def test_negative_exponents_fractional_parts():
    # frac(-3/2) = 1/2 matches frac(1/2)
    x = PerturbedElement.build(1, 1, [((Fraction(-3, 2),), 0), ((Fraction(1, 2),), 0)])
    witness = is_projectively_integral(x)
    assert witness == (Fraction(1, 2),)
    assert x.translate(witness).is_integral()
