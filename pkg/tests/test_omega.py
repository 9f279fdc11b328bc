"""Factor-count maps: conventions, additivity, substitution, basis invariance."""

import pytest

from conftest import random_unimodular, random_univariate, rational_gcd_dense
from knotomega.errors import (MixedRings, NonPrimitiveVector, UnsupportedRing)
from knotomega.polyalg import (GF2, INT, NEG_INF, RAT, LaurentPoly, OmegaValue,
                               UnimodularMap, apply_unimodular,
                               complete_to_unimodular, is_primitive,
                               monomial_equivalent, omega_module, omega_ring,
                               omega_substituted, parse_poly,
                               substitute_monomial, substituted_reduction)


def test_zero_convention():
    assert omega_ring(LaurentPoly.zero(GF2)) == NEG_INF
    assert omega_ring(LaurentPoly.zero(RAT, 3)) == NEG_INF


def test_units_count_zero():
    assert omega_ring(LaurentPoly.monomial(GF2, (5,))) == OmegaValue.of(0)
    assert omega_ring(LaurentPoly.monomial(RAT, (-2,), 7)) == OmegaValue.of(0)


def test_trefoil_polynomial_over_q():
    # oracle: t^2 - t + 1 has negative discriminant, hence irreducible
    assert (-1) ** 2 - 4 * 1 * 1 < 0
    assert omega_ring(parse_poly("t^-1 + -1 + t", RAT)) == OmegaValue.of(1)


def test_cubed_quadratic_over_gf2():
    p = parse_poly("t^2 + t + 1", GF2) ** 3
    assert omega_ring(p) == OmegaValue.of(3)


def test_neg_inf_is_absorbing():
    assert NEG_INF + OmegaValue.of(3) == NEG_INF
    assert OmegaValue.of(2) + OmegaValue.of(3) == OmegaValue.of(5)
    assert NEG_INF < OmegaValue.of(0)
    assert str(NEG_INF) == "-inf"


def test_additivity_random(rng):
    for trial in range(100):
        ring = GF2 if trial % 2 == 0 else RAT
        p = random_univariate(rng, ring, max_degree=16)
        q = random_univariate(rng, ring, max_degree=16)
        assert omega_ring(p * q) == omega_ring(p) + omega_ring(q)


# ---------------------------------------------------------------- module counts


def test_module_zero_element():
    assert omega_module([LaurentPoly.zero(GF2), LaurentPoly.zero(GF2)]) == NEG_INF


def test_module_gcd_example_gf2():
    # oracle: Euclid over GF(2) gives gcd(t+1, t^2+1) = t+1 since t^2+1 = (t+1)^2
    coords = [parse_poly("t + 1", GF2), parse_poly("t^2 + 1", GF2)]
    assert omega_module(coords) == OmegaValue.of(1)


def test_module_unit_coordinate():
    coords = [parse_poly("t^2 + -3*t + 1", RAT), LaurentPoly.one(RAT)]
    assert omega_module(coords) == OmegaValue.of(0)


def test_module_mixed_rings_rejected():
    with pytest.raises(MixedRings):
        omega_module([LaurentPoly.one(GF2), LaurentPoly.one(RAT)])


def test_module_matches_euclid_oracle(rng):
    for _ in range(40):
        p = random_univariate(rng, RAT, max_degree=8, shift_range=0)
        q = random_univariate(rng, RAT, max_degree=8, shift_range=0)
        _, pc = p.univariate_coeffs()
        _, qc = q.univariate_coeffs()
        g = rational_gcd_dense(pc, qc)
        expect = omega_ring(LaurentPoly.univariate(RAT, g))
        assert omega_module([p, q]) == expect


def test_module_additivity_form(rng):
    # scaling every coordinate multiplies the count through
    for _ in range(25):
        a = random_univariate(rng, GF2, max_degree=8)
        coords = [random_univariate(rng, GF2, max_degree=8) for _ in range(3)]
        lhs = omega_module([a * c for c in coords])
        assert lhs == omega_ring(a) + omega_module(coords)


# ---------------------------------------------------------------- substitution


def test_substitute_identity_like():
    p = parse_poly("t^-1 + 1 + t", GF2)
    image = substitute_monomial(p, (1, 0))
    assert image == LaurentPoly(GF2, 2, {(-1, 0): 1, (0, 0): 1, (1, 0): 1})


def test_substitute_constant_fixed():
    one = LaurentPoly.one(RAT)
    assert substitute_monomial(one, (4, -2, 7)) == LaurentPoly.one(RAT, 3)


def test_substitute_direct_expansion():
    p = parse_poly("t^2 + 1", GF2)
    image = substitute_monomial(p, (1, -1))
    assert image == LaurentPoly(GF2, 2, {(2, -2): 1, (0, 0): 1})


def test_apply_unimodular_examples():
    p = LaurentPoly(GF2, 2, {(1, 0): 1, (0, 1): 1})
    ident = UnimodularMap.identity(2)
    assert apply_unimodular(p, ident) == p
    swap = UnimodularMap.from_rows([[0, 1], [1, 0]])
    assert apply_unimodular(p, swap) == p  # symmetric support
    shear = UnimodularMap.from_rows([[1, 0], [1, 1]])
    q = LaurentPoly(GF2, 2, {(1, 0): 1, (0, 0): 1})  # z1 + 1
    assert apply_unimodular(q, shear) == LaurentPoly(GF2, 2, {(1, 1): 1, (0, 0): 1})


def test_unimodular_validation():
    with pytest.raises(ValueError):
        UnimodularMap.from_rows([[2, 0], [0, 1]])


def test_complete_to_unimodular_first_column(rng):
    for _ in range(50):
        n = rng.randint(1, 5)
        vec = tuple(rng.randint(-7, 7) for _ in range(n))
        if not is_primitive(vec):
            continue
        u = complete_to_unimodular(vec)
        assert tuple(r[0] for r in u.rows) == vec
        assert u.compose(u.inverse()) == UnimodularMap.identity(n)


def test_omega_substituted_examples():
    p = parse_poly("t^2 + t + 1", GF2)
    assert omega_substituted(p, (2, 1)) == OmegaValue.of(1)
    unit = LaurentPoly.monomial(GF2, (3,))
    assert omega_substituted(unit, (1, 1)) == OmegaValue.of(0)
    assert omega_substituted(LaurentPoly.zero(GF2), (1, 0)) == NEG_INF


def test_omega_substituted_rejects_non_primitive():
    p = parse_poly("t + 1", GF2)
    with pytest.raises(NonPrimitiveVector):
        omega_substituted(p, (2, 0))
    with pytest.raises(NonPrimitiveVector):
        omega_substituted(p, (0, 0))


def test_substituted_reduction_pipeline_is_honest(rng):
    # the reduction really passes through the multivariate image
    for _ in range(30):
        p = random_univariate(rng, GF2, max_degree=10)
        n = rng.randint(2, 4)
        while True:
            vec = tuple(rng.randint(-5, 5) for _ in range(n))
            if any(vec) and is_primitive(vec):
                break
        red = substituted_reduction(p, vec)
        assert red.substituted.dim == n
        assert red.reduced.dim == 1
        assert red.value == omega_ring(p)
        assert tuple(r[0] for r in red.basis.rows) == vec


def test_unimodular_invariance(rng):
    # counting factors of p(z^v) is stable under lattice automorphisms
    for _ in range(40):
        p = random_univariate(rng, GF2, max_degree=8)
        if p.is_zero():
            continue
        n = rng.randint(2, 4)
        while True:
            vec = tuple(rng.randint(-4, 4) for _ in range(n))
            if any(vec) and is_primitive(vec):
                break
        image = substitute_monomial(p, vec)
        f = random_unimodular(rng, n)
        moved = apply_unimodular(image, f)
        vec2 = f.apply(vec)
        assert moved == substitute_monomial(p, vec2)
        assert omega_substituted(p, vec2) == omega_substituted(p, vec)


def test_omega_ring_collinear_multivariate():
    p = parse_poly("t^2 + t + 1", GF2)
    image = substitute_monomial(p, (3, -2))
    assert omega_ring(image) == OmegaValue.of(1)
    shifted = image.shift((5, 5))
    assert omega_ring(shifted) == OmegaValue.of(1)


def test_omega_ring_rejects_general_multivariate():
    p = LaurentPoly(GF2, 2, {(0, 0): 1, (1, 0): 1, (0, 1): 1})
    with pytest.raises(UnsupportedRing):
        omega_ring(p)


def test_omega_ring_rejects_integer_ring():
    with pytest.raises(UnsupportedRing):
        omega_ring(parse_poly("t + 2", INT))


# ---------------------------------------------------------------- associates


def test_monomial_equivalent_examples():
    assert monomial_equivalent(parse_poly("t + 1", GF2), parse_poly("t^2 + t", GF2))
    assert not monomial_equivalent(parse_poly("t + 1", GF2),
                                   parse_poly("t^2 + t + 1", GF2))
    assert monomial_equivalent(LaurentPoly.zero(GF2), LaurentPoly.zero(GF2))
    assert not monomial_equivalent(LaurentPoly.zero(GF2), LaurentPoly.one(GF2))


def test_monomial_equivalent_scaling_over_q():
    p = parse_poly("t^2 + -3*t + 1", RAT)
    q = p.scale(7).shift((-4,))
    assert monomial_equivalent(p, q)


def test_monomial_equivalent_integer_sign():
    p = parse_poly("t + -1", INT)
    assert monomial_equivalent(p, -p)
    assert monomial_equivalent(p, p.shift((3,)))
    assert not monomial_equivalent(p, p.scale(2))
