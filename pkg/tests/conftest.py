"""Shared oracles and generators for the test suite.

The oracles here are deliberately independent of the library's own
algorithms: factor counts come from exhaustive trial division, gcds from a
plain Euclidean loop on dense coefficient lists, irreducibility of small
rational polynomials from the rational-root theorem and the quadratic
discriminant.
"""

from __future__ import annotations

import random
from fractions import Fraction

import pytest

from knotomega.polyalg import GF2, INT, RAT, LaurentPoly


# ---------------------------------------------------------------- GF(2) oracles


def gf2_bits(poly: LaurentPoly) -> int:
    _, coeffs = poly.univariate_coeffs()
    out = 0
    for i, c in enumerate(coeffs):
        if c:
            out |= 1 << i
    return out


def gf2_mul_bits(a: int, b: int) -> int:
    out = 0
    while b:
        if b & 1:
            out ^= a
        a <<= 1
        b >>= 1
    return out


def gf2_divmod_bits(a: int, b: int):
    q = 0
    while a.bit_length() >= b.bit_length():
        shift = a.bit_length() - b.bit_length()
        q ^= 1 << shift
        a ^= b << shift
    return q, a


def gf2_factor_count_bruteforce(bits: int) -> int:
    """Count irreducible factors with multiplicity by exhaustive trial division.

    Repeatedly divides out the smallest divisor of positive degree, which is
    automatically irreducible (a proper factor would be a smaller divisor).
    """
    assert bits != 0
    while bits % 2 == 0:
        bits >>= 1  # powers of t are units in the Laurent ring
    count = 0
    while bits.bit_length() - 1 >= 1:
        for cand in range(2, bits + 1):
            if gf2_divmod_bits(bits, cand)[1] == 0:
                bits = gf2_divmod_bits(bits, cand)[0]
                count += 1
                break
    return count


def gf2_irreducible_bruteforce(bits: int) -> bool:
    deg = bits.bit_length() - 1
    if deg <= 0:
        return False
    for cand in range(2, 1 << (deg // 2 + 1)):
        if cand.bit_length() - 1 < 1:
            continue
        if gf2_divmod_bits(bits, cand)[1] == 0:
            return False
    return True


# ---------------------------------------------------------------- rational oracles


def rational_gcd_dense(f: list, g: list) -> list:
    """Monic gcd of dense Fraction coefficient lists by plain Euclid."""
    def trim(h):
        while h and h[-1] == 0:
            h.pop()
        return h

    f, g = trim([Fraction(x) for x in f]), trim([Fraction(x) for x in g])
    while g:
        inv = 1 / g[-1]
        g = [x * inv for x in g]
        while f and len(f) >= len(g):
            c = f[-1]
            shift = len(f) - len(g)
            for j, b in enumerate(g):
                f[shift + j] -= c * b
            trim(f)
        f, g = g, f
    if f:
        inv = 1 / f[-1]
        f = [x * inv for x in f]
    return f


def quadratic_irreducible_over_q(c0, c1, c2) -> bool:
    """Discriminant test for c2 t^2 + c1 t + c0 over Q."""
    disc = Fraction(c1) ** 2 - 4 * Fraction(c2) * Fraction(c0)
    if disc < 0:
        return True
    # rational square test
    num, den = disc.numerator, disc.denominator
    rn = _isqrt_exact(num)
    rd = _isqrt_exact(den)
    return rn is None or rd is None


def _isqrt_exact(n: int):
    from math import isqrt
    r = isqrt(n)
    return r if r * r == n else None


# ---------------------------------------------------------------- generators


def random_univariate(rng: random.Random, ring, max_degree=24, shift_range=3):
    degree = rng.randint(1, max_degree)
    while True:
        if ring is GF2:
            coeffs = [rng.randint(0, 1) for _ in range(degree + 1)]
        elif ring is RAT:
            coeffs = [rng.randint(-9, 9) for _ in range(degree + 1)]
        else:
            coeffs = [rng.randint(-4, 4) for _ in range(degree + 1)]
        if any(coeffs):
            return LaurentPoly.univariate(
                ring, coeffs, shift=rng.randint(-shift_range, shift_range))


def random_knot_grid(rng: random.Random, size: int):
    """Uniformly sample valid grids until the associated link is a knot."""
    from knotomega.gridhfk import GridDiagram
    while True:
        x = list(range(size))
        o = list(range(size))
        rng.shuffle(x)
        rng.shuffle(o)
        if any(a == b for a, b in zip(x, o)):
            continue
        g = GridDiagram(tuple(x), tuple(o))
        if g.is_knot():
            return g


def random_grid(rng: random.Random, size: int):
    from knotomega.gridhfk import GridDiagram
    while True:
        x = list(range(size))
        o = list(range(size))
        rng.shuffle(x)
        rng.shuffle(o)
        if any(a == b for a, b in zip(x, o)):
            continue
        return GridDiagram(tuple(x), tuple(o))


def random_unimodular(rng: random.Random, n: int, ops: int = 8):
    """Product of elementary integer matrices; determinant +-1 by construction."""
    from knotomega.polyalg import UnimodularMap
    rows = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
    for _ in range(ops):
        kind = rng.randint(0, 2)
        i, j = rng.sample(range(n), 2) if n > 1 else (0, 0)
        if kind == 0 and i != j:
            q = rng.randint(-3, 3)
            for c in range(n):
                rows[i][c] += q * rows[j][c]
        elif kind == 1 and i != j:
            rows[i], rows[j] = rows[j], rows[i]
        else:
            for c in range(n):
                rows[i][c] = -rows[i][c]
    return UnimodularMap.from_rows(rows)


@pytest.fixture
def rng():
    return random.Random(20260810)
