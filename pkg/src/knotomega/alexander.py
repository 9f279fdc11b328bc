"""Alexander polynomials from braids and Seifert matrices.

The braid route goes through the reduced Burau representation: for a braid
whose closure is a knot, det(rho(b) - I) * (1 - t) / (1 - t^n) recovers the
Alexander polynomial up to a unit.  The Seifert route, det(V - t V^T), is an
independent oracle used by the tests.  Both outputs are normalized to the
symmetric representative with value +1 at t = 1, which also makes connected
sums literally multiplicative.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Sequence

from .braid import BraidWord, closure_components
from .errors import (InexactDivision, InvalidSeifertMatrix, NotAKnot,
                     NotNormalized, UnsupportedRing)
from .polyalg import GF2, INT, RAT, LaurentPoly, OmegaValue, omega_ring


# ---------------------------------------------------------------- Burau matrices


def _burau_generator(n: int, i: int, inverse: bool) -> list[list[LaurentPoly]]:
    """Reduced Burau image of sigma_i (1-based) on n strands, size (n-1)^2."""
    t = LaurentPoly.monomial(INT, (1,))
    tinv = LaurentPoly.monomial(INT, (-1,))
    one = LaurentPoly.one(INT)
    zero = LaurentPoly.zero(INT)
    m = [[one if r == c else zero for c in range(n - 1)] for r in range(n - 1)]
    k = i - 1  # 0-based row/column of the generator
    if not inverse:
        m[k][k] = -t
        if k > 0:
            m[k - 1][k] = t
        if k < n - 2:
            m[k + 1][k] = one
    else:
        m[k][k] = -tinv
        if k > 0:
            m[k - 1][k] = one
        if k < n - 2:
            m[k + 1][k] = tinv
    return m


def _mat_mul(a, b):
    n = len(a)
    return [[sum((a[r][k] * b[k][c] for k in range(n)),
                 LaurentPoly.zero(INT)) for c in range(n)] for r in range(n)]


def burau_matrix(b: BraidWord) -> list[list[LaurentPoly]]:
    """Reduced Burau representation of the braid word; (n-1)x(n-1) over Z[t,1/t]."""
    n = b.strands
    size = n - 1
    one = LaurentPoly.one(INT)
    zero = LaurentPoly.zero(INT)
    m = [[one if r == c else zero for c in range(size)] for r in range(size)]
    for g in b.letters:
        m = _mat_mul(m, _burau_generator(n, abs(g), g < 0))
    return m


def _det(matrix: Sequence[Sequence[LaurentPoly]]) -> LaurentPoly:
    """Determinant by memoized Laplace expansion over column subsets."""
    n = len(matrix)
    if n == 0:
        return LaurentPoly.one(INT)

    @lru_cache(maxsize=None)
    def minor(cols: tuple[int, ...]) -> LaurentPoly:
        row = n - len(cols)
        if not cols:
            return LaurentPoly.one(INT)
        acc = LaurentPoly.zero(INT)
        for k, c in enumerate(cols):
            sub = minor(cols[:k] + cols[k + 1:])
            term = matrix[row][c] * sub
            acc = acc - term if k % 2 else acc + term
        return acc

    return minor(tuple(range(n)))


def _divide_exact(num: LaurentPoly, den: LaurentPoly) -> LaurentPoly:
    """Exact division in Z[t, 1/t]; raises when a remainder is left."""
    nv, ncoeffs = num.univariate_coeffs()
    dv, dcoeffs = den.univariate_coeffs()
    out = [0] * (len(ncoeffs) - len(dcoeffs) + 1)
    rem = list(ncoeffs)
    lead = dcoeffs[-1]
    for k in range(len(rem) - len(dcoeffs), -1, -1):
        c = rem[k + len(dcoeffs) - 1]
        if c % lead:
            raise InexactDivision("Burau correction term does not divide")
        q = c // lead
        out[k] = q
        if q:
            for j, d in enumerate(dcoeffs):
                rem[k + j] -= q * d
    if any(rem):
        raise InexactDivision("Burau correction term does not divide")
    return LaurentPoly.univariate(INT, out, shift=nv - dv)


def symmetrize(p: LaurentPoly) -> LaurentPoly:
    """Center the exponents and fix the sign so p(t) = p(1/t) and p(1) = 1."""
    if p.is_zero():
        raise NotNormalized("the zero polynomial cannot be an Alexander polynomial")
    lo, hi = p.min_exp(), p.max_exp()
    if (lo + hi) % 2:
        raise NotNormalized("exponent span has odd width; no symmetric representative")
    centered = p.shift((-(lo + hi) // 2,))
    if centered != centered.reverse():
        raise NotNormalized("polynomial is not palindromic after centering")
    value = centered.evaluate([1])
    if value == 1:
        return centered
    if value == -1:
        return -centered
    raise NotNormalized(f"value at t = 1 is {value}, expected +-1")


def alexander_from_braid(b: BraidWord) -> LaurentPoly:
    """Symmetric Alexander polynomial of the braid closure (a knot)."""
    if closure_components(b) != 1:
        raise NotAKnot("the closure has more than one component")
    n = b.strands
    if n == 1:
        return LaurentPoly.one(INT)
    m = burau_matrix(b)
    for i in range(n - 1):
        m[i][i] = m[i][i] - LaurentPoly.one(INT)
    det = _det(m)
    if det.is_zero():
        raise InexactDivision("vanishing Burau determinant on a knot closure")
    one = LaurentPoly.one(INT)
    t = LaurentPoly.monomial(INT, (1,))
    tn = LaurentPoly.monomial(INT, (n,))
    num = det * (one - t)
    den = one - tn
    return symmetrize(_divide_exact(num, den))


# ---------------------------------------------------------------- Seifert route


def alexander_from_seifert(v: Sequence[Sequence[int]]) -> LaurentPoly:
    """Symmetric Alexander polynomial det(V - t V^T) of a Seifert matrix."""
    rows = [list(map(int, r)) for r in v]
    size = len(rows)
    if any(len(r) != size for r in rows):
        raise InvalidSeifertMatrix("matrix must be square")
    if size == 0:
        return LaurentPoly.one(INT)
    # V - V^T must be unimodular for a genuine Seifert pairing
    pairing = [[rows[i][j] - rows[j][i] for j in range(size)] for i in range(size)]
    det_pairing = _det([[LaurentPoly.constant(INT, e) for e in r] for r in pairing])
    if not det_pairing.is_constant() or det_pairing.evaluate([1]) not in (1, -1):
        raise InvalidSeifertMatrix("V - V^T is not unimodular")
    t = LaurentPoly.monomial(INT, (1,))
    entries = [[LaurentPoly.constant(INT, rows[i][j]) - t.scale(rows[j][i])
                for j in range(size)] for i in range(size)]
    return symmetrize(_det(entries))


# ---------------------------------------------------------------- derived data


def connected_sum_alexander(polys: Sequence[LaurentPoly]) -> LaurentPoly:
    """Product of normalized Alexander polynomials, renormalized symmetric."""
    out = LaurentPoly.one(INT)
    for p in polys:
        if p != symmetrize(p):
            raise NotNormalized(f"{p} is not in symmetric normal form")
        out = out * p
    return symmetrize(out)


def irr_count(delta: LaurentPoly, ring) -> OmegaValue:
    """Irreducible-factor count of the Alexander polynomial in GF(2) or Q."""
    if ring not in (GF2, RAT):
        raise UnsupportedRing("factor counts are defined over GF(2) or Q")
    return omega_ring(delta.map_coefficients(ring))
