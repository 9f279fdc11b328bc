"""Irreducible-factor counts and the lattice operations feeding them.

The value lattice is Z^{>=0} together with a distinguished bottom element
for the zero polynomial; addition treats the bottom as absorbing.  Counts
are defined over GF(2) and Q; multivariate input is only accepted when it is
a monomial multiple of a one-variable image (a substituted polynomial), in
which case a unimodular change of variables reduces it back to one variable.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Iterable, Sequence

from ..errors import (DimensionMismatch, MixedRings, NonPrimitiveVector,
                      UnsupportedRing)
from .factorization import factor, gf2_gcd
from .laurent import LaurentPoly
from .rings import GF2, INT, RAT


# ---------------------------------------------------------------- value lattice


@dataclass(frozen=True, order=False)
class OmegaValue:
    """A nonnegative integer or the absorbing bottom value (for 0)."""

    finite: int | None  # None encodes -infinity

    @classmethod
    def of(cls, k: int) -> "OmegaValue":
        if k < 0:
            raise ValueError("finite values are nonnegative")
        return cls(k)

    @classmethod
    def neg_inf(cls) -> "OmegaValue":
        return cls(None)

    @property
    def is_neg_inf(self) -> bool:
        return self.finite is None

    def __add__(self, other: "OmegaValue") -> "OmegaValue":
        if self.is_neg_inf or other.is_neg_inf:
            return NEG_INF
        return OmegaValue(self.finite + other.finite)

    def __lt__(self, other: "OmegaValue") -> bool:
        if self.is_neg_inf:
            return not other.is_neg_inf
        if other.is_neg_inf:
            return False
        return self.finite < other.finite

    def __le__(self, other: "OmegaValue") -> bool:
        return self == other or self < other

    def __int__(self) -> int:
        if self.is_neg_inf:
            raise ValueError("-inf has no integer value")
        return self.finite

    def to_json(self):
        return "-inf" if self.is_neg_inf else self.finite

    def __str__(self):
        return "-inf" if self.is_neg_inf else str(self.finite)

    def __repr__(self):
        return f"OmegaValue({self})"


NEG_INF = OmegaValue(None)


# ---------------------------------------------------------------- unimodular maps


def _int_det(rows: list[list[int]]) -> int:
    """Exact determinant by fraction-free (Bareiss) elimination."""
    a = [list(r) for r in rows]
    n = len(a)
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            piv = next((i for i in range(k + 1, n) if a[i][k] != 0), None)
            if piv is None:
                return 0
            a[k], a[piv] = a[piv], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
            a[i][k] = 0
        prev = a[k][k]
    return sign * a[-1][-1] if n else 1


@dataclass(frozen=True)
class UnimodularMap:
    """An integer matrix with determinant +-1 acting on exponent vectors."""

    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        n = len(self.rows)
        if any(len(r) != n for r in self.rows):
            raise DimensionMismatch("matrix must be square")
        if _int_det([list(r) for r in self.rows]) not in (1, -1):
            raise ValueError("matrix is not unimodular")

    @classmethod
    def from_rows(cls, rows: Iterable[Iterable[int]]) -> "UnimodularMap":
        return cls(tuple(tuple(int(x) for x in r) for r in rows))

    @classmethod
    def identity(cls, n: int) -> "UnimodularMap":
        return cls(tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n)))

    @property
    def dim(self) -> int:
        return len(self.rows)

    def apply(self, vec: Sequence[int]) -> tuple[int, ...]:
        if len(vec) != self.dim:
            raise DimensionMismatch("vector length does not match matrix size")
        return tuple(sum(r[j] * vec[j] for j in range(self.dim)) for r in self.rows)

    def compose(self, other: "UnimodularMap") -> "UnimodularMap":
        if self.dim != other.dim:
            raise DimensionMismatch("matrix sizes differ")
        n = self.dim
        return UnimodularMap(tuple(
            tuple(sum(self.rows[i][k] * other.rows[k][j] for k in range(n))
                  for j in range(n))
            for i in range(n)))

    def inverse(self) -> "UnimodularMap":
        n = self.dim
        aug = [[Fraction(self.rows[i][j]) for j in range(n)]
               + [Fraction(1 if i == j else 0) for j in range(n)] for i in range(n)]
        for col in range(n):
            piv = next(r for r in range(col, n) if aug[r][col] != 0)
            aug[col], aug[piv] = aug[piv], aug[col]
            inv = 1 / aug[col][col]
            aug[col] = [x * inv for x in aug[col]]
            for r in range(n):
                if r != col and aug[r][col] != 0:
                    c = aug[r][col]
                    aug[r] = [x - c * y for x, y in zip(aug[r], aug[col])]
        rows = tuple(tuple(int(aug[i][n + j]) for j in range(n)) for i in range(n))
        return UnimodularMap(rows)


def is_primitive(vec: Sequence[int]) -> bool:
    g = 0
    for x in vec:
        g = gcd(g, x)
    return g == 1


def complete_to_unimodular(vec: Sequence[int]) -> UnimodularMap:
    """A unimodular matrix whose first column is the given primitive vector."""
    if not is_primitive(vec):
        raise NonPrimitiveVector(f"{tuple(vec)} is zero or has a common factor")
    n = len(vec)
    w = list(vec)
    # reduce w to e1 by integer row operations, mirroring each operation as an
    # inverse column operation on u, so that u stays the inverse of the row ops
    u = [[1 if i == j else 0 for j in range(n)] for i in range(n)]

    def row_sub(i, j, q):  # w_i -= q*w_j, so column j of u gains q*column i
        w[i] -= q * w[j]
        for r in range(n):
            u[r][j] += q * u[r][i]

    def row_swap(i, j):
        w[i], w[j] = w[j], w[i]
        for r in range(n):
            u[r][i], u[r][j] = u[r][j], u[r][i]

    for i in range(1, n):
        while w[i] != 0:
            q = w[0] // w[i]
            row_sub(0, i, q)
            row_swap(0, i)
    if w[0] == -1:
        w[0] = 1
        for r in range(n):
            u[r][0] = -u[r][0]
    assert w[0] == 1 and all(x == 0 for x in w[1:])
    return UnimodularMap.from_rows(u)


# ---------------------------------------------------------------- operations


def substitute_monomial(p: LaurentPoly, vec: Sequence[int]) -> LaurentPoly:
    """Substitute t -> z^vec into a univariate polynomial.

    Each term c*t^k becomes c*z^(k*vec); degree-0 terms land on the zero
    exponent.  The result lives in len(vec) variables.
    """
    if p.dim != 1:
        raise UnsupportedRing("substitution source must be univariate")
    vec = tuple(int(x) for x in vec)
    if len(vec) < 1:
        raise DimensionMismatch("target dimension must be at least 1")
    items = [(tuple(k * v for v in vec), c) for (k,), c in p.terms.items()]
    return LaurentPoly(p.ring, len(vec), items)


def apply_unimodular(p: LaurentPoly, f: UnimodularMap) -> LaurentPoly:
    """Relabel exponents by the lattice automorphism f; coefficients unchanged."""
    if f.dim != p.dim:
        raise DimensionMismatch(f"matrix size {f.dim} vs dimension {p.dim}")
    return LaurentPoly(p.ring, p.dim,
                       [(f.apply(e), c) for e, c in p.terms.items()])


def _collinear_univariate(p: LaurentPoly) -> LaurentPoly:
    """Reduce a polynomial with support on a translated line to one variable.

    Succeeds exactly on monomial multiples of substituted univariate
    polynomials; the reduction changes the input only by a unit, so factor
    counts are preserved.
    """
    exps = sorted(p.terms)
    base = exps[0]
    diffs = [tuple(a - b for a, b in zip(e, base)) for e in exps]
    direction = next((d for d in diffs if any(d)), None)
    if direction is None:
        return LaurentPoly(p.ring, 1, {(0,): p.terms[base]})
    g = 0
    for x in direction:
        g = gcd(g, x)
    direction = tuple(x // g for x in direction)
    pivot = next(i for i, x in enumerate(direction) if x)
    items = []
    for e, d in zip(exps, diffs):
        k, rem = divmod(d[pivot], direction[pivot])
        if rem or tuple(k * v for v in direction) != d:
            raise UnsupportedRing(
                "multivariate input is not an image of a monomial substitution")
        items.append(((k,), p.terms[e]))
    return LaurentPoly(p.ring, 1, items)


def omega_ring(p: LaurentPoly) -> OmegaValue:
    """Number of irreducible non-unit factors, with multiplicity; 0 maps to -inf."""
    if p.is_zero():
        return NEG_INF
    if p.dim > 1:
        p = _collinear_univariate(p)
    if p.ring is INT:
        raise UnsupportedRing("count factors over GF(2) or Q (see irr_count)")
    if p.is_unit_monomial():
        return OmegaValue.of(0)
    return OmegaValue.of(factor(p).count())


def omega_module(coords: Sequence[LaurentPoly]) -> OmegaValue:
    """Factor count of the gcd of the coordinates of a module element."""
    coords = list(coords)
    nonzero = [c for c in coords if not c.is_zero()]
    if not nonzero:
        return NEG_INF
    ring = nonzero[0].ring
    for c in coords:
        if c.ring is not ring:
            raise MixedRings(f"{c.ring.name} vs {ring.name}")
        if c.dim != 1:
            raise UnsupportedRing("module coordinates must be univariate")
    if ring is GF2:
        g = 0
        for c in nonzero:
            _, dense = c.univariate_coeffs()
            bits = 0
            for i, x in enumerate(dense):
                if x:
                    bits |= 1 << i
            g = gf2_gcd(g, bits)
        poly = LaurentPoly.univariate(GF2, [(g >> i) & 1 for i in range(g.bit_length())])
        return omega_ring(poly)
    if ring is RAT:
        g: list[Fraction] = []
        for c in nonzero:
            _, dense = c.univariate_coeffs()
            g = _rat_gcd(g, [Fraction(x) for x in dense])
        return omega_ring(LaurentPoly.univariate(RAT, g))
    raise UnsupportedRing("module counts are defined over GF(2) or Q")


def _rat_gcd(f: list[Fraction], g: list[Fraction]) -> list[Fraction]:
    def trim(h):
        while h and h[-1] == 0:
            h.pop()
        return h

    f, g = trim(list(f)), trim(list(g))
    while g:
        # monic remainder of f by g
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


@dataclass(frozen=True)
class SubstitutedReduction:
    """Audit record of the unimodular route from p(z^v) back to one variable."""

    value: OmegaValue
    substituted: LaurentPoly
    basis: UnimodularMap       # first column is the substitution vector
    reduced: LaurentPoly       # univariate image after the basis change

    def basis_rows(self) -> list[list[int]]:
        return [list(r) for r in self.basis.rows]


def substituted_reduction(p: LaurentPoly, vec: Sequence[int]) -> SubstitutedReduction:
    """Full pipeline: substitute, change basis unimodularly, count factors.

    The vector must be primitive; extending it to a lattice basis turns
    p(z^vec) into p(z1), so the count equals omega_ring(p) but is computed
    on the substituted image, never via that shortcut.
    """
    vec = tuple(int(x) for x in vec)
    if not any(vec):
        raise NonPrimitiveVector("substitution vector must be nonzero")
    if not is_primitive(vec):
        raise NonPrimitiveVector(f"{vec} has a common factor")
    basis = complete_to_unimodular(vec)
    substituted = substitute_monomial(p, vec)
    straightened = apply_unimodular(substituted, basis.inverse())
    items = []
    for e, c in straightened.terms.items():
        if any(e[1:]):
            raise ArithmeticError("unimodular reduction failed to straighten support")
        items.append(((e[0],), c))
    reduced = LaurentPoly(p.ring, 1, items)
    return SubstitutedReduction(omega_ring(reduced), substituted, basis, reduced)


def omega_substituted(p: LaurentPoly, vec: Sequence[int]) -> OmegaValue:
    """Factor count of p(z^vec) for primitive vec, via unimodular reduction."""
    return substituted_reduction(p, vec).value


def monomial_equivalent(p: LaurentPoly, q: LaurentPoly) -> bool:
    """True iff p = u*q for a unit monomial u; zero pairs only with zero."""
    if p.ring is not q.ring:
        raise MixedRings(f"{p.ring.name} vs {q.ring.name}")
    if p.dim != q.dim:
        raise DimensionMismatch(f"dim {p.dim} vs {q.dim}")
    if p.is_zero() or q.is_zero():
        return p.is_zero() and q.is_zero()

    def normalize(r: LaurentPoly):
        exps = sorted(r.terms)
        base = exps[0]
        shifted = {tuple(a - b for a, b in zip(e, base)): c for e, c in r.terms.items()}
        lead = shifted[(0,) * r.dim]
        if r.ring.is_field:
            inv = r.ring.inv(lead)
            return {e: r.ring.mul(c, inv) for e, c in shifted.items()}
        if lead < 0:
            return {e: -c for e, c in shifted.items()}
        return shifted

    return normalize(p) == normalize(q)
