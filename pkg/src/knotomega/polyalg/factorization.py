"""Univariate factorization over GF(2) and Q behind the factor-count maps.

GF(2) polynomials are packed into Python ints (bit k = coefficient of t^k),
factored by squarefree decomposition followed by Berlekamp's algorithm.  The
characteristic-2 derivative degeneration is handled by extracting perfect
squares p = q(t)^2 via the even-bit square root.

Rational polynomials are cleared to primitive integer polynomials, split
squarefree by Yun's algorithm, then factored by reduction mod a prime of good
reduction, quadratic Hensel lifting, and subset recombination (Zassenhaus).
Degrees are capped at MAX_DEGREE; beyond that a DegreeCapExceeded is raised
rather than risking an open-ended recombination.

Every factor is reported as a monic ordinary polynomial with nonzero constant
term; the Laurent unit (coefficient times a power of t) is returned
separately, so associate classes have canonical representatives.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import gcd, isqrt

from ..errors import DegreeCapExceeded, UnsupportedRing, ZeroPolynomial
from .laurent import LaurentPoly
from .rings import GF2, INT, RAT, Ring

MAX_DEGREE = 64

# ---------------------------------------------------------------- GF(2) bit arithmetic


def gf2_deg(a: int) -> int:
    return a.bit_length() - 1


def gf2_mul(a: int, b: int) -> int:
    out = 0
    while b:
        if b & 1:
            out ^= a
        a <<= 1
        b >>= 1
    return out


def gf2_divmod(a: int, b: int) -> tuple[int, int]:
    if b == 0:
        raise ZeroDivisionError("gf2 division by zero")
    q = 0
    db = b.bit_length()
    while a.bit_length() >= db:
        shift = a.bit_length() - db
        q ^= 1 << shift
        a ^= b << shift
    return q, a


def gf2_gcd(a: int, b: int) -> int:
    while b:
        a, b = b, gf2_divmod(a, b)[1]
    return a


def gf2_powmod(a: int, e: int, m: int) -> int:
    out = 1
    a = gf2_divmod(a, m)[1]
    while e:
        if e & 1:
            out = gf2_divmod(gf2_mul(out, a), m)[1]
        a = gf2_divmod(gf2_mul(a, a), m)[1]
        e >>= 1
    return out


def gf2_derivative(a: int) -> int:
    out = 0
    k = 1
    while a >> k:
        if (a >> k) & 1:
            out |= 1 << (k - 1)
        k += 2
    return out


def gf2_sqrt(a: int) -> int:
    # valid when a is a perfect square, i.e. only even-degree bits are set
    out = 0
    k = 0
    while a >> (2 * k):
        if (a >> (2 * k)) & 1:
            out |= 1 << k
        k += 1
    return out


def _gf2_squarefree(f: int) -> list[tuple[int, int]]:
    """Squarefree decomposition; returns [(squarefree factor, multiplicity)]."""
    out: dict[int, int] = {}

    def accumulate(g: int, mult: int):
        if gf2_deg(g) >= 1:
            out[g] = out.get(g, 0) + mult

    def recurse(f: int, scale: int):
        if f == 1:
            return
        d = gf2_derivative(f)
        if d == 0:
            recurse(gf2_sqrt(f), 2 * scale)  # f = g(t)^2 in characteristic 2
            return
        c = gf2_gcd(f, d)
        w = gf2_divmod(f, c)[0]
        i = 1
        while w != 1:
            y = gf2_gcd(w, c)
            z = gf2_divmod(w, y)[0]
            accumulate(z, i * scale)
            w = y
            c = gf2_divmod(c, y)[0]
            i += 1
        if c != 1:
            recurse(gf2_sqrt(c), 2 * scale)

    recurse(f, 1)
    return sorted(out.items())


def _gf2_nullspace(columns: list[int], n: int) -> list[int]:
    """Nullspace basis (as bitmask vectors) of the matrix with the given columns."""
    cols = list(columns)
    combos = [1 << j for j in range(n)]
    pivot_of_row: dict[int, int] = {}
    null = []
    for j in range(n):
        col, combo = cols[j], combos[j]
        while col:
            r = col.bit_length() - 1
            pj = pivot_of_row.get(r)
            if pj is None:
                pivot_of_row[r] = j
                cols[j], combos[j] = col, combo
                break
            col ^= cols[pj]
            combo ^= combos[pj]
        else:
            null.append(combo)
    return null


def _gf2_berlekamp(f: int) -> list[int]:
    """Irreducible factors of a squarefree f over GF(2)."""
    n = gf2_deg(f)
    if n <= 1:
        return [f]
    # columns of Q - I, where Q_{ij} = coeff of t^i in t^{2j} mod f
    cols = []
    power = 1
    tsq = gf2_powmod(0b10, 2, f)
    for j in range(n):
        cols.append(power ^ (1 << j))
        power = gf2_divmod(gf2_mul(power, tsq), f)[1]
    basis = _gf2_nullspace(cols, n)
    r = len(basis)
    factors = [f]
    for v in basis:
        if len(factors) == r:
            break
        if v == 1:
            continue
        refined = []
        for g in factors:
            if gf2_deg(g) <= 1:
                refined.append(g)
                continue
            h = gf2_gcd(g, v)
            if h in (1, g):
                h = gf2_gcd(g, v ^ 1)
            if h in (1, g):
                refined.append(g)
            else:
                refined.append(h)
                refined.append(gf2_divmod(g, h)[0])
        factors = refined
    return sorted(factors)


def factor_gf2_bits(f: int) -> list[tuple[int, int]]:
    """Full factorization of a nonzero GF(2) polynomial with f(0) = 1."""
    if f == 0:
        raise ZeroPolynomial("cannot factor 0")
    out: dict[int, int] = {}
    for g, mult in _gf2_squarefree(f):
        for h in _gf2_berlekamp(g):
            out[h] = out.get(h, 0) + mult
    return sorted(out.items())


# ---------------------------------------------------------------- integer poly helpers
# dense coefficient lists, lowest degree first, no trailing zeros


def zz_trim(f: list[int]) -> list[int]:
    while f and f[-1] == 0:
        f.pop()
    return f


def zz_deg(f: list[int]) -> int:
    return len(f) - 1


def zz_add(f: list[int], g: list[int]) -> list[int]:
    n = max(len(f), len(g))
    return zz_trim([(f[i] if i < len(f) else 0) + (g[i] if i < len(g) else 0)
                    for i in range(n)])


def zz_sub(f: list[int], g: list[int]) -> list[int]:
    n = max(len(f), len(g))
    return zz_trim([(f[i] if i < len(f) else 0) - (g[i] if i < len(g) else 0)
                    for i in range(n)])


def zz_mul(f: list[int], g: list[int]) -> list[int]:
    if not f or not g:
        return []
    out = [0] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        if a:
            for j, b in enumerate(g):
                out[i + j] += a * b
    return zz_trim(out)


def zz_content(f: list[int]) -> int:
    c = 0
    for a in f:
        c = gcd(c, a)
    return c


def zz_primitive(f: list[int]) -> list[int]:
    c = zz_content(f)
    if c == 0:
        return []
    if f[-1] < 0:
        c = -c
    return [a // c for a in f]


def zz_derivative(f: list[int]) -> list[int]:
    return zz_trim([i * a for i, a in enumerate(f)][1:])


def zz_divmod_exact(f: list[int], g: list[int]) -> list[int] | None:
    """Quotient f // g over Z when the division is exact, else None."""
    if not g:
        raise ZeroDivisionError("division by the zero polynomial")
    if not f:
        return []
    if len(f) < len(g):
        return None
    f = list(f)
    q = [0] * (len(f) - len(g) + 1)
    lg = g[-1]
    for k in range(len(f) - len(g), -1, -1):
        num = f[k + len(g) - 1]
        if num % lg:
            return None
        c = num // lg
        q[k] = c
        if c:
            for j, b in enumerate(g):
                f[k + j] -= c * b
    return zz_trim(q) if not any(f) else None


def zz_gcd(f: list[int], g: list[int]) -> list[int]:
    """Primitive gcd via the primitive pseudo-remainder sequence."""
    f, g = zz_primitive(list(f)), zz_primitive(list(g))
    if not f:
        return g
    if not g:
        return f
    if zz_deg(f) < zz_deg(g):
        f, g = g, f
    while g:
        r = list(f)
        while r and len(r) >= len(g):
            shift = len(r) - len(g)
            lead = r[-1]
            lg = g[-1]
            r = [a * lg for a in r]
            for j, b in enumerate(g):
                r[shift + j] -= lead * b
            zz_trim(r)
        f, g = g, zz_primitive(r)
    return f


def zz_squarefree(f: list[int]) -> list[tuple[list[int], int]]:
    """Yun's algorithm; f primitive with positive leading coefficient."""
    out = []
    df = zz_derivative(f)
    a = zz_gcd(f, df)
    b = zz_divmod_exact(f, a)
    c = zz_divmod_exact(df, a)
    d = zz_sub(c, zz_derivative(b))
    i = 1
    while zz_deg(b) > 0:
        a = zz_gcd(b, d)
        if zz_deg(a) > 0:
            out.append((a, i))
        b = zz_divmod_exact(b, a)
        c = zz_divmod_exact(d, a)
        d = zz_sub(c, zz_derivative(b))
        i += 1
    return out


# ---------------------------------------------------------------- GF(p) dense arithmetic


def gfp_trim(f: list[int]) -> list[int]:
    while f and f[-1] == 0:
        f.pop()
    return f


def gfp_mod(f: list[int], p: int) -> list[int]:
    return gfp_trim([a % p for a in f])


def gfp_sub(f: list[int], g: list[int], p: int) -> list[int]:
    n = max(len(f), len(g))
    return gfp_trim([((f[i] if i < len(f) else 0) - (g[i] if i < len(g) else 0)) % p
                     for i in range(n)])


def gfp_mul(f: list[int], g: list[int], p: int) -> list[int]:
    if not f or not g:
        return []
    out = [0] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        if a:
            for j, b in enumerate(g):
                out[i + j] = (out[i + j] + a * b) % p
    return gfp_trim(out)


def gfp_divmod(f: list[int], g: list[int], p: int) -> tuple[list[int], list[int]]:
    f = gfp_mod(f, p)
    if not g:
        raise ZeroDivisionError("division by zero polynomial")
    inv = pow(g[-1], p - 2, p)
    q = [0] * max(len(f) - len(g) + 1, 0)
    while f and len(f) >= len(g):
        shift = len(f) - len(g)
        c = (f[-1] * inv) % p
        q[shift] = c
        for j, b in enumerate(g):
            f[shift + j] = (f[shift + j] - c * b) % p
        gfp_trim(f)
    return gfp_trim(q), f


def gfp_gcd(f: list[int], g: list[int], p: int) -> list[int]:
    f, g = gfp_mod(f, p), gfp_mod(g, p)
    while g:
        f, g = g, gfp_divmod(f, g, p)[1]
    if f:
        inv = pow(f[-1], p - 2, p)
        f = [(a * inv) % p for a in f]
    return f


def gfp_powmod(f: list[int], e: int, m: list[int], p: int) -> list[int]:
    out = [1]
    f = gfp_divmod(f, m, p)[1]
    while e:
        if e & 1:
            out = gfp_divmod(gfp_mul(out, f, p), m, p)[1]
        f = gfp_divmod(gfp_mul(f, f, p), m, p)[1]
        e >>= 1
    return out


def gfp_bezout(g: list[int], h: list[int], p: int) -> tuple[list[int], list[int]]:
    """s, t with s*g + t*h = 1 over GF(p), for coprime g, h."""
    r0, r1 = gfp_mod(g, p), gfp_mod(h, p)
    s0, s1 = [1], []
    t0, t1 = [], [1]
    while r1:
        q, r = gfp_divmod(r0, r1, p)
        r0, r1 = r1, r
        s0, s1 = s1, gfp_sub(s0, gfp_mul(q, s1, p), p)
        t0, t1 = t1, gfp_sub(t0, gfp_mul(q, t1, p), p)
    if len(r0) != 1:
        raise ArithmeticError("polynomials not coprime mod p")
    inv = pow(r0[0], p - 2, p)
    return [(a * inv) % p for a in s0], [(a * inv) % p for a in t0]


def _gfp_nullspace(matrix: list[list[int]], n: int, p: int) -> list[list[int]]:
    """Nullspace basis of an n x n matrix over GF(p), rows given."""
    rows = [list(r) for r in matrix]
    where = [-1] * n
    row = 0
    for col in range(n):
        piv = next((r for r in range(row, n) if rows[r][col] % p), None)
        if piv is None:
            continue
        rows[row], rows[piv] = rows[piv], rows[row]
        inv = pow(rows[row][col], p - 2, p)
        rows[row] = [(a * inv) % p for a in rows[row]]
        for r in range(n):
            if r != row and rows[r][col] % p:
                c = rows[r][col]
                rows[r] = [(a - c * b) % p for a, b in zip(rows[r], rows[row])]
        where[col] = row
        row += 1
    basis = []
    for col in range(n):
        if where[col] != -1:
            continue
        v = [0] * n
        v[col] = 1
        for c2 in range(n):
            if where[c2] != -1:
                v[c2] = (-rows[where[c2]][col]) % p
        basis.append(v)
    return basis


def gfp_berlekamp_basis(f: list[int], p: int) -> list[list[int]]:
    """Basis of the Berlekamp subalgebra of a squarefree monic f over GF(p).

    The basis size equals the number of monic irreducible factors.
    """
    n = len(f) - 1
    if n <= 1:
        return [[1]]
    # Berlekamp subalgebra: v with v^p = v mod f.  Writing v in the basis
    # 1..t^(n-1), this is v * (Q - I) = 0 for the matrix Q with rows
    # Q_j = coefficients of t^(pj) mod f.
    frob_rows = []
    power = [1]
    tp = gfp_powmod([0, 1], p, f, p)
    for j in range(n):
        row = power + [0] * (n - len(power))
        row = [a % p for a in row]
        row[j] = (row[j] - 1) % p
        frob_rows.append(row)
        power = gfp_divmod(gfp_mul(power, tp, p), f, p)[1]
    # condition v*(Q - I) = 0 on row vectors; _gfp_nullspace solves M x = 0,
    # so feed it the transpose
    matrix = [[frob_rows[j][i] for j in range(n)] for i in range(n)]
    return _gfp_nullspace(matrix, n, p)


def gfp_berlekamp(f: list[int], p: int, basis: list[list[int]] | None = None) -> list[list[int]]:
    """Monic irreducible factors of a squarefree monic f over GF(p)."""
    n = len(f) - 1
    if n <= 1:
        return [f]
    if basis is None:
        basis = gfp_berlekamp_basis(f, p)
    r = len(basis)
    factors = [f]
    for v in basis:
        if len(factors) == r:
            break
        v = gfp_trim(list(v))
        if not v or v == [1]:
            continue
        refined = []
        for g in factors:
            if len(g) - 1 <= 1:
                refined.append(g)
                continue
            pieces = []
            rest = g
            for c in range(p):
                if len(rest) - 1 < 1:
                    break
                shifted = list(v)
                if not shifted:
                    shifted = [0]
                shifted[0] = (shifted[0] - c) % p
                h = gfp_gcd(rest, gfp_trim(shifted), p)
                if 0 < len(h) - 1 < len(rest) - 1:
                    pieces.append(h)
                    rest = gfp_divmod(rest, h, p)[0]
            if rest and len(rest) - 1 >= 1:
                pieces.append(rest)
            refined.extend(pieces if pieces else [g])
        factors = refined
    return sorted(factors)


# ---------------------------------------------------------------- Hensel lifting


def _hensel_step(m, f, g, h, s, t):
    """Quadratic lift: from f = g*h, s*g + t*h = 1 (mod m) to the same mod m^2.

    h must be monic; follows von zur Gathen & Gerhard, Algorithm 15.10.
    """
    M = m * m

    def mod(poly):
        return zz_trim([a % M for a in poly])

    e = mod(zz_sub(f, zz_mul(g, h)))
    q, r = _divmod_mod(zz_mul(s, e), h, M)
    G = mod(zz_add(zz_add(g, zz_mul(t, e)), zz_mul(q, g)))
    H = mod(zz_add(h, r))
    b = mod(zz_sub(zz_add(zz_mul(s, G), zz_mul(t, H)), [1]))
    c, d = _divmod_mod(zz_mul(s, b), H, M)
    S = mod(zz_sub(s, d))
    T = mod(zz_sub(zz_sub(t, zz_mul(t, b)), zz_mul(c, G)))
    return G, H, S, T


def _divmod_mod(f: list[int], g: list[int], m: int) -> tuple[list[int], list[int]]:
    """Division with remainder mod m; leading coefficient of g invertible mod m."""
    f = zz_trim([a % m for a in f])
    inv = pow(g[-1] % m, -1, m)
    q = [0] * max(len(f) - len(g) + 1, 0)
    while f and len(f) >= len(g):
        shift = len(f) - len(g)
        c = (f[-1] * inv) % m
        q[shift] = c
        for j, b in enumerate(g):
            f[shift + j] = (f[shift + j] - c * b) % m
        zz_trim(f)
    return zz_trim(q), f


def hensel_lift(p: int, f: list[int], modular: list[list[int]], target: int) -> list[list[int]]:
    """Lift monic factors of f mod p to monic factors mod p^k >= target.

    On return, lc(f) * prod(result) = f holds mod p^k.
    """
    r = len(modular)
    pk = p
    while pk < target:
        pk *= p
    if r == 1:
        inv = pow(f[-1] % pk, -1, pk)
        return [zz_trim([a * inv % pk for a in f])]
    k = r // 2
    g = [f[-1] % p]
    for fi in modular[:k]:
        g = gfp_mul(g, fi, p)
    h = [1]
    for fi in modular[k:]:
        h = gfp_mul(h, fi, p)
    s, t = gfp_bezout(g, h, p)
    m = p
    while m < pk:
        g, h, s, t = _hensel_step(m, f, g, h, s, t)
        m *= m
    return hensel_lift(p, g, modular[:k], target) + hensel_lift(p, h, modular[k:], target)


# ---------------------------------------------------------------- Zassenhaus

_PRIMES = [3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61,
           67, 71, 73, 79, 83, 89, 97, 101, 103, 107, 109, 113, 127]


def _mignotte_bound(f: list[int]) -> int:
    n = zz_deg(f)
    norm = isqrt(sum(a * a for a in f)) + 1
    return (1 << n) * norm * abs(f[-1])


def zassenhaus(f: list[int]) -> list[list[int]]:
    """Irreducible factors over Z of a primitive squarefree f with lc(f) > 0."""
    if zz_deg(f) == 1:
        return [f]
    best = None
    tried = 0
    for p in _PRIMES:
        if f[-1] % p == 0:
            continue
        if len(gfp_gcd(f, zz_derivative(f), p)) != 1:
            continue
        monic = gfp_divmod(gfp_mod(f, p), [f[-1] % p], p)[0]
        basis = gfp_berlekamp_basis(monic, p)
        if len(basis) == 1:
            return [f]
        if best is None or len(basis) < len(best[2]):
            best = (p, monic, basis)
        tried += 1
        if tried >= 3 or len(basis) == 2:
            break
    if best is None:
        raise ArithmeticError("no prime of good reduction found")
    p, monic, basis = best
    modular = gfp_berlekamp(monic, p, basis)

    bound = 2 * _mignotte_bound(f) + 1
    lifted = hensel_lift(p, f, modular, bound)
    m = p
    while m < bound:
        m *= p

    def symmetric(poly: list[int]) -> list[int]:
        return zz_trim([a - m if 2 * a > m else a for a in (b % m for b in poly)])

    result = []
    remaining = list(range(len(lifted)))
    current = f
    size = 1
    while 2 * size <= len(remaining):
        found = None
        for subset in combinations(remaining, size):
            prod = [current[-1] % m]
            for idx in subset:
                prod = [a % m for a in zz_mul(prod, lifted[idx])]
            candidate = zz_primitive(symmetric(prod))
            if not candidate:
                continue
            quotient = zz_divmod_exact(current, candidate)
            if quotient is not None:
                result.append(candidate)
                current = zz_primitive(quotient)
                found = subset
                break
        if found is not None:
            remaining = [i for i in remaining if i not in found]
        else:
            size += 1
    if zz_deg(current) >= 1:
        result.append(current)
    return result


def factor_rational_coeffs(coeffs: list[Fraction]) -> tuple[Fraction, list[tuple[list[Fraction], int]]]:
    """Factor a dense rational polynomial with nonzero constant term.

    Returns (unit, [(monic factor coefficient list, multiplicity)]).
    """
    denom = 1
    for c in coeffs:
        denom = denom * c.denominator // gcd(denom, c.denominator)
    ints = [int(c * denom) for c in coeffs]
    prim = zz_primitive(ints)
    unit = Fraction(ints[-1], prim[-1] * denom)
    out: list[tuple[list[Fraction], int]] = []
    for part, mult in zz_squarefree(prim):
        for fac in zassenhaus(part):
            lc = fac[-1]
            unit *= Fraction(lc) ** mult
            out.append(([Fraction(a, lc) for a in fac], mult))
    out.sort(key=lambda fm: (len(fm[0]), fm[0]))
    return unit, out


# ---------------------------------------------------------------- public surface


@dataclass(frozen=True)
class Factorization:
    """unit * prod(factor^multiplicity) reproduces the input exactly."""

    ring: Ring
    unit: LaurentPoly
    factors: tuple[tuple[LaurentPoly, int], ...]

    def expand(self) -> LaurentPoly:
        out = self.unit
        for f, mult in self.factors:
            out = out * f ** mult
        return out

    def count(self) -> int:
        return sum(mult for _, mult in self.factors)


def factor(p: LaurentPoly) -> Factorization:
    """Factor a nonzero univariate Laurent polynomial over GF(2) or Q.

    Factors are monic with nonzero constant term; the unit c*t^k is returned
    separately and the list is sorted canonically (degree, then coefficients).
    """
    if p.is_zero():
        raise ZeroPolynomial("cannot factor the zero polynomial")
    if p.dim != 1:
        raise UnsupportedRing("factorization is univariate only")
    if p.ring is INT:
        raise UnsupportedRing("factor over GF(2) or Q; reduce integer input first")
    val, coeffs = p.univariate_coeffs()
    if len(coeffs) - 1 > MAX_DEGREE:
        raise DegreeCapExceeded(f"degree {len(coeffs) - 1} exceeds cap {MAX_DEGREE}")

    # peel the t-power part of the unit
    low = next(i for i, c in enumerate(coeffs) if c != 0)
    shift = val + low
    coeffs = coeffs[low:]

    if p.ring is GF2:
        bits = 0
        for i, c in enumerate(coeffs):
            if c:
                bits |= 1 << i
        unit = LaurentPoly.monomial(GF2, (shift,), 1)
        factors = tuple(
            (LaurentPoly.univariate(GF2, [(g >> i) & 1 for i in range(gf2_deg(g) + 1)]), mult)
            for g, mult in factor_gf2_bits(bits))
        return Factorization(GF2, unit, factors)

    unit_c, parts = factor_rational_coeffs([Fraction(c) for c in coeffs])
    unit = LaurentPoly.monomial(RAT, (shift,), unit_c)
    factors = tuple((LaurentPoly.univariate(RAT, fac), mult) for fac, mult in parts)
    return Factorization(RAT, unit, factors)
