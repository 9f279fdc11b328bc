"""Exact Laurent polynomials in n commuting variables.

A polynomial is a finite map from integer exponent vectors (tuples of length
``dim``) to nonzero coefficients in one of the rings of :mod:`.rings`.  The
zero polynomial is the empty map.  Values are immutable after construction
and safe to share between threads; every operation returns a fresh value.

Textual syntax (see also :func:`parse_poly`): terms ``c*z1^a1*z2^a2`` joined
by ``+``, negative exponents allowed, and ``t`` is an alias for ``z1`` in the
univariate case, e.g. ``t^-1 + 1 + t``.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Iterable, Mapping

from ..errors import DimensionMismatch, MixedRings, ParseError, UnsupportedRing
from .rings import GF2, INT, RAT, Ring


class LaurentPoly:
    """Immutable Laurent polynomial over GF(2), Z, or Q."""

    __slots__ = ("ring", "dim", "terms", "_hash")

    def __init__(self, ring: Ring, dim: int, terms: Mapping[tuple, object] | Iterable = ()):
        if dim < 1:
            raise DimensionMismatch("dimension must be at least 1")
        clean = {}
        items = terms.items() if isinstance(terms, Mapping) else terms
        for exp, coeff in items:
            exp = tuple(exp)
            if len(exp) != dim:
                raise DimensionMismatch(
                    f"exponent {exp} has length {len(exp)}, expected {dim}")
            if not all(isinstance(e, int) for e in exp):
                raise DimensionMismatch(f"exponent {exp} is not integral")
            c = ring.coerce(coeff)
            if exp in clean:
                c = ring.add(clean[exp], c)
            if c == 0:
                clean.pop(exp, None)
            else:
                clean[exp] = c
        object.__setattr__(self, "ring", ring)
        object.__setattr__(self, "dim", dim)
        object.__setattr__(self, "terms", clean)
        object.__setattr__(self, "_hash", None)

    def __setattr__(self, name, value):
        raise AttributeError("LaurentPoly is immutable")

    # ------------------------------------------------------------ constructors

    @classmethod
    def zero(cls, ring: Ring, dim: int = 1) -> "LaurentPoly":
        return cls(ring, dim)

    @classmethod
    def constant(cls, ring: Ring, value, dim: int = 1) -> "LaurentPoly":
        return cls(ring, dim, {(0,) * dim: value})

    @classmethod
    def one(cls, ring: Ring, dim: int = 1) -> "LaurentPoly":
        return cls.constant(ring, 1, dim)

    @classmethod
    def monomial(cls, ring: Ring, exp: Iterable[int], coeff=1) -> "LaurentPoly":
        exp = tuple(exp)
        return cls(ring, len(exp), {exp: coeff})

    @classmethod
    def univariate(cls, ring: Ring, coeffs: Iterable, shift: int = 0) -> "LaurentPoly":
        """Build sum of coeffs[i] * t^(shift + i)."""
        return cls(ring, 1, {(shift + i,): c for i, c in enumerate(coeffs)})

    # ------------------------------------------------------------ predicates

    def is_zero(self) -> bool:
        return not self.terms

    def is_one(self) -> bool:
        zero = (0,) * self.dim
        return set(self.terms) == {zero} and self.terms[zero] == self.ring.coerce(1)

    def is_constant(self) -> bool:
        return all(all(e == 0 for e in exp) for exp in self.terms)

    def is_unit_monomial(self) -> bool:
        """True for c * z^k with c invertible; these are the Laurent units."""
        if len(self.terms) != 1:
            return False
        [(_, c)] = self.terms.items()
        return self.ring.is_unit(c)

    # ------------------------------------------------------------ comparisons

    def __eq__(self, other):
        return (isinstance(other, LaurentPoly) and self.ring is other.ring
                and self.dim == other.dim and self.terms == other.terms)

    def __hash__(self):
        if self._hash is None:
            h = hash((self.ring.name, self.dim, frozenset(self.terms.items())))
            object.__setattr__(self, "_hash", h)
        return self._hash

    # ------------------------------------------------------------ arithmetic

    def _check(self, other: "LaurentPoly"):
        if self.ring is not other.ring:
            raise MixedRings(f"{self.ring.name} vs {other.ring.name}")
        if self.dim != other.dim:
            raise DimensionMismatch(f"dim {self.dim} vs {other.dim}")

    def __add__(self, other: "LaurentPoly") -> "LaurentPoly":
        self._check(other)
        terms = dict(self.terms)
        ring = self.ring
        for exp, c in other.terms.items():
            if exp in terms:
                s = ring.add(terms[exp], c)
                if s == 0:
                    del terms[exp]
                else:
                    terms[exp] = s
            else:
                terms[exp] = c
        return LaurentPoly(ring, self.dim, terms)

    def __neg__(self) -> "LaurentPoly":
        ring = self.ring
        return LaurentPoly(ring, self.dim, {e: ring.neg(c) for e, c in self.terms.items()})

    def __sub__(self, other: "LaurentPoly") -> "LaurentPoly":
        return self + (-other)

    def __mul__(self, other: "LaurentPoly") -> "LaurentPoly":
        self._check(other)
        ring = self.ring
        out: dict = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                exp = tuple(a + b for a, b in zip(e1, e2))
                prod = ring.mul(c1, c2)
                if exp in out:
                    s = ring.add(out[exp], prod)
                    if s == 0:
                        del out[exp]
                    else:
                        out[exp] = s
                elif prod != 0:
                    out[exp] = prod
        return LaurentPoly(ring, self.dim, out)

    def __pow__(self, k: int) -> "LaurentPoly":
        if k < 0:
            raise UnsupportedRing("negative powers only for unit monomials")
        result = LaurentPoly.one(self.ring, self.dim)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def scale(self, coeff) -> "LaurentPoly":
        ring = self.ring
        c0 = ring.coerce(coeff)
        return LaurentPoly(ring, self.dim,
                           {e: ring.mul(c, c0) for e, c in self.terms.items()})

    def shift(self, exp: Iterable[int]) -> "LaurentPoly":
        """Multiply by the monomial z^exp."""
        exp = tuple(exp)
        if len(exp) != self.dim:
            raise DimensionMismatch("shift vector has the wrong length")
        return LaurentPoly(self.ring, self.dim,
                           {tuple(a + b for a, b in zip(e, exp)): c
                            for e, c in self.terms.items()})

    # ------------------------------------------------------------ views

    def support(self) -> list:
        return sorted(self.terms)

    def coeff(self, exp: Iterable[int]):
        exp = tuple(exp)
        return self.terms.get(exp, self.ring.coerce(0))

    def min_exp(self) -> int:
        self._require_univariate()
        return min(e for (e,) in self.terms)

    def max_exp(self) -> int:
        self._require_univariate()
        return max(e for (e,) in self.terms)

    def _require_univariate(self):
        if self.dim != 1:
            raise UnsupportedRing("operation requires a univariate polynomial")
        if not self.terms:
            raise UnsupportedRing("operation requires a nonzero polynomial")

    def univariate_coeffs(self) -> tuple[int, list]:
        """Return (valuation, dense coefficient list from t^val upward)."""
        self._require_univariate()
        lo, hi = self.min_exp(), self.max_exp()
        coeffs = [self.ring.coerce(0)] * (hi - lo + 1)
        for (e,), c in self.terms.items():
            coeffs[e - lo] = c
        return lo, coeffs

    def reverse(self) -> "LaurentPoly":
        """Substitute every variable by its inverse."""
        return LaurentPoly(self.ring, self.dim,
                           {tuple(-a for a in e): c for e, c in self.terms.items()})

    def evaluate(self, point: Iterable):
        """Evaluate exactly at nonzero rational coordinates."""
        point = [Fraction(v) for v in point]
        if len(point) != self.dim:
            raise DimensionMismatch("evaluation point has the wrong length")
        if any(v == 0 for v in point):
            raise ZeroDivisionError("Laurent polynomials cannot be evaluated at 0")
        total = Fraction(0)
        for exp, c in self.terms.items():
            term = Fraction(c)
            for v, e in zip(point, exp):
                term *= v ** e
            total += term
        if self.ring is GF2:
            return GF2.coerce(total)
        return total if self.ring is RAT else INT.coerce(total)

    def map_coefficients(self, ring: Ring) -> "LaurentPoly":
        """Reinterpret the coefficients in another ring (mod-2 reduction etc.)."""
        return LaurentPoly(ring, self.dim, {e: ring.coerce(c) for e, c in self.terms.items()})

    # ------------------------------------------------------------ rendering

    def __str__(self):
        return format_poly(self)

    def __repr__(self):
        return f"LaurentPoly({self.ring.name}, {format_poly(self)!r})"


# ---------------------------------------------------------------- formatting


def _var_name(i: int, dim: int) -> str:
    return "t" if dim == 1 else f"z{i + 1}"


def format_poly(p: LaurentPoly) -> str:
    """Render in the textual syntax; terms ascend lexicographically."""
    if p.is_zero():
        return "0"
    parts = []
    for exp in sorted(p.terms):
        c = p.terms[exp]
        factors = []
        for i, e in enumerate(exp):
            if e == 0:
                continue
            name = _var_name(i, p.dim)
            factors.append(name if e == 1 else f"{name}^{e}")
        cs = p.ring.format(c)
        if not factors:
            parts.append(cs)
        elif cs == "1":
            parts.append("*".join(factors))
        elif cs == "-1":
            parts.append("-" + "*".join(factors))
        else:
            parts.append("*".join([cs] + factors))
    return " + ".join(parts)


_TOKEN = re.compile(r"\s*(?:(?P<num>\d+)|(?P<var>t|z\d+)|(?P<op>[+\-*/^()]))")


def _tokenize(text: str):
    pos, out = 0, []
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            if text[pos:].strip():
                raise ParseError(f"unexpected character {text[pos]!r}", pos)
            break
        if m.group("num"):
            out.append(("num", m.group("num"), m.start()))
        elif m.group("var"):
            out.append(("var", m.group("var"), m.start()))
        else:
            out.append(("op", m.group("op"), m.start()))
        pos = m.end()
    return out


def parse_poly(text: str, ring: Ring, dim: int | None = None) -> LaurentPoly:
    """Parse the textual syntax into a polynomial over ``ring``.

    The dimension is inferred from the largest variable index (``t`` counts
    as ``z1``) unless given explicitly.
    """
    tokens = _tokenize(text)
    if not tokens:
        raise ParseError("empty polynomial", 0)

    terms = []          # (coeff Fraction, {index: exponent})
    max_index = 1
    i = 0

    def parse_signed_int(j):
        sign = 1
        while j < len(tokens) and tokens[j][0] == "op" and tokens[j][1] in "+-":
            if tokens[j][1] == "-":
                sign = -sign
            j += 1
        if j >= len(tokens) or tokens[j][0] != "num":
            raise ParseError("expected an integer", tokens[j - 1][2] if tokens else 0)
        return sign * int(tokens[j][1]), j + 1

    while i < len(tokens):
        sign = 1
        while i < len(tokens) and tokens[i][0] == "op" and tokens[i][1] in "+-":
            if tokens[i][1] == "-":
                sign = -sign
            i += 1
        if i >= len(tokens):
            raise ParseError("dangling sign", tokens[-1][2])
        coeff = Fraction(sign)
        exps: dict[int, int] = {}
        expect_factor = True
        while i < len(tokens):
            kind, val, pos = tokens[i]
            if kind == "op" and val in "+-" and not expect_factor:
                break
            if expect_factor:
                if kind == "num":
                    num = int(val)
                    i += 1
                    if i + 1 < len(tokens) and tokens[i][0] == "op" and tokens[i][1] == "/" \
                            and tokens[i + 1][0] == "num":
                        coeff *= Fraction(num, int(tokens[i + 1][1]))
                        i += 2
                    else:
                        coeff *= num
                elif kind == "var":
                    index = 1 if val == "t" else int(val[1:])
                    max_index = max(max_index, index)
                    i += 1
                    e = 1
                    if i < len(tokens) and tokens[i][0] == "op" and tokens[i][1] == "^":
                        e, i = parse_signed_int(i + 1)
                    exps[index - 1] = exps.get(index - 1, 0) + e
                elif kind == "op" and val in "+-":
                    # unary sign inside a term, e.g. after '*'
                    if val == "-":
                        coeff = -coeff
                    i += 1
                    continue
                else:
                    raise ParseError(f"unexpected {val!r}", pos)
                expect_factor = False
            else:
                if kind == "op" and val == "*":
                    expect_factor = True
                    i += 1
                else:
                    raise ParseError(f"unexpected {val!r}", pos)
        if expect_factor:
            raise ParseError("term ends with '*'", tokens[i - 1][2])
        terms.append((coeff, exps))

    n = dim if dim is not None else max_index
    if max_index > n:
        raise ParseError(f"variable z{max_index} exceeds dimension {n}", 0)
    acc: dict[tuple, object] = {}
    out = LaurentPoly(ring, n)
    for coeff, exps in terms:
        exp = tuple(exps.get(k, 0) for k in range(n))
        acc.setdefault(exp, [])
        acc[exp].append(coeff)
    items = []
    for exp, coeffs in acc.items():
        total = sum(coeffs, Fraction(0))
        items.append((exp, ring.coerce(total)))
    return LaurentPoly(ring, n, items)


# ---------------------------------------------------------------- JSON form


def poly_to_json(p: LaurentPoly) -> dict:
    """Serialize as {dim, terms:[{exp, coeff}]} with exact string coefficients."""
    return {
        "dim": p.dim,
        "terms": [{"exp": list(exp), "coeff": p.ring.format(p.terms[exp])}
                  for exp in sorted(p.terms)],
    }


def poly_from_json(obj: dict, ring: Ring) -> LaurentPoly:
    dim = int(obj["dim"])
    items = [(tuple(t["exp"]), ring.parse(str(t["coeff"]))) for t in obj["terms"]]
    return LaurentPoly(ring, dim, items)
