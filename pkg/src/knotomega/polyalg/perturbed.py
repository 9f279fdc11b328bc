"""Formal GF(2) sums of rational-exponent monomials tensored with basis vectors.

These model elements of a finite-dimensional vector space tensored with the
group ring of R^n, where exponents are exact rationals.  The one decision
procedure that matters downstream is projective integrality: whether one
monomial shift makes every exponent integral.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional

from ..errors import DimensionMismatch


@dataclass(frozen=True)
class PerturbedElement:
    """Finite set of (rational exponent vector, basis index) with GF(2) weights.

    Presence of a pair means multiplicity 1; duplicate pairs would cancel and
    are rejected at construction.
    """

    dim: int
    basis_size: int
    terms: frozenset[tuple[tuple[Fraction, ...], int]]

    @classmethod
    def build(cls, dim: int, basis_size: int,
              terms: Iterable[tuple[Iterable, int]]) -> "PerturbedElement":
        seen = set()
        for exp, idx in terms:
            exp = tuple(Fraction(e) for e in exp)
            if len(exp) != dim:
                raise DimensionMismatch(f"exponent {exp} has length {len(exp)}, expected {dim}")
            if not 0 <= idx < basis_size:
                raise IndexError(f"basis index {idx} outside 0..{basis_size - 1}")
            key = (exp, idx)
            if key in seen:
                raise ValueError(f"duplicate term {key}; GF(2) pairs cancel")
            seen.add(key)
        return cls(dim, basis_size, frozenset(seen))

    @classmethod
    def zero(cls, dim: int, basis_size: int) -> "PerturbedElement":
        return cls(dim, basis_size, frozenset())

    def is_zero(self) -> bool:
        return not self.terms

    def translate(self, shift: Iterable) -> "PerturbedElement":
        """Multiply by the monomial with exponent -shift (divide by e^shift)."""
        shift = tuple(Fraction(s) for s in shift)
        if len(shift) != self.dim:
            raise DimensionMismatch("shift vector has the wrong length")
        return PerturbedElement(
            self.dim, self.basis_size,
            frozenset((tuple(e - s for e, s in zip(exp, shift)), idx)
                      for exp, idx in self.terms))

    def is_integral(self) -> bool:
        return all(e.denominator == 1 for exp, _ in self.terms for e in exp)


def is_projectively_integral(x: PerturbedElement) -> Optional[tuple[Fraction, ...]]:
    """Witness exponent a with e^(-a)*x integral, or None.

    An element is projectively integral iff all occurring exponent vectors
    share identical componentwise fractional parts; the vector of those
    fractional parts is the canonical witness.  The empty element is
    witnessed by zero.
    """
    if x.is_zero():
        return (Fraction(0),) * x.dim
    it = iter(sorted(x.terms))
    first, _ = next(it)
    witness = tuple(e - int(e // 1) for e in first)  # componentwise frac part
    for exp, _ in it:
        for e, w in zip(exp, witness):
            if e - int(e // 1) != w:
                return None
    return witness
