"""Coefficient rings: GF(2), the integers, and the rationals.

Coefficients are stored as plain Python values (``int`` for GF(2) and the
integers, ``fractions.Fraction`` for the rationals); the ring singletons
supply the arithmetic, normalization, and formatting for each tag.  All
arithmetic is exact; no floats anywhere.
"""

from __future__ import annotations

from fractions import Fraction

from ..errors import UnsupportedRing


class Ring:
    """Common interface of the three coefficient rings."""

    name: str
    is_field: bool

    def coerce(self, value):
        raise NotImplementedError

    def add(self, a, b):
        raise NotImplementedError

    def mul(self, a, b):
        raise NotImplementedError

    def neg(self, a):
        raise NotImplementedError

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def inv(self, a):
        raise UnsupportedRing(f"{self.name} has no division")

    def is_unit(self, a) -> bool:
        raise NotImplementedError

    def format(self, a) -> str:
        return str(a)

    def parse(self, text: str):
        raise NotImplementedError

    def __repr__(self):
        return self.name


class _GF2(Ring):
    name = "GF2"
    is_field = True

    def coerce(self, value):
        if isinstance(value, bool):
            return int(value)
        if isinstance(value, int):
            return value & 1
        if isinstance(value, Fraction):
            if value.denominator % 2 == 0:
                raise UnsupportedRing("rational with even denominator has no GF(2) image")
            return value.numerator & 1
        raise UnsupportedRing(f"cannot coerce {value!r} into GF(2)")

    def add(self, a, b):
        return a ^ b

    def mul(self, a, b):
        return a & b

    def neg(self, a):
        return a

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of 0 in GF(2)")
        return 1

    def is_unit(self, a):
        return a == 1

    def parse(self, text):
        return self.coerce(int(text))


class _Int(Ring):
    name = "Int"
    is_field = False

    def coerce(self, value):
        if isinstance(value, bool):
            return int(value)
        if isinstance(value, int):
            return value
        if isinstance(value, Fraction) and value.denominator == 1:
            return value.numerator
        raise UnsupportedRing(f"cannot coerce {value!r} into the integers")

    def add(self, a, b):
        return a + b

    def mul(self, a, b):
        return a * b

    def neg(self, a):
        return -a

    def is_unit(self, a):
        return a in (1, -1)

    def parse(self, text):
        return int(text)


class _Rat(Ring):
    name = "Rat"
    is_field = True

    def coerce(self, value):
        if isinstance(value, bool):
            return Fraction(int(value))
        if isinstance(value, (int, Fraction)):
            return Fraction(value)
        raise UnsupportedRing(f"cannot coerce {value!r} into the rationals")

    def add(self, a, b):
        return a + b

    def mul(self, a, b):
        return a * b

    def neg(self, a):
        return -a

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of 0")
        return 1 / Fraction(a)

    def is_unit(self, a):
        return a != 0

    def format(self, a):
        return str(a)

    def parse(self, text):
        return Fraction(text)


GF2 = _GF2()
INT = _Int()
RAT = _Rat()

#: CLI ring tags.
RING_TAGS = {"f2": GF2, "z": INT, "q": RAT}
TAG_OF_RING = {id(GF2): "f2", id(INT): "z", id(RAT): "q"}


def ring_tag(ring: Ring) -> str:
    return TAG_OF_RING[id(ring)]
