"""Exact scalar fields: the rationals and prime fields GF(p).

Scalars are plain Python objects (``int`` or ``Fraction`` for the rationals,
``int`` residues in ``range(p)`` for GF(p)); a field object only knows how to
normalize, invert, parse and print them.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .errors import FieldError, ParseError

_RATIONAL = re.compile(r"^(-?)(0|[1-9][0-9]*)(?:/([1-9][0-9]*))?$")
_RESIDUE = re.compile(r"^(0|[1-9][0-9]*)$")


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    k = 3
    while k * k <= n:
        if n % k == 0:
            return False
        k += 2
    return True


@dataclass(frozen=True)
class Field:
    """Ground field. ``kind`` is ``"rational"`` or ``"prime"``."""

    kind: str
    p: int | None = None

    def __post_init__(self):
        if self.kind == "rational":
            if self.p is not None:
                raise FieldError("the rational field takes no modulus")
        elif self.kind == "prime":
            if self.p is None or not is_prime(self.p):
                raise FieldError(f"modulus {self.p!r} is not prime")
        else:
            raise FieldError(f"unknown field kind {self.kind!r}")

    @property
    def char(self) -> int:
        return 0 if self.p is None else self.p

    def __str__(self):
        return "Q" if self.p is None else f"GF({self.p})"

    __repr__ = __str__

    # arithmetic

    def reduce(self, x):
        """Normalize a raw (possibly unreduced) scalar."""
        if self.p is not None:
            return x % self.p
        if type(x) is Fraction and x.denominator == 1:
            return x.numerator
        return x

    def inv(self, x):
        if self.p is not None:
            x %= self.p
            if x == 0:
                raise ZeroDivisionError("inverse of zero in " + str(self))
            return pow(x, -1, self.p)
        if x == 0:
            raise ZeroDivisionError("inverse of zero in Q")
        return self.reduce(Fraction(1) / x)

    def div(self, a, b):
        return self.reduce(a * self.inv(b))

    def convert(self, x):
        """Coerce an int or Fraction into this field."""
        if self.p is not None:
            if isinstance(x, Fraction):
                return x.numerator * pow(x.denominator % self.p, -1, self.p) % self.p
            return int(x) % self.p
        return self.reduce(Fraction(x))

    def random_element(self, rng, bound: int = 3):
        if self.p is not None:
            return rng.randrange(self.p)
        return rng.randint(-bound, bound)

    # text form

    def parse(self, text: str):
        if not isinstance(text, str):
            raise ParseError(f"scalar entries must be strings, got {text!r}")
        if self.p is not None:
            m = _RESIDUE.match(text)
            if m is None:
                raise ParseError(f"{text!r} is not a residue string for {self}")
            value = int(text)
            if value >= self.p:
                raise ParseError(f"{text!r} out of range 0..{self.p - 1}")
            return value
        m = _RATIONAL.match(text)
        if m is None:
            raise ParseError(f"{text!r} is not a rational literal")
        sign, num, den = m.groups()
        value = Fraction(int(num), int(den) if den else 1)
        return self.reduce(-value if sign else value)

    def format(self, x) -> str:
        x = self.reduce(x)
        if self.p is not None:
            return str(x)
        if isinstance(x, Fraction):
            return f"{x.numerator}/{x.denominator}"
        return str(x)


QQ = Field("rational")


@lru_cache(maxsize=None)
def GF(p: int) -> Field:
    return Field("prime", p)


def field_from_name(name: str) -> Field:
    """``"Q"`` or ``"F5"`` / ``"GF5"`` / ``"GF(5)"``."""
    name = name.strip()
    if name in ("Q", "QQ", "rational"):
        return QQ
    m = re.match(r"^(?:GF|F)\(?([0-9]+)\)?$", name)
    if m is None:
        raise FieldError(f"unrecognized field name {name!r}")
    return GF(int(m.group(1)))
