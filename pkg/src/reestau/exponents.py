"""Exact rational exponents and their p-adic denominator decomposition.

An exponent lambda >= 0 decomposes as lambda = a / (p^b (p^c - 1)) where p^b
is the p-part of the denominator and c is the multiplicative order of p
modulo the p-free part (c = 1 when that part is 1).  This is the shape the
Cartier fixed-point chain consumes.
"""

from fractions import Fraction
from math import gcd

from .errors import ReestauError


def multiplicative_order(p: int, n: int) -> int:
    """Order of p in (Z/n)^*; n must be coprime to p.  Order of 1 is 1."""
    if n == 1:
        return 1
    if gcd(p, n) != 1:
        raise ReestauError(f"{p} is not a unit modulo {n}")
    c = 1
    acc = p % n
    while acc != 1:
        acc = (acc * p) % n
        c += 1
    return c


class RationalExponent:
    """A non-negative rational lambda with per-prime decompositions."""

    __slots__ = ("value",)

    def __init__(self, value):
        value = Fraction(value)
        if value < 0:
            raise ReestauError(f"exponent must be >= 0, got {value}")
        self.value = value

    @classmethod
    def parse(cls, text: str):
        text = text.strip()
        if "/" in text:
            num, den = text.split("/", 1)
            return cls(Fraction(int(num), int(den)))
        return cls(Fraction(int(text)))

    @property
    def numerator(self) -> int:
        return self.value.numerator

    @property
    def denominator(self) -> int:
        return self.value.denominator

    def __eq__(self, other):
        if isinstance(other, RationalExponent):
            return self.value == other.value
        return self.value == other

    def __hash__(self):
        return hash(self.value)

    def __repr__(self):
        return f"RationalExponent({self.value})"

    def __str__(self):
        return str(self.value)

    def decompose(self, p: int):
        """Return (a, b, c) with lambda = a / (p^b (p^c - 1)) and c minimal.

        For integral lambda the convention is b = 0, c = 1,
        a = lambda * (p - 1).
        """
        den = self.value.denominator
        b = 0
        while den % p == 0:
            den //= p
            b += 1
        c = multiplicative_order(p, den)
        qc = p**c - 1
        if qc % den != 0:
            raise AssertionError("order computation failed")
        a = self.value.numerator * (p**b * qc // self.value.denominator)
        # a / (p^b (p^c-1)) == lambda by construction
        return a, b, c

    def ceil(self) -> int:
        return -((-self.value.numerator) // self.value.denominator)

    def floor(self) -> int:
        return self.value.numerator // self.value.denominator
