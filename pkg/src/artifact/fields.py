"""Exact scalar arithmetic over Q and over prime fields GF(p).

A field object owns the arithmetic; scalar values are plain Python objects
(fractions.Fraction for Q, ints in range(p) for GF(p)).  Everything that
combines scalars carries a field and refuses to mix fields, so a GF(5)
value can never leak into a rational computation.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Union

Scalar = Union[Fraction, int]


class FieldError(ValueError):
    pass


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    d = 3
    while d * d <= p:
        if p % d == 0:
            return False
        d += 2
    return True


class Rationals:
    """Field descriptor for exact rational arithmetic."""

    char = 0
    p = None

    zero = Fraction(0)
    one = Fraction(1)

    def __repr__(self) -> str:
        return "Q"

    def __eq__(self, other) -> bool:
        return isinstance(other, Rationals)

    def __hash__(self) -> int:
        return hash("field:Q")

    def add(self, a: Fraction, b: Fraction) -> Fraction:
        return a + b

    def sub(self, a: Fraction, b: Fraction) -> Fraction:
        return a - b

    def mul(self, a: Fraction, b: Fraction) -> Fraction:
        return a * b

    def neg(self, a: Fraction) -> Fraction:
        return -a

    def inv(self, a: Fraction) -> Fraction:
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        return 1 / a

    def div(self, a: Fraction, b: Fraction) -> Fraction:
        return a / b

    def from_int(self, n: int) -> Fraction:
        return Fraction(n)

    def parse(self, token) -> Fraction:
        """Accept ints, Fractions, and 'num/den' strings."""
        if isinstance(token, bool):
            raise FieldError(f"not a rational scalar: {token!r}")
        if isinstance(token, int):
            return Fraction(token)
        if isinstance(token, Fraction):
            return token
        if isinstance(token, str):
            try:
                return Fraction(token.strip())
            except (ValueError, ZeroDivisionError) as exc:
                raise FieldError(f"bad rational literal {token!r}") from exc
        raise FieldError(f"not a rational scalar: {token!r}")

    def to_json(self, a: Fraction):
        if a.denominator == 1:
            return int(a)
        return f"{a.numerator}/{a.denominator}"

    def field_to_json(self):
        return "Q"


class PrimeField:
    """Field descriptor for GF(p), scalars are ints in range(p)."""

    def __init__(self, p: int):
        if not isinstance(p, int) or not _is_prime(p):
            raise FieldError(f"modulus must be prime, got {p!r}")
        self.p = p
        self.char = p
        self.zero = 0
        self.one = 1 % p

    def __repr__(self) -> str:
        return f"GF({self.p})"

    def __eq__(self, other) -> bool:
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self) -> int:
        return hash(("field:GF", self.p))

    def add(self, a: int, b: int) -> int:
        return (a + b) % self.p

    def sub(self, a: int, b: int) -> int:
        return (a - b) % self.p

    def mul(self, a: int, b: int) -> int:
        return (a * b) % self.p

    def neg(self, a: int) -> int:
        return (-a) % self.p

    def inv(self, a: int) -> int:
        a %= self.p
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        return pow(a, self.p - 2, self.p)

    def div(self, a: int, b: int) -> int:
        return (a * self.inv(b)) % self.p

    def from_int(self, n: int) -> int:
        return n % self.p

    def parse(self, token) -> int:
        if isinstance(token, bool) or not isinstance(token, int):
            raise FieldError(f"GF({self.p}) scalars are integers, got {token!r}")
        return token % self.p

    def to_json(self, a: int) -> int:
        return a % self.p

    def field_to_json(self):
        return {"p": self.p}


QQ = Rationals()

Field = Union[Rationals, PrimeField]

_GF_CACHE: dict[int, PrimeField] = {}


def GF(p: int) -> PrimeField:
    if p not in _GF_CACHE:
        _GF_CACHE[p] = PrimeField(p)
    return _GF_CACHE[p]


def field_from_json(obj) -> Field:
    """Parse the JSON field descriptor: "Q" or {"p": N}."""
    if obj == "Q":
        return QQ
    if isinstance(obj, dict) and set(obj) == {"p"}:
        return GF(obj["p"])
    raise FieldError(f"bad field descriptor {obj!r}")
