"""Exact coefficient fields: the rationals and prime fields GF(p).

Field elements are plain values (``gmpy2.mpq`` for the rationals, ``int``
residues in ``[0, p)`` for GF(p)); a field object supplies the operations.
Besides scalar arithmetic, each field exposes a few vector kernels
(``dot``, ``scaled``, ``sub_scaled``) so that elimination inner loops pay
one dispatch per row instead of one per entry.
"""

from __future__ import annotations

import operator

import gmpy2
from gmpy2 import mpq


class FieldError(ValueError):
    """Bad field construction or element parsing."""


class RationalField:
    """The field of rationals; elements are ``gmpy2.mpq`` in lowest terms."""

    name = "q"
    characteristic = 0
    zero = mpq(0)
    one = mpq(1)

    add = staticmethod(operator.add)
    sub = staticmethod(operator.sub)
    mul = staticmethod(operator.mul)
    neg = staticmethod(operator.neg)

    @staticmethod
    def div(x, y):
        if not y:
            raise ZeroDivisionError("division by zero in q")
        return x / y

    @staticmethod
    def inv(x):
        if not x:
            raise ZeroDivisionError("inverse of zero in q")
        return 1 / x

    @staticmethod
    def is_zero(x):
        return not x

    @staticmethod
    def from_int(k):
        return mpq(k)

    @staticmethod
    def from_fraction(num, den):
        if den == 0:
            raise FieldError("zero denominator")
        return mpq(num, den)

    @staticmethod
    def parse(text):
        try:
            return mpq(text.strip())
        except (ValueError, ZeroDivisionError) as exc:
            raise FieldError(f"not a rational literal: {text!r}") from exc

    @staticmethod
    def to_str(x):
        return str(x)

    @staticmethod
    def dot(xs, ys):
        acc = mpq(0)
        for x, y in zip(xs, ys):
            if x and y:
                acc += x * y
        return acc

    @staticmethod
    def scaled(xs, c):
        return [x * c if x else x for x in xs]

    @staticmethod
    def sub_scaled(ys, c, xs):
        # ys - c*xs, elementwise
        return [y - c * x if x else y for y, x in zip(ys, xs)]

    @staticmethod
    def random(rng, bound=10):
        return mpq(rng.randint(-bound, bound))

    def __repr__(self):
        return "QQ"


class PrimeField:
    """GF(p) for prime p; elements are ints reduced into ``[0, p)``."""

    characteristic: int

    def __init__(self, p: int):
        if p < 2 or not gmpy2.is_prime(p):
            raise FieldError(f"modulus must be prime, got {p}")
        self.p = p
        self.characteristic = p
        self.name = f"gf:{p}"
        self.zero = 0
        self.one = 1

    def add(self, x, y):
        return (x + y) % self.p

    def sub(self, x, y):
        return (x - y) % self.p

    def mul(self, x, y):
        return (x * y) % self.p

    def neg(self, x):
        return -x % self.p

    def div(self, x, y):
        if not y:
            raise ZeroDivisionError(f"division by zero in {self.name}")
        return x * pow(y, -1, self.p) % self.p

    def inv(self, x):
        if not x:
            raise ZeroDivisionError(f"inverse of zero in {self.name}")
        return pow(x, -1, self.p)

    @staticmethod
    def is_zero(x):
        return not x

    def from_int(self, k):
        return k % self.p

    def from_fraction(self, num, den):
        if den % self.p == 0:
            raise FieldError(f"denominator {den} is zero in {self.name}")
        return num * pow(den, -1, self.p) % self.p

    def parse(self, text):
        text = text.strip()
        if "/" in text:
            num, _, den = text.partition("/")
            try:
                return self.from_fraction(int(num), int(den))
            except ValueError as exc:
                raise FieldError(f"not a field literal: {text!r}") from exc
        try:
            return int(text) % self.p
        except ValueError as exc:
            raise FieldError(f"not a field literal: {text!r}") from exc

    @staticmethod
    def to_str(x):
        return str(x)

    def dot(self, xs, ys):
        return sum(map(operator.mul, xs, ys)) % self.p

    def scaled(self, xs, c):
        p = self.p
        return [x * c % p for x in xs]

    def sub_scaled(self, ys, c, xs):
        p = self.p
        return [(y - c * x) % p for y, x in zip(ys, xs)]

    def random(self, rng, bound=None):
        # bound is accepted for interface parity with the rationals
        return rng.randrange(self.p)

    def __repr__(self):
        return f"GF({self.p})"


QQ = RationalField()

_gf_cache: dict[int, PrimeField] = {}


def GF(p: int) -> PrimeField:
    """Return the (cached) prime field GF(p)."""
    field = _gf_cache.get(p)
    if field is None:
        field = PrimeField(p)
        _gf_cache[p] = field
    return field


def field_by_name(name: str):
    """Resolve a field spec string: ``q`` or ``gf:<p>``."""
    name = name.strip().lower()
    if name == "q":
        return QQ
    if name.startswith("gf:"):
        try:
            p = int(name[3:])
        except ValueError as exc:
            raise FieldError(f"bad field spec {name!r}") from exc
        return GF(p)
    raise FieldError(f"unknown field {name!r} (expected 'q' or 'gf:<p>')")
