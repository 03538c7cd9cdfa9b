"""Exact scalar fields: the rationals with bounded integers, and GF(p).

Internally a field element is a plain Python value ("raw" value):

* over Q: an ``int`` when the value is integral, otherwise a ``Fraction``
  with denominator > 1.  Numerator and denominator are kept below
  ``2**MAX_BITS`` in magnitude; exceeding that raises ``OverflowError``.
* over GF(p): an ``int`` in ``[0, p)``.

Both forms are canonical, so ``==`` and ``hash`` on raw values are exact
value comparisons.  :class:`Scalar` wraps a raw value together with its
field for the public, operator-friendly API.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Union

from .errors import DivisionByZero, FieldMismatch

MAX_BITS = 127

Raw = Union[int, Fraction]


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    for d in range(3, math.isqrt(n) + 1, 2):
        if n % d == 0:
            return False
    return True


class FieldSpec:
    """An exact field, either Q (``p is None``) or GF(p)."""

    __slots__ = ("p",)

    def __init__(self, p: int | None = None):
        if p is not None:
            if not isinstance(p, int) or not 2 <= p < 2**31:
                raise ValueError(f"prime modulus must satisfy 2 <= p < 2^31, got {p!r}")
            if not is_prime(p):
                raise ValueError(f"{p} is not prime")
        self.p = p

    # -- identity -----------------------------------------------------------

    @classmethod
    def rationals(cls) -> FieldSpec:
        return cls(None)

    @classmethod
    def gf(cls, p: int) -> FieldSpec:
        return cls(p)

    @classmethod
    def parse(cls, text: str) -> FieldSpec:
        """Parse ``Q`` or ``gf<p>`` / ``GF(p)`` (case-insensitive)."""
        t = text.strip().lower().replace(" ", "")
        if t in ("q", "qq", "rationals"):
            return cls(None)
        for prefix in ("gf(", "gf", "f"):
            if t.startswith(prefix):
                body = t[len(prefix):].rstrip(")")
                if body.isdigit():
                    return cls(int(body))
        raise ValueError(f"unrecognised field {text!r}; use Q or gf<p>")

    @classmethod
    def from_descriptor(cls, desc: dict) -> FieldSpec:
        kind = desc.get("kind")
        if kind == "Q":
            return cls(None)
        if kind == "GFp":
            return cls(int(desc["p"]))
        raise ValueError(f"unknown field kind {kind!r}")

    def descriptor(self) -> dict:
        return {"kind": "Q"} if self.p is None else {"kind": "GFp", "p": self.p}

    @property
    def is_finite(self) -> bool:
        return self.p is not None

    @property
    def order(self) -> int | None:
        return self.p

    @property
    def characteristic(self) -> int:
        return 0 if self.p is None else self.p

    def __eq__(self, other: object) -> bool:
        return isinstance(other, FieldSpec) and self.p == other.p

    def __hash__(self) -> int:
        return hash(("FieldSpec", self.p))

    def __repr__(self) -> str:
        return "FieldSpec(Q)" if self.p is None else f"FieldSpec(GF({self.p}))"

    def __str__(self) -> str:
        return "Q" if self.p is None else f"GF({self.p})"

    # -- raw arithmetic -----------------------------------------------------

    @property
    def zero(self) -> int:
        return 0

    @property
    def one(self) -> int:
        return 1

    def _q(self, v: Raw) -> Raw:
        # canonicalise a rational and enforce the magnitude bound
        if isinstance(v, Fraction):
            if v.denominator != 1:
                if v.numerator.bit_length() > MAX_BITS or v.denominator.bit_length() > MAX_BITS:
                    raise OverflowError(f"rational {v} exceeds {MAX_BITS}-bit bound")
                return v
            v = v.numerator
        if v.bit_length() > MAX_BITS:
            raise OverflowError(f"integer of {v.bit_length()} bits exceeds {MAX_BITS}-bit bound")
        return v

    def normalize(self, v: Raw) -> Raw:
        """Bring an arbitrary int/Fraction into canonical raw form."""
        if self.p is None:
            return self._q(v)
        if isinstance(v, Fraction):
            if v.denominator % self.p == 0:
                raise DivisionByZero(f"{v} has a denominator divisible by {self.p}")
            return v.numerator * pow(v.denominator, -1, self.p) % self.p
        return v % self.p

    def add(self, a: Raw, b: Raw) -> Raw:
        if self.p is None:
            return self._q(a + b)
        return (a + b) % self.p

    def sub(self, a: Raw, b: Raw) -> Raw:
        if self.p is None:
            return self._q(a - b)
        return (a - b) % self.p

    def mul(self, a: Raw, b: Raw) -> Raw:
        if self.p is None:
            return self._q(a * b)
        return a * b % self.p

    def neg(self, a: Raw) -> Raw:
        if self.p is None:
            return -a
        return -a % self.p

    def inv(self, a: Raw) -> Raw:
        if a == 0:
            raise DivisionByZero("inverse of zero")
        if self.p is None:
            return self._q(Fraction(1) / a) if isinstance(a, Fraction) else self._q(Fraction(1, a))
        return pow(a, -1, self.p)

    def div(self, a: Raw, b: Raw) -> Raw:
        return self.mul(a, self.inv(b))

    # -- conversions --------------------------------------------------------

    def from_int(self, n: int) -> Raw:
        return self.normalize(n)

    def coerce(self, v) -> Raw:
        """Accept int, Fraction, Scalar or scalar string."""
        if isinstance(v, Scalar):
            if v.field != self:
                raise FieldMismatch(f"{v.field} scalar used in {self}")
            return v.value
        if isinstance(v, str):
            return self.parse_scalar(v)
        if isinstance(v, bool) or not isinstance(v, (int, Fraction)):
            raise TypeError(f"cannot use {v!r} as a scalar")
        return self.normalize(v)

    def parse_scalar(self, text: str) -> Raw:
        """Parse ``"3"``, ``"-7"`` or ``"5/6"``; GF(p) values are reduced mod p."""
        t = text.strip()
        try:
            if "/" in t:
                num, den = t.split("/")
                value = Fraction(int(num), int(den))
            else:
                value = int(t)
        except (ValueError, ZeroDivisionError) as exc:
            raise ValueError(f"bad scalar {text!r}") from exc
        return self.normalize(value)

    def format(self, v: Raw) -> str:
        if isinstance(v, Fraction):
            return f"{v.numerator}/{v.denominator}"
        return str(v)

    def elements(self) -> Iterator[int]:
        if self.p is None:
            raise ValueError("Q has no finite element list")
        return iter(range(self.p))

    def scalar(self, v) -> Scalar:
        return Scalar(self, self.coerce(v))


Q = FieldSpec(None)


def GF(p: int) -> FieldSpec:
    return FieldSpec(p)


@dataclass(frozen=True)
class Scalar:
    """A field element bound to its field."""

    field: FieldSpec
    value: Raw

    def _other(self, other) -> Raw:
        if isinstance(other, Scalar):
            if other.field != self.field:
                raise FieldMismatch(f"{self.field} vs {other.field}")
            return other.value
        return self.field.coerce(other)

    def __add__(self, other) -> Scalar:
        return Scalar(self.field, self.field.add(self.value, self._other(other)))

    __radd__ = __add__

    def __sub__(self, other) -> Scalar:
        return Scalar(self.field, self.field.sub(self.value, self._other(other)))

    def __rsub__(self, other) -> Scalar:
        return Scalar(self.field, self.field.sub(self._other(other), self.value))

    def __mul__(self, other) -> Scalar:
        return Scalar(self.field, self.field.mul(self.value, self._other(other)))

    __rmul__ = __mul__

    def __truediv__(self, other) -> Scalar:
        return Scalar(self.field, self.field.div(self.value, self._other(other)))

    def __neg__(self) -> Scalar:
        return Scalar(self.field, self.field.neg(self.value))

    def __pow__(self, e: int) -> Scalar:
        if e < 0:
            return self.inverse() ** -e
        result, base = self.field.one, self.value
        while e:
            if e & 1:
                result = self.field.mul(result, base)
            base = self.field.mul(base, base)
            e >>= 1
        return Scalar(self.field, result)

    def inverse(self) -> Scalar:
        return Scalar(self.field, self.field.inv(self.value))

    def is_zero(self) -> bool:
        return self.value == 0

    def __bool__(self) -> bool:
        return self.value != 0

    def __str__(self) -> str:
        return self.field.format(self.value)

    def __repr__(self) -> str:
        return f"Scalar({self.field}, {self})"


def _same(a: Scalar, b: Scalar) -> FieldSpec:
    if a.field != b.field:
        raise FieldMismatch(f"{a.field} vs {b.field}")
    return a.field


def scalar_add(a: Scalar, b: Scalar) -> Scalar:
    f = _same(a, b)
    return Scalar(f, f.add(a.value, b.value))


def scalar_mul(a: Scalar, b: Scalar) -> Scalar:
    f = _same(a, b)
    return Scalar(f, f.mul(a.value, b.value))


def scalar_neg(a: Scalar) -> Scalar:
    return Scalar(a.field, a.field.neg(a.value))


def scalar_inv(a: Scalar) -> Scalar:
    return Scalar(a.field, a.field.inv(a.value))
