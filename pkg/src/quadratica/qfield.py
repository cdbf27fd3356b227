"""Exact arithmetic in quadratic extensions Q(sqrt(m)).

A :class:`QuadElem` is ``a + b*sqrt(m)`` with exact rational ``a``, ``b`` and a
squarefree integer radicand ``m`` (negative radicands give the imaginary
quadratic fields; ``m = -1`` is the Gaussian case). Values are immutable and
every operation is a pure function, so they are safe to share freely.

Canonical form: square factors are extracted from the radicand at
construction (``sqrt(12)`` becomes ``2*sqrt(3)``) and purely rational elements
carry the reserved radicand ``0``, so structural equality is exact value
equality. Elements of different fields may interact only when one of them is
rational; anything else raises :class:`~quadratica.errors.MixedRadicands`
rather than silently coercing.

The coordinate map ``a + b*sqrt(m) -> (a, b)`` is an additive bijection onto
K x K; it is *not* multiplicative (K x K has zero divisors while the field
does not), which is why :func:`qf_coords` documents itself as additive-only.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from .errors import DivisionByZero, MixedRadicands, PerfectSquareRadicand
from .intmath import squarefree_decompose

__all__ = [
    "BigRational",
    "QuadElem",
    "rational",
    "qf_make",
    "qf_arith",
    "qf_conj_norm",
    "qf_sqrt_solution",
    "qf_coords",
    "parse_quad",
    "rat_to_dict",
    "rat_from_dict",
]

# Exact arbitrary-precision rationals: stdlib Fraction already guarantees
# lowest terms, positive denominator, and 0 == 0/1.
BigRational = Fraction

RatLike = Union[int, Fraction, str]
Scalar = Union[int, Fraction]


def rational(x: RatLike) -> Fraction:
    """Coerce an int, Fraction, or 'p/q' string to an exact rational."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x)
    raise TypeError(f"not an exact rational: {x!r}")


def rat_to_dict(f: Fraction) -> dict:
    return {"num": f.numerator, "den": f.denominator}


def rat_from_dict(d: dict) -> Fraction:
    return Fraction(d["num"], d["den"])


@dataclass(frozen=True, eq=False)
class QuadElem:
    """Element a + b*sqrt(m) of Q(sqrt(m)), canonicalized at construction."""

    a: Fraction
    b: Fraction
    m: int

    def __post_init__(self):
        a = rational(self.a)
        b = rational(self.b)
        m = self.m
        if b == 0 or m == 0:
            a, b, m = a, Fraction(0), 0
        else:
            s, m0 = squarefree_decompose(m)
            if m0 == 1:
                # b*sqrt(s^2) is rational: fold it into the rational part
                a, b, m = a + b * s, Fraction(0), 0
            else:
                b, m = b * s, m0
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)
        object.__setattr__(self, "m", m)

    # -- constructors -------------------------------------------------

    @classmethod
    def from_rational(cls, x: RatLike) -> "QuadElem":
        return cls(rational(x), Fraction(0), 0)

    # -- structure ----------------------------------------------------

    @property
    def is_rational(self) -> bool:
        return self.b == 0

    def as_fraction(self) -> Fraction:
        if not self.is_rational:
            raise ValueError(f"{self} is irrational")
        return self.a

    def coords(self) -> tuple[Fraction, Fraction]:
        return (self.a, self.b)

    def conj(self) -> "QuadElem":
        return QuadElem(self.a, -self.b, self.m)

    def norm(self) -> Fraction:
        """Field norm a^2 - m*b^2; always rational and multiplicative."""
        return self.a * self.a - self.m * self.b * self.b

    def _common_radicand(self, other: "QuadElem") -> int:
        if self.m == 0:
            return other.m
        if other.m == 0 or other.m == self.m:
            return self.m
        raise MixedRadicands(f"cannot combine sqrt({self.m}) with sqrt({other.m})")

    def _coerce(self, other) -> "QuadElem":
        if isinstance(other, QuadElem):
            return other
        if isinstance(other, (int, Fraction)):
            return QuadElem.from_rational(other)
        return NotImplemented

    # -- ring operations ----------------------------------------------

    def __add__(self, other):
        w = self._coerce(other)
        if w is NotImplemented:
            return NotImplemented
        m = self._common_radicand(w)
        return QuadElem(self.a + w.a, self.b + w.b, m)

    __radd__ = __add__

    def __sub__(self, other):
        w = self._coerce(other)
        if w is NotImplemented:
            return NotImplemented
        m = self._common_radicand(w)
        return QuadElem(self.a - w.a, self.b - w.b, m)

    def __rsub__(self, other):
        return (-self).__add__(other)

    def __mul__(self, other):
        w = self._coerce(other)
        if w is NotImplemented:
            return NotImplemented
        m = self._common_radicand(w)
        return QuadElem(
            self.a * w.a + self.b * w.b * m,
            self.a * w.b + self.b * w.a,
            m,
        )

    __rmul__ = __mul__

    def inverse(self) -> "QuadElem":
        if not self:
            raise DivisionByZero("zero element has no inverse")
        n = self.norm()
        # norm vanishes only at zero: m squarefree != 1 is never a rational square
        return QuadElem(self.a / n, -self.b / n, self.m)

    def __truediv__(self, other):
        w = self._coerce(other)
        if w is NotImplemented:
            return NotImplemented
        return self * w.inverse()

    def __rtruediv__(self, other):
        w = self._coerce(other)
        if w is NotImplemented:
            return NotImplemented
        return w * self.inverse()

    def __neg__(self):
        return QuadElem(-self.a, -self.b, self.m)

    def __pow__(self, n: int) -> "QuadElem":
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return self.inverse() ** (-n)
        result = QuadElem.from_rational(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    # -- comparisons / embeddings ---------------------------------------

    def __eq__(self, other):
        w = self._coerce(other)
        if w is NotImplemented:
            return NotImplemented
        return self.a == w.a and self.b == w.b and self.m == w.m

    def __hash__(self):
        if self.is_rational:
            return hash(self.a)
        return hash((self.a, self.b, self.m))

    def __bool__(self):
        return self.a != 0 or self.b != 0

    def __float__(self) -> float:
        if self.m < 0 and self.b != 0:
            raise ValueError(f"{self} is not real; use complex()")
        return float(self.a) + float(self.b) * math.sqrt(self.m)

    def __complex__(self) -> complex:
        if self.m >= 0:
            return complex(float(self))
        return complex(float(self.a), float(self.b) * math.sqrt(-self.m))

    # -- rendering ------------------------------------------------------

    def __str__(self) -> str:
        if self.b == 0:
            return str(self.a)
        mag = abs(self.b)
        coef = "" if mag == 1 else str(mag)
        radical = f"{coef}√{self.m}"
        if self.a == 0:
            return radical if self.b > 0 else f"-{radical}"
        sign = "+" if self.b > 0 else "-"
        return f"{self.a} {sign} {radical}"

    def __repr__(self) -> str:
        return f"QuadElem({self.a}, {self.b}, {self.m})"

    def to_dict(self) -> dict:
        return {"a": rat_to_dict(self.a), "b": rat_to_dict(self.b), "m": self.m}

    @classmethod
    def from_dict(cls, d: dict) -> "QuadElem":
        return cls(rat_from_dict(d["a"]), rat_from_dict(d["b"]), d["m"])


# ----------------------------------------------------------------------
# module-level operations
# ----------------------------------------------------------------------


def qf_make(a: RatLike, b: RatLike, m: int) -> QuadElem:
    """Build a + b*sqrt(m), extracting square factors so the radicand is squarefree.

    Raises PerfectSquareRadicand when m is 0, 1, or a perfect square: then
    x^2 = m already has a rational solution and the extension is degenerate.
    """
    if m == 0 or m == 1:
        raise PerfectSquareRadicand(f"radicand {m} generates no extension")
    _, m0 = squarefree_decompose(m)
    if m0 == 1:
        raise PerfectSquareRadicand(f"{m} is a perfect square; sqrt({m}) is already rational")
    return QuadElem(rational(a), rational(b), m)


def qf_arith(op: str, z: QuadElem, w: QuadElem) -> QuadElem:
    """Dispatch {add, sub, mul, div} over operator arithmetic (CLI surface)."""
    if op == "add":
        return z + w
    if op == "sub":
        return z - w
    if op == "mul":
        return z * w
    if op == "div":
        return z / w
    raise ValueError(f"unknown operation {op!r}")


def qf_conj_norm(z: QuadElem) -> tuple[QuadElem, Fraction]:
    """Conjugate a - b*sqrt(m) and the rational norm z * conj(z)."""
    zbar = z.conj()
    return zbar, z.norm()


def qf_sqrt_solution(m: int) -> tuple[QuadElem, QuadElem]:
    """The two solutions +/- sqrt(m) of x^2 = m inside Q(sqrt(m))."""
    root = qf_make(0, 1, m)
    return root, -root


def qf_coords(z: QuadElem) -> tuple[Fraction, Fraction]:
    """Coordinates (a, b) of z = a + b*sqrt(m): an additive bijection onto K x K.

    Additive only: coords of a product are not the componentwise product
    (K x K has zero divisors), so this is not a ring isomorphism.
    """
    return z.coords()


# ----------------------------------------------------------------------
# text round-trip
# ----------------------------------------------------------------------

_RAT = r"-?\d+(?:/\d+)?"
_QUAD_RE = re.compile(
    rf"^\s*(?:(?P<a>{_RAT})\s*(?P<op>[+-])\s*|(?P<bsign>-)\s*)?"
    rf"(?P<coef>\d+(?:/\d+)?)?\s*√\s*(?P<m>-?\d+)\s*$"
)


def parse_quad(text: str) -> QuadElem:
    """Parse the canonical rendering 'a + b√m' (or a bare rational) bit-exactly."""
    text = text.strip()
    if "√" not in text:
        return QuadElem.from_rational(Fraction(text))
    match = _QUAD_RE.match(text)
    if not match:
        raise ValueError(f"not a quadratic-field literal: {text!r}")
    a = Fraction(match.group("a")) if match.group("a") else Fraction(0)
    b = Fraction(match.group("coef")) if match.group("coef") else Fraction(1)
    if match.group("op") == "-" or match.group("bsign"):
        b = -b
    return QuadElem(a, b, int(match.group("m")))
