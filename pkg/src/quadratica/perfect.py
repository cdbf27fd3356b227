"""The parabola f(x) = 2x^2 + 3x + 1 and even perfect numbers.

Every even perfect number 2^(p-1) * (2^p - 1) equals f(2^(p-1) - 1), so the
parabola "contains" the even perfect numbers; :func:`preimage` inverts it on
integers via the exact square test on 1 + 8P. Mersenne primality runs through
Lucas-Lehmer. The same module carries the parity-swap maps, the
arithmetic-series closed forms with the odd-square mod-8 corollary, the
sum-of-squares bridge, and the parabola's chord/axis areas (all areas by
exact antiderivative, never quadrature).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import isqrt
from typing import Iterable, Optional

from .errors import EmptyInterval, ZeroDifference
from .intmath import is_prime
from .qfield import RatLike, rational

__all__ = [
    "parabola",
    "half_map",
    "even_preserving_map",
    "difference_identity",
    "PerfectRecord",
    "lucas_lehmer",
    "perfect_from_exponent",
    "preimage",
    "parity_map",
    "SeriesSpec",
    "series_closed_forms",
    "BridgeReport",
    "sum_squares_bridge",
    "integral",
    "ChordReport",
    "chord_geometry",
    "divisor_sum_is_perfect",
]


def parabola(x):
    """2x^2 + 3x + 1 = (x+1)(2x+1), exact on ints/Fractions/QuadElems, float on floats.

    Substituting x -> 2x + 1 into the triangular-number map (x^2 + x)/2
    produces exactly this parabola, which is why it passes through every even
    perfect number.
    """
    return 2 * x * x + 3 * x + 1


def half_map(x):
    """(x^2 + x)/2: the n-th triangular number at integer x."""
    if isinstance(x, int):
        return (x * x + x) // 2
    return (x * x + x) / 2


def even_preserving_map(x):
    """h(x) = 2x^2 + x: parity-preserving companion of the parabola."""
    return 2 * x * x + x


def difference_identity(a, b) -> bool:
    """f(a) - f(b) == (a - b)*(2a + 2b + 3), exactly."""
    return parabola(a) - parabola(b) == (a - b) * (2 * a + 2 * b + 3)


@dataclass(frozen=True)
class PerfectRecord:
    """2^(p-1) * (2^p - 1) together with its parabola preimage x1 = 2^(p-1) - 1."""

    exponent: int
    mersenne: int
    value: int
    x1: int
    is_perfect: bool

    @property
    def x2(self) -> Fraction:
        return -Fraction(3 + 2 * self.x1, 2)


def lucas_lehmer(p: int) -> bool:
    """Primality of 2^p - 1. Requires prime p; p = 2 is handled directly."""
    if not is_prime(p):
        return False
    if p == 2:
        return True
    m = (1 << p) - 1
    s = 4
    for _ in range(p - 2):
        s = (s * s - 2) % m
    return s == 0


def perfect_from_exponent(p: int) -> PerfectRecord:
    """Build the record for exponent p >= 2; perfect iff 2^p - 1 is prime.

    Composite Mersenne numbers are fine (p = 11 gives 2096128 with
    is_perfect False); the 8P + 1 = (2^(p+1) - 1)^2 and f(x1) = P invariants
    are asserted on the way out.
    """
    if p < 2:
        raise ValueError("exponent must be >= 2")
    mersenne = (1 << p) - 1
    value = (1 << (p - 1)) * mersenne
    x1 = (1 << (p - 1)) - 1
    if parabola(x1) != value or 8 * value + 1 != ((1 << (p + 1)) - 1) ** 2:
        raise AssertionError("parabola identities violated")  # pragma: no cover
    return PerfectRecord(
        exponent=p,
        mersenne=mersenne,
        value=value,
        x1=x1,
        is_perfect=lucas_lehmer(p),
    )


def preimage(value: int) -> Optional[tuple[int, Fraction]]:
    """Invert the parabola on integers: x1 = (-3 + sqrt(1 + 8P))/4 if integral.

    Returns (x1, x2) with x2 = -(3 + 2*x1)/2 exact, or None when 1 + 8P is
    not a perfect square or the root does not land on an integer. The
    round-trip P = ((4*x1 + 3)^2 - 1)/8 is asserted.
    """
    if value < 1:
        raise ValueError("preimage target must be >= 1")
    disc = 1 + 8 * value
    root = isqrt(disc)
    if root * root != disc or (root - 3) % 4 != 0:
        return None
    x1 = (root - 3) // 4
    if ((4 * x1 + 3) ** 2 - 1) // 8 != value:
        raise AssertionError("preimage round-trip failed")  # pragma: no cover
    return x1, -Fraction(3 + 2 * x1, 2)


def parity_map(which: str, n: int) -> int:
    """Evaluate f (parity-flipping) or h (parity-preserving) at an integer.

    The parity contract is asserted: f(odd) is even, f(even) is odd, while
    h never changes parity.
    """
    if which == "f":
        out = parabola(n)
        if out % 2 == n % 2:
            raise AssertionError("f must flip parity")  # pragma: no cover
        return out
    if which == "h":
        out = even_preserving_map(n)
        if out % 2 != n % 2:
            raise AssertionError("h must preserve parity")  # pragma: no cover
        return out
    raise ValueError("map must be 'f' or 'h'")


@dataclass(frozen=True)
class SeriesSpec:
    """Arithmetic series b + (b+d) + ... with n terms."""

    b: Fraction
    d: Fraction
    n: int

    def __post_init__(self):
        object.__setattr__(self, "b", rational(self.b))
        object.__setattr__(self, "d", rational(self.d))
        if self.n < 1:
            raise ValueError("series needs at least one term")

    def direct_sum(self) -> Fraction:
        return sum((self.b + k * self.d for k in range(self.n)), Fraction(0))


def series_closed_forms(spec: SeriesSpec) -> tuple[Fraction, Fraction]:
    """Both closed forms of the arithmetic series, checked against direct summation.

    sum   = (d*n^2 + (2b - d)*n) / 2
    square_form = ((2dn + 2b - d)^2 - (2b - d)^2) / (8d)

    With b = d = 1 the square form reads ((2n+1)^2 - 1)/8, which is why an
    odd square is always 1 mod 8 (and so never a perfect number).
    """
    b, d, n = spec.b, spec.d, spec.n
    if d == 0:
        raise ZeroDifference("square form needs d != 0")
    plain = (d * n * n + (2 * b - d) * n) / 2
    square_form = ((2 * d * n + 2 * b - d) ** 2 - (2 * b - d) ** 2) / (8 * d)
    if plain != square_form or plain != spec.direct_sum():
        raise AssertionError("closed forms disagree")  # pragma: no cover
    return plain, square_form


@dataclass(frozen=True)
class BridgeReport:
    n: int
    sum_of_squares: int
    f_n: int  # (n+1)(2n+1)
    identity_ok: bool  # 6 * sum == n * f(n)
    ratio_bound_ok: Optional[bool]  # |f(n)/n^2 - 2| < 3.1/n, meaningful for n >= 11
    records_ok: bool  # x1 == floor(sqrt(P/2)) == floor(sqrt((2^(p+1)-1)^2 - 1))/4 per record


def sum_squares_bridge(n: int, records: Iterable[PerfectRecord] = ()) -> BridgeReport:
    """Tie the sum of squares to the asymptotic size of perfect numbers.

    Verifies sum_{i=1}^{n} i^2 = n(n+1)(2n+1)/6 by direct accumulation, the
    identity 6*sum = n*(n+1)*(2n+1), the tail bound |f(n)/n^2 - 2| < 3.1/n
    (which holds from n = 11 on; None below), and for each supplied record
    that x1 = floor(sqrt(P/2)), also reachable as floor(sqrt((2^(p+1)-1)^2 - 1))//4.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    total = sum(i * i for i in range(1, n + 1))
    if 6 * total != n * (n + 1) * (2 * n + 1):
        raise AssertionError("sum of squares formula violated")  # pragma: no cover
    f_n = (n + 1) * (2 * n + 1)
    ratio_ok = None
    if n >= 11:
        ratio_ok = abs(Fraction(f_n, n * n) - 2) < Fraction(31, 10) / n
    records_ok = True
    for rec in records:
        floor_a = isqrt(rec.value // 2)
        floor_b = isqrt(((1 << (rec.exponent + 1)) - 1) ** 2 - 1) // 4
        records_ok = records_ok and floor_a == rec.x1 == floor_b
    return BridgeReport(
        n=n,
        sum_of_squares=total,
        f_n=f_n,
        identity_ok=True,
        ratio_bound_ok=ratio_ok,
        records_ok=records_ok,
    )


def _antiderivative(x: Fraction) -> Fraction:
    """Exact antiderivative (2/3)x^3 + (3/2)x^2 + x of the parabola."""
    return Fraction(2, 3) * x**3 + Fraction(3, 2) * x**2 + x


def integral(a: RatLike, b: RatLike) -> Fraction:
    """Exact signed integral of the parabola over [a, b]."""
    a, b = rational(a), rational(b)
    return _antiderivative(b) - _antiderivative(a)


@dataclass(frozen=True)
class ChordReport:
    a: Fraction
    b: Fraction
    slope: Fraction  # 2a + 2b + 3
    intercept: Fraction  # 1 - 2ab
    trapezoid_area: Fraction  # chord integral (b-a)/2 * (f(a) + f(b))
    parabola_integral: Fraction
    chord_area: Fraction  # between chord and parabola: (b-a)^3 / 3
    axis_area: Fraction  # |integral of f| over [a, b]


def chord_geometry(a: RatLike, b: RatLike) -> ChordReport:
    """Exact secant-line and area geometry of the parabola over [a, b], a < b.

    The secant through (a, f(a)) and (b, f(b)) has slope 2a + 2b + 3 and
    intercept 1 - 2ab; the region between it and the parabola has area
    (b - a)^3 / 3, verified here as trapezoid minus integral. The integral
    itself is checked against the expanded combination
    (b-a)/6 * (2f(a) + 2f(b) + 4ab + 3a + 3b + 2). Over the root gap
    [-1, -1/2] the axis area is 1/24, over [-1/2, 0] it is 5/24 (they sum
    to 1/4).
    """
    a, b = rational(a), rational(b)
    if a >= b:
        raise EmptyInterval("need a < b")
    fa, fb = parabola(a), parabola(b)
    slope = 2 * a + 2 * b + 3
    intercept = 1 - 2 * a * b
    if slope * a + intercept != fa or slope * b + intercept != fb:
        raise AssertionError("secant line misses the parabola")  # pragma: no cover
    trapezoid = (b - a) / 2 * (fa + fb)
    area = integral(a, b)
    combo = (b - a) / 6 * (2 * fa + 2 * fb + 4 * a * b + 3 * a + 3 * b + 2)
    if combo != area:
        raise AssertionError("integral combination violated")  # pragma: no cover
    chord_area = trapezoid - area
    if chord_area != (b - a) ** 3 / 3:
        raise AssertionError("chord area violated")  # pragma: no cover
    return ChordReport(
        a=a,
        b=b,
        slope=slope,
        intercept=intercept,
        trapezoid_area=trapezoid,
        parabola_integral=area,
        chord_area=chord_area,
        axis_area=abs(area),
    )


def divisor_sum_is_perfect(n: int) -> bool:
    """Direct proper-divisor-sum perfection test (oracle for small n)."""
    if n < 2:
        return False
    total = 1
    for d in range(2, isqrt(n) + 1):
        if n % d == 0:
            total += d
            other = n // d
            if other != d:
                total += other
    return total == n
