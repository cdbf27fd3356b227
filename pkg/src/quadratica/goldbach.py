"""Goldbach witnesses: N = (M + I) + (M - I) with both halves prime.

For odd p, q the half-sum M = (p+q)/2 and half-difference I = (p-q)/2 always
have opposite parity (four-case 4k +/- 1 check in :func:`parity_lemma`), so
the witness search for an even N walks I over the parity class opposite M.
The search returns the minimal I; the full witness list is available from
:func:`witnesses`. Each witness pair roots the parabola
x^2 - (p+q)x + pq whose vertex sits at (M, -I^2), giving the exact area
bundle A_s = (4/3)I^3, A_r = 2I^3, A_t = I^3.

Primality below the sieve limit is an array lookup; above it, the
congruence module's deterministic Miller-Rabin takes over. Range
verification partitions the interval into chunks processed by a process
pool (capped by the QUADRATICA_THREADS environment variable) and merges
results in N order.
"""

from __future__ import annotations

import csv
import enum
import multiprocessing
import os
import time
from dataclasses import dataclass
from fractions import Fraction
from math import gcd, isqrt
from typing import Iterator, Optional

from .errors import EvenInput, InvalidPair, NoWitnessFound, NotCoprime
from .intmath import is_prime, sieve_flags
from .solver import Quadratic, solve

__all__ = [
    "parity_lemma",
    "GoldbachWitness",
    "find_witness",
    "witnesses",
    "WitnessParabola",
    "witness_parabola",
    "AreaReport",
    "witness_areas",
    "HypClass",
    "hypotenuse_number",
    "VerifySummary",
    "verify_range",
    "default_workers",
]

_DEFAULT_SIEVE_LIMIT = 1_000_000 + 10_000  # verification ceiling plus buffer

_sieve: bytearray = bytearray()


def _ensure_sieve(limit: int) -> bytearray:
    global _sieve
    if len(_sieve) <= limit:
        _sieve = sieve_flags(max(limit, _DEFAULT_SIEVE_LIMIT))
    return _sieve


def _is_prime_cached(n: int) -> bool:
    if n < len(_sieve):
        return bool(_sieve[n])
    return is_prime(n)


def parity_lemma(p: int, q: int) -> tuple[str, str]:
    """Parities of (p+q)/2 and (p-q)/2 for odd p, q; always opposite.

    Checked through the four-way 4k+1 / 4k-1 decomposition rather than a
    single mod-4 shortcut, mirroring the case analysis that proves it.
    """
    if p % 2 == 0 or q % 2 == 0:
        raise EvenInput("both inputs must be odd")
    m = (p + q) // 2
    i = abs(p - q) // 2
    # four-case decomposition: each odd number is 4k+1 or 4v-1, never both.
    # Mixed classes make M = 2(k+v) even and I odd; matching classes make
    # M odd and I = 2(k-v) even.
    mixed = (p % 4) != (q % 4)
    if (m % 2 == 0) != mixed or (m % 2) == (i % 2):
        raise AssertionError("parity lemma violated")  # pragma: no cover

    def parity(x: int) -> str:
        return "even" if x % 2 == 0 else "odd"

    return parity(m), parity(i)


@dataclass(frozen=True)
class GoldbachWitness:
    """N = p + q with p = M + I, q = M - I both prime."""

    N: int
    M: int
    I: int
    p: int
    q: int

    @property
    def uses_even_prime(self) -> bool:
        # N = 4 decomposes only as 2 + 2, outside the odd-prime setting
        return self.q == 2

    def __post_init__(self):
        if self.p + self.q != self.N or self.p != self.M + self.I or self.q != self.M - self.I:
            raise AssertionError("witness bookkeeping violated")  # pragma: no cover


def _witness_iter(n: int, flags: bytearray) -> Iterator[GoldbachWitness]:
    m = n // 2
    if flags[m]:
        yield GoldbachWitness(N=n, M=m, I=0, p=m, q=m)
    start = 1 if m % 2 == 0 else 2
    for i in range(start, m - 1, 2):
        if flags[m + i] and flags[m - i]:
            yield GoldbachWitness(N=n, M=m, I=i, p=m + i, q=m - i)


def find_witness(n: int, sieve: Optional[bytearray] = None) -> GoldbachWitness:
    """Minimal-I witness for even n >= 4.

    I = 0 is allowed when M itself is prime (covering n = 4 as 2 + 2, the
    one decomposition that leaves the odd-prime setting); otherwise I runs
    over the parity class opposite M. Exhausting I < M raises
    NoWitnessFound, which would be a Goldbach counterexample and is worth
    shouting about.
    """
    if n < 4 or n % 2:
        raise ValueError(f"witness targets are even n >= 4, got {n}")
    flags = sieve if sieve is not None else _ensure_sieve(n)
    for witness in _witness_iter(n, flags):
        return witness
    raise NoWitnessFound(f"no witness below M for N={n}: Goldbach counterexample?")


def witnesses(n: int, sieve: Optional[bytearray] = None) -> list[GoldbachWitness]:
    """Every witness of n in increasing I order."""
    if n < 4 or n % 2:
        raise ValueError(f"witness targets are even n >= 4, got {n}")
    flags = sieve if sieve is not None else _ensure_sieve(n)
    return list(_witness_iter(n, flags))


@dataclass(frozen=True)
class WitnessParabola:
    p: int
    q: int
    quadratic: Quadratic
    vertex_x: Fraction
    vertex_y: Fraction


def witness_parabola(p: int, q: int) -> WitnessParabola:
    """x^2 - (p+q)x + pq for odd primes p >= q: roots p, q; vertex (M, -I^2)."""
    if p < q or p % 2 == 0 or q % 2 == 0 or not (is_prime(p) and is_prime(q)):
        raise InvalidPair(f"need odd primes p >= q, got ({p}, {q})")
    quadratic = Quadratic(1, -(p + q), p * q)
    pair = solve(quadratic)
    if {pair.r1.as_fraction(), pair.r2.as_fraction()} != {Fraction(p), Fraction(q)}:
        raise AssertionError("roots must be the witness primes")  # pragma: no cover
    m = Fraction(p + q, 2)
    i = Fraction(p - q, 2)
    if quadratic(m) != -(i * i):
        raise AssertionError("vertex value must be -I^2")  # pragma: no cover
    return WitnessParabola(p=p, q=q, quadratic=quadratic, vertex_x=m, vertex_y=-(i * i))


@dataclass(frozen=True)
class AreaReport:
    p: int
    q: int
    I: int
    parabola_area: Fraction  # between the x-axis and the parabola on [q, p]
    rectangle_area: Fraction  # (p - q) by I^2
    triangle_area: Fraction  # half the rectangle
    leading_segment: Fraction  # integral of the parabola over [0, q]


def witness_areas(p: int, q: int) -> AreaReport:
    """Exact area bundle of the witness parabola for p > q.

    A_s = (p-q)^3/6 = (4/3) I^3 by antiderivative, A_r = (p-q) I^2 = 2 I^3,
    A_t = A_r/2 = I^3, and the leading segment over [0, q] is q^2 (3p - q)/6.
    The ratio identities A_r/A_s = 3/2, A_r/A_t = 2, A_s/A_t = 4/3 are
    asserted before returning.
    """
    if p <= q:
        raise InvalidPair(f"need p > q, got ({p}, {q})")
    parab = witness_parabola(p, q)  # validates primality/oddness
    i = (p - q) // 2
    i3 = Fraction(i) ** 3

    def antiderivative(x: Fraction) -> Fraction:
        # integral of -(x - p)(x - q) = -x^2 + (p+q)x - pq
        return -(x**3) / 3 + Fraction(p + q, 2) * x**2 - p * q * x

    a_s = antiderivative(Fraction(p)) - antiderivative(Fraction(q))
    a_r = Fraction((p - q) * i * i)
    a_t = a_r / 2
    segment = Fraction(q * q * (3 * p - q), 6)

    if a_s != Fraction((p - q) ** 3, 6) or a_s != Fraction(4, 3) * i3:
        raise AssertionError("parabola area violated")  # pragma: no cover
    if a_r != 2 * i3 or a_t != i3:
        raise AssertionError("rectangle/triangle area violated")  # pragma: no cover
    if (a_r / a_s, a_r / a_t, a_s / a_t) != (Fraction(3, 2), Fraction(2), Fraction(4, 3)):
        raise AssertionError("area ratios violated")  # pragma: no cover
    x0 = Fraction(0)
    xq = Fraction(q)
    if (-(antiderivative(xq) - antiderivative(x0))) != segment:
        raise AssertionError("leading segment violated")  # pragma: no cover
    return AreaReport(
        p=p, q=q, I=i,
        parabola_area=a_s,
        rectangle_area=a_r,
        triangle_area=a_t,
        leading_segment=segment,
    )


class HypClass(str, enum.Enum):
    PRIME = "Prime"
    PRIME_SQUARE = "PrimeSquare"
    COMPOSITE = "Composite"


def hypotenuse_number(n: int, i: int, l: int = 1) -> tuple[int, HypClass]:
    """H = (2n)^(2l) + I^(2l) from the legs of a witness triangle.

    Needs gcd(2n, I) = 1. Asserts the quotient identity
    ((p+q)^(2l) + (p-q)^(2l)) / 2^(2l) = (2n)^(2l) + I^(2l) with p = 2n + I,
    q = 2n - I, then classifies H as prime, prime square, or composite.
    """
    if l < 1:
        raise ValueError("exponent l must be >= 1")
    if gcd(2 * n, i) != 1:
        raise NotCoprime(f"gcd(2n, I) must be 1, got gcd({2 * n}, {i})")
    h = (2 * n) ** (2 * l) + i ** (2 * l)
    p, q = 2 * n + i, 2 * n - i
    if ((p + q) ** (2 * l) + (p - q) ** (2 * l)) != h * 2 ** (2 * l):
        raise AssertionError("quotient identity violated")  # pragma: no cover
    if is_prime(h):
        return h, HypClass.PRIME
    r = isqrt(h)
    if r * r == h and is_prime(r):
        return h, HypClass.PRIME_SQUARE
    return h, HypClass.COMPOSITE


# ----------------------------------------------------------------------
# range verification
# ----------------------------------------------------------------------


@dataclass(frozen=True)
class VerifySummary:
    start: int
    stop: int
    count: int
    max_i: int
    n_at_max_i: int
    elapsed: float
    csv_path: Optional[str] = None


def default_workers() -> int:
    """Worker count: CPU count capped by QUADRATICA_THREADS when set."""
    workers = os.cpu_count() or 1
    cap = os.environ.get("QUADRATICA_THREADS")
    if cap:
        try:
            workers = max(1, min(workers, int(cap)))
        except ValueError:
            pass
    return workers


def _scan_chunk(bounds: tuple[int, int]) -> list[tuple[int, int, int, int]]:
    lo, hi = bounds
    flags = _ensure_sieve(hi)
    out = []
    for n in range(lo, hi + 1, 2):
        w = find_witness(n, flags)
        out.append((n, w.I, w.p, w.q))
    return out


def verify_range(
    stop: int,
    start: int = 4,
    workers: Optional[int] = None,
    csv_path: Optional[str] = None,
    chunk: int = 50_000,
) -> VerifySummary:
    """Find the minimal-I witness for every even N in [start, stop].

    The sieve is built once in the parent and shared read-only with the
    workers (fork); chunks come back in deterministic N order. When
    csv_path is given, rows N, I_min, p, q are written for the whole range
    so the minimal-I distribution can be inspected offline. Raises
    NoWitnessFound if any N fails, i.e. never.
    """
    if start % 2:
        start += 1
    start = max(start, 4)
    if stop < start:
        raise ValueError("empty range")
    t0 = time.perf_counter()
    _ensure_sieve(stop)
    bounds = []
    lo = start
    while lo <= stop:
        hi = min(lo + chunk - 2, stop)
        bounds.append((lo, hi))
        lo = hi + 2
    workers = workers if workers is not None else default_workers()
    if workers > 1 and len(bounds) > 1 and multiprocessing.get_start_method(allow_none=False) == "fork":
        with multiprocessing.Pool(processes=workers) as pool:
            chunks = pool.map(_scan_chunk, bounds)
    else:
        chunks = [_scan_chunk(b) for b in bounds]

    count = 0
    max_i = -1
    n_at_max = 0
    writer = None
    handle = None
    if csv_path:
        handle = open(csv_path, "w", newline="")
        writer = csv.writer(handle)
        writer.writerow(["N", "I_min", "p", "q"])
    try:
        for rows in chunks:
            for n, i, p, q in rows:
                count += 1
                if i > max_i:
                    max_i, n_at_max = i, n
                if writer:
                    writer.writerow([n, i, p, q])
    finally:
        if handle:
            handle.close()
    return VerifySummary(
        start=start,
        stop=stop,
        count=count,
        max_i=max_i,
        n_at_max_i=n_at_max,
        elapsed=time.perf_counter() - t0,
        csv_path=csv_path,
    )
