"""The four unit-coefficient quadratics x^2 = +/-x +/- 1 and their structure.

Case I   x^2 =  x + 1   golden ratio; powers reduce along the Fibonacci numbers
Case II  x^2 = -x + 1   sign-alternating Fibonacci reduction
Case III x^2 =  x - 1   primitive 6th roots of unity in Q(sqrt(-3))
Case IV  x^2 = -x - 1   primitive cube roots of unity in Q(sqrt(-3))

Fibonacci indexing note: fib() uses the seeds f0 = f1 = 1 (so the sequence
reads 1, 1, 2, 3, 5, 8, 13, ...). Under those seeds the power reduction is
x^n = fib(n-1)*x + fib(n-2), i.e. phi^5 = 5*phi + 3. All complex-case
arithmetic runs exactly in Q(sqrt(-3)); nothing here touches floats except
the explicitly numeric geometric-sum checks.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction

from .errors import NegativeIndex, UnitRatio
from .qfield import QuadElem

__all__ = [
    "Case",
    "case_root",
    "FibPair",
    "UnitGroup",
    "fib",
    "power_reduce",
    "partial_power_sum",
    "closed_power_sum",
    "residue_power_sum",
    "unit_group",
    "multiplication_table",
    "geometric_sum_check",
    "cubic_root_sum_check",
    "PHI",
    "PHI_BAR",
]


class Case(str, enum.Enum):
    I = "I"
    II = "II"
    III = "III"
    IV = "IV"


# x^2 = c1*x + c0 per case
_COEFFS = {
    Case.I: (1, 1),
    Case.II: (-1, 1),
    Case.III: (1, -1),
    Case.IV: (-1, -1),
}


def case_root(case: Case) -> QuadElem:
    """The + branch root (c1 + sqrt(c1^2 + 4*c0)) / 2 of the case's equation."""
    c1, c0 = _COEFFS[case]
    return QuadElem(Fraction(c1, 2), Fraction(1, 2), c1 * c1 + 4 * c0)


PHI = case_root(Case.I)
PHI_BAR = PHI.conj()


def fib(n: int) -> int:
    """Fibonacci numbers with seeds f0 = f1 = 1: 1, 1, 2, 3, 5, 8, 13, ..."""
    if n < 0:
        raise NegativeIndex(f"fib index must be >= 0, got {n}")
    a, b = 1, 1
    for _ in range(n):
        a, b = b, a + b
    return a


def _fib_std(n: int) -> int:
    """Zero-based variant F(0)=0, F(1)=1 used by the power-reduction identities."""
    if n == 0:
        return 0
    return fib(n - 1)


@dataclass(frozen=True)
class FibPair:
    """Integers (coeff, const) with x^n = coeff*x + const for the case's roots."""

    coeff: int
    const: int


def power_reduce(case: Case, n: int) -> FibPair:
    """Reduce x^n to coeff*x + const for Case I or II.

    Case I:  x^n = F(n)*x + F(n-1)
    Case II: x^n = (-1)^(n+1)*F(n)*x + (-1)^n*F(n-1)
    with F the zero-based Fibonacci numbers. Both case roots satisfy the
    returned pair (verify by exact exponentiation of the QuadElem root).
    """
    case = Case(case)
    if n < 1:
        raise NegativeIndex(f"power index must be >= 1, got {n}")
    if case not in (Case.I, Case.II):
        raise ValueError("power reduction applies to Cases I and II only")
    f_n = _fib_std(n)
    f_n1 = _fib_std(n - 1)
    if case is Case.I:
        return FibPair(f_n, f_n1)
    sign = 1 if n % 2 else -1
    return FibPair(sign * f_n, -sign * f_n1)


def partial_power_sum(case: Case, n: int) -> QuadElem:
    """Sum_{k=1}^{n} x^k for the case's + root, by exact accumulation."""
    case = Case(case)
    if n < 1:
        raise NegativeIndex(f"sum bound must be >= 1, got {n}")
    x = case_root(case)
    total = QuadElem.from_rational(0)
    power = QuadElem.from_rational(1)
    for _ in range(n):
        power = power * x
        total = total + power
    return total


def closed_power_sum(case: Case, n: int, x: QuadElem | None = None) -> QuadElem:
    """The closed form for Sum_{k=1}^{n} x^k attached to each case.

    Case I:   x^(n+2) - x^2          (valid for roots of x^2 = x + 1)
    Case II:  (x + 1) * (1 - x^n)
    Case III: (x^n - 1) / x
    Case IV:  x * (x^n - 1) / (x - 1)
    """
    case = Case(case)
    if x is None:
        x = case_root(case)
    if case is Case.I:
        return x ** (n + 2) - x * x
    if case is Case.II:
        return (x + 1) * (1 - x**n)
    if case is Case.III:
        return (x**n - 1) / x
    return x * (x**n - 1) / (x - 1)


def residue_power_sum(case: Case, n: int) -> QuadElem:
    """Partial sums of Cases III/IV read off the residue of n (period 6 resp. 3)."""
    case = Case(case)
    x = case_root(case)
    one = QuadElem.from_rational(1)
    zero = QuadElem.from_rational(0)
    if case is Case.IV:
        table = (zero, x, -one)  # index n % 3
        return table[n % 3]
    if case is Case.III:
        table = (zero, x, 2 * x - 1, 2 * x - 2, x - 2, -one)  # index n % 6
        return table[n % 6]
    raise ValueError("residue tables exist for Cases III and IV only")


@dataclass(frozen=True)
class UnitGroup:
    """Finite multiplicative group generated by a complex case root."""

    case: Case
    elements: tuple[QuadElem, ...]
    order: int

    def index_of(self, z: QuadElem) -> int:
        return self.elements.index(z)


def _check_group(elements: tuple[QuadElem, ...]) -> None:
    elems = set(elements)
    one = QuadElem.from_rational(1)
    if one not in elems:
        raise AssertionError("identity missing")
    for z in elems:
        if not any(z * w == one for w in elems):
            raise AssertionError(f"no inverse for {z}")
        for w in elems:
            if z * w not in elems:
                raise AssertionError(f"not closed at {z} * {w}")
            if z * w != w * z:
                raise AssertionError("not abelian")


def unit_group(case: Case) -> UnitGroup:
    """The group {x^2, x^3, ...} generated by the Case III or IV root.

    Case III gives the six 6th roots of unity, Case IV the three cube roots;
    construction asserts closure, identity, inverses, commutativity,
    cyclicity, and the power-cycle identities (x^(2+6t) = x - 1,
    x^(4+6t) = -x, x^(6+6t) = 1 for III; x^(3+3t) = 1 for IV) for t in 0..10.
    """
    case = Case(case)
    if case not in (Case.III, Case.IV):
        raise ValueError("unit groups exist for Cases III and IV only")
    x = case_root(case)
    top = 7 if case is Case.III else 4
    elements = tuple(dict.fromkeys(x**k for k in range(2, top + 1)))
    _check_group(elements)
    # cyclic: the root's powers sweep the whole set
    if {x**k for k in range(1, len(elements) + 1)} != set(elements):
        raise AssertionError("not cyclic")  # pragma: no cover
    one = QuadElem.from_rational(1)
    for t in range(11):
        if case is Case.III:
            assert x ** (2 + 6 * t) == x - 1
            assert x ** (4 + 6 * t) == -x
            assert x ** (6 + 6 * t) == one
        else:
            assert x ** (3 + 3 * t) == one
            assert x ** (4 + 3 * t) == x
    return UnitGroup(case=case, elements=elements, order=len(elements))


def multiplication_table(group: UnitGroup) -> list[list[int]]:
    """Cayley table as indices into group.elements."""
    return [
        [group.index_of(z * w) for w in group.elements]
        for z in group.elements
    ]


def geometric_sum_check(x, n: int) -> bool:
    """Confirm Sum_{k=1}^{n} x^k == x*(x^n - 1)/(x - 1).

    Exact for QuadElem/Fraction/int inputs; floats are compared to 1e-12
    relative. x = 1 raises UnitRatio.
    """
    if x == 1:
        raise UnitRatio("geometric sum has no closed form at ratio 1")
    if isinstance(x, float):
        total = 0.0
        power = 1.0
        for _ in range(n):
            power *= x
            total += power
        closed = x * (x**n - 1) / (x - 1)
        scale = max(abs(total), abs(closed), 1.0)
        return abs(total - closed) <= 1e-12 * scale
    if isinstance(x, int):
        x = Fraction(x)
    total = x * 0
    power = x * 0 + 1
    for _ in range(n):
        power = power * x
        total = total + power
    return total == x * (x**n - 1) / (x - 1)


def _bisect_root(f, lo: float, hi: float, tol: float = 1e-15) -> float:
    flo = f(lo)
    for _ in range(200):
        mid = (lo + hi) / 2
        fmid = f(mid)
        if abs(hi - lo) < tol:
            return mid
        if (flo < 0) == (fmid < 0):
            lo, flo = mid, fmid
        else:
            hi = mid
    return (lo + hi) / 2


def cubic_root_sum_check(n: int, variant: str = "plus", tol: float = 1e-10) -> tuple[float, float, bool]:
    """Degree-3 analogue of the unit-coefficient sums, checked numerically.

    variant 'plus': real root of x^3 = x + 1 (~1.3247, bisection on [1, 2]).
        x^3 - x = 1 factors as (x - 1)*x*(x + 1) = 1 and x + 1 = x^3, so
        1/(x - 1) = x^4 and the geometric sum collapses to x^5 * (x^n - 1).
    variant 'minus': real root of x^3 = x - 1 (~-1.3247, bisection on [-2, -1]),
        where the sum is x^(1-3) * (x^n - 1).

    Returns (direct accumulation, rewritten closed form, agreement <= tol).
    """
    if variant == "plus":
        x = _bisect_root(lambda t: t**3 - t - 1, 1.0, 2.0)
        rewrite = lambda: x**5 * (x**n - 1)
    elif variant == "minus":
        x = _bisect_root(lambda t: t**3 - t + 1, -2.0, -1.0)
        rewrite = lambda: x ** (1 - 3) * (x**n - 1)
    else:
        raise ValueError("variant must be 'plus' or 'minus'")
    direct = 0.0
    power = 1.0
    for _ in range(n):
        power *= x
        direct += power
    rewritten = rewrite()
    ok = abs(direct - rewritten) <= tol * max(1.0, abs(direct))
    return direct, rewritten, ok
