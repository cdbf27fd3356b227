"""Quadratic congruences: Legendre, modular square roots, two squares."""

import random
from math import isqrt

import pytest
from hypothesis import given
from hypothesis import strategies as st

from quadratica.congruence import (
    SolutionKind,
    is_prime,
    legendre,
    solve_quad_mod,
    sqrt_mod,
    two_squares,
)
from quadratica.errors import (
    CompositeModulus,
    DegenerateLeading,
    EvenModulusUnsupported,
    NotRepresentable,
)
from quadratica.intmath import sieve_flags

FLAGS = sieve_flags(2000)
ODD_PRIMES = [p for p in range(3, 2000) if FLAGS[p]]


def brute_sqrt(r: int, p: int) -> list[int]:
    return sorted(x for x in range(p) if x * x % p == r % p)


def brute_quad(a: int, b: int, c: int, p: int) -> list[int]:
    return sorted(x for x in range(p) if (a * x * x + b * x + c) % p == 0)


def brute_two_squares(p: int):
    for a in range(1, isqrt(p) + 1):
        b2 = p - a * a
        b = isqrt(b2)
        if b * b == b2 and a <= b:
            return (a, b)
    return None


class TestLegendre:
    def test_minus_one_mod_five(self):
        assert legendre(-1, 5) == 1

    def test_minus_one_mod_seven(self):
        assert legendre(-1, 7) == -1

    def test_zero(self):
        assert legendre(0, 7) == 0

    def test_composite_rejected(self):
        with pytest.raises(CompositeModulus):
            legendre(3, 15)

    def test_even_rejected(self):
        with pytest.raises(EvenModulusUnsupported):
            legendre(3, 2)

    def test_four_t_plus_one_criterion(self):
        for p in ODD_PRIMES:
            assert (legendre(-1, p) == 1) == (p % 4 == 1)

    @given(st.sampled_from(ODD_PRIMES), st.data())
    def test_multiplicative(self, p, data):
        r = data.draw(st.integers(min_value=1, max_value=p - 1))
        s = data.draw(st.integers(min_value=1, max_value=p - 1))
        assert legendre(r * s, p) == legendre(r, p) * legendre(s, p)


class TestSqrtMod:
    def test_examples(self):
        assert sqrt_mod(-1, 5).roots == (2, 3)
        assert sqrt_mod(2, 7).roots == (3, 4)
        assert sqrt_mod(3, 7).kind is SolutionKind.NO_SOLUTION
        assert sqrt_mod(0, 7) == type(sqrt_mod(0, 7))(SolutionKind.ONE_ROOT, (0,))

    def test_exhaustive_small_primes(self):
        for p in [3, 5, 7, 11, 13, 17, 29, 41, 97, 113, 193]:
            for r in range(p):
                got = sqrt_mod(r, p)
                assert list(got.roots) == brute_sqrt(r, p), (r, p)

    @given(st.sampled_from(ODD_PRIMES), st.integers(min_value=0, max_value=10**6))
    def test_roots_square_back(self, p, r):
        got = sqrt_mod(r, p)
        for u in got.roots:
            assert u * u % p == r % p

    def test_tonelli_heavy_two_power(self):
        # p - 1 with a large power of two exercises the full loop
        p = 786433  # 3 * 2^18 + 1
        assert is_prime(p)
        for r in [2, 3, 5, 10, 1234, 654321]:
            got = sqrt_mod(r, p)
            if got.kind is SolutionKind.TWO_ROOTS:
                assert all(u * u % p == r % p for u in got.roots)


class TestSolveQuadMod:
    def test_example(self):
        assert solve_quad_mod(1, 1, 1, 7).roots == (2, 4)

    def test_zero_double_root(self):
        got = solve_quad_mod(1, 0, 0, 5)
        assert got.kind is SolutionKind.ONE_ROOT and got.roots == (0,)

    def test_no_solution(self):
        assert solve_quad_mod(1, 0, 1, 7).kind is SolutionKind.NO_SOLUTION

    def test_degenerate_leading(self):
        with pytest.raises(DegenerateLeading):
            solve_quad_mod(7, 1, 1, 7)

    def test_even_modulus(self):
        with pytest.raises(EvenModulusUnsupported):
            solve_quad_mod(1, 1, 1, 2)

    def test_random_against_brute_force(self):
        rng = random.Random(9)
        for _ in range(1000):
            p = rng.choice(ODD_PRIMES[:100])
            a = rng.randrange(1, p)
            b = rng.randrange(p)
            c = rng.randrange(p)
            assert list(solve_quad_mod(a, b, c, p).roots) == brute_quad(a, b, c, p)


class TestTwoSquares:
    @pytest.mark.parametrize("p,want", [(5, (1, 2)), (13, (2, 3)), (17, (1, 4))])
    def test_examples(self, p, want):
        assert two_squares(p) == want

    def test_two(self):
        assert two_squares(2) == (1, 1)

    def test_not_representable(self):
        with pytest.raises(NotRepresentable):
            two_squares(7)

    def test_composite_rejected(self):
        with pytest.raises(CompositeModulus):
            two_squares(21)

    def test_against_brute_force(self):
        # succeeds exactly on p = 1 mod 4 (plus p = 2), fails on p = 3 mod 4
        for p in ODD_PRIMES:
            if p % 4 == 1:
                a, b = two_squares(p)
                assert a * a + b * b == p and a <= b
                assert (a, b) == brute_two_squares(p)
            else:
                assert brute_two_squares(p) is None
                with pytest.raises(NotRepresentable):
                    two_squares(p)

    def test_large_prime(self):
        p = 1000033  # = 1 mod 4
        assert is_prime(p) and p % 4 == 1
        a, b = two_squares(p)
        assert a * a + b * b == p


class TestIsPrime:
    def test_small(self):
        assert [n for n in range(30) if is_prime(n)] == [2, 3, 5, 7, 11, 13, 17, 19, 23, 29]

    def test_against_sieve(self):
        for n in range(2000):
            assert is_prime(n) == bool(FLAGS[n])

    def test_carmichael(self):
        assert not is_prime(561) and not is_prime(41041)

    def test_mersenne(self):
        assert is_prime(2**61 - 1)
        assert not is_prime(2**67 - 1)
