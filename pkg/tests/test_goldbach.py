"""Goldbach witnesses, witness parabolas, areas, and hypotenuse numbers."""

import csv
import random
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from quadratica.errors import EvenInput, InvalidPair, NoWitnessFound, NotCoprime
from quadratica.goldbach import (
    HypClass,
    find_witness,
    hypotenuse_number,
    parity_lemma,
    verify_range,
    witness_areas,
    witness_parabola,
    witnesses,
)
from quadratica.intmath import sieve_flags
from quadratica.solver import Quadratic, solve

FLAGS = sieve_flags(10_000)
ODD_PRIMES = [p for p in range(3, 10_000) if FLAGS[p]]


class TestParityLemma:
    def test_example(self):
        assert parity_lemma(17, 7) == ("even", "odd")

    def test_equal_primes(self):
        assert parity_lemma(5, 5) == ("odd", "even")

    def test_direct(self):
        assert parity_lemma(13, 3) == ("even", "odd")

    def test_even_rejected(self):
        with pytest.raises(EvenInput):
            parity_lemma(4, 3)

    @given(st.integers(min_value=-200, max_value=200), st.integers(min_value=-200, max_value=200))
    def test_always_opposite(self, j, k):
        p, q = 2 * j + 1, 2 * k + 1
        mp, ip = parity_lemma(p, q)
        assert {mp, ip} == {"even", "odd"}


class TestFindWitness:
    def test_24(self):
        w = find_witness(24)
        assert (w.I, w.p, w.q) == (1, 13, 11)

    def test_24_full_list_contains_both_examples(self):
        pairs = {(w.p, w.q) for w in witnesses(24)}
        assert (17, 7) in pairs and (19, 5) in pairs

    def test_4_even_prime_pair(self):
        w = find_witness(4)
        assert (w.I, w.p, w.q) == (0, 2, 2)
        assert w.uses_even_prime

    def test_100(self):
        w = find_witness(100)
        assert (w.I, w.p, w.q) == (3, 53, 47)

    def test_twice_prime_uses_i_zero(self):
        w = find_witness(26)
        assert (w.I, w.p, w.q) == (0, 13, 13)

    def test_rejects_odd_and_small(self):
        with pytest.raises(ValueError):
            find_witness(7)
        with pytest.raises(ValueError):
            find_witness(2)

    def test_exhausted_search_raises(self):
        # a sieve with no primes at all forces the counterexample branch
        with pytest.raises(NoWitnessFound):
            find_witness(10, sieve=bytearray(12))

    @given(st.integers(min_value=2, max_value=5000))
    def test_witness_contract(self, half):
        n = 2 * half
        w = find_witness(n)
        assert w.p + w.q == n
        assert w.p == w.M + w.I and w.q == w.M - w.I
        assert FLAGS[w.p] and FLAGS[w.q]
        if not w.uses_even_prime:
            mp, ip = parity_lemma(w.p, w.q)
            assert {mp, ip} == {"even", "odd"}

    def test_normalization_when_m_even(self):
        # for even M = 2n the witness reads p = 2n + I, q = 2n - I with p + q = 4n
        for n_half in range(2, 500):
            w = find_witness(4 * n_half)
            if w.M % 2 == 0:
                n = w.M // 2
                assert w.p == 2 * n + w.I and w.q == 2 * n - w.I
                assert w.p + w.q == 4 * n

    def test_minimality(self):
        for n in range(4, 2000, 2):
            w = find_witness(n)
            others = witnesses(n)
            assert others[0].I == w.I
            assert all(other.I >= w.I for other in others)


class TestWitnessParabola:
    def test_example(self):
        par = witness_parabola(17, 7)
        assert par.quadratic == Quadratic(1, -24, 119)
        assert (par.vertex_x, par.vertex_y) == (12, -25)

    def test_small(self):
        par = witness_parabola(5, 3)
        assert par.quadratic == Quadratic(1, -8, 15)
        assert (par.vertex_x, par.vertex_y) == (4, -1)

    def test_double_root(self):
        par = witness_parabola(3, 3)
        assert par.quadratic == Quadratic(1, -6, 9)
        assert (par.vertex_x, par.vertex_y) == (3, 0)

    def test_roots_via_solver(self):
        par = witness_parabola(19, 5)
        pair = solve(par.quadratic)
        assert {pair.r1.as_fraction(), pair.r2.as_fraction()} == {19, 5}

    def test_rejects_non_prime(self):
        with pytest.raises(InvalidPair):
            witness_parabola(9, 3)

    def test_rejects_unordered(self):
        with pytest.raises(InvalidPair):
            witness_parabola(3, 5)


class TestWitnessAreas:
    def test_17_7(self):
        report = witness_areas(17, 7)
        assert report.I == 5
        assert report.parabola_area == Fraction(500, 3)
        assert report.rectangle_area == 250
        assert report.triangle_area == 125

    def test_5_3(self):
        report = witness_areas(5, 3)
        assert (report.parabola_area, report.rectangle_area, report.triangle_area) == (
            Fraction(4, 3),
            2,
            1,
        )

    def test_segment(self):
        assert witness_areas(5, 3).leading_segment == 18

    def test_equal_primes_rejected(self):
        with pytest.raises(InvalidPair):
            witness_areas(3, 3)

    def test_random_pairs_exact(self):
        rng = random.Random(17)
        for _ in range(1000):
            p, q = rng.sample(ODD_PRIMES, 2)
            p, q = max(p, q), min(p, q)
            report = witness_areas(p, q)
            i3 = Fraction(report.I) ** 3
            assert report.parabola_area == Fraction(4, 3) * i3
            assert report.rectangle_area == 2 * i3
            assert report.triangle_area == i3
            assert report.rectangle_area / report.parabola_area == Fraction(3, 2)
            assert report.rectangle_area / report.triangle_area == 2
            assert report.parabola_area / report.triangle_area == Fraction(4, 3)


class TestHypotenuse:
    def test_prime_square(self):
        assert hypotenuse_number(6, 5, 1) == (169, HypClass.PRIME_SQUARE)

    def test_prime(self):
        assert hypotenuse_number(6, 7, 1) == (193, HypClass.PRIME)

    def test_higher_power(self):
        assert hypotenuse_number(2, 1, 2) == (257, HypClass.PRIME)

    def test_composite(self):
        h, kind = hypotenuse_number(4, 3, 1)
        assert (h, kind) == (73, HypClass.PRIME)
        h, kind = hypotenuse_number(7, 3, 1)
        assert h == 205 and kind is HypClass.COMPOSITE

    def test_coprimality_required(self):
        with pytest.raises(NotCoprime):
            hypotenuse_number(3, 3, 1)

    @given(
        st.integers(min_value=1, max_value=300),
        st.integers(min_value=1, max_value=300),
        st.integers(min_value=1, max_value=3),
    )
    def test_quotient_identity(self, n, i, l):
        from math import gcd

        if gcd(2 * n, i) != 1:
            return
        h, _ = hypotenuse_number(n, i, l)
        p, q = 2 * n + i, 2 * n - i
        assert ((p + q) ** (2 * l) + (p - q) ** (2 * l)) == h * 2 ** (2 * l)


class TestVerifyRange:
    def test_worker_cap_env_var(self, monkeypatch):
        from quadratica.goldbach import default_workers

        monkeypatch.setenv("QUADRATICA_THREADS", "1")
        assert default_workers() == 1
        monkeypatch.setenv("QUADRATICA_THREADS", "not-a-number")
        assert default_workers() >= 1
        monkeypatch.delenv("QUADRATICA_THREADS")
        assert default_workers() >= 1

    def test_small_range_with_csv(self, tmp_path):
        path = tmp_path / "witnesses.csv"
        summary = verify_range(10_000, csv_path=str(path), workers=1)
        assert summary.count == 4999
        with open(path, newline="") as handle:
            rows = list(csv.DictReader(handle))
        assert len(rows) == summary.count
        assert rows[0] == {"N": "4", "I_min": "0", "p": "2", "q": "2"}
        sample = rows[500]
        n, i, p, q = int(sample["N"]), int(sample["I_min"]), int(sample["p"]), int(sample["q"])
        assert p + q == n and p - q == 2 * i

    def test_parallel_matches_serial(self):
        serial = verify_range(3000, workers=1)
        parallel = verify_range(3000, workers=4, chunk=512)
        assert (serial.count, serial.max_i, serial.n_at_max_i) == (
            parallel.count,
            parallel.max_i,
            parallel.n_at_max_i,
        )
