import random
from fractions import Fraction

import pytest

from chardeg.degree_data import rat
from chardeg.structure_bounds import (
    ChiefFactorDescriptor,
    ChiefSeries,
    extraspecial_example,
    frobenius_example,
    maroti_bound,
    quotient_power_check,
    radical_index_check,
    rat14_lower_bound,
    series_from_json,
    solvable_index_bound,
)


def _factor(order, mult=1, abelian=False, psl2=False, label=""):
    return ChiefFactorDescriptor(label, order, mult, abelian, psl2)


class TestRat14LowerBound:
    def test_examples(self):
        assert rat14_lower_bound(ChiefSeries((_factor(125, abelian=True),))) == 1
        assert rat14_lower_bound(ChiefSeries((_factor(20160, mult=2),))) == 20160 ** 2
        mixed = ChiefSeries(
            (
                _factor(125, abelian=True),
                _factor(360, psl2=True),
                _factor(25920),
            )
        )
        assert rat14_lower_bound(mixed) == 25920

    def test_multiplicative_under_concatenation(self):
        rng = random.Random(7)
        for _ in range(50):
            def rand_series(k):
                factors = []
                for _ in range(k):
                    kind = rng.choice(["abelian", "psl2", "other"])
                    factors.append(
                        _factor(
                            rng.randrange(2, 10 ** 6),
                            mult=rng.randrange(1, 4),
                            abelian=kind == "abelian",
                            psl2=kind == "psl2",
                        )
                    )
                return ChiefSeries(tuple(factors))
            a, b = rand_series(rng.randrange(0, 4)), rand_series(rng.randrange(0, 4))
            joined = ChiefSeries(a.factors + b.factors)
            assert rat14_lower_bound(joined) == rat14_lower_bound(a) * rat14_lower_bound(b)

    def test_flag_validation(self):
        with pytest.raises(ValueError):
            _factor(60, abelian=True, psl2=True)
        with pytest.raises(ValueError):
            _factor(1)

    def test_json_ingestion(self):
        series = series_from_json(
            '{"factors": [{"label": "x", "order": "20160", "multiplicity": 2,'
            ' "abelian": false, "psl2": false}]}'
        )
        assert rat14_lower_bound(series) == 20160 ** 2


class TestQuotientPowerCheck:
    def test_boundary(self):
        assert quotient_power_check(Fraction(2), Fraction(1), 2 ** 14) is True
        assert quotient_power_check(Fraction(2), Fraction(1), 2 ** 14 + 1) is False

    def test_fractional(self):
        # 3**14 >= 100 * 2**14 exactly
        assert 3 ** 14 >= 100 * 2 ** 14
        assert quotient_power_check(Fraction(3, 2), Fraction(1), 100) is True

    def test_rejects_ratio_below_one(self):
        with pytest.raises(ValueError):
            quotient_power_check(Fraction(1, 2), Fraction(1), 5)


class TestMarotiBound:
    def test_examples(self):
        assert maroti_bound(5, 4) == 69
        assert 69 ** 3 <= 24 ** 4 < 70 ** 3
        assert maroti_bound(1, 4) == 1
        assert maroti_bound(4, 4) == 24

    def test_rejects_small_d(self):
        with pytest.raises(ValueError):
            maroti_bound(5, 3)

    def test_monotone_in_n_and_defining_inequality(self):
        import math

        prev = 0
        for n in range(1, 9):
            b = maroti_bound(n, 5)
            assert b >= prev
            prev = b
            assert b ** 4 <= math.factorial(5) ** (n - 1) < (b + 1) ** 4


class TestSolvableIndexBound:
    def test_examples(self):
        assert solvable_index_bound(1) == 1
        assert solvable_index_bound(60) == 348
        assert 348 ** 100 <= 60 ** 143 < 349 ** 100  # direct big-integer oracle
        assert solvable_index_bound(2) == 2  # 2**1.43 ~ 2.69

    def test_defining_inequality_randomized(self):
        rng = random.Random(11)
        for _ in range(40):
            x = rng.randrange(1, 10 ** 6)
            b = solvable_index_bound(x)
            assert b ** 100 <= x ** 143 < (b + 1) ** 100


class TestRadicalIndexCheck:
    def test_examples(self):
        assert radical_index_check(Fraction(1), 1) is True
        assert radical_index_check(Fraction(2), 2 ** 21) is True
        assert radical_index_check(Fraction(2), 2 ** 21 + 1) is False
        # exact big-integer verdict: 2e10 * 5**21 <= 16**21
        assert 2 * 10 ** 10 * 5 ** 21 <= 16 ** 21
        assert radical_index_check(Fraction(16, 5), 2 * 10 ** 10) is True
        # and just past the true threshold it flips
        assert radical_index_check(Fraction(16, 5), 5 * 10 ** 10) is False


class TestFrobeniusExample:
    def test_examples(self):
        t = frobenius_example(7, 3)
        assert t.degrees == (1, 1, 1, 3, 3)
        assert t.order == 21
        assert t.fitting_index == 3
        assert rat(t) == 1
        t = frobenius_example(13, 4)
        assert rat(t) == 1 and t.fitting_index == 4

    def test_divisibility_guard(self):
        with pytest.raises(ValueError):
            frobenius_example(7, 4)
        with pytest.raises(ValueError):
            frobenius_example(9, 2)  # 9 is not prime

    def test_degree_multiset_is_consistent(self):
        # m linear degrees and (p-1)/m of degree m: squares sum to the order
        for p, m in ((7, 3), (13, 4), (11, 5), (101, 100)):
            t = frobenius_example(p, m)
            assert sum(d * d for d in t.degrees) == t.order
            assert rat(t) == 1
            assert t.fitting_index == m

    def test_solvable_families_satisfy_radical_bound(self):
        # both example families are solvable: index of the radical is 1
        for p, m in ((7, 3), (13, 4)):
            assert radical_index_check(rat(frobenius_example(p, m)), 1)
        assert radical_index_check(rat(extraspecial_example(3, 2)), 1)


class TestExtraspecialExample:
    def test_examples(self):
        t = extraspecial_example(2, 2)
        assert t.degrees == (1, 4, 5)
        assert rat(t) == Fraction(5, 4)
        assert t.fitting_index == 5
        t = extraspecial_example(3, 1)
        assert t.degrees == (1, 3, 4)
        assert rat(t) == Fraction(4, 3)

    def test_ratio_tends_to_one_while_index_grows(self):
        t = extraspecial_example(2, 10)
        assert rat(t) == Fraction(1025, 1024)
        assert t.fitting_index == 1025
        prev_rat, prev_idx = None, 0
        for i in (1, 3, 6, 10):
            t = extraspecial_example(2, i)
            r = rat(t)
            if prev_rat is not None:
                assert r < prev_rat
                assert t.fitting_index > prev_idx
            prev_rat, prev_idx = r, t.fitting_index

    def test_rejects_bad_args(self):
        with pytest.raises(ValueError):
            extraspecial_example(2, 0)
        with pytest.raises(ValueError):
            extraspecial_example(4, 1)
