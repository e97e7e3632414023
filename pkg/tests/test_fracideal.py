import itertools
import random

import pytest

from cmtype import linalg
from cmtype.errors import ArgumentError, ContainmentError
from cmtype.fracideal import FractionalIdeal, from_relative, ideal_from_generators
from cmtype.linalg import GF, QQ, CoeffMatrix
from cmtype.relideal import RelativeIdeal
from cmtype.semigroup import NumericalSemigroup
from cmtype.series import TruncatedSeries, parse_series
from helpers import SERIES_POOL, random_relative_ideal, random_semigroup

H345 = NumericalSemigroup([3, 4, 5])
H37 = NumericalSemigroup([3, 7])


def series_ideal(H, field, *exprs, slack=0):
    return ideal_from_generators(H, field, [parse_series(s, field) for s in exprs], slack=slack)


class TestConstruction:
    def test_monomial_pair_equals_relative(self):
        I = series_ideal(H345, QQ, "t^3", "t^4")
        assert (I.delta, I.gamma) == (3, 6)
        assert I == from_relative(RelativeIdeal.from_exponents(H345, {3, 4}), QQ)
        assert I.is_monomial()

    def test_ulrich_window(self):
        I = series_ideal(H37, GF(5), "t^6 - 2*t^7", "t^10")
        assert (I.delta, I.gamma) == (6, 18)
        assert not I.is_monomial()
        I.validate()

    def test_dvr_whole_ring(self):
        H1 = NumericalSemigroup([1])
        I = series_ideal(H1, QQ, "1")
        assert (I.delta, I.gamma) == (0, 0)
        assert I.mu() == 1 and I.is_principal()

    def test_all_zero_generators_rejected(self):
        with pytest.raises(ArgumentError):
            ideal_from_generators(H345, QQ, [TruncatedSeries.zero(QQ)])

    def test_field_mismatch_rejected(self):
        with pytest.raises(ArgumentError):
            ideal_from_generators(H345, QQ, [parse_series("t^3", GF(5))])

    def test_insufficient_precision_rejected(self):
        short = TruncatedSeries(QQ, {3: 1}, precision=4)
        with pytest.raises(ArgumentError, match="precision"):
            ideal_from_generators(H345, QQ, [short])

    def test_zero_generators_dropped(self):
        I = ideal_from_generators(H345, QQ, [TruncatedSeries.zero(QQ), parse_series("t^5", QQ)])
        assert I.delta == 5


class TestArithmetic:
    def test_product_with_unit(self):
        I = series_ideal(H37, QQ, "t^6 - t^7", "t^10")
        assert I.unit_ideal().multiply(I) == I

    def test_colon_self_detects_not_closed(self):
        # Gorenstein ring, I not principal: I cannot be closed
        I = series_ideal(H37, QQ, "t^6 - t^7", "t^10")
        end = I.colon(I)
        R = I.unit_ideal()
        assert end != R
        assert end.contains_ideal(R)

    def test_canonical_self_colon(self):
        K = from_relative(H345.canonical_relative_ideal(), QQ)
        assert K.colon(K) == K.unit_ideal()

    def test_lengths_and_mu(self):
        I = series_ideal(H37, QQ, "t^6 - t^7", "t^10")
        R = I.unit_ideal()
        assert I.mu() == 2
        # independent dimension count: dim(R mod t^18) = 12, dim(I mod t^18) = 9
        assert R.quotient_length(I) == 3
        assert R.mu() == 1 and R.is_principal()

    def test_quotient_length_containment_error(self):
        I = series_ideal(H345, QQ, "t^3")
        J = series_ideal(H345, QQ, "t^4")
        with pytest.raises(ContainmentError):
            I.quotient_length(J)

    def test_sum(self):
        a = series_ideal(H345, QQ, "t^3")
        b = series_ideal(H345, QQ, "t^4")
        assert a.add(b) == series_ideal(H345, QQ, "t^3", "t^4")

    def test_intersect_monomials(self):
        a = series_ideal(H345, QQ, "t^3")
        b = series_ideal(H345, QQ, "t^4")
        expected = RelativeIdeal.from_exponents(H345, {3}).intersect(
            RelativeIdeal.from_exponents(H345, {4})
        )
        assert a.intersect(b) == from_relative(expected, QQ)

    def test_shift_round_trip(self):
        I = series_ideal(H37, QQ, "t^6 - t^7", "t^10")
        assert I.shift(5).shift(-5) == I
        assert I.shift(3).mu() == I.mu()


class TestFindReduction:
    def test_ulrich_generator_is_reduction(self):
        I = series_ideal(H37, QQ, "t^6 - t^7", "t^10")
        x = I.find_reduction()
        assert x is not None and x.order == 6
        P = ideal_from_generators(H37, QQ, [x])
        assert P.multiply(I) == I.multiply(I)

    def test_monomial_pair_has_no_reduction(self):
        I = series_ideal(H37, QQ, "t^6", "t^10")
        assert I.find_reduction() is None
        E = RelativeIdeal.from_exponents(H37, {6, 10})
        assert E.find_reduction() is None

    def test_maximal_ideal_reduction(self):
        m = RelativeIdeal.from_exponents(H345, {3, 4, 5})
        red = m.find_reduction()
        assert red is not None and red == red.unit_ideal().shift(3)


class TestFromRelative:
    def test_unit(self):
        R = RelativeIdeal.from_exponents(H345, {0})
        assert from_relative(R, QQ) == from_relative(R, QQ).unit_ideal()

    def test_canonical_mu(self):
        K = from_relative(H345.canonical_relative_ideal(), QQ)
        assert K.mu() == 2

    def test_matches_generator_construction(self):
        E = RelativeIdeal.from_exponents(H345, {3, 5})
        assert from_relative(E, QQ) == series_ideal(H345, QQ, "t^3", "t^5")

    def test_support_round_trip(self):
        rng = random.Random(21)
        for _ in range(40):
            H = random_semigroup(rng)
            E = random_relative_ideal(rng, H)
            S = from_relative(E, GF(3))
            assert S.support_ideal() == E
            assert from_relative(S.support_ideal(), GF(3)).contains_ideal(S)


class TestPrecisionStability:
    def test_slack_does_not_change_results(self):
        field = GF(5)
        for slack in (0, 1, 3):
            a = series_ideal(H37, field, "t^6 - 2*t^7", "t^10", slack=slack)
            b = series_ideal(H37, field, "t^6 - 2*t^7", "t^10", slack=slack + 3)
            assert a == b
            assert a.colon(a) == b.colon(b)
            assert a.multiply(a) == b.multiply(b)
            assert a.mu() == b.mu()
            assert a.unit_ideal().quotient_length(a) == b.unit_ideal().quotient_length(b)


class TestEngineAgreement:
    """Monomial inputs: every operation matches the relative-ideal engine."""

    def test_random_instances(self):
        rng = random.Random(22)
        for _ in range(200):
            H = random_semigroup(rng, hi=12)
            field = rng.choice([QQ, GF(2), GF(5)])
            E = random_relative_ideal(rng, H)
            F = random_relative_ideal(rng, H)
            a, b = from_relative(E, field), from_relative(F, field)
            assert a.mu() == E.mu()
            assert a.colon(b) == from_relative(E.colon(F), field)
            assert a.multiply(b) == from_relative(E.multiply(F), field)
            assert a.add(b) == from_relative(E.add(F), field)
            assert a.intersect(b) == from_relative(E.intersect(F), field)
            assert a.contains_ideal(b) == E.contains_ideal(F)
            if E.contains_ideal(F):
                assert a.quotient_length(b) == E.quotient_length(F)


class TestColonBruteForce:
    """Acceptance criterion: exhaustive window enumeration over F_2/F_3."""

    def _brute_colon_rows(self, I, J):
        p = I.field.characteristic
        start, end = I.delta - J.delta, I.gamma - J.delta
        width = end - start
        gens = J.module_generators()
        rows = []
        for coeffs in itertools.product(range(p), repeat=width):
            if not any(coeffs):
                continue
            x = TruncatedSeries.from_window(I.field, start, list(coeffs))
            ok = True
            for g in gens:
                prod = x.mul(g)
                if any(e < I.delta for e in prod.coeffs):
                    ok = False
                    break
                vec = prod.window_vector(I.delta, I.gamma - I.delta)
                if not linalg.member(vec, I.matrix)[0]:
                    ok = False
                    break
            if ok:
                rows.append(list(coeffs))
        return start, end, rows

    def test_against_enumeration(self):
        rng = random.Random(23)
        checked = 0
        while checked < 12:
            H = NumericalSemigroup(rng.choice([[2, 3], [3, 4], [2, 5], [3, 5]]))
            p = rng.choice([2, 3])
            field = GF(p)
            gens = []
            for _ in range(rng.randint(1, 2)):
                o = rng.randint(0, 4)
                coeffs = {o: 1}
                for e in range(o + 1, o + 4):
                    coeffs[e] = rng.randrange(p)
                gens.append(TruncatedSeries(field, coeffs))
            I = ideal_from_generators(H, field, gens)
            if I.gamma - I.delta > 8 or p ** (I.gamma - I.delta) > 7000:
                continue
            J = ideal_from_generators(H, field, gens[:1])
            start, end, rows = self._brute_colon_rows(I, J)
            rebuilt = FractionalIdeal._build(H, field, start, end, rows)
            assert rebuilt == I.colon(J)
            checked += 1


def test_validate_on_random_operation_results():
    rng = random.Random(24)
    for _ in range(25):
        H = NumericalSemigroup(rng.choice(SERIES_POOL))
        p = rng.choice([2, 3, 5])
        field = GF(p)
        gens = []
        for _ in range(rng.randint(1, 2)):
            o = rng.randint(0, max(H.conductor - 1, 1))
            coeffs = {o: 1}
            for e in range(o + 1, o + 4):
                if rng.random() < 0.6:
                    coeffs[e] = rng.randrange(1, p)
            gens.append(TruncatedSeries(field, coeffs))
        I = ideal_from_generators(H, field, gens)
        K = I.canonical_ideal()
        for result in (I, I.colon(I), I.multiply(I), K.colon(I), I.intersect(K), I.add(K)):
            result.validate()
