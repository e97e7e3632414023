import random

import pytest

from cmtype.errors import ArgumentError
from cmtype.semigroup import NumericalSemigroup
from helpers import random_semigroup


def brute_members(gens, limit):
    """Independent oracle: all sums of generators up to a limit."""
    reachable = {0}
    frontier = {0}
    while frontier:
        nxt = set()
        for x in frontier:
            for g in gens:
                y = x + g
                if y <= limit and y not in reachable:
                    reachable.add(y)
                    nxt.add(y)
        frontier = nxt
    return reachable


class TestCreate:
    def test_dvr(self):
        H = NumericalSemigroup([1])
        assert H.generators == (1,)
        assert H.frobenius == -1
        assert H.conductor == 0

    def test_3_7_against_brute_force(self):
        H = NumericalSemigroup([3, 7])
        assert H.generators == (3, 7)
        oracle = brute_members([3, 7], 2 * 3 * 7)
        assert H.frobenius == max(x for x in range(2 * 3 * 7) if x not in oracle) == 11
        assert H.conductor == 12
        for z in range(30):
            assert H.contains(z) == (z in oracle)

    def test_redundant_generator_removed(self):
        H = NumericalSemigroup([4, 5, 6, 9])
        assert H.generators == (4, 5, 6)

    def test_gcd_error(self):
        with pytest.raises(ArgumentError, match="not a numerical semigroup"):
            NumericalSemigroup([4, 6])

    def test_empty_error(self):
        with pytest.raises(ArgumentError):
            NumericalSemigroup([])

    def test_nonpositive_error(self):
        with pytest.raises(ArgumentError):
            NumericalSemigroup([0, 3])


class TestContains:
    def test_examples(self):
        H = NumericalSemigroup([3, 7])
        assert H.contains(0)
        assert not H.contains(11)  # 11 = 3a + 7b has no solution
        assert H.contains(12)
        assert not H.contains(-3)


class TestApery:
    def test_3_7(self):
        assert NumericalSemigroup([3, 7]).apery(3) == (0, 7, 14)

    def test_dvr(self):
        assert NumericalSemigroup([1]).apery(1) == (0,)

    def test_4_5_6(self):
        assert NumericalSemigroup([4, 5, 6]).apery(4) == (0, 5, 6, 11)

    def test_rejects_non_member(self):
        H = NumericalSemigroup([3, 7])
        with pytest.raises(ArgumentError):
            H.apery(5)
        with pytest.raises(ArgumentError):
            H.apery(0)


class TestPseudoFrobenius:
    def test_3_7_by_gap_scan(self):
        H = NumericalSemigroup([3, 7])
        gaps = H.gaps()
        assert gaps == [1, 2, 4, 5, 8, 11]
        oracle = [
            x for x in gaps if all(H.contains(x + h) for h in range(1, 30) if H.contains(h))
        ]
        assert H.pseudo_frobenius() == tuple(oracle) == (11,)

    def test_3_4_5(self):
        assert NumericalSemigroup([3, 4, 5]).pseudo_frobenius() == (1, 2)

    def test_4_5_6_symmetric(self):
        H = NumericalSemigroup([4, 5, 6])
        assert H.pseudo_frobenius() == (7,)
        assert H.is_symmetric()


class TestInvariants:
    def test_3_4_5(self):
        inv = NumericalSemigroup([3, 4, 5]).invariants()
        assert (inv.multiplicity, inv.embedding_dimension, inv.frobenius) == (3, 3, 2)
        assert (inv.conductor, inv.type) == (3, 2)
        assert not inv.is_symmetric and inv.is_med and not inv.is_dvr

    def test_3_7_symmetric(self):
        inv = NumericalSemigroup([3, 7]).invariants()
        assert inv.type == 1 and inv.is_symmetric and not inv.is_med

    def test_dvr(self):
        inv = NumericalSemigroup([1]).invariants()
        assert inv.is_dvr and inv.multiplicity == 1 and inv.is_symmetric


class TestCanonicalIdeal:
    def test_gorenstein_k_equals_h(self):
        H = NumericalSemigroup([4, 5, 6])
        K = H.canonical_relative_ideal()
        assert K == K.unit_ideal()

    def test_3_4_5(self):
        H = NumericalSemigroup([3, 4, 5])
        K = H.canonical_relative_ideal()
        assert K.contains(0) and K.contains(1) and not K.contains(2)
        assert all(K.contains(x) for x in range(3, 10))

    def test_9_10_11_12_15(self):
        H = NumericalSemigroup([9, 10, 11, 12, 15])
        K = H.canonical_relative_ideal()
        assert K.minimal_generators() == (0, 1, 3, 4)
        assert K.mu() == 4


def test_random_invariant_properties():
    rng = random.Random(42)
    for _ in range(40):
        H = random_semigroup(rng, hi=28)
        pf = H.pseudo_frobenius()
        assert max(pf) == H.frobenius
        assert (len(pf) == 1) == H.is_symmetric()
        n = H.multiplicity
        ap = H.apery(n)
        assert len(ap) == n
        assert len({x % n for x in ap}) == n
        assert max(ap) == H.frobenius + n
        if H.invariants().is_med and H.multiplicity >= 2:
            assert len(pf) == H.multiplicity - 1
        K = H.canonical_relative_ideal()
        assert K.colon(K) == K.unit_ideal()  # K : K = R
        assert K.mu() == len(pf)
        assert (K == K.unit_ideal()) == H.is_symmetric()
