"""Shared generators for randomized tests (all explicitly seeded)."""

import math

from cmtype.relideal import RelativeIdeal
from cmtype.semigroup import NumericalSemigroup


def random_semigroup(rng, lo=2, hi=16, max_gens=3):
    while True:
        gens = sorted(rng.sample(range(lo, hi), rng.randint(2, max_gens)))
        if math.gcd(*gens) == 1:
            return NumericalSemigroup(gens)


def random_relative_ideal(rng, H, lo=None, hi=None):
    c = max(H.conductor, 2)
    lo = -c if lo is None else lo
    hi = 2 * c if hi is None else hi
    k = rng.randint(1, 4)
    return RelativeIdeal.from_exponents(H, set(rng.sample(range(lo, hi), k)))


# small semigroups whose series-engine windows stay cheap
SERIES_POOL = [
    [2, 3],
    [2, 5],
    [3, 4],
    [3, 5],
    [3, 4, 5],
    [4, 5, 6],
    [4, 5, 7],
    [5, 6, 7],
    [3, 7],
]
