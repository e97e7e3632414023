"""Numerical semigroup combinatorics.

A numerical semigroup H = <a_1, ..., a_l> (gcd 1) is the exponent
monoid of the monomial curve ring R = k[[t^{a_1}, ..., t^{a_l}]].  This
module computes the classic invariants: Apery sets, the Frobenius number,
pseudo-Frobenius numbers (whose count is the Cohen-Macaulay type of R),
symmetry (the Gorenstein property), maximal embedding dimension, and the
gap-dual exponent set realizing a fractional canonical ideal.
"""

import heapq
import math
from dataclasses import dataclass

from .errors import ArgumentError, ConsistencyError


class NumericalSemigroup:
    """Immutable; membership queries on [0, conductor) hit a bit table."""

    __slots__ = (
        "generators",
        "multiplicity",
        "embedding_dimension",
        "frobenius",
        "conductor",
        "_apery_mod_e",
        "_apery_cache",
        "_member_mask",
    )

    def __init__(self, generators):
        gens = sorted(set(int(g) for g in generators))
        if not gens:
            raise ArgumentError("at least one generator is required")
        if gens[0] <= 0:
            raise ArgumentError("generators must be positive")
        if math.gcd(*gens) != 1:
            raise ArgumentError(f"gcd({', '.join(map(str, gens))}) != 1: not a numerical semigroup")

        e = gens[0]
        self.multiplicity = e
        self._apery_mod_e = _apery_by_shortest_path(gens, e)
        self.frobenius = max(self._apery_mod_e) - e
        self.conductor = self.frobenius + 1

        mask = 0
        for x in range(self.conductor):
            if self._apery_mod_e[x % e] <= x:
                mask |= 1 << x
        self._member_mask = mask

        self.generators = tuple(g for g in gens if self._is_minimal_generator(g))
        self.embedding_dimension = len(self.generators)
        self._apery_cache = {}

    def _is_minimal_generator(self, x: int) -> bool:
        # x is redundant iff x = y + z with y, z nonzero members.
        e = self.multiplicity
        for y in range(e, x - e + 1):
            if self.contains(y) and self.contains(x - y):
                return False
        return True

    def contains(self, z: int) -> bool:
        if z < 0:
            return False
        if z >= self.conductor:
            return True
        return bool(self._member_mask >> z & 1)

    def members(self, start: int, stop: int):
        """Members of H in [start, stop)."""
        return [z for z in range(max(start, 0), stop) if self.contains(z)]

    def gaps(self):
        """All nonnegative integers not in H, in increasing order."""
        return [z for z in range(self.conductor) if not self.contains(z)]

    def apery(self, n: int):
        """Ap(H, n): for each residue class mod n, the least member of H."""
        if n <= 0 or not self.contains(n):
            raise ArgumentError(f"Apery set needs a positive member of H, got {n}")
        if n not in self._apery_cache:
            out = []
            for r in range(n):
                x = r
                while not self.contains(x):
                    x += n
                out.append(x)
            self._apery_cache[n] = tuple(sorted(out))
        return self._apery_cache[n]

    def pseudo_frobenius(self):
        """PF(H): gaps x with x + h in H for every nonzero h in H.

        Checking x + a for the minimal generators a suffices.  For H equal
        to the whole of Z>=0 this is {-1} (= Frobenius number), giving
        type 1 for the DVR.
        """
        if self.multiplicity == 1:
            return (-1,)
        pf = []
        for x in self.gaps():
            if all(self.contains(x + a) for a in self.generators):
                pf.append(x)
        return tuple(pf)

    def type(self) -> int:
        return len(self.pseudo_frobenius())

    def is_symmetric(self) -> bool:
        """For every z exactly one of z, F - z lies in H (scan on [0, F])."""
        F = self.frobenius
        return all(self.contains(z) != self.contains(F - z) for z in range(F + 1))

    def invariants(self) -> "SemigroupInvariants":
        pf = self.pseudo_frobenius()
        r = len(pf)
        sym = self.is_symmetric()
        if sym != (r == 1):
            raise ConsistencyError(
                f"symmetry scan ({sym}) disagrees with type {r} for {self}"
            )
        if max(pf) != self.frobenius:
            raise ConsistencyError(f"max PF {max(pf)} != Frobenius {self.frobenius}")
        e, v = self.multiplicity, self.embedding_dimension
        med = v == e
        if med and e >= 2 and r != e - 1:
            raise ConsistencyError(f"MED semigroup {self} has type {r} != e - 1 = {e - 1}")
        return SemigroupInvariants(
            multiplicity=e,
            embedding_dimension=v,
            frobenius=self.frobenius,
            conductor=self.conductor,
            type=r,
            is_symmetric=sym,
            is_med=med,
            is_dvr=e == 1,
        )

    def canonical_exponents(self):
        """Window part of the gap-dual set K = {x : F - x not in H}.

        K is a fractional canonical ideal with R <= K <= normalization;
        its full exponent set is these values plus every integer >= c.
        """
        F = self.frobenius
        return tuple(x for x in range(self.conductor) if not self.contains(F - x))

    def canonical_relative_ideal(self):
        from .relideal import RelativeIdeal

        K = RelativeIdeal.from_exponents(self, set(self.canonical_exponents()) | {self.conductor})
        if K.mu() != self.type():
            raise ConsistencyError(
                f"canonical ideal of {self} has {K.mu()} generators but type is {self.type()}"
            )
        return K

    def __eq__(self, other):
        return isinstance(other, NumericalSemigroup) and self.generators == other.generators

    def __hash__(self):
        return hash(self.generators)

    def __repr__(self):
        return f"<{','.join(map(str, self.generators))}>"


@dataclass(frozen=True)
class SemigroupInvariants:
    multiplicity: int
    embedding_dimension: int
    frobenius: int
    conductor: int
    type: int
    is_symmetric: bool
    is_med: bool
    is_dvr: bool

    def to_dict(self):
        return {
            "multiplicity": self.multiplicity,
            "embedding_dimension": self.embedding_dimension,
            "frobenius": self.frobenius,
            "conductor": self.conductor,
            "type": self.type,
            "gorenstein": self.is_symmetric,
            "med": self.is_med,
            "dvr": self.is_dvr,
        }


def _apery_by_shortest_path(gens, e):
    """Least member of H in each residue class mod e, via Dijkstra on Z/e."""
    dist = [None] * e
    dist[0] = 0
    heap = [(0, 0)]
    while heap:
        d, r = heapq.heappop(heap)
        if dist[r] is not None and d > dist[r]:
            continue
        for a in gens:
            nd = d + a
            nr = nd % e
            if dist[nr] is None or nd < dist[nr]:
                dist[nr] = nd
                heapq.heappush(heap, (nd, nr))
    return dist
