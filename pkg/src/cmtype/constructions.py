"""Explicit ideal families, the blow-up ring, and monomial ideal enumeration.

The families here realize the classification results numerically: the
pseudo-Frobenius family (t^e) + (t^{alpha_j + e} : j >= p) and its canonical
dual, the maximal-embedding-dimension family (t^{a_1}) + (t^{a_p}, ...),
the blow-up ring as both an endomorphism fixpoint and its closed form, and
an exhaustive stream of shift-normalized monomial ideals used to search
for the supremum of the idealization type.
"""

from .errors import ArgumentError, ConsistencyError, ResourceLimitError
from .relideal import RelativeIdeal, _maximal, _unit
from .semigroup import NumericalSemigroup
from .typecalc import idealization_type, is_ulrich_module_wrt


def pf_family_ideal(H: NumericalSemigroup, p: int) -> RelativeIdeal:
    """(t^e) + (t^{alpha_j + e} : p <= j <= r), PF(H) = {alpha_1 < ... < alpha_r}.

    Its square equals t^e times itself; that identity is verified on
    construction since the downstream type formula depends on it.
    """
    e = H.multiplicity
    if e < 2:
        raise ArgumentError("the family needs e >= 2 (R not a DVR)")
    pf = H.pseudo_frobenius()
    r = len(pf)
    if not 1 <= p <= r:
        raise ArgumentError(f"p must lie in [1, {r}], got {p}")
    exponents = {e} | {pf[j] + e for j in range(p - 1, r)}
    ideal = RelativeIdeal.from_exponents(H, exponents)
    if ideal.multiply(ideal) != ideal.shift(e):
        raise ConsistencyError(f"I^2 != t^e I for the family ideal at p={p} over {H}")
    return ideal


def med_family_ideal(H: NumericalSemigroup, p: int) -> RelativeIdeal:
    """(t^{a_1}) + (t^{a_p}, ..., t^{a_l}) for maximal embedding dimension."""
    inv = H.invariants()
    if not inv.is_med or inv.multiplicity < 2:
        raise ArgumentError(f"{H} does not have maximal embedding dimension >= 2")
    gens = H.generators
    ell = len(gens)
    if not 2 <= p <= ell:
        raise ArgumentError(f"p must lie in [2, {ell}], got {p}")
    return RelativeIdeal.from_exponents(H, {gens[0]} | set(gens[p - 1:]))


def dual_family_ideal(H: NumericalSemigroup, p: int) -> RelativeIdeal:
    """Canonical dual K : I of the pseudo-Frobenius family ideal."""
    return pf_family_ideal(H, p).canonical_dual()


def blowup_ring(H: NumericalSemigroup) -> RelativeIdeal:
    """The blow-up of the maximal ideal, as a relative ideal.

    Fixpoint route: A_n = m^n : m^n, stopping once m^{n+1} = t^e m^n (from
    then on the colons are constant).  Oracle route: the exponent set of
    R[m/t^e] is the numerical semigroup generated by e and the a_i - e.
    Both are computed and must agree.
    """
    e = H.multiplicity
    m = _maximal(H)
    power = _unit(H)
    fixpoint = None
    for _ in range(H.conductor + 2):
        nxt = power.multiply(m)
        if nxt == power.shift(e):
            fixpoint = power.colon(power)
            break
        power = nxt
    if fixpoint is None:
        raise ConsistencyError(f"blow-up iteration did not stabilize over {H}")

    if e == 1:
        closed_gens = [1]
    else:
        closed_gens = [e] + [a - e for a in H.generators[1:]]
    lipman = NumericalSemigroup(closed_gens)
    closed_form = RelativeIdeal.from_exponents(
        H, set(lipman.members(0, H.conductor)) | {H.conductor}
    )
    if fixpoint != closed_form:
        raise ConsistencyError(f"blow-up fixpoint and closed form disagree over {H}")

    if fixpoint.mu() != e:
        raise ConsistencyError(f"blow-up of {H} has {fixpoint.mu()} generators, not e={e}")
    if not is_ulrich_module_wrt(fixpoint):
        raise ConsistencyError(f"blow-up of {H} is not Ulrich with respect to m")
    return fixpoint


def enumerate_monomial_ideals(H: NumericalSemigroup, span_bound: int, max_count: int = 200000):
    """All relative ideals with delta = 0 whose chosen gaps lie in [0, span_bound].

    Every such ideal contains H (hence all of the conductor tail), so it is
    H plus an upward-closed set of gaps; upward closure under the generators
    suffices.  Yields each ideal once (canonical masks are distinct).
    """
    if span_bound < 1:
        raise ArgumentError("span bound must be at least 1")
    gaps = [g for g in H.gaps() if g > 0]
    gaps_desc = sorted(gaps, reverse=True)
    gap_set = set(gaps)
    needed = {
        g: [g + a for a in H.generators if g + a in gap_set] for g in gaps
    }
    base_mask = H._member_mask
    count = 0

    def emit(chosen_mask):
        nonlocal count
        count += 1
        if count > max_count:
            raise ResourceLimitError(
                f"more than {max_count} ideals below span bound {span_bound}"
            )
        return RelativeIdeal(H, 0, base_mask | chosen_mask)

    def walk(i, chosen, chosen_mask):
        if i == len(gaps_desc):
            yield emit(chosen_mask)
            return
        g = gaps_desc[i]
        yield from walk(i + 1, chosen, chosen_mask)
        if g <= span_bound and all(s in chosen for s in needed[g]):
            yield from walk(i + 1, chosen | {g}, chosen_mask | (1 << g))

    yield from walk(0, frozenset(), 0)


def sup_search(H: NumericalSemigroup, span_bound: int, max_count: int = 200000):
    """(max idealization type, witness) over the delta-0 monomial ideals.

    Every enumerated ideal is a shift of an m-primary ideal of R, and
    shifting does not change the idealization type.  The maximum never
    exceeds r(R) + e; whether the witness is the blow-up is reported by the
    caller, not assumed here.
    """
    bound = H.type() + H.multiplicity
    best_value = 0
    best_witness = None
    for ideal in enumerate_monomial_ideals(H, span_bound, max_count=max_count):
        value = idealization_type(ideal).value
        if value > bound:
            raise ConsistencyError(
                f"idealization type {value} exceeds r(R) + e = {bound} "
                f"for {ideal.describe()}"
            )
        if value > best_value:
            best_value = value
            best_witness = ideal
    return best_value, best_witness
