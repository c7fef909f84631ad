"""Exact arithmetic on monomial ideals in n variables over characteristic p.

Monomials are exponent tuples; ideals are stored as the divisibility-minimal
antichain of generators, so ideal equality is plain set equality. Everything
here is pure, exact (Python integers), and immutable.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from itertools import product
from math import isqrt


Exponent = tuple[int, ...]


def is_prime(p: int) -> bool:
    """Deterministic primality check by trial division."""
    if p < 2:
        return False
    if p < 4:
        return True
    if p % 2 == 0:
        return False
    d = 3
    limit = isqrt(p)
    while d <= limit:
        if p % d == 0:
            return False
        d += 2
    return True


class PrimeChar(int):
    """A prime characteristic p >= 2, validated at construction."""

    def __new__(cls, p):
        p = int(p)
        if not is_prime(p):
            raise ValueError(f"characteristic must be prime, got {p}")
        return super().__new__(cls, p)


def ensure_prime(p: int) -> int:
    if not is_prime(p):
        raise ValueError(f"characteristic must be prime, got {p}")
    return p


def divides(a: Exponent, b: Exponent) -> bool:
    """Componentwise a <= b, i.e. x^a divides x^b."""
    return all(x <= y for x, y in zip(a, b))


def _check_exponent(a, n: int) -> Exponent:
    a = tuple(int(x) for x in a)
    if len(a) != n:
        raise ValueError(f"exponent {a} has length {len(a)}, expected {n}")
    if any(x < 0 for x in a):
        raise ValueError(f"exponent entries must be >= 0, got {a}")
    return a


def _minimal_antichain(gens: set[Exponent]) -> list[Exponent]:
    # Keep only divisibility-minimal elements; scan in increasing total
    # degree so each candidate is only compared against kept generators.
    kept: list[Exponent] = []
    for a in sorted(gens, key=lambda g: (sum(g), g)):
        if not any(divides(b, a) for b in kept):
            kept.append(a)
    return sorted(kept)


@dataclass(frozen=True)
class MonomialIdeal:
    """A finitely generated monomial ideal, canonicalized at construction.

    The empty generator set is the zero ideal; the all-zero exponent
    generates the unit ideal.
    """

    n: int
    gens: tuple[Exponent, ...] = field(default=())

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("variable count n must be >= 1")
        checked = {_check_exponent(g, self.n) for g in self.gens}
        object.__setattr__(self, "gens", tuple(_minimal_antichain(checked)))

    def __contains__(self, a) -> bool:
        a = _check_exponent(a, self.n)
        return any(divides(g, a) for g in self.gens)

    def is_zero(self) -> bool:
        return not self.gens

    def is_unit(self) -> bool:
        return self.gens == ((0,) * self.n,)

    def __str__(self) -> str:
        if self.is_zero():
            return "(0)"
        return "(" + ", ".join(render_monomial(g) for g in self.gens) + ")"

    def to_json(self) -> dict:
        return {"n": self.n, "generators": [list(g) for g in self.gens]}


def render_monomial(a: Exponent) -> str:
    """Render x1^a1*...*xn^an, omitting zero exponents; the unit is "1"."""
    parts = []
    for i, x in enumerate(a, start=1):
        if x == 1:
            parts.append(f"x{i}")
        elif x > 1:
            parts.append(f"x{i}^{x}")
    return "*".join(parts) if parts else "1"


def minimalize(gens, n: int) -> MonomialIdeal:
    """Ideal generated by `gens`, reduced to its minimal antichain."""
    return MonomialIdeal(n, tuple(gens))


def zero_ideal(n: int) -> MonomialIdeal:
    return MonomialIdeal(n, ())


def unit_ideal(n: int) -> MonomialIdeal:
    return MonomialIdeal(n, ((0,) * n,))


def maximal_ideal(n: int) -> MonomialIdeal:
    """The ideal (x1, ..., xn) of the origin."""
    if n < 1:
        raise ValueError("variable count n must be >= 1")
    gens = []
    for i in range(n):
        g = [0] * n
        g[i] = 1
        gens.append(tuple(g))
    return MonomialIdeal(n, tuple(gens))


def _minkowski(a_gens, b_gens, n: int) -> MonomialIdeal:
    sums = {tuple(x + y for x, y in zip(a, b)) for a in a_gens for b in b_gens}
    return MonomialIdeal(n, tuple(sums))


def power(ideal: MonomialIdeal, k: int) -> MonomialIdeal:
    """k-fold product ideal; the 0th power is the unit ideal.

    Computed by iterated Minkowski sums of the generator exponents, with
    minimalization after every step to bound intermediate blowup.
    """
    if k < 0:
        raise ValueError("power exponent must be >= 0")
    if k == 0:
        return unit_ideal(ideal.n)
    result = ideal
    for _ in range(k - 1):
        result = _minkowski(result.gens, ideal.gens, ideal.n)
    return result


@lru_cache(maxsize=512)
def _maximal_power(n: int, k: int) -> MonomialIdeal:
    return power(maximal_ideal(n), k)


def bracket_power(ideal: MonomialIdeal, p: int, e: int) -> MonomialIdeal:
    """Frobenius power: every generator exponent scaled entrywise by p^e."""
    ensure_prime(p)
    if e < 0:
        raise ValueError("Frobenius exponent e must be >= 0")
    q = p**e
    # Scaling preserves the antichain property, so no re-minimalization is
    # needed; the constructor re-checks anyway.
    return MonomialIdeal(ideal.n, tuple(tuple(q * x for x in g) for g in ideal.gens))


def contains(big: MonomialIdeal, small: MonomialIdeal) -> bool:
    """Whether small is a subset of big, generator by generator."""
    if big.n != small.n:
        raise ValueError(f"variable counts differ: {big.n} vs {small.n}")
    return all(g in big for g in small.gens)


def noncontainment_witness(big: MonomialIdeal, small: MonomialIdeal) -> Exponent | None:
    """A minimal generator of small that is not in big, if any."""
    if big.n != small.n:
        raise ValueError(f"variable counts differ: {big.n} vs {small.n}")
    for g in small.gens:
        if g not in big:
            return g
    return None


def _pure_power_bounds(ideal: MonomialIdeal) -> list[int]:
    # For a finite complement every variable needs a pure-power generator;
    # the complement then lives strictly below those powers.
    bounds = [None] * ideal.n
    for g in ideal.gens:
        support = [i for i, x in enumerate(g) if x > 0]
        if len(support) == 1:
            i = support[0]
            if bounds[i] is None or g[i] < bounds[i]:
                bounds[i] = g[i]
    missing = [i for i, b in enumerate(bounds) if b is None]
    if missing:
        raise ValueError(
            "not zero-dimensional: no pure power of variable(s) "
            + ", ".join(f"x{i + 1}" for i in missing)
        )
    return bounds


@lru_cache(maxsize=256)
def cobasis(ideal: MonomialIdeal) -> frozenset[Exponent]:
    """Exponents of the monomials outside the ideal (the staircase complement).

    Raises if the complement is infinite.
    """
    if ideal.is_unit():
        return frozenset()
    if ideal.is_zero():
        raise ValueError("not zero-dimensional: zero ideal has infinite complement")
    bounds = _pure_power_bounds(ideal)
    return frozenset(
        a for a in product(*(range(b) for b in bounds)) if a not in ideal
    )


def staircase_corners(ideal: MonomialIdeal):
    """Candidate componentwise-maximal points of the staircase complement.

    Every maximal point outside the ideal has each coordinate equal to some
    generator coordinate minus one, so the product of those candidate values
    covers all corners without enumerating the complement.
    """
    if ideal.is_unit():
        return
    _pure_power_bounds(ideal)
    candidate_coords = []
    for i in range(ideal.n):
        values = {g[i] - 1 for g in ideal.gens if g[i] >= 1}
        candidate_coords.append(sorted(values))
    for a in product(*candidate_coords):
        if a not in ideal:
            yield a


def staircase_max_degree(ideal: MonomialIdeal) -> int:
    """Largest total degree of a monomial outside the ideal; -1 if none.

    Requires a finite complement. Searches staircase corners only, which
    keeps powers with huge exponents tractable.
    """
    if ideal.is_unit():
        return -1
    best = -1
    for a in staircase_corners(ideal):
        d = sum(a)
        if d > best:
            best = d
    return best


def contains_maximal_power(ideal: MonomialIdeal, d: int) -> bool:
    """Whether the d-th power of the maximal ideal is a subset of `ideal`.

    A monomial lies in that power exactly when its total degree is >= d, so
    the containment holds iff everything outside `ideal` has degree < d.
    """
    if d <= 0:
        return ideal.is_unit()
    if ideal.is_zero():
        return False
    return staircase_max_degree(ideal) < d


def min_generator_degree(ideal: MonomialIdeal) -> int | None:
    return min((sum(g) for g in ideal.gens), default=None)


@dataclass(frozen=True)
class InclusionReport:
    """Outcome of the three-part power/bracket-power inclusion check."""

    left_inclusion: bool
    right_inclusion: bool
    sharpness: bool
    witness: Exponent

    @property
    def all_ok(self) -> bool:
        return self.left_inclusion and self.right_inclusion and self.sharpness


def verify_lemma_monomials(n: int, ell: int, e: int, p: int) -> InclusionReport:
    """Check the inclusion chain around the bracket power of a maximal-ideal power.

    Verifies, for the maximal ideal in n variables:

        (ordinary power of degree ell*p^e + n*(p^e-1) + 1)
            is contained in (bracket power by p^e of the (ell+1)-st power)
            is contained in (ordinary power of degree (ell+1)*p^e),

    and that the chain is sharp: the monomial x1^(ell*p^e) * (x1*...*xn)^(p^e-1)
    has total degree ell*p^e + n*(p^e-1) but lies outside the bracket power.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    if ell < 0 or e < 0:
        raise ValueError("ell and e must be >= 0")
    ensure_prime(p)
    q = p**e
    bracket = bracket_power(_maximal_power(n, ell + 1), p, e)

    left = contains_maximal_power(bracket, ell * q + n * (q - 1) + 1)
    right_degree = (ell + 1) * q
    right = all(sum(g) >= right_degree for g in bracket.gens)

    witness = tuple(ell * q + (q - 1) if i == 0 else q - 1 for i in range(n))
    sharpness = sum(witness) == ell * q + n * (q - 1) and witness not in bracket
    return InclusionReport(left, right, sharpness, witness)
