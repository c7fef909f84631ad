"""Integer calculus for principal-parts bundles and split bundles on the line.

Determinant classes live in the free abelian group on the canonical class and
the line bundle class; no geometry is attempted. The closed-form determinant
has a fractional-looking exponent, so it is evaluated in exact rationals and
asserted integral; the recursion provides the independent certificate.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations_with_replacement
from math import comb


@dataclass(frozen=True)
class PicClass:
    """omega^omega_exp tensor L^l_exp in the rank-2 class lattice."""

    omega_exp: int
    l_exp: int

    def to_json(self) -> dict:
        return {"omega": self.omega_exp, "l": self.l_exp}


def rank_pp(n: int, ell: int) -> int:
    """Rank of the ell-th principal-parts bundle in dimension n.

    Telescopes the defining exact sequences: 1 + sum of symmetric-power ranks.
    """
    if n < 1 or ell < 0:
        raise ValueError("need n >= 1 and ell >= 0")
    return 1 + sum(comb(n + k - 1, n - 1) for k in range(1, ell + 1))


def det_pp_recursive(n: int, ell: int) -> PicClass:
    """Determinant class accumulated step by step along the rank recursion."""
    if n < 1 or ell < 0:
        raise ValueError("need n >= 1 and ell >= 0")
    omega_exp, l_exp = 0, 1
    for k in range(1, ell + 1):
        omega_exp += comb(n + k - 1, n)
        l_exp += comb(n + k - 1, n - 1)
    return PicClass(omega_exp, l_exp)


def det_pp_closed(n: int, ell: int) -> PicClass:
    """Closed form (omega^ell tensor L^(n+1)) ^ (C(n+ell, n) / (n+1)).

    The division is carried out in exact arithmetic and must be integral;
    a non-integral exponent would contradict the recursion and raises.
    """
    if n < 1 or ell < 0:
        raise ValueError("need n >= 1 and ell >= 0")
    total = comb(n + ell, n)
    omega_exp = Fraction(ell * total, n + 1)
    l_exp = Fraction((n + 1) * total, n + 1)
    if omega_exp.denominator != 1 or l_exp.denominator != 1:
        raise ArithmeticError(
            f"closed-form determinant exponent is not integral at (n={n}, ell={ell})"
        )
    return PicClass(int(omega_exp), int(l_exp))


def check_binomial_identities(n: int, ell: int) -> bool:
    """The two exact-rational identities behind the determinant recursion."""
    if n < 1 or ell < 1:
        raise ValueError("need n >= 1 and ell >= 1")
    lhs1 = comb(n + ell - 1, n) + Fraction(ell - 1, n + 1) * comb(n + ell - 1, n)
    rhs1 = Fraction(ell, n + 1) * comb(n + ell, n)
    pascal = comb(n + ell - 1, n - 1) + comb(n + ell - 1, n) == comb(n + ell, n)
    return lhs1 == rhs1 and pascal


@dataclass(frozen=True)
class SplitBundle:
    """A direct sum of line bundles on the line, as a degree multiset."""

    degrees: tuple[int, ...]

    def __post_init__(self):
        if not self.degrees:
            raise ValueError("a split bundle needs rank >= 1")
        object.__setattr__(self, "degrees", tuple(sorted(int(d) for d in self.degrees)))

    @property
    def rank(self) -> int:
        return len(self.degrees)


def dual(bundle: SplitBundle) -> SplitBundle:
    return SplitBundle(tuple(-d for d in bundle.degrees))


def tensor_line(bundle: SplitBundle, d: int) -> SplitBundle:
    return SplitBundle(tuple(x + d for x in bundle.degrees))


def sym_power(bundle: SplitBundle, k: int) -> SplitBundle:
    """Symmetric power: degree sums over all size-k multisets of summands."""
    if k < 1:
        raise ValueError("symmetric power degree k must be >= 1")
    sums = [
        sum(bundle.degrees[i] for i in choice)
        for choice in combinations_with_replacement(range(bundle.rank), k)
    ]
    return SplitBundle(tuple(sums))


def is_globally_generated(bundle: SplitBundle) -> bool:
    return all(d >= 0 for d in bundle.degrees)


def is_ample(bundle: SplitBundle) -> bool:
    return all(d > 0 for d in bundle.degrees)


@dataclass(frozen=True)
class MoriEndgameReport:
    """Arithmetic of the positivity endgame for a pulled-back tangent bundle.

    For summand degrees a on the line, b is the anti-canonical degree sum(a);
    the quotient bundle has degrees (multiset sums of n+1 of the a_i) - b, it
    is globally generated iff (n+1)*min(a) >= b, and global generation with
    b > 0 forces every a_i >= b/(n+1) > 0.
    """

    b: int
    quotient_degrees: tuple[int, ...]
    gg: bool
    all_ai_positive: bool

    def to_json(self) -> dict:
        return {
            "b": self.b,
            "quotient_degrees": list(self.quotient_degrees),
            "gg": self.gg,
            "all_ai_positive": self.all_ai_positive,
        }


def mori_endgame(a) -> MoriEndgameReport:
    a = tuple(int(x) for x in a)
    if not a:
        raise ValueError("need at least one summand degree")
    n = len(a)
    b = sum(a)
    # (Sym^(n+1) of the dual)^dual tensor O(-b), expanded summand by summand
    quotient = tensor_line(dual(sym_power(dual(SplitBundle(a)), n + 1)), -b)
    gg = (n + 1) * min(a) >= b
    return MoriEndgameReport(
        b=b,
        quotient_degrees=quotient.degrees,
        gg=gg,
        all_ai_positive=gg and b > 0 and min(a) > 0,
    )
