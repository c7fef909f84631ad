"""Threshold predicates and verdicts built from certified positivity inputs.

Geometric inputs (anti-canonical degrees, curve lists, self-intersections)
are caller-supplied data; this module is the inference layer over them. All
comparisons are exact rational comparisons, and every strictness matches the
criterion it implements: the adjoint-jet criteria are strict, the ambient
characterization threshold is non-strict.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import isqrt

from .monomials import ensure_prime

# rule identifiers for the characterization verdict, by what each one needs
RULE_POINT_CHAR_P = "point_bound_char_p"
RULE_POINT_CHAR_ZERO = "point_bound_char_zero"
RULE_ALL_POINTS_DEGREE = "all_points_degree_bound"


class DataContradictionError(ValueError):
    """Supplied geometric data contradict a claimed bound."""


def _to_fraction(value) -> Fraction:
    if isinstance(value, str):
        num, _, den = value.partition("/")
        return Fraction(int(num), int(den) if den else 1)
    return Fraction(value)


@dataclass(frozen=True)
class FanoInput:
    """Certified inputs about an n-dimensional smooth variety with ample
    anti-canonical bundle.

    char is 0 or a prime; eps bounds refer to the anti-canonical bundle at a
    point (or uniformly at all points); curves_through_x lists pairs of
    (anti-canonical degree, multiplicity at the point).
    """

    n: int
    char: int = 0
    eps_lower_at_point: Fraction | None = None
    eps_lower_everywhere: Fraction | None = None
    antican_selfint: int | None = None
    min_rc_degree: int | None = None
    curves_through_x: tuple[tuple[int, int], ...] = field(default=())

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("dimension n must be >= 1")
        if self.char != 0:
            ensure_prime(self.char)
        for name in ("eps_lower_at_point", "eps_lower_everywhere"):
            value = getattr(self, name)
            if value is not None:
                value = _to_fraction(value)
                if value <= 0:
                    raise ValueError(f"{name} must be positive")
                object.__setattr__(self, name, value)
        if self.antican_selfint is not None and self.antican_selfint < 1:
            raise ValueError("antican_selfint must be >= 1")
        curves = tuple((int(d), int(mult)) for d, mult in self.curves_through_x)
        if any(d < 1 or mult < 1 for d, mult in curves):
            raise ValueError("curve degrees and multiplicities must be >= 1")
        object.__setattr__(self, "curves_through_x", curves)

    @classmethod
    def from_json(cls, doc: dict) -> "FanoInput":
        known = {
            "n",
            "char",
            "eps_lower_at_point",
            "eps_lower_everywhere",
            "antican_selfint",
            "min_rc_degree",
            "curves_through_x",
        }
        unknown = set(doc) - known
        if unknown:
            raise ValueError(f"unknown FanoInput keys: {sorted(unknown)}")
        doc = dict(doc)
        for name in ("eps_lower_at_point", "eps_lower_everywhere"):
            if doc.get(name) is not None:
                doc[name] = _to_fraction(doc[name])
        if "curves_through_x" in doc and doc["curves_through_x"] is not None:
            doc["curves_through_x"] = tuple(tuple(c) for c in doc["curves_through_x"])
        else:
            doc.pop("curves_through_x", None)
        return cls(**doc)


@dataclass(frozen=True)
class AdjointJetReport:
    """Which separation criteria fire for the adjoint bundle at the point."""

    seshadri_criterion: bool | None
    frobenius_criterion: bool | None
    frobenius_threshold_implied: bool | None
    separates: bool
    conclusion: str

    def to_json(self) -> dict:
        return {
            "seshadri_criterion": self.seshadri_criterion,
            "frobenius_criterion": self.frobenius_criterion,
            "frobenius_threshold_implied": self.frobenius_threshold_implied,
            "separates": self.separates,
            "conclusion": self.conclusion,
        }


def adjoint_jet_report(
    n: int, ell: int, eps: Fraction | None = None, eps_frob: Fraction | None = None
) -> AdjointJetReport:
    """Strict thresholds: eps > n + ell, or the level-ell bound > ell + 1.

    A Seshadri bound also implies the Frobenius threshold through the
    comparison factor (ell+1)/(ell+n).
    """
    if eps is None and eps_frob is None:
        raise ValueError("need at least one of eps or eps_frob")
    seshadri_fires = None if eps is None else eps > n + ell
    frobenius_fires = None if eps_frob is None else eps_frob > ell + 1
    implied = None if eps is None else Fraction(ell + 1, ell + n) * eps > ell + 1
    separates = bool(seshadri_fires) or bool(frobenius_fires) or bool(implied)
    conclusion = (
        f"adjoint bundle separates {ell}-jets at the point"
        if separates
        else "no conclusion"
    )
    return AdjointJetReport(seshadri_fires, frobenius_fires, implied, separates, conclusion)


def very_ample_report(
    eps_frob0_at_point: Fraction | None = None,
    eps_frob0_everywhere: Fraction | None = None,
) -> dict:
    """Level-0 bounds above 2: very big at a point, very ample everywhere."""
    everywhere = eps_frob0_everywhere is not None and eps_frob0_everywhere > 2
    at_point = (eps_frob0_at_point is not None and eps_frob0_at_point > 2) or everywhere
    return {"very_big": at_point, "very_ample": everywhere}


def seshineq_check(n: int, eps: Fraction, s_values: dict) -> bool:
    """(m+1)*eps - (n+1) <= s(m) <= m*eps for every supplied degree m."""
    eps = _to_fraction(eps)
    for m, s in s_values.items():
        if not ((m + 1) * eps - (n + 1) <= s <= m * eps):
            return False
    return True


def seshadri_at_most_dim_plus_one(n: int, eps: Fraction) -> bool:
    """The bound derived from the degree-1 link of the chain."""
    return _to_fraction(eps) <= n + 1


def seshadri_upper_from_curves(curves) -> Fraction:
    """min over curves of degree/multiplicity, an upper bound at the point."""
    curves = list(curves)
    if not curves:
        raise ValueError("need at least one curve")
    return min(Fraction(d, mult) for d, mult in curves)


def degree_bound_check(n: int, eps: Fraction, antican_selfint: int) -> bool:
    """eps^n <= (-K)^n, compared exactly (no real roots taken)."""
    if antican_selfint < 1:
        raise ValueError("antican_selfint must be >= 1")
    return _to_fraction(eps) ** n <= antican_selfint


def mori_mukai_inputs(min_rc_degree: int, n: int) -> bool:
    """Whether every rational curve meets the degree threshold n + 1."""
    return min_rc_degree >= n + 1


@dataclass(frozen=True)
class CharPnVerdict:
    verdict: str
    rule: str | None
    fired: tuple[str, ...]
    checks: dict
    warnings: tuple[str, ...]

    def to_json(self) -> dict:
        return {
            "verdict": self.verdict,
            "rule": self.rule,
            "fired": list(self.fired),
            "checks": self.checks,
            "warnings": list(self.warnings),
        }


def charpn_verdict(inp: FanoInput) -> CharPnVerdict:
    """Decide whether the inputs force the variety to be projective space.

    Fires on a point bound >= n+1 (positive characteristic, or characteristic
    zero through the cited degeneration), or on an everywhere bound >= n+1 in
    positive characteristic via the rational-curve and degree conditions.
    Curve data can only block, never fire, and inconsistent data raise.
    """
    n = inp.n
    target = n + 1
    checks: dict = {}
    warnings: list[str] = []

    curve_upper = None
    if inp.curves_through_x:
        curve_upper = seshadri_upper_from_curves(inp.curves_through_x)
        checks["curve_upper_bound"] = curve_upper

    claimed = [
        b for b in (inp.eps_lower_at_point, inp.eps_lower_everywhere) if b is not None
    ]
    best_point = max(claimed) if claimed else None

    if curve_upper is not None and best_point is not None and curve_upper < best_point:
        raise DataContradictionError(
            f"curve upper bound {curve_upper} is below the claimed lower bound {best_point}"
        )
    if inp.eps_lower_everywhere is not None and inp.min_rc_degree is not None:
        if inp.min_rc_degree < inp.eps_lower_everywhere:
            raise DataContradictionError(
                "minimal rational-curve degree is below the everywhere lower bound"
            )
    if inp.antican_selfint is not None and best_point is not None:
        if not degree_bound_check(n, best_point, inp.antican_selfint):
            raise DataContradictionError(
                "claimed lower bound exceeds the n-th root of the anti-canonical degree"
            )

    fired = []
    if best_point is not None and best_point >= target:
        if inp.char > 0:
            fired.append(RULE_POINT_CHAR_P)
        else:
            fired.append(RULE_POINT_CHAR_ZERO)
    if (
        inp.char > 0
        and inp.eps_lower_everywhere is not None
        and inp.eps_lower_everywhere >= target
    ):
        # the all-points route needs the degree condition; it is derivable
        # from the everywhere bound, and provided data must agree with it
        degree_ok = (
            inp.antican_selfint is None
            or degree_bound_check(n, Fraction(target), inp.antican_selfint)
        )
        checks["degree_condition_derivable"] = degree_ok
        if degree_ok:
            fired.append(RULE_ALL_POINTS_DEGREE)

    if best_point is not None:
        checks["point_bound_met"] = best_point >= target
    if curve_upper is not None and curve_upper < target and not fired:
        warnings.append(
            f"curve upper bound {curve_upper} < {target}: the point hypothesis cannot hold here"
        )

    verdict = "isomorphic_to_Pn" if fired else "no_conclusion"
    return CharPnVerdict(
        verdict=verdict,
        rule=fired[0] if fired else None,
        fired=tuple(fired),
        checks=checks,
        warnings=tuple(warnings),
    )


@dataclass(frozen=True)
class RationalInterval:
    lower: Fraction
    upper: Fraction

    @property
    def width(self) -> Fraction:
        return self.upper - self.lower

    def __contains__(self, value) -> bool:
        return self.lower <= value <= self.upper


def _sqrt_interval(value: Fraction, scale: int) -> RationalInterval:
    # sqrt(a/b) = sqrt(a*b)/b, bracketed by scaled integer square roots
    a, b = value.numerator, value.denominator
    big = a * b * scale * scale
    root = isqrt(big)
    if root * root == big:
        exact = Fraction(root, b * scale)
        return RationalInterval(exact, exact)
    return RationalInterval(Fraction(root, b * scale), Fraction(root + 1, b * scale))


def bauer_surface_lower(sigma: Fraction) -> RationalInterval:
    """Enclosing interval for the surface lower bound 2 / (1 + sqrt(4*sigma + 13)).

    Width at most 10^-12; perfect-square radicands give an exact point
    interval.
    """
    sigma = _to_fraction(sigma)
    radicand = 4 * sigma + 13
    if radicand < 0:
        raise ValueError(f"negative radicand 4*sigma + 13 = {radicand}")
    tolerance = Fraction(1, 10**12)
    scale = 10**15
    while True:
        root = _sqrt_interval(radicand, scale)
        interval = RationalInterval(2 / (1 + root.upper), 2 / (1 + root.lower))
        if interval.width <= tolerance:
            return interval
        scale *= 1000


def meets_bauer_bound(eps: Fraction, sigma: Fraction) -> bool:
    """Exact predicate eps >= 2 / (1 + sqrt(4*sigma + 13)).

    Rearranged to 2/eps - 1 <= sqrt(4*sigma + 13) and squared only when the
    left side is positive, so no real roots are ever taken.
    """
    eps = _to_fraction(eps)
    sigma = _to_fraction(sigma)
    radicand = 4 * sigma + 13
    if radicand < 0:
        raise ValueError(f"negative radicand 4*sigma + 13 = {radicand}")
    if eps <= 0:
        return False
    t = Fraction(2, 1) / eps - 1
    return t <= 0 or t * t <= radicand
