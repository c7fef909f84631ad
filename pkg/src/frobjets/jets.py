"""Separation of ordinary and Frobenius jets on staircase section models.

Separation of a jet ideal at degree m means exactly that the ideal's cobasis
is attainable at m: on a monomial model the restriction map is diagonal on the
monomial basis (attainable monomials map to their own residue classes, ideal
monomials to zero), so surjectivity is staircase coverage.

Three interchangeable checkers are provided:

* "fast": per-constraint maximization of <w, a> over the complement of the
  jet ideal, in closed form.  A monomial x^a lies outside the bracket power
  by p^e of the (ell+1)-st maximal-ideal power iff
  sum_i floor(a_i / p^e) <= ell, so the maximum splits into a quotient part
  ell * p^e * max(w) and a remainder part (p^e - 1) * sum(w).
* "cobasis": materialize the cobasis and check coverage point by point.
* "rank": build the restriction matrix over F_p and compare its rank to the
  quotient dimension (tiny inputs only).
"""

from __future__ import annotations

from functools import lru_cache

from .models import SectionModel
from .monomials import (
    MonomialIdeal,
    bracket_power,
    cobasis,
    ensure_prime,
    maximal_ideal,
    power,
)

NEG_INF = float("-inf")

METHODS = ("fast", "cobasis", "rank")


@lru_cache(maxsize=512)
def jet_ideal(n: int, ell: int, e: int, p: int) -> MonomialIdeal:
    """The bracket power by p^e of the (ell+1)-st power of the maximal ideal."""
    return bracket_power(power(maximal_ideal(n), ell + 1), p, e)


def pn_threshold(n: int, ell: int, e: int, p: int) -> int:
    """Minimal degree at which projective n-space separates p^e-Frobenius ell-jets."""
    ensure_prime(p)
    q = p**e
    return ell * q + n * (q - 1)


def _constraint_load(weights, ell: int, e: int, p: int) -> int:
    # max of <w, a> over exponents outside the jet ideal (see module docstring)
    q = p**e
    return ell * q * max(weights) + (q - 1) * sum(weights)


def _separates_fast(model: SectionModel, m: int, ell: int, e: int, p: int) -> bool:
    return all(
        _constraint_load(w, ell, e, p) <= s * m for w, s in model.constraints
    )


def _separates_cobasis(model: SectionModel, m: int, ell: int, e: int, p: int) -> bool:
    quotient = cobasis(jet_ideal(model.n, ell, e, p))
    return all(model.attains(a, m) for a in quotient)


def _rank_mod_p(rows: list[list[int]], p: int) -> int:
    rank = 0
    ncols = len(rows[0]) if rows else 0
    rows = [row[:] for row in rows]
    for col in range(ncols):
        pivot = next((r for r in range(rank, len(rows)) if rows[r][col] % p), None)
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        inv = pow(rows[rank][col], -1, p)
        rows[rank] = [(x * inv) % p for x in rows[rank]]
        for r in range(len(rows)):
            if r != rank and rows[r][col] % p:
                factor = rows[r][col]
                rows[r] = [(x - factor * y) % p for x, y in zip(rows[r], rows[rank])]
        rank += 1
    return rank


def _separates_rank(model: SectionModel, m: int, ell: int, e: int, p: int) -> bool:
    """Defense-in-depth checker: rank of the literal restriction matrix over F_p."""
    ideal = jet_ideal(model.n, ell, e, p)
    quotient = sorted(cobasis(ideal))
    index = {a: i for i, a in enumerate(quotient)}
    rows = []
    for a in model.attainable_exponents(m, limit=200_000):
        row = [0] * len(quotient)
        if a in index:
            row[index[a]] = 1
        rows.append(row)
    if not quotient:
        return True
    if not rows:
        return False
    return _rank_mod_p(rows, p) == len(quotient)


_CHECKERS = {
    "fast": _separates_fast,
    "cobasis": _separates_cobasis,
    "rank": _separates_rank,
}


def separates_frobenius_jets(
    model: SectionModel, m: int, ell: int, e: int, p: int, method: str = "fast"
) -> bool:
    """Whether degree-m sections separate p^e-Frobenius ell-jets at the point."""
    if m < 1:
        raise ValueError("degree m must be >= 1")
    if ell < 0 or e < 0:
        raise ValueError("ell and e must be >= 0")
    ensure_prime(p)
    try:
        checker = _CHECKERS[method]
    except KeyError:
        raise ValueError(f"unknown method {method!r}; expected one of {METHODS}")
    return checker(model, m, ell, e, p)


def separates_jets(model: SectionModel, m: int, ell: int, method: str = "fast") -> bool:
    """Whether degree-m sections separate ordinary ell-jets at the point."""
    return separates_frobenius_jets(model, m, ell, 0, 2, method=method)


def missing_exponent(model: SectionModel, m: int, ell: int, e: int, p: int):
    """A cobasis exponent of the jet ideal that the model misses, or None.

    The witness is the corner that maximizes the violated constraint: all
    coordinates at p^e - 1, plus ell * p^e on a heaviest coordinate.
    """
    q = p**e
    for w, s in model.constraints:
        if _constraint_load(w, ell, e, p) > s * m:
            i = w.index(max(w))
            a = [q - 1] * model.n
            a[i] += ell * q
            return tuple(a)
    return None


def s_jets(model: SectionModel, m: int, method: str = "fast") -> int | float:
    """Largest ell such that degree-m sections separate ell-jets; -inf if none."""
    if not separates_jets(model, m, 0, method=method):
        return NEG_INF
    ell = 0
    while separates_jets(model, m, ell + 1, method=method):
        ell += 1
    return ell


def _e_search_bound(model: SectionModel, m: int, p: int) -> int:
    # Some constraint has a positive weight, so its load grows at least like
    # p^e - 1; separation must fail once p^e - 1 exceeds every slope * m.
    cap = max(s * m for _, s in model.constraints)
    e = 1
    while p**e - 1 <= cap:
        e += 1
    return e + 1


def s_frobenius(
    model: SectionModel, m: int, ell: int, p: int, method: str = "fast"
) -> int | float:
    """Largest e such that degree-m sections separate p^e-Frobenius ell-jets.

    Returns -inf when even e = 0 fails. Finite because bracket staircases
    grow with e while the attainable set at m is fixed.
    """
    ensure_prime(p)
    if not separates_frobenius_jets(model, m, ell, 0, p, method=method):
        return NEG_INF
    bound = _e_search_bound(model, m, p)
    e = 0
    while e < bound and separates_frobenius_jets(model, m, ell, e + 1, p, method=method):
        e += 1
    return e
