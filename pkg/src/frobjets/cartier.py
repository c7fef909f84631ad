"""The trace map on monomial top-forms over a characteristic-p local model.

A form is coeff * x^a * dx1^...^dxn with coeff in the prime field F_p. The
e-fold trace sends x^a dx to x^((a+1)/p^e - 1) dx when p^e divides every
entry of a + 1, and to zero otherwise; the coefficient picks up the unique
p^e-th root, which on the prime field is the coefficient itself.

The monomial formula is hard-coded; its correctness is pinned down by the
verification suite in this module (explicit surjectivity preimages, the
ideal-image identity, semilinearity over p^e-th powers, and the iteration
law), not derived from duality theory.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import product

from .monomials import Exponent, MonomialIdeal, bracket_power, ensure_prime


@dataclass(frozen=True)
class MonomialForm:
    """coeff * x^exponent * dx1^...^dxn; the zero form has coeff 0."""

    coeff: int
    exponent: Exponent

    @property
    def is_zero(self) -> bool:
        return self.coeff == 0

    def __str__(self) -> str:
        from .monomials import render_monomial

        if self.is_zero:
            return "0"
        n = len(self.exponent)
        wedge = "^".join(f"dx{i + 1}" for i in range(n))
        return f"{self.coeff}*{render_monomial(self.exponent)}*{wedge}"


def zero_form(n: int) -> MonomialForm:
    return MonomialForm(0, (0,) * n)


def form(coeff: int, exponent, p: int) -> MonomialForm:
    """Normalized form with coefficient reduced mod p."""
    ensure_prime(p)
    exponent = tuple(int(x) for x in exponent)
    if any(x < 0 for x in exponent):
        raise ValueError("form exponents must be >= 0")
    coeff %= p
    if coeff == 0:
        return zero_form(len(exponent))
    return MonomialForm(coeff, exponent)


def pe_th_root(c: int, p: int, e: int) -> int:
    """The unique p^e-th root of c in F_p.

    The e-fold Frobenius x -> x^(p^e) is the identity on the prime field
    (p^e is 1 mod p-1), so the root is c itself; computed via the inverse
    exponent to keep the inversion step explicit.
    """
    c %= p
    if c == 0 or e == 0 or p == 2:
        return c
    inverse_exponent = pow(pow(p, e, p - 1), -1, p - 1)
    return pow(c, inverse_exponent, p)


def trace(w: MonomialForm, p: int, e: int) -> MonomialForm:
    """Apply the e-fold trace to a monomial top-form."""
    ensure_prime(p)
    if e < 0:
        raise ValueError("e must be >= 0")
    c = w.coeff % p
    if c == 0:
        return zero_form(len(w.exponent))
    if e == 0:
        return MonomialForm(c, w.exponent)
    q = p**e
    shifted = [a + 1 for a in w.exponent]
    if any(s % q for s in shifted):
        return zero_form(len(w.exponent))
    return MonomialForm(pe_th_root(c, p, e), tuple(s // q - 1 for s in shifted))


def monomial_times(w: MonomialForm, c: Exponent) -> MonomialForm:
    """Multiply a form by the monomial x^c."""
    if w.is_zero:
        return w
    return MonomialForm(w.coeff, tuple(a + x for a, x in zip(w.exponent, c)))


def _box(n: int, top: int):
    return product(range(top + 1), repeat=n)


def surjectivity_counterexample(n: int, p: int, e: int, box: int):
    """A target exponent within the box whose canonical preimage fails, or None.

    For each target b the form x^(p^e*(b+1)-1) dx must trace to x^b dx.
    """
    ensure_prime(p)
    q = p**e
    for b in _box(n, box):
        preimage = MonomialForm(1, tuple(q * (x + 1) - 1 for x in b))
        if trace(preimage, p, e) != MonomialForm(1, b):
            return b
    return None


def verify_trace_surjective(n: int, p: int, e: int, box: int) -> bool:
    return surjectivity_counterexample(n, p, e, box) is None


def ideal_identity_counterexample(ideal: MonomialIdeal, p: int, e: int, box: int):
    """A box exponent violating trace(bracket-power forms) == ideal forms, or None.

    Compares, within the box, the set of exponents hit by tracing forms with
    exponent in the bracket power against the set of exponents in the ideal;
    also rejects any traced form that escapes the ideal.
    """
    ensure_prime(p)
    n = ideal.n
    q = p**e
    bracket = bracket_power(ideal, p, e)
    image = set()
    for a in _box(n, q * (box + 1) - 1):
        if a not in bracket:
            continue
        traced = trace(MonomialForm(1, a), p, e)
        if traced.is_zero:
            continue
        if traced.exponent not in ideal:
            return traced.exponent
        if all(x <= box for x in traced.exponent):
            image.add(traced.exponent)
    target = {b for b in _box(n, box) if b in ideal}
    difference = image.symmetric_difference(target)
    return min(difference) if difference else None


def verify_trace_ideal_identity(ideal: MonomialIdeal, p: int, e: int, box: int) -> bool:
    return ideal_identity_counterexample(ideal, p, e, box) is None


def semilinearity_counterexample(p: int, e: int, samples):
    """A (c, form) pair violating trace(x^(p^e*c) * w) == x^c * trace(w), or None."""
    ensure_prime(p)
    q = p**e
    for c, w in samples:
        shifted = monomial_times(w, tuple(q * x for x in c))
        lhs = trace(shifted, p, e)
        rhs = monomial_times(trace(w, p, e), c)
        if lhs != rhs:
            return (c, w)
    return None


def verify_semilinearity(p: int, e: int, samples) -> bool:
    return semilinearity_counterexample(p, e, samples) is None


def random_forms(n: int, p: int, count: int, seed: int = 0, max_exp: int = 24):
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        coeff = rng.randrange(1, p)
        exponent = tuple(rng.randrange(max_exp + 1) for _ in range(n))
        out.append(MonomialForm(coeff, exponent))
    return out


def random_semilinearity_samples(
    n: int, p: int, count: int, seed: int = 0, max_exp: int = 16
):
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        c = tuple(rng.randrange(4) for _ in range(n))
        coeff = rng.randrange(1, p)
        exponent = tuple(rng.randrange(max_exp + 1) for _ in range(n))
        out.append((c, MonomialForm(coeff, exponent)))
    return out


def random_primary_ideal(
    n: int, rng: random.Random, max_gens: int = 5, max_exp: int = 8
) -> MonomialIdeal:
    """A random monomial ideal with finite complement (pure powers included)."""
    gens = [
        tuple(max_exp if i == j else 0 for i in range(n))
        for j in range(n)
    ]
    for _ in range(rng.randrange(1, max_gens + 1)):
        gens.append(tuple(rng.randrange(max_exp + 1) for _ in range(n)))
    return MonomialIdeal(n, tuple(gens))


def iteration_counterexample(p: int, e1: int, e2: int, forms):
    """A form where the (e1+e2)-fold trace differs from the composite, or None."""
    for w in forms:
        if trace(w, p, e1 + e2) != trace(trace(w, p, e1), p, e2):
            return w
    return None


def cartier_report(
    n: int, p: int, e: int, box: int, ideal: MonomialIdeal | None = None, seed: int = 0
) -> dict:
    """Run the full verification battery and collect one JSON-able report."""
    if ideal is None:
        from .monomials import maximal_ideal, power

        ideal = power(maximal_ideal(n), 2)
    surj_cex = surjectivity_counterexample(n, p, e, box)
    ideal_cex = ideal_identity_counterexample(ideal, p, e, min(box, 8))
    semi_cex = semilinearity_counterexample(
        p, e, random_semilinearity_samples(n, p, 200, seed=seed)
    )
    iter_cex = iteration_counterexample(p, 1, max(e - 1, 0), random_forms(n, p, 200, seed=seed))
    report = {
        "surjective": surj_cex is None,
        "ideal_identity": ideal_cex is None,
        "semilinear": semi_cex is None,
        "iteration": iter_cex is None,
    }
    for key, cex in (
        ("surjective", surj_cex),
        ("ideal_identity", ideal_cex),
        ("semilinear", semi_cex),
        ("iteration", iter_cex),
    ):
        if cex is not None:
            report["counterexample"] = {"check": key, "data": repr(cex)}
            break
    return report
