"""Certified exact-rational lower bounds for Seshadri-type constants.

Every bound comes as a certificate whose witness re-verifies against the jets
engine; derivation rules (tensor powers, globally generated twists) transform
certificates without leaving the certified world. No floating point anywhere.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, replace
from fractions import Fraction

from .jets import (
    NEG_INF,
    pn_threshold,
    s_frobenius,
    s_jets,
    separates_frobenius_jets,
    separates_jets,
)
from .models import SectionModel, scaled_model
from .monomials import ensure_prime

SESHADRI = "seshadri"
FROBENIUS = "frobenius_seshadri"


class RuleInapplicableError(ValueError):
    """A certificate derivation rule was applied outside its preconditions."""


@dataclass(frozen=True)
class BoundCertificate:
    """An exact rational lower bound together with its finite witness.

    For the ordinary kind the witness is (m, s) and the value is s/m; for
    the Frobenius kind the witness is (m, e) and the value is
    (p^e - 1) * (ell + 1) / m.
    """

    kind: str
    value: Fraction
    witness: tuple[int, int]
    ell: int | None = None
    p: int | None = None
    derivation: tuple[str, ...] = ("direct",)

    def recomputed_value(self) -> Fraction:
        m, second = self.witness
        if self.kind == SESHADRI:
            return Fraction(second, m)
        return Fraction((self.p**second - 1) * (self.ell + 1), m)

    def reverify(self, model: SectionModel, method: str = "fast") -> bool:
        """Re-check the witness against the jets engine and the stated value."""
        if self.value != self.recomputed_value():
            return False
        m, second = self.witness
        if self.kind == SESHADRI:
            return separates_jets(model, m, second, method=method)
        return separates_frobenius_jets(model, m, self.ell, second, self.p, method=method)

    def to_json(self) -> dict:
        doc = {
            "kind": self.kind,
            "value": f"{self.value.numerator}/{self.value.denominator}",
            "witness": list(self.witness),
            "derivation": list(self.derivation),
        }
        if self.kind == FROBENIUS:
            doc["ell"] = self.ell
            doc["p"] = self.p
        return doc


def seshadri_lower(
    model: SectionModel, m_max: int, method: str = "fast"
) -> BoundCertificate | None:
    """Best bound max s(m)/m over degrees up to m_max; ties go to smallest m.

    Returns None when no degree separates even 0-jets ("no certificate").
    """
    if m_max < 1:
        raise ValueError("m_max must be >= 1")
    best = None
    for m in range(1, m_max + 1):
        s = s_jets(model, m, method=method)
        if s == NEG_INF:
            continue
        value = Fraction(s, m)
        if best is None or value > best.value:
            best = BoundCertificate(SESHADRI, value, (m, s))
    return best


def _sweep_cells(model, p, ell, m_max, e_max):
    for e in range(e_max + 1):
        for m in range(1, m_max + 1):
            yield e, m


def _evaluate_cell(model, p, ell, cell):
    e, m = cell
    separating = separates_frobenius_jets(model, m, ell, e, p)
    value = Fraction((p**e - 1) * (ell + 1), m) if separating else None
    return e, m, separating, value


def _better(a, b):
    # Associative, order-independent reduction: larger value wins, then
    # smaller e, then smaller m.
    if a is None:
        return b
    if b is None:
        return a
    ka = (a.value, -a.witness[1], -a.witness[0])
    kb = (b.value, -b.witness[1], -b.witness[0])
    return a if ka >= kb else b


def frobenius_sweep_table(
    model: SectionModel, p: int, ell: int, m_max: int, e_max: int, parallelism: int = 0
):
    """All (e, m, separates, value) cells of the certificate grid."""
    ensure_prime(p)
    cells = list(_sweep_cells(model, p, ell, m_max, e_max))
    if parallelism and parallelism > 1:
        with ThreadPoolExecutor(max_workers=parallelism) as pool:
            rows = list(pool.map(lambda c: _evaluate_cell(model, p, ell, c), cells))
    else:
        rows = [_evaluate_cell(model, p, ell, c) for c in cells]
    return rows


def frobenius_seshadri_lower(
    model: SectionModel,
    p: int,
    ell: int,
    m_max: int,
    e_max: int,
    parallelism: int = 0,
) -> BoundCertificate | None:
    """Best Frobenius bound over the (m, e) grid; ties go to smallest (e, m).

    Returns None when no grid cell separates ("no certificate").
    """
    if m_max < 1 or e_max < 1:
        raise ValueError("m_max and e_max must be >= 1")
    if ell < 0:
        raise ValueError("ell must be >= 0")
    best = None
    for e, m, separating, value in frobenius_sweep_table(
        model, p, ell, m_max, e_max, parallelism
    ):
        if not separating:
            continue
        cand = BoundCertificate(FROBENIUS, value, (m, e), ell=ell, p=p)
        best = _better(best, cand)
    return best


def certificate_at(
    model: SectionModel, p: int, ell: int, m: int, e: int, method: str = "fast"
) -> BoundCertificate:
    """Certificate for one verified (m, e) witness."""
    if not separates_frobenius_jets(model, m, ell, e, p, method=method):
        raise ValueError(f"degree {m} does not separate p^{e}-Frobenius {ell}-jets")
    value = Fraction((p**e - 1) * (ell + 1), m)
    return BoundCertificate(FROBENIUS, value, (m, e), ell=ell, p=p)


def closed_form_pn(n: int, ell: int) -> Fraction:
    """Exact Frobenius-Seshadri value (ell+1)/(ell+n) on projective n-space."""
    if n < 1:
        raise ValueError("n must be >= 1")
    if ell < 0:
        raise ValueError("ell must be >= 0")
    return Fraction(ell + 1, ell + n)


@dataclass(frozen=True)
class SubsequenceDemo:
    """Certificate values along the two degree subsequences m_e and m_e - 1.

    Entry i corresponds to e = i + 1. The upper sequence increases to the
    closed-form limit (ell+1)/(ell+n); the lower one converges to the smaller
    limit (ell+1)/((ell+n)*p), which is why the defining supremum is only a
    limit superior.
    """

    upper_seq: tuple[Fraction, ...]
    lower_seq: tuple[Fraction | None, ...]


def subsequence_demo(n: int, ell: int, p: int, e_max: int) -> SubsequenceDemo:
    from .models import projective_space

    if e_max < 2:
        raise ValueError("e_max must be >= 2")
    ensure_prime(p)
    model = projective_space(n)
    upper = []
    lower = []
    for e in range(1, e_max + 1):
        m_e = pn_threshold(n, ell, e, p)
        upper.append(Fraction((ell + 1) * (p**e - 1), m_e))
        m_low = m_e - 1
        if m_low < 1:
            lower.append(None)
            continue
        s = s_frobenius(model, m_low, ell, p)
        if s == NEG_INF:
            lower.append(None)
        else:
            lower.append(Fraction((ell + 1) * (p**s - 1), m_low))
    return SubsequenceDemo(tuple(upper), tuple(lower))


def tensor_power_scale(cert: BoundCertificate, r: int, p: int) -> BoundCertificate:
    """Stretch a Frobenius witness (m, e) to (m * d_r, r * e), d_r = (p^(re)-1)/(p^e-1).

    The certified value is unchanged.
    """
    if cert.kind != FROBENIUS:
        raise RuleInapplicableError("tensor-power scaling applies to Frobenius certificates")
    if cert.p != p:
        raise RuleInapplicableError(f"certificate characteristic {cert.p} != {p}")
    if r < 1:
        raise ValueError("r must be >= 1")
    m, e = cert.witness
    if e == 0:
        raise RuleInapplicableError("tensor-power scaling needs a witness with e >= 1")
    d_r = (p ** (r * e) - 1) // (p**e - 1)
    scaled = replace(
        cert,
        witness=(m * d_r, r * e),
        derivation=cert.derivation + (f"tensor_power({r})",),
    )
    assert scaled.recomputed_value() == cert.value
    return scaled


def gg_twist_extend(
    cert: BoundCertificate, j: int, model: SectionModel
) -> BoundCertificate:
    """Twist a Frobenius witness by j extra degrees of a globally generated model.

    The witness moves from (m, e) to (m + j, e) and the value shrinks
    accordingly; the new witness is re-verified against the jets engine.
    """
    if cert.kind != FROBENIUS:
        raise RuleInapplicableError("gg twisting applies to Frobenius certificates")
    if j < 0:
        raise ValueError("j must be >= 0")
    if model.gg_from > j:
        raise RuleInapplicableError(
            f"model is only globally generated from degree {model.gg_from} > {j}"
        )
    if j == 0:
        return cert
    m, e = cert.witness
    twisted = BoundCertificate(
        FROBENIUS,
        Fraction((cert.p**e - 1) * (cert.ell + 1), m + j),
        (m + j, e),
        ell=cert.ell,
        p=cert.p,
        derivation=cert.derivation + (f"gg_twist({j})",),
    )
    if not twisted.reverify(model):
        raise RuleInapplicableError("twisted witness failed re-verification")
    return twisted


def check_comparison(n: int, ell: int, eps: Fraction, eps_frob: Fraction) -> bool:
    """Sandwich between (ell+1)/(ell+n) * eps and eps, exactly."""
    return Fraction(ell + 1, ell + n) * eps <= eps_frob <= eps


def check_level_comparison(
    n: int, ell: int, lower_level: int, eps_high: Fraction, eps_low: Fraction
) -> bool:
    """Double inequality between Frobenius constants of levels ell > lower_level."""
    if ell <= lower_level:
        raise ValueError("requires ell > lower_level")
    return (
        Fraction(ell + 1, ell + n) * eps_low
        <= eps_high
        <= Fraction(ell + 1, lower_level + 1) * eps_low
    )


def check_homogeneity(
    model: SectionModel, r: int, p: int, ell: int, m_max: int, e_max: int
) -> bool:
    """Every separating pair on the base model lifts to the r-scaled model.

    A witness (m, e) lifts to (ceil(m/r), e); when r divides m the lifted
    certificate value is exactly r times the base value.
    """
    if r < 1:
        raise ValueError("r must be >= 1")
    scaled = scaled_model(model, r)
    for e in range(e_max + 1):
        for m in range(1, m_max + 1):
            if not separates_frobenius_jets(model, m, ell, e, p):
                continue
            m_lift = -(-m // r)
            if not separates_frobenius_jets(scaled, m_lift, ell, e, p):
                return False
            if m % r == 0:
                base_value = Fraction((p**e - 1) * (ell + 1), m)
                lifted_value = Fraction((p**e - 1) * (ell + 1), m // r)
                if lifted_value != r * base_value:
                    return False
    return True
