from fractions import Fraction

import pytest

from frobjets.bounds import (
    FROBENIUS,
    BoundCertificate,
    RuleInapplicableError,
    certificate_at,
    check_comparison,
    check_homogeneity,
    check_level_comparison,
    closed_form_pn,
    frobenius_seshadri_lower,
    frobenius_sweep_table,
    gg_twist_extend,
    seshadri_lower,
    subsequence_demo,
    tensor_power_scale,
)
from frobjets.jets import pn_threshold, s_jets
from frobjets.models import (
    custom_staircase,
    product_projective,
    projective_space,
    scaled_model,
)


class TestSeshadriLower:
    def test_pn_value_one(self):
        cert = seshadri_lower(projective_space(2), 10)
        assert cert.value == 1
        assert cert.witness == (1, 1)

    def test_product_min(self):
        cert = seshadri_lower(product_projective(1, 1, 2, 3), 10)
        assert cert.value == 2
        # Oracle: sweep the s-values directly.
        assert max(Fraction(s_jets(product_projective(1, 1, 2, 3), m), m) for m in range(1, 11)) == 2

    def test_scaled_pn(self):
        cert = seshadri_lower(scaled_model(projective_space(2), 3), 10)
        assert cert.value == 3
        for m in range(1, 11):
            assert s_jets(scaled_model(projective_space(2), 3), m) == 3 * m

    def test_no_certificate_is_none(self):
        class NothingModel:
            n = 1
            constraints = (((1,), 0),)

            def attains(self, a, m):
                return False

        assert seshadri_lower(NothingModel(), 3, method="cobasis") is None

    def test_soundness(self):
        for model in (projective_space(3), product_projective(1, 2, 1, 2)):
            cert = seshadri_lower(model, 8)
            assert cert.reverify(model)
            assert cert.reverify(model, method="cobasis")


class TestFrobeniusSeshadriLower:
    def test_p2_reference(self):
        cert = frobenius_seshadri_lower(projective_space(2), 2, 0, 6, 2)
        assert cert.value == Fraction(1, 2)
        assert cert.witness == (2, 1)

    def test_ties_prefer_small_e_then_m(self):
        # On P^2 with ell=0, p=2: (2,1) and (6,2) both give 1/2.
        table = frobenius_sweep_table(projective_space(2), 2, 0, 6, 2)
        values = {(m, e) for e, m, sep, v in table if sep and v == Fraction(1, 2)}
        assert (2, 1) in values and (6, 2) in values
        cert = frobenius_seshadri_lower(projective_space(2), 2, 0, 6, 2)
        assert cert.witness == (2, 1)

    def test_approaches_closed_form(self):
        model = projective_space(2)
        values = []
        for e in range(1, 7):
            m = pn_threshold(2, 1, e, 2)
            values.append(certificate_at(model, 2, 1, m, e).value)
        assert values == sorted(values)
        assert all(v < closed_form_pn(2, 1) for v in values)
        assert closed_form_pn(2, 1) - values[-1] < Fraction(2, 2**6)

    def test_e_zero_certificates_worth_zero(self):
        # Force a grid with no separation at e >= 1: tiny m_max.
        model = projective_space(2)
        cert = frobenius_seshadri_lower(model, 2, 1, 1, 3)
        # threshold for e=1 is 4 > m_max=1, e=0 separates ell=1 at m=1
        assert cert.value == 0
        assert cert.witness == (1, 0)

    def test_no_certificate(self):
        model = projective_space(2)
        # m_max=1 cannot separate 2-jets at all, so nothing in the grid fires.
        assert frobenius_seshadri_lower(model, 2, 2, 1, 2) is None

    def test_parallel_matches_serial(self):
        model = product_projective(1, 1, 1, 2)
        serial = frobenius_seshadri_lower(model, 2, 1, 12, 3)
        parallel = frobenius_seshadri_lower(model, 2, 1, 12, 3, parallelism=4)
        assert serial == parallel

    def test_soundness_and_conservativity(self):
        for n in (1, 2, 3):
            model = projective_space(n)
            for ell in (0, 1, 2):
                cert = frobenius_seshadri_lower(model, 2, ell, 12, 3)
                assert cert.reverify(model)
                assert cert.value <= closed_form_pn(n, ell)


class TestClosedForm:
    def test_values(self):
        assert closed_form_pn(2, 0) == Fraction(1, 2)
        assert closed_form_pn(1, 7) == 1
        assert closed_form_pn(3, 2) == Fraction(3, 5)

    def test_tends_to_one(self):
        delta = Fraction(1, 10)
        n = 3
        ell = -(-(n * (1 - delta)) // delta)  # ceil(n(1-d)/d)
        assert closed_form_pn(n, int(ell)) > 1 - delta


class TestSubsequenceDemo:
    def test_reference_values(self):
        demo = subsequence_demo(2, 1, 2, 8)
        assert demo.lower_seq[-1] == Fraction(254, 765)
        assert abs(demo.lower_seq[-1] - Fraction(1, 3)) < Fraction(1, 100)

    def test_upper_strictly_increasing_below_limit(self):
        demo = subsequence_demo(2, 1, 2, 8)
        assert list(demo.upper_seq) == sorted(set(demo.upper_seq))
        assert all(v < closed_form_pn(2, 1) for v in demo.upper_seq)

    def test_lower_limit(self):
        demo = subsequence_demo(3, 2, 3, 6)
        target = Fraction(2 + 1, (2 + 3) * 3)
        assert abs(demo.lower_seq[-1] - target) < Fraction(1, 50)

    def test_e_max_validated(self):
        with pytest.raises(ValueError):
            subsequence_demo(2, 1, 2, 1)


class TestDerivationRules:
    def test_tensor_power_d3(self):
        cert = certificate_at(projective_space(2), 2, 0, 2, 1)
        scaled = tensor_power_scale(cert, 3, 2)
        assert scaled.witness == (2 * 7, 3)
        assert scaled.value == cert.value

    def test_tensor_power_oracle_recheck(self):
        model = projective_space(2)
        cert = certificate_at(model, 2, 0, 2, 1)
        scaled = tensor_power_scale(cert, 2, 2)
        assert scaled.witness == (6, 2)
        assert scaled.value == Fraction(1, 2)
        assert scaled.reverify(model, method="cobasis")

    def test_tensor_power_identity(self):
        cert = certificate_at(projective_space(2), 2, 0, 2, 1)
        assert tensor_power_scale(cert, 1, 2).witness == cert.witness

    def test_tensor_power_rejects_e_zero(self):
        cert = certificate_at(projective_space(2), 2, 1, 1, 0)
        with pytest.raises(RuleInapplicableError):
            tensor_power_scale(cert, 2, 2)

    def test_gg_twist(self):
        model = projective_space(2)
        cert = certificate_at(model, 2, 0, 2, 1)
        twisted = gg_twist_extend(cert, 1, model)
        assert twisted.witness == (3, 1)
        assert twisted.value == Fraction(1, 3)
        assert twisted.reverify(model, method="cobasis")

    def test_gg_twist_identity(self):
        model = projective_space(2)
        cert = certificate_at(model, 2, 0, 2, 1)
        assert gg_twist_extend(cert, 0, model) == cert

    def test_gg_twist_requires_gg(self):
        model = custom_staircase(1, [((1,), 1)])
        shifted = type(model)(n=1, constraints=model.constraints, gg_from=3)
        cert = certificate_at(shifted, 2, 0, 2, 1)
        with pytest.raises(RuleInapplicableError):
            gg_twist_extend(cert, 2, shifted)

    def test_chained_rules_reproduce_geometric_witnesses(self):
        # Witnesses m0 * (p^(re) - 1) / (p^(e0) - 1) from scaling then twisting.
        model = projective_space(2)
        cert = certificate_at(model, 2, 0, 2, 1)
        for r in (2, 3):
            derived = gg_twist_extend(tensor_power_scale(cert, r, 2), 1, model)
            m0, e0 = cert.witness
            assert derived.witness == (m0 * (2 ** (r * 1) - 1) // (2**1 - 1) + 1, r)
            assert derived.reverify(model)
            assert derived.derivation == ("direct", f"tensor_power({r})", "gg_twist(1)")


class TestComparisons:
    def test_pn_closed_forms(self):
        for n in range(1, 7):
            for ell in range(7):
                eps = Fraction(1)
                assert check_comparison(n, ell, eps, closed_form_pn(n, ell))
                # left side is an equality on this model
                assert Fraction(ell + 1, ell + n) * eps == closed_form_pn(n, ell)
                if ell >= 1 and n >= 2:
                    assert closed_form_pn(n, ell) < eps

    def test_trivial_case(self):
        eps = Fraction(5, 7)
        assert check_comparison(1, 0, eps, eps)

    def test_level_comparison_on_closed_forms(self):
        for n in range(1, 5):
            for low in range(0, 4):
                for high in range(low + 1, 5):
                    assert check_level_comparison(
                        n, high, low, closed_form_pn(n, high), closed_form_pn(n, low)
                    )

    def test_level_comparison_requires_order(self):
        with pytest.raises(ValueError):
            check_level_comparison(2, 1, 1, Fraction(1), Fraction(1))


class TestHomogeneity:
    def test_pn_scaled_closed_form(self):
        # On the r-scaled model the best certificates approach r*(ell+1)/(ell+n).
        r = 2
        model = scaled_model(projective_space(2), r)
        cert = frobenius_seshadri_lower(model, 2, 1, 40, 4)
        assert cert.value <= r * closed_form_pn(2, 1)
        assert cert.reverify(model)

    def test_r_one_trivial(self):
        assert check_homogeneity(projective_space(2), 1, 2, 0, 6, 2)

    def test_p2_grid(self):
        assert check_homogeneity(projective_space(2), 3, 2, 0, 12, 3)

    def test_product_grid(self):
        assert check_homogeneity(product_projective(1, 1, 1, 2), 2, 3, 1, 10, 2)


class TestCertificateJson:
    def test_round_trip_fields(self):
        cert = certificate_at(projective_space(2), 2, 1, 4, 1)
        doc = cert.to_json()
        assert doc["value"] == "1/2"
        assert doc["witness"] == [4, 1]
        assert doc["kind"] == FROBENIUS
        assert doc["p"] == 2 and doc["ell"] == 1

    def test_bad_value_fails_reverify(self):
        cert = BoundCertificate(
            FROBENIUS, Fraction(9, 1), (4, 1), ell=1, p=2
        )
        assert not cert.reverify(projective_space(2))
