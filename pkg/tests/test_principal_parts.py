import itertools
import random
from math import comb

from hypothesis import given, settings
from hypothesis import strategies as st

from frobjets.principal_parts import (
    PicClass,
    SplitBundle,
    check_binomial_identities,
    det_pp_closed,
    det_pp_recursive,
    dual,
    is_ample,
    is_globally_generated,
    mori_endgame,
    rank_pp,
    sym_power,
    tensor_line,
)


class TestRank:
    def test_reference(self):
        # 1 + C(2,1) + C(3,1) = 6, the binomial C(4,2)
        assert rank_pp(2, 2) == 6

    def test_zeroth_is_line_bundle(self):
        for n in (1, 2, 5):
            assert rank_pp(n, 0) == 1

    def test_line(self):
        for ell in range(8):
            assert rank_pp(1, ell) == ell + 1

    def test_telescoping_equals_binomial(self):
        for n in range(1, 7):
            for ell in range(11):
                assert rank_pp(n, ell) == comb(n + ell, n)


class TestDeterminant:
    def test_first_recursion_step(self):
        assert det_pp_recursive(2, 1) == PicClass(1, 3)

    def test_reference_case(self):
        assert det_pp_recursive(2, 2) == PicClass(4, 6)
        assert det_pp_closed(2, 2) == PicClass(4, 6)

    def test_line_case(self):
        assert det_pp_closed(1, 1) == PicClass(1, 2)

    def test_ell_zero(self):
        for n in (1, 3, 6):
            assert det_pp_recursive(n, 0) == det_pp_closed(n, 0) == PicClass(0, 1)

    def test_recursive_equals_closed(self):
        for n in range(1, 8):
            for ell in range(11):
                assert det_pp_recursive(n, ell) == det_pp_closed(n, ell)

    def test_json(self):
        assert det_pp_closed(2, 2).to_json() == {"omega": 4, "l": 6}


class TestBinomialIdentities:
    def test_reference(self):
        # 3 + (1/3)*3 = 4 = (2/3)*6
        assert check_binomial_identities(2, 2)

    def test_pascal_instance(self):
        assert comb(3, 1) + comb(3, 2) == comb(4, 2) == 6

    def test_sweep(self):
        for n in range(1, 7):
            for ell in range(1, 11):
                assert check_binomial_identities(n, ell)


class TestSplitBundleOps:
    def test_dual(self):
        assert dual(SplitBundle((2, 1, 1))).degrees == (-2, -1, -1)

    def test_tensor_line(self):
        assert tensor_line(SplitBundle((0, 3)), -1).degrees == (-1, 2)

    def test_sym_square(self):
        assert sym_power(SplitBundle((1, 4)), 2).degrees == (2, 5, 8)

    @given(
        degrees=st.lists(st.integers(-4, 4), min_size=1, max_size=4),
        k=st.integers(1, 4),
    )
    @settings(max_examples=60, deadline=None)
    def test_sym_rank(self, degrees, k):
        bundle = SplitBundle(tuple(degrees))
        assert sym_power(bundle, k).rank == comb(bundle.rank + k - 1, k)

    @given(degrees=st.lists(st.integers(-4, 4), min_size=2, max_size=4), k=st.integers(1, 3))
    @settings(max_examples=40, deadline=None)
    def test_sym_permutation_invariant(self, degrees, k):
        shuffled = list(degrees)
        random.Random(0).shuffle(shuffled)
        assert sym_power(SplitBundle(tuple(degrees)), k) == sym_power(
            SplitBundle(tuple(shuffled)), k
        )

    def test_positivity_predicates(self):
        assert is_globally_generated(SplitBundle((0, 1)))
        assert not is_ample(SplitBundle((0, 1)))
        assert not is_globally_generated(SplitBundle((-1, 5)))
        assert not is_ample(SplitBundle((-1, 5)))
        assert is_globally_generated(SplitBundle((1, 1, 2)))
        assert is_ample(SplitBundle((1, 1, 2)))


def brute_quotient_degrees(a):
    """Oracle: expand the symmetric power by hand with raw itertools."""
    n = len(a)
    b = sum(a)
    sums = [
        sum(choice) for choice in itertools.combinations_with_replacement(a, n + 1)
    ]
    return sorted(s - b for s in sums)


class TestMoriEndgame:
    def test_tangent_of_p3_on_a_line(self):
        report = mori_endgame((2, 1, 1))
        assert report.b == 4
        assert min(report.quotient_degrees) == 0
        assert report.gg
        assert report.all_ai_positive

    def test_extremal_failure(self):
        for n in (2, 3, 4):
            a = (n + 1,) + (0,) * (n - 1)
            report = mori_endgame(a)
            assert report.b == n + 1
            assert min(report.quotient_degrees) == -(n + 1)
            assert not report.gg
            assert not report.all_ai_positive

    def test_min_inequality_matches_expansion(self):
        rng = random.Random(42)
        for _ in range(200):
            n = rng.randrange(1, 5)
            a = tuple(rng.randrange(-5, 6) for _ in range(n))
            report = mori_endgame(a)
            oracle = brute_quotient_degrees(a)
            assert list(report.quotient_degrees) == oracle
            assert report.gg == all(d >= 0 for d in oracle)

    def test_positive_conclusion_needs_positive_b(self):
        report = mori_endgame((0, 0))
        assert report.b == 0
        assert report.gg
        assert not report.all_ai_positive

    def test_json(self):
        doc = mori_endgame((2, 1, 1)).to_json()
        assert doc["b"] == 4 and doc["gg"] is True
