import itertools
import json

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from frobjets.models import (
    custom_staircase,
    model_from_config,
    model_from_spec,
    product_projective,
    projective_space,
    scaled_model,
)


class TestProjectiveSpace:
    def test_degree_one_simplex(self):
        model = projective_space(2)
        assert set(model.attainable_exponents(1)) == {(0, 0), (1, 0), (0, 1)}

    def test_line_segment(self):
        model = projective_space(1)
        assert model.attainable_exponents(3) == [(0,), (1,), (2,), (3,)]

    def test_membership_is_degree_test(self):
        model = projective_space(2)
        assert model.attains((3, 2), 5)
        assert not model.attains((3, 3), 5)

    def test_invalid_dimension(self):
        with pytest.raises(ValueError):
            projective_space(0)


class TestProductProjective:
    def test_box(self):
        model = product_projective(1, 1, 1, 1)
        assert set(model.attainable_exponents(2)) == {
            (a, b) for a in range(3) for b in range(3)
        }

    def test_block_boundary(self):
        model = product_projective(2, 1, 3, 1)
        assert model.attains((3, 0, 0), 1)
        assert not model.attains((4, 0, 0), 1)
        assert model.attains((0, 0, 1), 1)

    def test_invalid_parameters(self):
        with pytest.raises(ValueError):
            product_projective(1, 1, 0, 1)


class TestCustomStaircase:
    def test_reproduces_projective_space(self):
        pn = projective_space(2)
        custom = custom_staircase(2, [((1, 1), 1)])
        for m in (1, 3, 7):
            for a in itertools.product(range(21), repeat=2):
                assert pn.attains(a, m) == custom.attains(a, m)

    def test_reproduces_product(self):
        prod = product_projective(1, 1, 2, 3)
        custom = custom_staircase(2, [((1, 0), 2), ((0, 1), 3)])
        for m in (1, 2, 5):
            for a in itertools.product(range(16), repeat=2):
                assert prod.attains(a, m) == custom.attains(a, m)

    def test_weighted_count(self):
        # Oracle: direct lattice enumeration of 2*a1 + a2 <= 3.
        model = custom_staircase(2, [((2, 1), 1)])
        points = model.attainable_exponents(3)
        expected = [
            a for a in itertools.product(range(4), repeat=2) if 2 * a[0] + a[1] <= 3
        ]
        assert sorted(points) == sorted(expected)
        assert len(points) == 6

    def test_unbounded_rejected(self):
        with pytest.raises(ValueError, match="unbounded"):
            custom_staircase(2, [((1, 0), 1)])


class TestScaledModel:
    def test_scaled_simplex(self):
        model = scaled_model(projective_space(2), 2)
        assert set(model.attainable_exponents(1)) == {
            a for a in itertools.product(range(3), repeat=2) if sum(a) <= 2
        }

    def test_identity_scale(self):
        model = projective_space(3)
        assert scaled_model(model, 1) is model

    def test_gg_from_rounds_up(self):
        base = custom_staircase(1, [((1,), 2)])
        shifted = scaled_model(
            type(base)(n=1, constraints=base.constraints, gg_from=5), 3
        )
        assert shifted.gg_from == 2


@st.composite
def small_models(draw):
    choice = draw(st.integers(0, 2))
    if choice == 0:
        return projective_space(draw(st.integers(1, 3)))
    if choice == 1:
        return product_projective(
            draw(st.integers(1, 2)),
            draw(st.integers(1, 2)),
            draw(st.integers(1, 3)),
            draw(st.integers(1, 3)),
        )
    n = draw(st.integers(1, 2))
    rows = draw(
        st.lists(
            st.tuples(
                st.lists(st.integers(0, 3), min_size=n, max_size=n),
                st.integers(0, 3),
            ),
            min_size=1,
            max_size=2,
        )
    )
    # ensure every variable is bounded
    rows.append(((1,) * n, draw(st.integers(1, 3))))
    return custom_staircase(n, rows)


class TestModelInvariants:
    @given(model=small_models(), m=st.integers(1, 12), data=st.data())
    @settings(max_examples=80, deadline=None)
    def test_downward_closure(self, model, m, data):
        box = model.coordinate_box(m)
        a = tuple(data.draw(st.integers(0, min(b, 12))) for b in box)
        if model.attains(a, m):
            b = tuple(data.draw(st.integers(0, x)) for x in a)
            assert model.attains(b, m)

    @given(
        model=small_models(),
        m1=st.integers(1, 6),
        m2=st.integers(1, 6),
        data=st.data(),
    )
    @settings(max_examples=80, deadline=None)
    def test_minkowski_superadditivity(self, model, m1, m2, data):
        box1 = model.coordinate_box(m1)
        box2 = model.coordinate_box(m2)
        a = tuple(data.draw(st.integers(0, min(b, 10))) for b in box1)
        b = tuple(data.draw(st.integers(0, min(x, 10))) for x in box2)
        if model.attains(a, m1) and model.attains(b, m2):
            combined = tuple(x + y for x, y in zip(a, b))
            assert model.attains(combined, m1 + m2)

    @given(model=small_models(), m=st.integers(1, 11), data=st.data())
    @settings(max_examples=60, deadline=None)
    def test_monotone_in_degree(self, model, m, data):
        box = model.coordinate_box(m)
        a = tuple(data.draw(st.integers(0, min(b, 12))) for b in box)
        if model.attains(a, m):
            assert model.attains(a, m + 1)


class TestConfigRoundTrip:
    @pytest.mark.parametrize(
        "model",
        [
            projective_space(3),
            product_projective(1, 2, 2, 3),
            custom_staircase(2, [((2, 1), 1)]),
            scaled_model(projective_space(2), 3),
        ],
    )
    def test_round_trip_preserves_membership(self, model):
        config = model.to_config()
        rebuilt = model_from_config(json.loads(json.dumps(config)))
        assert rebuilt.n == model.n
        for m in (1, 4):
            for a in itertools.product(range(14), repeat=model.n):
                assert rebuilt.attains(a, m) == model.attains(a, m)
        assert rebuilt.to_config() == config

    def test_spec_shorthands(self):
        assert model_from_spec("pn:2").to_config() == {"kind": "pn", "n": 2}
        assert model_from_spec("product:1,1,2,3").to_config() == {
            "kind": "product",
            "n1": 1,
            "n2": 1,
            "c": 2,
            "d": 3,
        }
        inline = model_from_spec('{"kind": "custom", "n": 1, "constraints": [[[2], 1]]}')
        assert inline.attains((3,), 6) and not inline.attains((4,), 6)

    def test_unknown_kind_rejected(self):
        with pytest.raises(ValueError):
            model_from_config({"kind": "mystery"})
        with pytest.raises(ValueError):
            model_from_spec("weird:1")
