"""Graded staircase models of the local monomials reachable by global sections.

A model assigns to every degree m the downward-closed set of exponents
attainable at the chosen point. All built-in models are cut out by linear
constraints <w, a> <= slope * m with non-negative integer data, which makes
membership testing O(1) per constraint and keeps huge degrees cheap: the
attainable set is never materialized except against a finite cobasis.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from itertools import product
from math import ceil

from .monomials import Exponent

Constraint = tuple[tuple[int, ...], int]


@dataclass(frozen=True)
class SectionModel:
    """Attainable exponents at degree m: all a with <w, a> <= s*m per constraint.

    gg_from is the degree from which the model is globally generated at the
    point (the zero exponent is attainable); linear-constraint models with
    non-negative slopes have gg_from = 0.
    """

    n: int
    constraints: tuple[Constraint, ...]
    gg_from: int = 0
    label: str = ""
    kind: str = "custom"
    params: tuple = field(default=(), compare=False)

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("model dimension n must be >= 1")
        cleaned = []
        for weights, slope in self.constraints:
            weights = tuple(int(w) for w in weights)
            if len(weights) != self.n:
                raise ValueError(f"constraint weights {weights} have wrong length")
            if any(w < 0 for w in weights) or slope < 0:
                raise ValueError("constraint weights and slopes must be >= 0")
            cleaned.append((weights, int(slope)))
        for i in range(self.n):
            if not any(w[i] > 0 for w, _ in cleaned):
                raise ValueError(
                    f"unbounded staircase: no constraint bounds variable x{i + 1}"
                )
        object.__setattr__(self, "constraints", tuple(cleaned))

    def attains(self, a: Exponent, m: int) -> bool:
        """Whether the exponent a is attainable at degree m."""
        if len(a) != self.n:
            raise ValueError(f"exponent {a} has wrong length for n={self.n}")
        return all(
            sum(w * x for w, x in zip(weights, a)) <= slope * m
            for weights, slope in self.constraints
        )

    def coordinate_box(self, m: int) -> list[int]:
        """Componentwise upper bounds for attainable exponents at degree m."""
        box = []
        for i in range(self.n):
            bound = min(
                slope * m // weights[i]
                for weights, slope in self.constraints
                if weights[i] > 0
            )
            box.append(bound)
        return box

    def attainable_exponents(self, m: int, limit: int = 2_000_000):
        """Materialize the attainable set at degree m (small m only)."""
        box = self.coordinate_box(m)
        volume = 1
        for b in box:
            volume *= b + 1
        if volume > limit:
            raise ValueError(f"attainable set too large to materialize ({volume} boxes)")
        return [a for a in product(*(range(b + 1) for b in box)) if self.attains(a, m)]

    def to_config(self) -> dict:
        if self.kind == "pn":
            return {"kind": "pn", "n": self.params[0]}
        if self.kind == "product":
            n1, n2, c, d = self.params
            return {"kind": "product", "n1": n1, "n2": n2, "c": c, "d": d}
        return {
            "kind": "custom",
            "n": self.n,
            "constraints": [[list(w), s] for w, s in self.constraints],
        }


def projective_space(n: int) -> SectionModel:
    """Degree-m sections hit every monomial of total degree at most m."""
    if n < 1:
        raise ValueError("n must be >= 1")
    return SectionModel(
        n=n,
        constraints=(((1,) * n, 1),),
        label=f"P^{n}",
        kind="pn",
        params=(n,),
    )


def product_projective(n1: int, n2: int, c: int, d: int) -> SectionModel:
    """Bidegree-(c*m, d*m) box model on a product of two projective factors."""
    if min(n1, n2, c, d) < 1:
        raise ValueError("all product model parameters must be >= 1")
    w1 = (1,) * n1 + (0,) * n2
    w2 = (0,) * n1 + (1,) * n2
    return SectionModel(
        n=n1 + n2,
        constraints=((w1, c), (w2, d)),
        label=f"P^{n1}xP^{n2}, bidegree ({c},{d})",
        kind="product",
        params=(n1, n2, c, d),
    )


def custom_staircase(n: int, constraints) -> SectionModel:
    """Model cut out by arbitrary non-negative linear constraints."""
    cons = tuple((tuple(w), int(s)) for w, s in constraints)
    return SectionModel(n=n, constraints=cons, label="custom staircase")


def scaled_model(model: SectionModel, r: int) -> SectionModel:
    """Replace degree m by r*m: every slope is multiplied by r."""
    if r < 1:
        raise ValueError("scale factor r must be >= 1")
    if r == 1:
        return model
    return SectionModel(
        n=model.n,
        constraints=tuple((w, r * s) for w, s in model.constraints),
        gg_from=ceil(model.gg_from / r),
        label=f"{model.label} scaled by {r}" if model.label else f"scaled by {r}",
    )


def model_from_config(config: dict) -> SectionModel:
    """Rebuild a model from its JSON description."""
    kind = config.get("kind")
    if kind == "pn":
        return projective_space(int(config["n"]))
    if kind == "product":
        return product_projective(
            int(config["n1"]), int(config["n2"]), int(config["c"]), int(config["d"])
        )
    if kind == "custom":
        return custom_staircase(int(config["n"]), config["constraints"])
    raise ValueError(f"unknown model kind {kind!r}")


def model_from_spec(spec: str) -> SectionModel:
    """Parse a CLI model description.

    Accepts inline JSON ({"kind": ...}) or the shorthands "pn:N" and
    "product:N1,N2,C,D".
    """
    spec = spec.strip()
    if spec.startswith("{"):
        return model_from_config(json.loads(spec))
    kind, _, rest = spec.partition(":")
    if kind == "pn":
        return projective_space(int(rest))
    if kind == "product":
        parts = [int(x) for x in rest.split(",")]
        if len(parts) != 4:
            raise ValueError("product model needs four integers: n1,n2,c,d")
        return product_projective(*parts)
    raise ValueError(f"cannot parse model spec {spec!r}")
