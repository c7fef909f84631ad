"""Exact local-positivity computations on monomial section models.

Jet separation, Seshadri and Frobenius-Seshadri lower-bound certificates,
trace-map verification, principal-parts determinant calculus, and threshold
predicates for characterizing projective space, all in exact rational
arithmetic.
"""

from .bounds import (
    BoundCertificate,
    RuleInapplicableError,
    certificate_at,
    check_comparison,
    check_homogeneity,
    check_level_comparison,
    closed_form_pn,
    frobenius_seshadri_lower,
    gg_twist_extend,
    seshadri_lower,
    subsequence_demo,
    tensor_power_scale,
)
from .cartier import (
    MonomialForm,
    trace,
    verify_semilinearity,
    verify_trace_ideal_identity,
    verify_trace_surjective,
)
from .fano import (
    CharPnVerdict,
    DataContradictionError,
    FanoInput,
    adjoint_jet_report,
    bauer_surface_lower,
    charpn_verdict,
    degree_bound_check,
    meets_bauer_bound,
    mori_mukai_inputs,
    seshadri_upper_from_curves,
    seshineq_check,
    very_ample_report,
)
from .jets import (
    NEG_INF,
    pn_threshold,
    s_frobenius,
    s_jets,
    separates_frobenius_jets,
    separates_jets,
)
from .models import (
    SectionModel,
    custom_staircase,
    model_from_config,
    model_from_spec,
    product_projective,
    projective_space,
    scaled_model,
)
from .monomials import (
    Exponent,
    MonomialIdeal,
    PrimeChar,
    bracket_power,
    cobasis,
    contains,
    maximal_ideal,
    minimalize,
    power,
    verify_lemma_monomials,
)
from .principal_parts import (
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

__version__ = "0.1.0"
