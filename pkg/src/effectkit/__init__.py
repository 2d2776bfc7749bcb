"""effectkit: a workbench for finite effect algebras given as partial
Cayley tables — axiom validation, order-theoretic analysis, homogeneity,
chain decomposition, statement oracles and exhaustive enumeration."""

from .core import (
    UNDEF,
    CheckedEffectAlgebra,
    EffectAlgebraTable,
    ValidationError,
    validate,
)
from .corpus import (
    ParseError,
    SpecError,
    boolean_diamond,
    chain,
    direct_product,
    from_spec,
    horizontal_sum,
    parse,
    serialize,
)
from .enumeration import (
    SizeTooLarge,
    SurveyRow,
    enumerate_all,
    find_counterexample,
    survey,
    write_enumeration,
)
from .lemmas import (
    AnalysisReport,
    HomogeneityWitness,
    LemmaReport,
    analyze,
    homogeneity_witness,
    is_homogeneous,
    lemma_suite,
)
from .structure import (
    ChainDecomposition,
    DecomposeError,
    canonical_form,
    decompose,
    is_isomorphic,
    relabel,
    verify_C2_C3,
)

__all__ = [
    "UNDEF",
    "AnalysisReport",
    "ChainDecomposition",
    "CheckedEffectAlgebra",
    "DecomposeError",
    "EffectAlgebraTable",
    "HomogeneityWitness",
    "LemmaReport",
    "ParseError",
    "SizeTooLarge",
    "SpecError",
    "SurveyRow",
    "ValidationError",
    "analyze",
    "boolean_diamond",
    "canonical_form",
    "chain",
    "decompose",
    "direct_product",
    "enumerate_all",
    "find_counterexample",
    "from_spec",
    "homogeneity_witness",
    "horizontal_sum",
    "is_homogeneous",
    "is_isomorphic",
    "lemma_suite",
    "parse",
    "relabel",
    "serialize",
    "survey",
    "validate",
    "verify_C2_C3",
    "write_enumeration",
]
