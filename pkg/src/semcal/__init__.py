"""Two-probability semantic information and degree-of-confirmation calculus."""

from .confirmation import (
    ContingencyTable,
    DocCase,
    DocResult,
    RateSpec,
    doc_from_rates,
    doc_from_test,
    doc_h1_from_table,
    doc_h2_from_table,
    predicted_probability,
    raven_increments,
)
from .distributions import (
    Alphabet,
    Distribution,
    bayes_invert,
    kl_divergence,
    pointwise_info,
    validate,
)
from .estimation import (
    channel_from_samples,
    empirical_conditional,
    gps_cep_doc,
    gps_fit,
    gps_objective,
    optimal_truth_function,
    optimize_belief,
)
from .estimation_types import Channel, GpsModel, SampleSet
from .semantic_info import (
    average_semantic_info,
    gkl_decomposition,
    pointwise_semantic_info,
    semantic_mutual_info,
)
from .truth_functions import (
    BeliefAdjusted,
    Crisp,
    Gaussian,
    Tabular,
    TruthFunction,
    belief_adjust,
    contradiction,
    logical_probability,
    negate,
    semantic_bayes,
    tautology,
)

__version__ = "0.1.0"

__all__ = [
    "Alphabet",
    "BeliefAdjusted",
    "Channel",
    "ContingencyTable",
    "Crisp",
    "Distribution",
    "DocCase",
    "DocResult",
    "Gaussian",
    "GpsModel",
    "RateSpec",
    "SampleSet",
    "Tabular",
    "TruthFunction",
    "average_semantic_info",
    "bayes_invert",
    "belief_adjust",
    "channel_from_samples",
    "contradiction",
    "doc_from_rates",
    "doc_from_test",
    "doc_h1_from_table",
    "doc_h2_from_table",
    "empirical_conditional",
    "gkl_decomposition",
    "gps_cep_doc",
    "gps_fit",
    "gps_objective",
    "kl_divergence",
    "logical_probability",
    "negate",
    "optimal_truth_function",
    "optimize_belief",
    "pointwise_info",
    "pointwise_semantic_info",
    "predicted_probability",
    "raven_increments",
    "semantic_bayes",
    "semantic_mutual_info",
    "tautology",
    "validate",
]
