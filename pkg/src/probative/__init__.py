"""Discrete Bayesian networks and likelihood ratios for evidence evaluation.

The package provides an immutable network model, exact inference (a
brute-force oracle plus a variable-elimination engine), likelihood-ratio
computation along every route that is sound for the network's shape, a
small model-definition language with bundled example networks, and CLI /
HTTP front ends.
"""

from .dsl import (
    FORMAT_VERSION,
    ModelDocument,
    load_model_file,
    parse_json,
    parse_text,
    serialize_json,
    serialize_text,
)
from .errors import (
    CycleError,
    ImpossibleEvidenceError,
    IncompleteAssignmentError,
    MissingParentError,
    ModelValidationError,
    ParseError,
    PriorOverrideError,
    ProbativeError,
    SchemaError,
    StructureError,
    UnknownFixtureError,
    UnknownNodeError,
    UnknownStateError,
    ZeroOverZeroError,
)
from .fixtures import fixture_names, fixture_source, load_fixture
from .inference import (
    Factor,
    PosteriorReport,
    enumerate_posterior,
    joint_probability,
    posterior,
    probability_of_evidence,
)
from .likelihood import (
    COMPLEMENT,
    HypothesisQuery,
    LikelihoodRatioReport,
    ProbativeClass,
    combine_dependent,
    combine_independent,
    lr_from_cpt,
    lr_recover,
    lr_via_inference,
    odds_update,
    probative_class,
    state_pair_lr,
)
from .network import (
    ConditionalTable,
    Evidence,
    Finding,
    NetworkModel,
    NodeDef,
    ValidationReport,
    cpt_lookup,
    replace_table,
    topological_order,
    validate_network,
)

__version__ = "0.1.0"

__all__ = [
    "COMPLEMENT",
    "ConditionalTable",
    "CycleError",
    "Evidence",
    "FORMAT_VERSION",
    "Factor",
    "Finding",
    "HypothesisQuery",
    "ImpossibleEvidenceError",
    "IncompleteAssignmentError",
    "LikelihoodRatioReport",
    "MissingParentError",
    "ModelDocument",
    "ModelValidationError",
    "NetworkModel",
    "NodeDef",
    "ParseError",
    "PosteriorReport",
    "PriorOverrideError",
    "ProbativeClass",
    "ProbativeError",
    "SchemaError",
    "StructureError",
    "UnknownFixtureError",
    "UnknownNodeError",
    "UnknownStateError",
    "ValidationReport",
    "ZeroOverZeroError",
    "combine_dependent",
    "combine_independent",
    "cpt_lookup",
    "enumerate_posterior",
    "fixture_names",
    "fixture_source",
    "joint_probability",
    "load_fixture",
    "load_model_file",
    "lr_from_cpt",
    "lr_recover",
    "lr_via_inference",
    "odds_update",
    "parse_json",
    "parse_text",
    "posterior",
    "probability_of_evidence",
    "probative_class",
    "replace_table",
    "serialize_json",
    "serialize_text",
    "state_pair_lr",
    "topological_order",
    "validate_network",
]
