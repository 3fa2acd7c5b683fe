"""Concept-based local and global explanations for black-box classifiers."""

from ._lgx import (
    CachedOracle,
    ClassLabels,
    CompleteExplanation,
    ConceptSet,
    ConfigError,
    CoveringExplanation,
    Dataset,
    Error,
    ExplainedInstance,
    ExplanationList,
    ExternalOracle,
    Instance,
    OracleError,
    Oracle,
    ParseError,
    ScoreQuery,
    SearchConfig,
    SearchError,
    SyntheticModel,
    SyntheticOracle,
    TableOracle,
    Vocabulary,
    VocabularyError,
    aggregate_fidelity,
    beam_add,
    build_covering,
    exact_complete_explanation,
    explain_dataset,
    explanation_list,
    fidelity_minus,
    fidelity_plus,
    generate,
    is_sufficient,
    join_explanations,
    minimize_set,
    planted_list_dataset,
    read_dataset,
    write_dataset,
)

__version__ = "0.1.0"
