"""Data models."""

from .config import RunConfig
from .errors import (
    ConvergenceError,
    DissociationToolkitError,
    DomainError,
    Graph6ParseError,
    InvalidEdgeError,
    InvalidIntervalError,
    InvalidParameterError,
    ModelError,
    NoCandidatesError,
    ResourceLimitError,
    TieError,
    UnsupportedError,
    VertexIndexError,
)
from .graph import FamilyGraph, Graph
from .polynomial import IntPolynomial
from .reports import (
    CasePolyReport,
    CheckResult,
    DissReport,
    FamilyBuildReport,
    ReducedSolveReport,
    RhoReport,
    SearchRecord,
    SearchResult,
    Theorem1Report,
    VerifyReport,
)
from .types import (
    CasePolyEntry,
    CheckStatus,
    DissociationCertificate,
    FamilySpec,
    FamilyType,
    Hypergraph,
    Ordering,
    PerronExtension,
    SmithKind,
    Spectrum,
)

__all__ = [
    "RunConfig",
    "ConvergenceError",
    "DissociationToolkitError",
    "DomainError",
    "Graph6ParseError",
    "InvalidEdgeError",
    "InvalidIntervalError",
    "InvalidParameterError",
    "ModelError",
    "NoCandidatesError",
    "ResourceLimitError",
    "TieError",
    "UnsupportedError",
    "VertexIndexError",
    "FamilyGraph",
    "Graph",
    "IntPolynomial",
    "CasePolyReport",
    "CheckResult",
    "DissReport",
    "FamilyBuildReport",
    "ReducedSolveReport",
    "RhoReport",
    "SearchRecord",
    "SearchResult",
    "Theorem1Report",
    "VerifyReport",
    "CasePolyEntry",
    "CheckStatus",
    "DissociationCertificate",
    "FamilySpec",
    "FamilyType",
    "Hypergraph",
    "Ordering",
    "PerronExtension",
    "SmithKind",
    "Spectrum",
]
