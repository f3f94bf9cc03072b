"""Construct catalog: definitions, matching, candidate generation."""

from .constructs import (
    CandidateSource,
    Catalog,
    CatalogError,
    ConstructCode,
    ConstructSpec,
    Family,
    InflectionFailure,
    SyntacticPattern,
    candidates_for,
    match_pattern,
    match_token,
)

__all__ = [
    "CandidateSource",
    "Catalog",
    "CatalogError",
    "ConstructCode",
    "ConstructSpec",
    "Family",
    "InflectionFailure",
    "SyntacticPattern",
    "candidates_for",
    "match_pattern",
    "match_token",
]
