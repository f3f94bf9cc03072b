"""Masked-position candidate scoring."""

from .base import (
    MaskedLM,
    MaskQuery,
    ModelFailure,
    OutOfVocabulary,
    ScoredCandidate,
    ScorerError,
    rank_scores,
)
from .loader import DEFAULT_MODEL, get_scorer
from .ngram import NgramMaskedLM, bundled_model

__all__ = [
    "DEFAULT_MODEL",
    "MaskQuery",
    "MaskedLM",
    "ModelFailure",
    "NgramMaskedLM",
    "OutOfVocabulary",
    "ScoredCandidate",
    "ScorerError",
    "bundled_model",
    "get_scorer",
    "rank_scores",
]
