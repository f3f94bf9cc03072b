"""Grammar exercise generation from reading passages.

Turns plain text into multiple-choice fill-in-the-blank grammar items:
each item blanks one grammatical word or inflection in a sentence, offers
the original word plus plausible wrong answers, and keeps only items whose
correct answer a language model actually prefers in context.
"""

__version__ = "0.1.0"

from .annotate import AnnotatedPassage, AnnotationFailure, Token, get_annotator
from .catalog import Catalog, ConstructCode
from .generator import (
    Alternation,
    GenerationConfig,
    GrammarItem,
    GrammarItemGenerator,
    ItemPipeline,
    RejectionRecord,
    RejectionStage,
)
from .scoring import MaskedLM, MaskQuery, ScoredCandidate, get_scorer

__all__ = [
    "Alternation",
    "AnnotatedPassage",
    "AnnotationFailure",
    "Catalog",
    "ConstructCode",
    "GenerationConfig",
    "GrammarItem",
    "GrammarItemGenerator",
    "ItemPipeline",
    "MaskQuery",
    "MaskedLM",
    "RejectionRecord",
    "RejectionStage",
    "ScoredCandidate",
    "Token",
    "get_annotator",
    "get_scorer",
    "__version__",
]
