"""Text annotation: sentence segmentation, tokenization, POS tagging."""

from .english import EnglishAnnotator, get_annotator
from .segmenter import split_sentences
from .tokenizer import tokenize_with_spans
from .types import (
    AnnotatedPassage,
    AnnotatedSentence,
    AnnotationFailure,
    Token,
)

__all__ = [
    "AnnotatedPassage",
    "AnnotatedSentence",
    "AnnotationFailure",
    "EnglishAnnotator",
    "Token",
    "get_annotator",
    "split_sentences",
    "tokenize_with_spans",
]
