"""Rule-based English annotator and the annotator registry."""

from __future__ import annotations

from .segmenter import split_sentences
from .tagger import tag_sentence
from .tokenizer import tokenize_with_spans
from .types import AnnotatedPassage, AnnotatedSentence, AnnotationFailure, Token


class EnglishAnnotator:
    """Segments, tokenizes, and tags plain English text.

    Entirely self-contained: closed-class lists, an open-class lexicon,
    morphological shape, and contextual rules. No model files required.
    """

    name = "builtin"

    def annotate(self, text: str) -> AnnotatedPassage:
        if not isinstance(text, str):
            raise AnnotationFailure(f"expected str, got {type(text).__name__}")
        if not text.strip():
            raise AnnotationFailure("text is empty or whitespace only")

        sentences: list[AnnotatedSentence] = []
        for sent_index, (s_start, s_end) in enumerate(split_sentences(text)):
            spans = tokenize_with_spans(text[s_start:s_end], offset=s_start)
            if not spans:
                raise AnnotationFailure(
                    f"sentence {sent_index} produced no tokens")
            tagged = tag_sentence([surface for surface, _, _ in spans])
            tokens = []
            for tok_index, ((surface, t_start, t_end),
                            (lemma, coarse, fine, dep)) in enumerate(zip(spans, tagged)):
                tokens.append(Token(
                    surface=surface,
                    lemma=lemma,
                    coarse_pos=coarse,
                    fine_pos=fine,
                    dep_label=dep,
                    char_start=t_start,
                    char_end=t_end,
                    index_in_sentence=tok_index,
                ))
            sentences.append(AnnotatedSentence(
                sentence_index=sent_index,
                char_start=s_start,
                char_end=s_end,
                tokens=tuple(tokens),
            ))
        if not sentences:
            raise AnnotationFailure("no sentences found")
        passage = AnnotatedPassage(text=text, sentences=tuple(sentences))
        passage.validate()
        return passage


_REGISTRY = {"builtin": EnglishAnnotator}


def get_annotator(name: str = "builtin") -> EnglishAnnotator:
    try:
        return _REGISTRY[name]()
    except KeyError:
        raise AnnotationFailure(
            f"unknown annotator {name!r}; available: {sorted(_REGISTRY)}") from None
