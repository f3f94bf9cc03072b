"""Core linguistic data types produced by annotation."""

from __future__ import annotations

from dataclasses import dataclass, field


class AnnotationFailure(Exception):
    """Raised when the underlying analyzer cannot process a text."""


@dataclass(frozen=True)
class Token:
    surface: str
    lemma: str
    coarse_pos: str      # universal tag, e.g. NOUN, VERB, ADP
    fine_pos: str        # Penn-style tag, e.g. NN, VBD, IN
    dep_label: str
    char_start: int      # 0-based into the sentence's passage, inclusive
    char_end: int        # exclusive
    index_in_sentence: int

    def __post_init__(self):
        if self.char_start >= self.char_end:
            raise ValueError(f"empty token span [{self.char_start}, {self.char_end})")

    @property
    def is_word(self) -> bool:
        return self.coarse_pos != "PUNCT"


@dataclass
class AnnotatedSentence:
    sentence_index: int
    char_start: int
    char_end: int
    tokens: list[Token] = field(default_factory=list)

    def text(self, passage_text: str) -> str:
        return passage_text[self.char_start:self.char_end]


@dataclass
class AnnotatedPassage:
    text: str
    sentences: list[AnnotatedSentence] = field(default_factory=list)

    def sentence_text(self, sentence_index: int) -> str:
        return self.sentences[sentence_index].text(self.text)

    def validate(self) -> None:
        """Check span invariants; raises AnnotationFailure on violation."""
        prev_sentence_end = 0
        for i, sent in enumerate(self.sentences):
            if sent.sentence_index != i:
                raise AnnotationFailure(f"sentence_index {sent.sentence_index} at position {i}")
            if sent.char_start < prev_sentence_end:
                raise AnnotationFailure("overlapping sentence spans")
            prev_sentence_end = sent.char_end
            prev_token_end = sent.char_start
            for tok in sent.tokens:
                if tok.char_start < prev_token_end or tok.char_end > sent.char_end:
                    raise AnnotationFailure(f"token span out of order at {tok.surface!r}")
                if self.text[tok.char_start:tok.char_end] != tok.surface:
                    raise AnnotationFailure(
                        f"surface mismatch: {tok.surface!r} vs "
                        f"{self.text[tok.char_start:tok.char_end]!r}"
                    )
                prev_token_end = tok.char_end
