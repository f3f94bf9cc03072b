"""Item generation pipeline.

For each eligible sentence, walk the construct priority list; for each
construct, walk its matching tokens left to right; the first candidate that
survives pattern checks, vocabulary checks, the argmax filter, and
distractor selection becomes the sentence's one item. Everything that fails
is recorded with the earliest failing stage.
"""

from __future__ import annotations

import hashlib
import random
from dataclasses import dataclass, field
from enum import Enum

from sklearn.base import BaseEstimator, TransformerMixin

from .annotate import AnnotatedPassage, AnnotatedSentence, get_annotator
from .annotate.types import Token
from .catalog import (
    CandidateSource,
    Catalog,
    ConstructCode,
    ConstructSpec,
    InflectionFailure,
    match_pattern,
    match_token,
)
from .scoring import DEFAULT_MODEL, MaskedLM, MaskQuery, ScoredCandidate, get_scorer

BLANK = "___"

MIN_SENTENCE_TOKENS = 4  # a blank needs surrounding context to be solvable


class Alternation(str, Enum):
    EVERY_OTHER = "EveryOther"
    ALL = "All"


class RejectionStage(str, Enum):
    TOKEN_MATCH = "TokenMatch"
    PATTERN_MATCH = "PatternMatch"
    VOCABULARY = "Vocabulary"
    ARGMAX_FILTER = "ArgmaxFilter"
    TOO_FEW_DISTRACTORS = "TooFewDistractors"


@dataclass(frozen=True)
class RejectionRecord:
    sentence_index: int
    construct: ConstructCode
    stage: RejectionStage
    detail: str


@dataclass(frozen=True)
class GenerationConfig:
    construct_priority: tuple[ConstructCode, ...]
    num_distractors: int = 2
    alternation: Alternation = Alternation.EVERY_OTHER
    shuffle_seed: int = 0
    enabled_constructs: frozenset[ConstructCode] = frozenset()

    def __post_init__(self):
        if self.num_distractors < 1:
            raise ValueError("num_distractors must be >= 1")
        if len(set(self.construct_priority)) != len(self.construct_priority):
            raise ValueError("construct_priority contains duplicates")
        if not self.enabled_constructs:
            object.__setattr__(self, "enabled_constructs",
                               frozenset(self.construct_priority))
        extra = set(self.construct_priority) - set(self.enabled_constructs)
        if extra:
            raise ValueError(
                f"priority lists disabled constructs: {sorted(c.value for c in extra)}")

    @classmethod
    def default(cls, catalog: Catalog, **overrides) -> "GenerationConfig":
        priority = tuple(catalog.enabled_codes())
        return cls(construct_priority=priority, **overrides)


@dataclass(frozen=True)
class GrammarItem:
    item_id: str
    sentence_index: int
    construct: ConstructCode
    source_text: str
    mask_char_span: tuple[int, int]
    target: ScoredCandidate
    distractors: tuple[ScoredCandidate, ...]
    presentation_order: tuple[str, ...]
    #: Every candidate scored in the winning query, ranked; surfaces are the
    #: scored forms (lowercase at sentence start), not the displayed forms.
    candidate_scores: tuple[ScoredCandidate, ...] = ()

    def __post_init__(self):
        for d in self.distractors:
            if self.target.log_prob < d.log_prob:
                raise ValueError("target must outscore every distractor")
        surfaces = [self.target.surface] + [d.surface for d in self.distractors]
        if len(set(surfaces)) != len(surfaces):
            raise ValueError("choices must be pairwise distinct")
        if sorted(self.presentation_order) != sorted(surfaces):
            raise ValueError("presentation_order must permute the choices")
        if BLANK not in self.source_text:
            raise ValueError("source_text must contain a blank marker")

    @property
    def gap(self) -> float:
        """Target score minus best distractor score (difficulty proxy)."""
        return self.target.log_prob - self.distractors[0].log_prob

    @property
    def choices(self) -> tuple[str, ...]:
        return self.presentation_order


def _item_id(sentence_text: str, construct: ConstructCode,
             span: tuple[int, int], target: str) -> str:
    basis = "\x1f".join([sentence_text, construct.value, str(span), target])
    return hashlib.sha1(basis.encode("utf-8")).hexdigest()[:16]


def _shuffled(choices: list[str], shuffle_seed: int, item_id: str) -> tuple[str, ...]:
    order = list(choices)
    random.Random(f"{shuffle_seed}:{item_id}").shuffle(order)
    return tuple(order)


class ItemPipeline:
    """The five-step pipeline bound to a catalog and a scorer."""

    def __init__(self, catalog: Catalog, scorer: MaskedLM):
        self.catalog = catalog
        self.scorer = scorer

    # -- passage level ---------------------------------------------------

    def generate_passage_items(
        self, passage: AnnotatedPassage, config: GenerationConfig,
    ) -> tuple[list[GrammarItem], list[RejectionRecord]]:
        items: list[GrammarItem] = []
        rejections: list[RejectionRecord] = []
        for sentence in passage.sentences:
            if (config.alternation is Alternation.EVERY_OTHER
                    and sentence.sentence_index % 2 != 0):
                continue
            if len(sentence.tokens) < MIN_SENTENCE_TOKENS:
                continue
            item, rej = self.generate_sentence_item(
                sentence, config, sentence_text=passage.sentence_text(sentence.sentence_index))
            rejections.extend(rej)
            if item is not None:
                items.append(item)
        return items, rejections

    # -- sentence level --------------------------------------------------

    def generate_sentence_item(
        self, sentence: AnnotatedSentence, config: GenerationConfig,
        *, sentence_text: str,
    ) -> tuple[GrammarItem | None, list[RejectionRecord]]:
        rejections: list[RejectionRecord] = []
        for code in config.construct_priority:
            if code not in config.enabled_constructs:
                continue
            spec = self.catalog.get(code)
            if not spec.enabled:
                continue
            matched = [t for t in sentence.tokens if match_token(spec, t)]
            if not matched:
                rejections.append(RejectionRecord(
                    sentence.sentence_index, code, RejectionStage.TOKEN_MATCH,
                    f"no token matches {code.value}"))
                continue
            if spec.candidate_source is CandidateSource.COMMA_RELOCATION:
                item, rej = self._comma_item(sentence, sentence_text, spec, config, matched)
                rejections.extend(rej)
                if item is not None:
                    return item, rejections
                continue
            for token in matched:
                item, rej = self._word_item(sentence, sentence_text, spec, config, token)
                rejections.extend(rej)
                if item is not None:
                    return item, rejections
        return None, rejections

    # -- word-substitution and inflection items ---------------------------

    def _word_item(
        self, sentence: AnnotatedSentence, sentence_text: str,
        spec: ConstructSpec, config: GenerationConfig, token: Token,
    ) -> tuple[GrammarItem | None, list[RejectionRecord]]:
        sidx = sentence.sentence_index
        if not match_pattern(spec, token):
            return None, [RejectionRecord(
                sidx, spec.code, RejectionStage.PATTERN_MATCH,
                f"{token.surface!r} tagged {token.coarse_pos}/{token.fine_pos} "
                f"fails the {spec.code.value} pattern")]

        scored, rej = self.validate_and_filter(sentence, sentence_text, token, spec)
        if rej is not None:
            return None, [rej]

        target_surface = self._scored_surface(sentence, token)
        distractors, rej = self.select_distractors(
            scored, target_surface, config.num_distractors, sidx, spec.code)
        if rej is not None:
            return None, [rej]
        target = next(s for s in scored if s.surface == target_surface)

        start = token.char_start - sentence.char_start
        end = token.char_end - sentence.char_start
        capitalize = start == 0 and token.surface[:1].isupper()

        def render(surface: str) -> str:
            return surface.capitalize() if capitalize else surface

        target = ScoredCandidate(render(target.surface), target.log_prob)
        distractors = tuple(
            ScoredCandidate(render(d.surface), d.log_prob) for d in distractors)
        source_text = sentence_text[:start] + BLANK + sentence_text[end:]
        item_id = _item_id(sentence_text, spec.code, (start, end), target.surface)
        order = _shuffled([target.surface] + [d.surface for d in distractors],
                          config.shuffle_seed, item_id)
        return GrammarItem(
            item_id=item_id,
            sentence_index=sidx,
            construct=spec.code,
            source_text=source_text,
            mask_char_span=(start, end),
            target=target,
            distractors=distractors,
            presentation_order=order,
            candidate_scores=tuple(scored),
        ), []

    def validate_and_filter(
        self, sentence: AnnotatedSentence, sentence_text: str,
        token: Token, spec: ConstructSpec,
    ) -> tuple[list[ScoredCandidate] | None, RejectionRecord | None]:
        """Score all candidates at the token's mask; pass iff the original
        token is strictly rank 1."""
        sidx = sentence.sentence_index
        try:
            candidates = self.catalog.candidates_for(spec.code, token)
        except InflectionFailure as exc:
            return None, RejectionRecord(
                sidx, spec.code, RejectionStage.VOCABULARY, str(exc))
        for cand in candidates:
            if not self.scorer.in_vocabulary(cand):
                return None, RejectionRecord(
                    sidx, spec.code, RejectionStage.VOCABULARY,
                    f"candidate {cand!r} is not in the model vocabulary")

        start = token.char_start - sentence.char_start
        end = token.char_end - sentence.char_start
        query = MaskQuery(
            left_context=sentence_text[:start],
            right_context=sentence_text[end:],
            candidates=tuple(candidates),
        )
        scored = self.scorer.score_candidates(query)
        target_surface = self._scored_surface(sentence, token)
        if scored[0].surface != target_surface:
            return None, RejectionRecord(
                sidx, spec.code, RejectionStage.ARGMAX_FILTER,
                f"target {target_surface!r} ranks below {scored[0].surface!r}")
        if len(scored) > 1 and scored[1].log_prob == scored[0].log_prob:
            return None, RejectionRecord(
                sidx, spec.code, RejectionStage.ARGMAX_FILTER,
                f"target {target_surface!r} ties with {scored[1].surface!r}")
        return scored, None

    @staticmethod
    def select_distractors(
        scored: list[ScoredCandidate], target: str, k: int,
        sentence_index: int = -1, code: ConstructCode | None = None,
    ) -> tuple[tuple[ScoredCandidate, ...] | None, RejectionRecord | None]:
        rest = [s for s in scored if s.surface != target]
        if len(rest) < k:
            return None, RejectionRecord(
                sentence_index, code or ConstructCode.ART,
                RejectionStage.TOO_FEW_DISTRACTORS,
                f"only {len(rest)} scoreable distractors, need {k}")
        return tuple(rest[:k]), None

    @staticmethod
    def _scored_surface(sentence: AnnotatedSentence, token: Token) -> str:
        """Targets at the start of a sentence are scored lowercase so casing
        cannot leak the answer."""
        start = token.char_start - sentence.char_start
        if start == 0 and token.surface[:1].isupper():
            return token.surface.lower()
        return token.surface

    # -- comma relocation items -------------------------------------------

    def comma_relocation_candidates(
        self, sentence: AnnotatedSentence, sentence_text: str,
    ) -> list[tuple[int, MaskQuery]]:
        """One (gap position, query) per inter-word gap, original included.

        Positions index into the sentence text with the comma removed; each
        query scores the comma at a mask inserted in that gap.
        """
        comma = next(t for t in sentence.tokens if t.surface == ",")
        c_start = comma.char_start - sentence.char_start
        c_end = comma.char_end - sentence.char_start
        removed = sentence_text[:c_start] + sentence_text[c_end:]
        shift = c_end - c_start
        words = [t for t in sentence.tokens if t.is_word]
        gaps: list[tuple[int, MaskQuery]] = []
        for w in words[:-1]:
            end = w.char_end - sentence.char_start
            pos = end - shift if end > c_start else end
            gaps.append((pos, MaskQuery(
                left_context=removed[:pos],
                right_context=removed[pos:],
                candidates=(",",),
            )))
        return gaps

    def _comma_item(
        self, sentence: AnnotatedSentence, sentence_text: str,
        spec: ConstructSpec, config: GenerationConfig, commas: list[Token],
    ) -> tuple[GrammarItem | None, list[RejectionRecord]]:
        sidx = sentence.sentence_index
        if len(commas) != 1:
            return None, [RejectionRecord(
                sidx, spec.code, RejectionStage.PATTERN_MATCH,
                f"{len(commas)} commas; relocation needs exactly one")]
        comma = commas[0]
        words = [t for t in sentence.tokens if t.is_word]
        before = [w for w in words if w.char_end <= comma.char_start]
        if not before or comma.char_end > words[-1].char_start:
            return None, [RejectionRecord(
                sidx, spec.code, RejectionStage.PATTERN_MATCH,
                "comma is not between two words")]
        if not self.scorer.in_vocabulary(","):
            return None, [RejectionRecord(
                sidx, spec.code, RejectionStage.VOCABULARY,
                "comma is not in the model vocabulary")]

        gaps = self.comma_relocation_candidates(sentence, sentence_text)
        c_start = comma.char_start - sentence.char_start
        removed = (sentence_text[:c_start]
                   + sentence_text[comma.char_end - sentence.char_start:])
        original_pos = before[-1].char_end - sentence.char_start
        if original_pos > c_start:
            original_pos -= comma.char_end - comma.char_start

        def render(pos: int) -> str:
            return removed[:pos] + "," + removed[pos:]

        scored = [
            ScoredCandidate(render(pos), self.scorer.score_candidates(q)[0].log_prob)
            for pos, q in gaps
        ]
        positions = [pos for pos, _ in gaps]
        if original_pos not in positions:
            return None, [RejectionRecord(
                sidx, spec.code, RejectionStage.PATTERN_MATCH,
                "comma is not at an inter-word gap")]
        target = scored[positions.index(original_pos)]
        ranked = sorted(scored, key=lambda s: (-s.log_prob, s.surface))
        if ranked[0].surface != target.surface:
            return None, [RejectionRecord(
                sidx, spec.code, RejectionStage.ARGMAX_FILTER,
                "original comma position does not rank first")]
        if len(ranked) > 1 and ranked[1].log_prob == ranked[0].log_prob:
            return None, [RejectionRecord(
                sidx, spec.code, RejectionStage.ARGMAX_FILTER,
                "original comma position ties with a relocation")]
        distractors, rej = self.select_distractors(
            ranked, target.surface, config.num_distractors, sidx, spec.code)
        if rej is not None:
            return None, [rej]

        chosen_pos = sorted(
            positions[scored.index(s)] for s in (target, *distractors))
        source = removed
        for pos in reversed(chosen_pos):
            source = source[:pos] + BLANK + source[pos:]
        span = (c_start, c_start + (comma.char_end - comma.char_start))
        item_id = _item_id(sentence_text, spec.code, span, target.surface)
        order = _shuffled([target.surface] + [d.surface for d in distractors],
                          config.shuffle_seed, item_id)
        return GrammarItem(
            item_id=item_id,
            sentence_index=sidx,
            construct=spec.code,
            source_text=source,
            mask_char_span=span,
            target=target,
            distractors=distractors,
            presentation_order=order,
            candidate_scores=tuple(ranked),
        ), []


class GrammarItemGenerator(BaseEstimator, TransformerMixin):
    """End-to-end generator with an estimator-style interface.

    ``fit`` loads the annotator, catalog, and scoring model; ``transform``
    maps passages to (items, rejections) pairs.

    Parameters
    ----------
    model : str
        Scorer identifier, e.g. ``ngram:bundled`` or ``bert:<model-id>``.
    constructs : sequence of str or None
        Priority order; defaults to the catalog's enabled constructs.
    num_distractors : int
    alternation : str
        ``EveryOther`` or ``All``.
    shuffle_seed : int
    catalog_path : str or None
        Alternate catalog file.
    """

    def __init__(self, model: str = DEFAULT_MODEL, constructs=None,
                 num_distractors: int = 2, alternation: str = "EveryOther",
                 shuffle_seed: int = 0, catalog_path: str | None = None):
        self.model = model
        self.constructs = constructs
        self.num_distractors = num_distractors
        self.alternation = alternation
        self.shuffle_seed = shuffle_seed
        self.catalog_path = catalog_path

    def fit(self, X=None, y=None) -> "GrammarItemGenerator":
        self.catalog_ = Catalog.load(self.catalog_path)
        self.annotator_ = get_annotator()
        self.scorer_ = get_scorer(self.model)
        self.pipeline_ = ItemPipeline(self.catalog_, self.scorer_)
        if self.constructs is None:
            priority = tuple(self.catalog_.enabled_codes())
        else:
            priority = tuple(ConstructCode(c) for c in self.constructs)
            for code in priority:
                if not self.catalog_.get(code).enabled:
                    raise ValueError(f"construct {code.value} is disabled")
        self.config_ = GenerationConfig(
            construct_priority=priority,
            num_distractors=self.num_distractors,
            alternation=Alternation(self.alternation),
            shuffle_seed=self.shuffle_seed,
        )
        return self

    def transform(self, X) -> list[tuple[list[GrammarItem], list[RejectionRecord]]]:
        if isinstance(X, str):
            raise TypeError("transform expects an iterable of passages, not a string")
        self._check_fitted()
        out = []
        for text in X:
            passage = self.annotator_.annotate(text)
            out.append(self.pipeline_.generate_passage_items(passage, self.config_))
        return out

    def generate(self, text: str) -> tuple[list[GrammarItem], list[RejectionRecord]]:
        """Single-passage convenience wrapper around ``transform``."""
        self._check_fitted()
        return self.transform([text])[0]

    def _check_fitted(self):
        if not hasattr(self, "pipeline_"):
            raise RuntimeError("generator is not fitted; call fit() first")
