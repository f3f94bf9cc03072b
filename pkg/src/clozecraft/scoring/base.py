"""Masked-position scoring contract.

A scorer answers one kind of question: given the text to the left and right
of a single blank, how probable is each candidate filler at that blank?
Scores are log probabilities on the backend's own scale; they are only
comparable between candidates of the same query, never across queries.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import isfinite


class ScorerError(Exception):
    pass


class OutOfVocabulary(ScorerError):
    """Candidate is not a single vocabulary piece for this model."""

    def __init__(self, candidate: str):
        super().__init__(f"candidate not in model vocabulary: {candidate!r}")
        self.candidate = candidate


class ModelFailure(ScorerError):
    """The scoring backend failed."""


@dataclass(frozen=True)
class MaskQuery:
    left_context: str
    right_context: str
    candidates: tuple[str, ...]

    def __post_init__(self):
        if not self.candidates:
            raise ValueError("query needs at least one candidate")
        if len(set(self.candidates)) != len(self.candidates):
            raise ValueError("candidates must be distinct")
        if any(not c for c in self.candidates):
            raise ValueError("candidates must be non-empty strings")


@dataclass(frozen=True)
class ScoredCandidate:
    surface: str
    log_prob: float

    def __post_init__(self):
        if not isfinite(self.log_prob):
            raise ValueError(f"non-finite score for {self.surface!r}")


def rank_scores(scored: list[ScoredCandidate]) -> list[ScoredCandidate]:
    """Descending by score; ties broken by ascending surface."""
    return sorted(scored, key=lambda s: (-s.log_prob, s.surface))


class MaskedLM:
    """Backend interface. Subclasses implement the two raw hooks."""

    def in_vocabulary(self, word: str) -> bool:
        if not word:
            raise ValueError("word must be non-empty")
        return self._known(word)

    def score_candidates(self, query: MaskQuery) -> list[ScoredCandidate]:
        for cand in query.candidates:
            if not self.in_vocabulary(cand):
                raise OutOfVocabulary(cand)
        raw = self._score(query)
        scored = [ScoredCandidate(surface=c, log_prob=raw[c]) for c in query.candidates]
        return rank_scores(scored)

    # hooks
    def _known(self, word: str) -> bool:
        raise NotImplementedError

    def _score(self, query: MaskQuery) -> dict[str, float]:
        raise NotImplementedError
