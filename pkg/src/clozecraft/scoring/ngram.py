"""Count-based masked scoring.

An n-gram model with stupid backoff stands in for a neural masked LM. For
a candidate at the blank, the score sums the log backoff-probabilities of
every window that overlaps the filled position, so the candidate is judged
both by how well the left context predicts it and by how well it predicts
what follows. Training is plain counting, so scores are exactly
reproducible: same corpus, same scores, on any machine.
"""

from __future__ import annotations

import math
import re
from collections import Counter
from importlib import resources
from pathlib import Path

from sklearn.base import BaseEstimator

from .base import MaskedLM, MaskQuery, ModelFailure

_WORD_RE = re.compile(r"[a-z0-9]+(?:['’-][a-z0-9]+)*|[^\sa-z0-9]")

BOS = "<s>"

BACKOFF = 0.4  # standard stupid-backoff discount


def word_tokens(text: str) -> list[str]:
    return _WORD_RE.findall(text.lower())


def bundled_corpus_text() -> str:
    return resources.files("clozecraft.data").joinpath("corpus.txt").read_text("utf-8")


class NgramMaskedLM(MaskedLM, BaseEstimator):
    """Stupid-backoff n-gram scorer with a masked-LM interface.

    Parameters
    ----------
    order : int
        Longest n-gram counted (3 = trigrams).
    backoff : float
        Multiplicative penalty per backoff step.
    """

    def __init__(self, order: int = 3, backoff: float = BACKOFF):
        self.order = order
        self.backoff = backoff

    def fit(self, corpus: str | list[str], y=None) -> "NgramMaskedLM":
        """Count n-grams. ``corpus`` is raw text or a list of sentences;
        each line/item is treated as an independent sentence."""
        if self.order < 1:
            raise ValueError("order must be >= 1")
        if not 0.0 < self.backoff <= 1.0:
            raise ValueError("backoff must be in (0, 1]")
        lines = corpus.splitlines() if isinstance(corpus, str) else list(corpus)
        counts: list[Counter] = [Counter() for _ in range(self.order)]
        total = 0
        for line in lines:
            toks = word_tokens(line)
            if not toks:
                continue
            total += len(toks)
            counts[0].update((t,) for t in toks)
            padded = [BOS] * (self.order - 1) + toks
            for n in range(2, self.order + 1):
                counts[n - 1].update(zip(*(padded[i:] for i in range(n))))
        if total == 0:
            raise ValueError("corpus contained no tokens")
        contexts: list[Counter] = [Counter() for _ in range(self.order - 1)]
        for n in range(2, self.order + 1):
            for gram, c in counts[n - 1].items():
                contexts[n - 2][gram[:-1]] += c
        self.counts_ = counts
        self.context_counts_ = contexts
        self.total_tokens_ = total
        self.vocabulary_ = frozenset(g[0] for g in counts[0])
        return self

    # -- MaskedLM hooks -------------------------------------------------

    def _known(self, word: str) -> bool:
        self._check_fitted()
        toks = word_tokens(word)
        return len(toks) == 1 and toks[0] in self.vocabulary_

    def _score(self, query: MaskQuery) -> dict[str, float]:
        self._check_fitted()
        left = [BOS] * (self.order - 1) + word_tokens(query.left_context)
        right = word_tokens(query.right_context)
        out: dict[str, float] = {}
        for cand in query.candidates:
            piece = word_tokens(cand)[0]
            seq = left + [piece] + right
            pos = len(left)
            score = 0.0
            for j in range(pos, min(pos + self.order, len(seq))):
                history = tuple(seq[max(0, j - self.order + 1):j])
                score += self._log_backoff(seq[j], history)
            out[cand] = score
        return out

    def _log_backoff(self, word: str, history: tuple[str, ...]) -> float:
        penalty = 0.0
        while True:
            n = len(history) + 1
            gram = history + (word,)
            num = self.counts_[n - 1].get(gram, 0)
            if num > 0:
                if n == 1:
                    den = self.total_tokens_
                else:
                    den = self._context_count(history)
                if den > 0:
                    return penalty + math.log(num / den)
            if not history:
                # unseen unigram: floor for unknown context words (candidates
                # themselves are vocabulary-checked before scoring)
                return penalty + math.log(0.5 / self.total_tokens_)
            history = history[1:]
            penalty += math.log(self.backoff)

    def _context_count(self, history: tuple[str, ...]) -> int:
        return self.context_counts_[len(history) - 1].get(history, 0)

    def _check_fitted(self):
        if not hasattr(self, "counts_"):
            raise ModelFailure("model is not fitted; call fit() first")


_BUNDLED: NgramMaskedLM | None = None


def bundled_model(order: int = 3) -> NgramMaskedLM:
    """The model trained on the packaged corpus (cached)."""
    global _BUNDLED
    if _BUNDLED is None or _BUNDLED.order != order:
        _BUNDLED = NgramMaskedLM(order=order).fit(bundled_corpus_text())
    return _BUNDLED


def model_from_file(path: str | Path, order: int = 3) -> NgramMaskedLM:
    return NgramMaskedLM(order=order).fit(Path(path).read_text("utf-8"))
