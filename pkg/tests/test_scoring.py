"""Scoring layer tests: query/result contracts, the n-gram backend, and the
transformer backend driven by a tiny in-memory fake model."""

import math

import pytest
import torch

from clozecraft.scoring import (
    MaskQuery,
    NgramMaskedLM,
    OutOfVocabulary,
    ScoredCandidate,
    bundled_model,
    get_scorer,
    rank_scores,
)
from clozecraft.scoring.base import ModelFailure
from clozecraft.scoring.bert import TransformerMaskedLM
from clozecraft.scoring.loader import _cache


# -- contracts ---------------------------------------------------------------

def test_mask_query_requires_distinct_candidates():
    with pytest.raises(ValueError):
        MaskQuery("a ", " b", ())
    with pytest.raises(ValueError):
        MaskQuery("a ", " b", ("x", "x"))


def test_scored_candidate_requires_finite_score():
    with pytest.raises(ValueError):
        ScoredCandidate("x", float("nan"))
    with pytest.raises(ValueError):
        ScoredCandidate("x", float("inf"))


def test_rank_scores_descending_with_lexicographic_ties():
    ranked = rank_scores([ScoredCandidate("b", -1.0), ScoredCandidate("a", -1.0),
                          ScoredCandidate("c", -0.5)])
    assert [(s.surface, s.log_prob) for s in ranked] == [
        ("c", -0.5), ("a", -1.0), ("b", -1.0)]


# -- n-gram backend ----------------------------------------------------------

CORPUS = """\
the cat sat on the mat
the dog sat on the rug
a bird sang in the tree
the cat ran to the tree
"""


@pytest.fixture(scope="module")
def tiny():
    return NgramMaskedLM(order=3).fit(CORPUS.splitlines())


def test_vocabulary_membership(tiny):
    assert tiny.in_vocabulary("cat")
    assert tiny.in_vocabulary("the")
    assert not tiny.in_vocabulary("zebra")
    with pytest.raises(ValueError):
        tiny.in_vocabulary("")


def test_oov_candidate_rejected_by_name(tiny):
    query = MaskQuery("the ", " sat", ("cat", "zebra"))
    with pytest.raises(OutOfVocabulary) as exc:
        tiny.score_candidates(query)
    assert exc.value.candidate == "zebra"


def test_output_is_ranked_permutation(tiny):
    query = MaskQuery("the ", " sat on the mat", ("cat", "dog", "bird", "tree"))
    ranked = tiny.score_candidates(query)
    assert sorted(s.surface for s in ranked) == ["bird", "cat", "dog", "tree"]
    scores = [s.log_prob for s in ranked]
    assert scores == sorted(scores, reverse=True)


def test_attested_context_beats_unattested(tiny):
    query = MaskQuery("the cat ", " on the mat", ("sat", "sang"))
    ranked = tiny.score_candidates(query)
    assert ranked[0].surface == "sat"
    assert ranked[0].log_prob > ranked[1].log_prob


def test_deterministic(tiny):
    query = MaskQuery("the ", " sat", ("cat", "dog"))
    first = tiny.score_candidates(query)
    second = tiny.score_candidates(query)
    assert first == second


def test_singleton_candidate_trivially_ranks_first(tiny):
    ranked = tiny.score_candidates(MaskQuery("the ", " sat", ("cat",)))
    assert len(ranked) == 1
    assert ranked[0].surface == "cat"


def test_estimator_params_round_trip():
    model = NgramMaskedLM(order=2, backoff=0.5)
    assert model.get_params() == {"order": 2, "backoff": 0.5}
    model.set_params(order=3)
    assert model.order == 3


def test_bundled_model_is_cached_and_fitted():
    a = bundled_model()
    b = bundled_model()
    assert a is b
    assert a.in_vocabulary("the")


def test_get_scorer_routing_and_cache():
    assert get_scorer("ngram:bundled") is get_scorer("ngram:bundled")
    lm = get_scorer("bert:some-model")
    assert isinstance(lm, TransformerMaskedLM)
    assert lm.model_id == "some-model"
    _cache.pop("bert:some-model", None)


# -- transformer backend with a fake model -----------------------------------

VOCAB = {"[MASK]": 0, "the": 1, "cat": 2, "dog": 3, "sat": 4, "mat": 5,
         "on": 6, "a": 7, ",": 8, "ran": 9}
WEIGHTS = {1: 2.0, 2: 5.0, 3: 4.0, 4: 1.0, 5: 0.5, 6: 0.2, 7: 3.0, 8: 0.1, 9: 0.9}


class FakeTokenizer:
    mask_token = "[MASK]"
    mask_token_id = 0
    model_max_length = 512

    def _split(self, text):
        out = []
        for raw in text.replace(",", " , ").split():
            if raw in VOCAB:
                out.append(VOCAB[raw])
            else:
                # unknown words break into two pieces, like wordpieces do
                out.extend([90, 91])
        return out

    def __call__(self, text, return_tensors=None, add_special_tokens=True):
        ids = self._split(text)
        if return_tensors == "pt":
            return {"input_ids": torch.tensor([ids], dtype=torch.long)}
        return {"input_ids": ids}


class FakeModel:
    vocab_size = 100

    def __call__(self, input_ids):
        batch, seq = input_ids.shape
        logits = torch.zeros(batch, seq, self.vocab_size)
        for wid, w in WEIGHTS.items():
            logits[:, :, wid] = w

        class Output:
            pass

        out = Output()
        out.logits = logits
        return out


@pytest.fixture()
def fake_lm():
    return TransformerMaskedLM(model=FakeModel(), tokenizer=FakeTokenizer())


def test_fake_backend_ranks_by_logits(fake_lm):
    query = MaskQuery("the ", " sat on the mat", ("cat", "dog", "a"))
    ranked = fake_lm.score_candidates(query)
    assert [s.surface for s in ranked] == ["cat", "dog", "a"]
    # log-softmax preserves logit differences
    assert ranked[0].log_prob - ranked[1].log_prob == pytest.approx(1.0)


def test_fake_backend_vocabulary(fake_lm):
    assert fake_lm.in_vocabulary("cat")
    assert fake_lm.in_vocabulary(",")
    assert not fake_lm.in_vocabulary("zebra")


def test_fake_backend_multipiece_candidate_rejected(fake_lm):
    query = MaskQuery("the ", " sat", ("cat", "zebra"))
    with pytest.raises(OutOfVocabulary) as exc:
        fake_lm.score_candidates(query)
    assert exc.value.candidate == "zebra"


def test_fake_backend_rejects_second_mask_in_context(fake_lm):
    query = MaskQuery("the [MASK] ", " sat", ("cat",))
    with pytest.raises(ModelFailure):
        fake_lm.score_candidates(query)


def test_fake_backend_deterministic(fake_lm):
    query = MaskQuery("the ", " sat", ("cat", "dog"))
    assert fake_lm.score_candidates(query) == fake_lm.score_candidates(query)


def test_truncation_keeps_mask():
    lm = TransformerMaskedLM(model=FakeModel(), tokenizer=FakeTokenizer(),
                             max_window=8)
    long_left = "the cat sat on the mat " * 10
    long_right = " on the mat sat the dog" * 10
    ranked = lm.score_candidates(MaskQuery(long_left, long_right, ("cat", "dog")))
    assert [s.surface for s in ranked] == ["cat", "dog"]


def test_truncate_around_is_symmetric_window():
    ids = torch.arange(20)
    window = TransformerMaskedLM._truncate_around(ids, mask_pos=10, limit=5)
    assert window.tolist() == [8, 9, 10, 11, 12]
    window = TransformerMaskedLM._truncate_around(ids, mask_pos=1, limit=5)
    assert window.tolist() == [0, 1, 2, 3, 4]
    window = TransformerMaskedLM._truncate_around(ids, mask_pos=19, limit=5)
    assert window.tolist() == [15, 16, 17, 18, 19]


def test_missing_model_load_is_model_failure():
    lm = TransformerMaskedLM(model_id="definitely/not-a-real-model")
    with pytest.raises(ModelFailure):
        lm.in_vocabulary("cat")


def test_unigram_floor_for_unknown_context_words(tiny):
    # unknown words in the *context* degrade gracefully to a floor score
    ranked = tiny.score_candidates(MaskQuery("zebra ", " zebra", ("cat", "dog")))
    assert len(ranked) == 2
    assert all(math.isfinite(s.log_prob) for s in ranked)
