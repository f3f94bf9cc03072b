"""Model selection by identifier string.

Identifiers:
  ``ngram:bundled``      count model trained on the packaged corpus (default)
  ``ngram:<path>``       count model trained on a local text file
  ``bert:<model-id>``    pretrained transformer, e.g. ``bert:bert-base-uncased``
  anything else          treated as a transformer model id
"""

from __future__ import annotations

from .base import MaskedLM, ModelFailure
from .ngram import bundled_model, model_from_file

DEFAULT_MODEL = "ngram:bundled"

_cache: dict[str, MaskedLM] = {}


def get_scorer(model_id: str = DEFAULT_MODEL) -> MaskedLM:
    if not model_id:
        raise ModelFailure("empty model identifier")
    if model_id in _cache:
        return _cache[model_id]
    if model_id.startswith("ngram:"):
        target = model_id.split(":", 1)[1]
        scorer = bundled_model() if target == "bundled" else model_from_file(target)
    else:
        from .bert import TransformerMaskedLM
        name = model_id.split(":", 1)[1] if model_id.startswith("bert:") else model_id
        scorer = TransformerMaskedLM(model_id=name)
    _cache[model_id] = scorer
    return scorer
