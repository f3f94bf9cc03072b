"""Masked-LM scoring backed by a pretrained transformer.

One forward pass per query: the blank becomes the mask token, and every
candidate's log probability is read off the log-softmax at the mask
position. Candidates that tokenize to more than one vocabulary piece are
rejected upstream rather than approximated.
"""

from __future__ import annotations

from .base import MaskedLM, MaskQuery, ModelFailure


class TransformerMaskedLM(MaskedLM):
    """Scores candidates with a HuggingFace masked LM.

    ``model`` and ``tokenizer`` may be passed directly (used in tests);
    otherwise they are loaded from ``model_id`` on first use.
    """

    def __init__(self, model_id: str = "bert-base-uncased", device: str = "cpu",
                 max_window: int | None = None, model=None, tokenizer=None):
        self.model_id = model_id
        self.device = device
        self.max_window = max_window
        self._model = model
        self._tokenizer = tokenizer

    def _load(self):
        if self._model is not None and self._tokenizer is not None:
            return
        try:
            from transformers import AutoModelForMaskedLM, AutoTokenizer
        except ImportError as exc:
            raise ModelFailure(
                "transformers is not installed; install the 'bert' extra") from exc
        try:
            self._tokenizer = AutoTokenizer.from_pretrained(self.model_id)
            self._model = AutoModelForMaskedLM.from_pretrained(self.model_id)
            self._model.to(self.device)
            self._model.eval()
        except Exception as exc:
            raise ModelFailure(f"could not load model {self.model_id!r}: {exc}") from exc

    def _candidate_id(self, word: str) -> int | None:
        ids = self._tokenizer(word, add_special_tokens=False)["input_ids"]
        return ids[0] if len(ids) == 1 else None

    def _known(self, word: str) -> bool:
        self._load()
        return self._candidate_id(word) is not None

    def _score(self, query: MaskQuery) -> dict[str, float]:
        self._load()
        import torch

        tok = self._tokenizer
        text = f"{query.left_context}{tok.mask_token}{query.right_context}"
        enc = tok(text, return_tensors="pt")
        ids = enc["input_ids"][0]
        mask_positions = (ids == tok.mask_token_id).nonzero().flatten().tolist()
        if len(mask_positions) != 1:
            raise ModelFailure(
                f"expected exactly one mask position, found {len(mask_positions)}")
        limit = self.max_window or getattr(tok, "model_max_length", 512) or 512
        if len(ids) > limit:
            ids = self._truncate_around(ids, mask_positions[0], limit)
            mask_positions = (ids == tok.mask_token_id).nonzero().flatten().tolist()
        batch = ids.unsqueeze(0).to(self.device)
        try:
            with torch.no_grad():
                logits = self._model(input_ids=batch).logits[0, mask_positions[0]]
        except Exception as exc:
            raise ModelFailure(f"forward pass failed: {exc}") from exc
        log_probs = torch.log_softmax(logits.float(), dim=-1)
        out: dict[str, float] = {}
        for cand in query.candidates:
            cid = self._candidate_id(cand)
            if cid is None:  # precondition enforced by the base class
                raise ModelFailure(f"unscorable candidate {cand!r}")
            out[cand] = float(log_probs[cid])
        return out

    @staticmethod
    def _truncate_around(ids, mask_pos: int, limit: int):
        """Keep a window of at most ``limit`` ids centered on the mask."""
        half = limit // 2
        start = max(0, mask_pos - half)
        end = min(len(ids), start + limit)
        start = max(0, end - limit)
        return ids[start:end]
