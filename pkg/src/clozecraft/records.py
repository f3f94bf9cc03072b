"""Line-delimited item records.

One JSON object per line: ``item`` records mirroring
:class:`~clozecraft.generator.GrammarItem` (plus the full candidate scores
and the source document index), followed by a single ``summary`` record that
carries the batch-level counts needed to rebuild the report without
re-running any model. Serialization is canonical (sorted keys, fixed
separators) so identical runs produce identical bytes.
"""

from __future__ import annotations

import json
from typing import Iterable, TextIO

from .catalog import ConstructCode
from .generator import GrammarItem, RejectionRecord
from .scoring import ScoredCandidate

SCHEMA_VERSION = 1


class RecordError(ValueError):
    """A record line does not parse or fails validation."""


def _dump(obj: dict) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"), ensure_ascii=False)


def _scored(sc: ScoredCandidate) -> dict:
    return {"surface": sc.surface, "log_prob": sc.log_prob}


def item_to_record(item: GrammarItem, document_index: int = 0) -> dict:
    return {
        "record_type": "item",
        "schema_version": SCHEMA_VERSION,
        "document_index": document_index,
        "item_id": item.item_id,
        "sentence_index": item.sentence_index,
        "construct": item.construct.value,
        "source_text": item.source_text,
        "mask_char_span": list(item.mask_char_span),
        "target": _scored(item.target),
        "distractors": [_scored(d) for d in item.distractors],
        "presentation_order": list(item.presentation_order),
        "candidate_scores": [_scored(s) for s in item.candidate_scores],
        "gap": item.gap,
    }


def record_to_item(record: dict) -> GrammarItem:
    try:
        return GrammarItem(
            item_id=record["item_id"],
            sentence_index=record["sentence_index"],
            construct=ConstructCode(record["construct"]),
            source_text=record["source_text"],
            mask_char_span=tuple(record["mask_char_span"]),
            target=ScoredCandidate(**record["target"]),
            distractors=tuple(ScoredCandidate(**d) for d in record["distractors"]),
            presentation_order=tuple(record["presentation_order"]),
            candidate_scores=tuple(
                ScoredCandidate(**s) for s in record.get("candidate_scores", [])),
        )
    except (KeyError, TypeError, ValueError) as exc:
        raise RecordError(f"invalid item record: {exc}") from exc


def summary_record(total_documents: int, total_sentences: int,
                   rejections: Iterable[RejectionRecord]) -> dict:
    counts: dict[str, int] = {}
    for rej in rejections:
        counts[rej.stage.value] = counts.get(rej.stage.value, 0) + 1
    return {
        "record_type": "summary",
        "schema_version": SCHEMA_VERSION,
        "total_documents": total_documents,
        "total_sentences": total_sentences,
        "rejection_counts": dict(sorted(counts.items())),
    }


def write_records(out: TextIO, items: Iterable[tuple[int, GrammarItem]],
                  summary: dict) -> int:
    """Write ``(document_index, item)`` pairs then the summary; returns the
    number of item lines written."""
    n = 0
    for doc_index, item in items:
        out.write(_dump(item_to_record(item, doc_index)) + "\n")
        n += 1
    out.write(_dump(summary) + "\n")
    return n


def read_records(lines: Iterable[str]) -> tuple[list[dict], dict | None]:
    """Parse record lines into (item records, summary record).

    Raises RecordError naming the 1-based line number on malformed input.
    """
    items: list[dict] = []
    summary: dict | None = None
    for lineno, line in enumerate(lines, start=1):
        line = line.strip()
        if not line:
            continue
        try:
            record = json.loads(line)
        except json.JSONDecodeError as exc:
            raise RecordError(f"line {lineno}: not valid JSON ({exc})") from exc
        if not isinstance(record, dict):
            raise RecordError(f"line {lineno}: record must be an object")
        kind = record.get("record_type")
        if kind == "item":
            try:
                record_to_item(record)  # validates shape and invariants
            except RecordError as exc:
                raise RecordError(f"line {lineno}: {exc}") from exc
            items.append(record)
        elif kind == "summary":
            summary = record
        else:
            raise RecordError(f"line {lineno}: unknown record_type {kind!r}")
    return items, summary
