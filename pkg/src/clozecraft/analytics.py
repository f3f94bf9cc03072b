"""Batch reporting: construct distribution and score-gap statistics.

The gap (target log-probability minus the best distractor's) is a cheap
difficulty proxy: small gaps mean the model found the distractor nearly as
plausible as the key.
"""

from __future__ import annotations

import math
import statistics
from dataclasses import dataclass, field
from typing import Iterable

from .generator import GrammarItem, RejectionRecord
from .records import RecordError, read_records

HISTOGRAM_BIN_WIDTH = 1.0


@dataclass(frozen=True)
class GapStats:
    count: int
    minimum: float
    median: float
    mean: float
    #: (bin_low, bin_high, count) with fixed-width bins from floor(min)
    histogram: tuple[tuple[float, float, int], ...]

    @classmethod
    def from_gaps(cls, gaps: list[float]) -> "GapStats":
        lo = math.floor(min(gaps) / HISTOGRAM_BIN_WIDTH) * HISTOGRAM_BIN_WIDTH
        hi = max(gaps)
        bins: list[tuple[float, float, int]] = []
        for k in range(int((hi - lo) // HISTOGRAM_BIN_WIDTH) + 1):
            edge = lo + k * HISTOGRAM_BIN_WIDTH
            upper = edge + HISTOGRAM_BIN_WIDTH
            n = sum(1 for g in gaps if edge <= g < upper)
            if n:
                bins.append((edge, upper, n))
        return cls(
            count=len(gaps),
            minimum=min(gaps),
            median=statistics.median(gaps),
            mean=statistics.fmean(gaps),
            histogram=tuple(bins),
        )

    def to_dict(self) -> dict:
        return {
            "count": self.count,
            "min": self.minimum,
            "median": self.median,
            "mean": self.mean,
            "histogram": [list(b) for b in self.histogram],
        }


@dataclass(frozen=True)
class BatchReport:
    total_documents: int
    total_sentences: int
    total_items: int
    per_construct_counts: dict[str, int]
    rejection_counts: dict[str, int]
    gap_stats: dict[str, GapStats] = field(default_factory=dict)

    def __post_init__(self):
        if sum(self.per_construct_counts.values()) != self.total_items:
            raise ValueError("per-construct counts must sum to total_items")

    def percentages(self) -> dict[str, float]:
        if not self.total_items:
            return {}
        return {
            code: 100.0 * n / self.total_items
            for code, n in self.per_construct_counts.items()
        }

    def to_dict(self) -> dict:
        return {
            "total_documents": self.total_documents,
            "total_sentences": self.total_sentences,
            "total_items": self.total_items,
            "per_construct_counts": dict(sorted(self.per_construct_counts.items())),
            "rejection_counts": dict(sorted(self.rejection_counts.items())),
            "gap_stats": {
                code: stats.to_dict()
                for code, stats in sorted(self.gap_stats.items())
            },
        }

    def format_text(self) -> str:
        lines = [
            "Batch report",
            f"  documents: {self.total_documents}",
            f"  sentences: {self.total_sentences}",
            f"  items:     {self.total_items}",
        ]
        if self.per_construct_counts:
            lines.append("  construct distribution:")
            pct = self.percentages()
            for code, n in sorted(self.per_construct_counts.items(),
                                  key=lambda kv: (-kv[1], kv[0])):
                lines.append(f"    {code:<4} {n:>5}  ({pct[code]:.1f}%)")
        if self.rejection_counts:
            lines.append("  rejections by stage:")
            for stage, n in sorted(self.rejection_counts.items()):
                lines.append(f"    {stage:<18} {n:>5}")
        if self.gap_stats:
            lines.append("  score gap (target - best distractor):")
            for code, stats in sorted(self.gap_stats.items()):
                lines.append(
                    f"    {code:<4} n={stats.count:<5} min={stats.minimum:.3f} "
                    f"median={stats.median:.3f} mean={stats.mean:.3f}")
                for lo, hi, n in stats.histogram:
                    bar = "#" * min(n, 60)
                    lines.append(f"         [{lo:6.2f}, {hi:6.2f}) {n:>5} {bar}")
        return "\n".join(lines)


def _build_report(total_documents: int, total_sentences: int,
                  construct_gap_pairs: list[tuple[str, float]],
                  rejection_counts: dict[str, int]) -> BatchReport:
    per_construct: dict[str, int] = {}
    gaps_by_construct: dict[str, list[float]] = {}
    for code, gap in construct_gap_pairs:
        per_construct[code] = per_construct.get(code, 0) + 1
        gaps_by_construct.setdefault(code, []).append(gap)
    return BatchReport(
        total_documents=total_documents,
        total_sentences=total_sentences,
        total_items=len(construct_gap_pairs),
        per_construct_counts=per_construct,
        rejection_counts=dict(sorted(rejection_counts.items())),
        gap_stats={
            code: GapStats.from_gaps(gaps)
            for code, gaps in gaps_by_construct.items()
        },
    )


def report_from_results(total_documents: int, total_sentences: int,
                        items: Iterable[GrammarItem],
                        rejections: Iterable[RejectionRecord]) -> BatchReport:
    """Build the report at generation time from in-memory results."""
    counts: dict[str, int] = {}
    for rej in rejections:
        counts[rej.stage.value] = counts.get(rej.stage.value, 0) + 1
    pairs = [(item.construct.value, item.gap) for item in items]
    return _build_report(total_documents, total_sentences, pairs, counts)


def report_from_records(lines: Iterable[str]) -> BatchReport:
    """Rebuild the report from a record file; no model calls involved."""
    item_records, summary = read_records(lines)
    if summary is None:
        raise RecordError("record stream has no summary record")
    pairs = [(r["construct"], r["gap"]) for r in item_records]
    return _build_report(
        total_documents=summary.get("total_documents", 0),
        total_sentences=summary.get("total_sentences", 0),
        construct_gap_pairs=pairs,
        rejection_counts=dict(summary.get("rejection_counts", {})),
    )
