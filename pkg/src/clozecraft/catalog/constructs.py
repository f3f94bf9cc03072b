"""Grammar construct catalog.

Each construct names a family of function words or inflections that can be
blanked out of a sentence, the pool its wrong answers are drawn from, and
the syntactic pattern a matched token must satisfy. The catalog ships as
editable JSON so patterns and word lists can be tuned without code changes.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from enum import Enum
from importlib import resources
from pathlib import Path

from .. import morphology
from ..annotate.types import Token


class ConstructCode(str, Enum):
    CMA = "CMA"
    PCT = "PCT"
    ART = "ART"
    COO = "COO"
    SUB = "SUB"
    COR = "COR"
    IDP = "IDP"
    ITP = "ITP"
    POS = "POS"
    REL = "REL"
    PRP = "PRP"
    NOU = "NOU"
    VRB = "VRB"


class Family(str, Enum):
    PUNCTUATION = "Punctuation"
    ARTICLE = "Article"
    CONJUNCTIONS = "Conjunctions"
    PRONOUNS = "Pronouns"
    PREPOSITION = "Preposition"
    NOUN = "Noun"
    VERB = "Verb"


class CandidateSource(str, Enum):
    CLOSED_LIST = "ClosedList"
    INFLECTION = "Inflection"
    COMMA_RELOCATION = "CommaRelocation"


class CatalogError(Exception):
    pass


class InflectionFailure(CatalogError):
    """No inflected forms could be produced for a lemma."""


@dataclass(frozen=True)
class SyntacticPattern:
    """Conjunctive attribute test: every non-empty field must contain the
    token's corresponding attribute."""

    required_fine_pos: frozenset[str] = frozenset()
    required_coarse_pos: frozenset[str] = frozenset()
    required_dep_labels: frozenset[str] = frozenset()

    def __post_init__(self):
        if not (self.required_fine_pos or self.required_coarse_pos
                or self.required_dep_labels):
            raise CatalogError("pattern must constrain at least one attribute")

    def matches(self, token: Token) -> bool:
        if self.required_fine_pos and token.fine_pos not in self.required_fine_pos:
            return False
        if self.required_coarse_pos and token.coarse_pos not in self.required_coarse_pos:
            return False
        if self.required_dep_labels and token.dep_label not in self.required_dep_labels:
            return False
        return True


@dataclass(frozen=True)
class ConstructSpec:
    code: ConstructCode
    family: Family
    display_name: str
    color: str
    candidate_source: CandidateSource
    pattern: SyntacticPattern
    closed_candidates: tuple[str, ...] = ()
    enabled: bool = True

    def __post_init__(self):
        if self.candidate_source is CandidateSource.CLOSED_LIST and not self.closed_candidates:
            raise CatalogError(f"{self.code.value}: closed list is empty")
        if self.candidate_source is not CandidateSource.CLOSED_LIST and self.closed_candidates:
            raise CatalogError(f"{self.code.value}: unexpected closed list")


def match_token(spec: ConstructSpec, token: Token) -> bool:
    """First-stage check: is this token even a candidate for the construct?"""
    if spec.candidate_source is CandidateSource.CLOSED_LIST:
        return token.surface.lower() in spec.closed_candidates
    if spec.candidate_source is CandidateSource.INFLECTION:
        return token.fine_pos in spec.pattern.required_fine_pos
    return token.surface == ","


def match_pattern(spec: ConstructSpec, token: Token) -> bool:
    """Second-stage check: do the token's syntactic attributes fit?"""
    return spec.pattern.matches(token)


# canonical tag order so inflection candidates come out in a stable order
_TAG_ORDER = ("NN", "NNS", "VB", "VBD", "VBG", "VBN", "VBP", "VBZ")


def candidates_for(spec: ConstructSpec, token: Token) -> list[str]:
    """All answer-choice candidates for a matched token, target included."""
    if spec.candidate_source is CandidateSource.CLOSED_LIST:
        return list(spec.closed_candidates)
    if spec.candidate_source is CandidateSource.COMMA_RELOCATION:
        return []  # relocations depend on the sentence, not the token

    lemma = token.lemma.lower()
    tags = [t for t in _TAG_ORDER if t in spec.pattern.required_fine_pos]
    seen: dict[str, None] = {}
    for tag in tags:
        for form in morphology.inflect(lemma, tag):
            seen.setdefault(form, None)
    if not seen:
        raise InflectionFailure(
            f"no {spec.code.value} inflections for lemma {lemma!r}")
    seen.setdefault(token.surface.lower(), None)
    return list(seen)


@dataclass
class Catalog:
    specs: dict[ConstructCode, ConstructSpec] = field(default_factory=dict)

    def __post_init__(self):
        missing = set(ConstructCode) - set(self.specs)
        if missing:
            raise CatalogError(
                f"catalog incomplete, missing {sorted(c.value for c in missing)}")

    def get(self, code: ConstructCode | str) -> ConstructSpec:
        return self.specs[ConstructCode(code)]

    def __iter__(self):
        return iter(self.specs.values())

    def enabled_codes(self) -> list[ConstructCode]:
        return [s.code for s in self if s.enabled]

    def match_token(self, code: ConstructCode | str, token: Token) -> bool:
        return match_token(self.get(code), token)

    def match_pattern(self, code: ConstructCode | str, token: Token) -> bool:
        return match_pattern(self.get(code), token)

    def candidates_for(self, code: ConstructCode | str, token: Token) -> list[str]:
        return candidates_for(self.get(code), token)

    @classmethod
    def load(cls, path: str | Path | None = None) -> "Catalog":
        if path is None:
            raw = resources.files("clozecraft.data").joinpath("catalog.json").read_text("utf-8")
        else:
            raw = Path(path).read_text("utf-8")
        doc = json.loads(raw)
        specs: dict[ConstructCode, ConstructSpec] = {}
        for entry in doc["constructs"]:
            pat = entry["pattern"]
            spec = ConstructSpec(
                code=ConstructCode(entry["code"]),
                family=Family(entry["family"]),
                display_name=entry["display_name"],
                color=entry["color"],
                candidate_source=CandidateSource(entry["candidate_source"]),
                pattern=SyntacticPattern(
                    required_fine_pos=frozenset(pat.get("fine_pos", [])),
                    required_coarse_pos=frozenset(pat.get("coarse_pos", [])),
                    required_dep_labels=frozenset(pat.get("dep_labels", [])),
                ),
                closed_candidates=tuple(entry.get("closed_candidates", [])),
                enabled=entry.get("enabled", True),
            )
            if spec.code in specs:
                raise CatalogError(f"duplicate construct {spec.code.value}")
            specs[spec.code] = spec
        return cls(specs)

    def save(self, path: str | Path) -> None:
        doc = {"constructs": [
            {
                "code": s.code.value,
                "family": s.family.value,
                "display_name": s.display_name,
                "color": s.color,
                "enabled": s.enabled,
                "candidate_source": s.candidate_source.value,
                "closed_candidates": list(s.closed_candidates),
                "pattern": {
                    "fine_pos": sorted(s.pattern.required_fine_pos),
                    "coarse_pos": sorted(s.pattern.required_coarse_pos),
                    "dep_labels": sorted(s.pattern.required_dep_labels),
                },
            }
            for s in self
        ]}
        Path(path).write_text(json.dumps(doc, indent=2) + "\n", "utf-8")
