"""Session domain model: passage state, masked views, answer checking.

No HTTP here — the app layer wires these into endpoints, the store layer
persists them.
"""

from __future__ import annotations

import time
import uuid
from dataclasses import dataclass, field
from enum import Enum

from ..catalog import Catalog, ConstructCode
from ..generator import (
    Alternation,
    GenerationConfig,
    GrammarItem,
    ItemPipeline,
    RejectionRecord,
)
from ..records import item_to_record, record_to_item

MAX_PASSAGE_CHARS = 1000

#: Rotating feedback copy; selection is deterministic per session state.
ENCOURAGEMENTS = (
    "Great job! The sentence is now revealed.",
    "Exactly right — keep going!",
    "Well done! You picked the correct form.",
    "Nice work! That reads naturally now.",
)
RETRY_PROMPTS = (
    "Not quite — give it another try.",
    "That choice doesn't fit here. Try again!",
    "Almost! Read the sentence again and retry.",
)


class SessionError(Exception):
    """Base class; ``code`` is the machine-readable error identifier."""

    code = "SessionError"

    def __init__(self, message: str):
        super().__init__(message)
        self.message = message


class PassageTooLong(SessionError):
    code = "PassageTooLong"


class EmptyPassage(SessionError):
    code = "EmptyPassage"


class InvalidPriority(SessionError):
    code = "InvalidPriority"


class UnknownSession(SessionError):
    code = "UnknownSession"


class UnknownItem(SessionError):
    code = "UnknownItem"


class AlreadySolved(SessionError):
    code = "AlreadySolved"


class InvalidChoice(SessionError):
    code = "InvalidChoice"


class ItemStatus(str, Enum):
    LOCKED = "Locked"
    SOLVED = "Solved"


@dataclass
class ItemState:
    status: ItemStatus = ItemStatus.LOCKED
    attempts: int = 0


@dataclass
class PassageSession:
    session_id: str
    original_text: str
    config: GenerationConfig
    sentence_texts: list[str]
    items: list[GrammarItem]
    item_states: dict[str, ItemState]
    created_at: float
    strict_mode: bool = False
    solved_order: list[str] = field(default_factory=list)

    def item(self, item_id: str) -> GrammarItem:
        for it in self.items:
            if it.item_id == item_id:
                return it
        raise UnknownItem(f"no item {item_id!r} in this session")

    # -- serialization -----------------------------------------------------

    def to_dict(self) -> dict:
        return {
            "session_id": self.session_id,
            "original_text": self.original_text,
            "created_at": self.created_at,
            "strict_mode": self.strict_mode,
            "solved_order": list(self.solved_order),
            "config": {
                "construct_priority": [c.value for c in self.config.construct_priority],
                "num_distractors": self.config.num_distractors,
                "alternation": self.config.alternation.value,
                "shuffle_seed": self.config.shuffle_seed,
            },
            "sentence_texts": list(self.sentence_texts),
            "items": [item_to_record(it) for it in self.items],
            "item_states": {
                item_id: {"status": st.status.value, "attempts": st.attempts}
                for item_id, st in self.item_states.items()
            },
        }

    @classmethod
    def from_dict(cls, data: dict) -> "PassageSession":
        cfg = data["config"]
        return cls(
            session_id=data["session_id"],
            original_text=data["original_text"],
            config=GenerationConfig(
                construct_priority=tuple(
                    ConstructCode(c) for c in cfg["construct_priority"]),
                num_distractors=cfg["num_distractors"],
                alternation=Alternation(cfg["alternation"]),
                shuffle_seed=cfg["shuffle_seed"],
            ),
            sentence_texts=list(data["sentence_texts"]),
            items=[record_to_item(r) for r in data["items"]],
            item_states={
                item_id: ItemState(ItemStatus(st["status"]), st["attempts"])
                for item_id, st in data["item_states"].items()
            },
            created_at=data["created_at"],
            strict_mode=data.get("strict_mode", False),
            solved_order=list(data.get("solved_order", [])),
        )


def validate_passage_text(text) -> str:
    if not isinstance(text, str) or not text.strip():
        raise EmptyPassage("passage text must be a non-empty string")
    if len(text) > MAX_PASSAGE_CHARS:
        raise PassageTooLong(
            f"passage is {len(text)} characters; the limit is {MAX_PASSAGE_CHARS}")
    return text


def validate_priority(
    priority: list[str] | None, catalog: Catalog,
) -> tuple[ConstructCode, ...]:
    """The priority must be a permutation of the enabled constructs."""
    enabled = catalog.enabled_codes()
    if priority is None:
        return tuple(enabled)
    try:
        codes = tuple(ConstructCode(c) for c in priority)
    except ValueError as exc:
        raise InvalidPriority(str(exc)) from exc
    if len(set(codes)) != len(codes):
        raise InvalidPriority("construct_priority contains duplicates")
    if set(codes) != set(enabled):
        missing = sorted(c.value for c in set(enabled) - set(codes))
        extra = sorted(c.value for c in set(codes) - set(enabled))
        raise InvalidPriority(
            "construct_priority must be a permutation of the enabled "
            f"constructs (missing: {missing}, unexpected: {extra})")
    return codes


def create_session(
    text: str,
    priority: list[str] | None,
    *,
    annotator,
    pipeline: ItemPipeline,
    shuffle_seed: int = 0,
    strict_mode: bool = False,
) -> tuple[PassageSession, list[RejectionRecord]]:
    text = validate_passage_text(text)
    codes = validate_priority(priority, pipeline.catalog)
    config = GenerationConfig(construct_priority=codes, shuffle_seed=shuffle_seed)
    passage = annotator.annotate(text)
    items, rejections = pipeline.generate_passage_items(passage, config)
    session = PassageSession(
        session_id=uuid.uuid4().hex,
        original_text=text,
        config=config,
        sentence_texts=[passage.sentence_text(i) for i in range(len(passage.sentences))],
        items=items,
        item_states={it.item_id: ItemState() for it in items},
        created_at=time.time(),
    )
    session.strict_mode = strict_mode
    return session, rejections


def masked_view(session: PassageSession) -> dict:
    """Per-sentence view: full text when unmasked or solved, blanked text
    plus choices while locked. Locked entries never carry the target or any
    score-bearing field."""
    by_sentence: dict[int, GrammarItem] = {
        it.sentence_index: it for it in session.items}
    entries = []
    first_locked: int | None = None
    for idx, text in enumerate(session.sentence_texts):
        item = by_sentence.get(idx)
        state = session.item_states[item.item_id] if item else None
        locked = state is not None and state.status is ItemStatus.LOCKED
        if first_locked is None and locked:
            first_locked = idx
        hidden = (session.strict_mode and first_locked is not None
                  and idx > first_locked)
        entry: dict = {
            "sentence_index": idx,
            "masked": locked,
            "hidden": hidden,
            "text": "" if hidden else (item.source_text if locked else text),
        }
        if hidden:
            entries.append(entry)
            continue
        if locked:
            entry["construct_code"] = item.construct.value
            entry["item_id"] = item.item_id
            entry["choices"] = list(item.presentation_order)
            entry["attempts"] = state.attempts
        elif item is not None:
            entry["construct_code"] = item.construct.value
            entry["item_id"] = item.item_id
            entry["solved"] = True
        entries.append(entry)
    return {"session_id": session.session_id, "sentences": entries}


def submit_answer(session: PassageSession, item_id: str, choice: str) -> dict:
    """Apply one answer submission; mutates the session state."""
    item = session.item(item_id)
    state = session.item_states[item_id]
    if state.status is ItemStatus.SOLVED:
        raise AlreadySolved(f"item {item_id} is already solved")
    if choice not in item.presentation_order:
        raise InvalidChoice(f"{choice!r} is not one of this item's choices")
    state.attempts += 1
    if choice == item.target.surface:
        state.status = ItemStatus.SOLVED
        session.solved_order.append(item_id)
        feedback = ENCOURAGEMENTS[
            (len(session.solved_order) - 1) % len(ENCOURAGEMENTS)]
        return {
            "correct": True,
            "attempts": state.attempts,
            "feedback": feedback,
            "unmasked_text": session.sentence_texts[item.sentence_index],
        }
    feedback = RETRY_PROMPTS[(state.attempts - 1) % len(RETRY_PROMPTS)]
    return {"correct": False, "attempts": state.attempts, "feedback": feedback}
