"""Session-based HTTP exercise service."""

from .sessions import (
    ENCOURAGEMENTS,
    MAX_PASSAGE_CHARS,
    RETRY_PROMPTS,
    AlreadySolved,
    EmptyPassage,
    InvalidChoice,
    InvalidPriority,
    ItemStatus,
    PassageSession,
    PassageTooLong,
    SessionError,
    UnknownItem,
    UnknownSession,
    create_session,
    masked_view,
    submit_answer,
)
from .store import FileSessionStore, InMemorySessionStore, SessionStore

__all__ = [
    "ENCOURAGEMENTS",
    "MAX_PASSAGE_CHARS",
    "RETRY_PROMPTS",
    "AlreadySolved",
    "EmptyPassage",
    "FileSessionStore",
    "InMemorySessionStore",
    "InvalidChoice",
    "InvalidPriority",
    "ItemStatus",
    "PassageSession",
    "PassageTooLong",
    "SessionError",
    "SessionStore",
    "UnknownItem",
    "UnknownSession",
    "create_session",
    "masked_view",
    "submit_answer",
]
