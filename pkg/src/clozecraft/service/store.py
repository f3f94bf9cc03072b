"""Pluggable session persistence.

The default store keeps one JSON file per session and writes atomically
(temp file + rename) so a crashed write never corrupts a session. Restarting
a service on the same directory recovers every session. Writes to one
session are serialized with a per-session lock.
"""

from __future__ import annotations

import json
import os
import threading
from contextlib import contextmanager
from pathlib import Path

from .sessions import PassageSession, UnknownSession


class SessionStore:
    """Interface: save/load plus a per-session write lock."""

    def __init__(self):
        self._locks: dict[str, threading.Lock] = {}
        self._locks_guard = threading.Lock()

    @contextmanager
    def lock(self, session_id: str):
        with self._locks_guard:
            lock = self._locks.setdefault(session_id, threading.Lock())
        with lock:
            yield

    def save(self, session: PassageSession) -> None:
        raise NotImplementedError

    def load(self, session_id: str) -> PassageSession:
        raise NotImplementedError


class InMemorySessionStore(SessionStore):
    def __init__(self):
        super().__init__()
        self._sessions: dict[str, dict] = {}

    def save(self, session: PassageSession) -> None:
        self._sessions[session.session_id] = session.to_dict()

    def load(self, session_id: str) -> PassageSession:
        try:
            return PassageSession.from_dict(self._sessions[session_id])
        except KeyError:
            raise UnknownSession(f"no session {session_id!r}") from None


class FileSessionStore(SessionStore):
    def __init__(self, directory: str | os.PathLike):
        super().__init__()
        self.directory = Path(directory)
        self.directory.mkdir(parents=True, exist_ok=True)

    def _path(self, session_id: str) -> Path:
        safe = "".join(c for c in session_id if c.isalnum() or c in "-_")
        if not safe or safe != session_id:
            raise UnknownSession(f"no session {session_id!r}")
        return self.directory / f"{safe}.json"

    def save(self, session: PassageSession) -> None:
        path = self._path(session.session_id)
        tmp = path.with_suffix(".json.tmp")
        tmp.write_text(
            json.dumps(session.to_dict(), sort_keys=True, ensure_ascii=False),
            encoding="utf-8")
        os.replace(tmp, path)

    def load(self, session_id: str) -> PassageSession:
        path = self._path(session_id)
        try:
            data = json.loads(path.read_text(encoding="utf-8"))
        except FileNotFoundError:
            raise UnknownSession(f"no session {session_id!r}") from None
        return PassageSession.from_dict(data)
