"""HTTP exercise service.

Endpoints:
  POST /passages                            create a session from a passage
  GET  /sessions/{id}                       current masked view
  POST /sessions/{id}/items/{iid}/answer    check a choice, unmask on success
  GET  /constructs                          legend metadata (codes, names, colors)

Errors are JSON ``{"error": {"code", "message"}}`` with 400 for validation,
404 for unknown resources, and 409 for answering an already-solved item.
"""

from __future__ import annotations

import argparse
import os

from fastapi import FastAPI, Request
from fastapi.exceptions import RequestValidationError
from fastapi.responses import JSONResponse
from pydantic import BaseModel

from ..annotate import AnnotationFailure, get_annotator
from ..catalog import Catalog
from ..generator import ItemPipeline
from ..scoring import DEFAULT_MODEL, get_scorer
from . import sessions as domain
from .store import FileSessionStore, InMemorySessionStore, SessionStore

_STATUS_BY_CODE = {
    "PassageTooLong": 400,
    "EmptyPassage": 400,
    "InvalidPriority": 400,
    "InvalidChoice": 400,
    "AnnotationFailure": 400,
    "UnknownSession": 404,
    "UnknownItem": 404,
    "AlreadySolved": 409,
}


class PassageRequest(BaseModel):
    text: str
    construct_priority: list[str] | None = None
    strict_mode: bool = False
    shuffle_seed: int | None = None


class AnswerRequest(BaseModel):
    choice: str


def _error(code: str, message: str) -> JSONResponse:
    return JSONResponse(
        status_code=_STATUS_BY_CODE.get(code, 400),
        content={"error": {"code": code, "message": message}},
    )


def create_app(
    store: SessionStore | None = None,
    *,
    model: str = DEFAULT_MODEL,
    catalog: Catalog | None = None,
    annotator=None,
    shuffle_seed: int = 0,
    strict_mode: bool = False,
) -> FastAPI:
    app = FastAPI(title="clozecraft exercise service", version="1")
    app.state.store = store if store is not None else InMemorySessionStore()
    app.state.catalog = catalog if catalog is not None else Catalog.load()
    app.state.annotator = annotator if annotator is not None else get_annotator()
    app.state.pipeline = ItemPipeline(app.state.catalog, get_scorer(model))
    app.state.shuffle_seed = shuffle_seed
    app.state.strict_mode = strict_mode

    @app.exception_handler(domain.SessionError)
    async def _session_error(_req: Request, exc: domain.SessionError):
        return _error(exc.code, exc.message)

    @app.exception_handler(AnnotationFailure)
    async def _annotation_error(_req: Request, exc: AnnotationFailure):
        return _error("AnnotationFailure", str(exc))

    @app.exception_handler(RequestValidationError)
    async def _validation_error(_req: Request, exc: RequestValidationError):
        return _error("ValidationError", str(exc.errors()))

    @app.post("/passages", status_code=201)
    def submit_passage(body: PassageRequest):
        session, _ = domain.create_session(
            body.text,
            body.construct_priority,
            annotator=app.state.annotator,
            pipeline=app.state.pipeline,
            shuffle_seed=(body.shuffle_seed if body.shuffle_seed is not None
                          else app.state.shuffle_seed),
            strict_mode=body.strict_mode or app.state.strict_mode,
        )
        store: SessionStore = app.state.store
        with store.lock(session.session_id):
            store.save(session)
        return {
            "session_id": session.session_id,
            "view": domain.masked_view(session),
        }

    @app.get("/sessions/{session_id}")
    def get_session(session_id: str):
        session = app.state.store.load(session_id)
        return {"view": domain.masked_view(session)}

    @app.post("/sessions/{session_id}/items/{item_id}/answer")
    def answer(session_id: str, item_id: str, body: AnswerRequest):
        store: SessionStore = app.state.store
        with store.lock(session_id):
            session = store.load(session_id)
            outcome = domain.submit_answer(session, item_id, body.choice)
            store.save(session)
        return outcome

    @app.get("/constructs")
    def constructs():
        return {
            "constructs": [
                {
                    "code": spec.code.value,
                    "name": spec.display_name,
                    "family": spec.family.value,
                    "color": spec.color,
                }
                for spec in app.state.catalog
                if spec.enabled
            ]
        }

    return app


def main(argv: list[str] | None = None) -> int:
    parser = argparse.ArgumentParser(prog="clozecraft-serve")
    parser.add_argument("--host", default="127.0.0.1")
    parser.add_argument("--port", type=int, default=8000)
    parser.add_argument("--store-dir",
                        default=os.environ.get("CLOZECRAFT_STORE", "./sessions"))
    parser.add_argument("--model", default=DEFAULT_MODEL)
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--strict-mode", action="store_true")
    args = parser.parse_args(argv)

    import uvicorn

    app = create_app(
        FileSessionStore(args.store_dir),
        model=args.model,
        shuffle_seed=args.seed,
        strict_mode=args.strict_mode,
    )
    uvicorn.run(app, host=args.host, port=args.port)
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
