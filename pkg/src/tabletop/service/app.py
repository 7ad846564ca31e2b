"""HTTP surface of the play service (FastAPI).

POST /sessions                     create a session
GET  /sessions                     list sessions
GET  /sessions/{id}/observation    per-seat observation view
POST /sessions/{id}/action         submit an action for a seat
GET  /sessions/{id}/events         server-sent event stream
"""

from __future__ import annotations

import json
from typing import Optional

from fastapi import FastAPI, HTTPException, Query
from fastapi.responses import StreamingResponse
from pydantic import BaseModel, Field

from ..core import InvalidPlayerError, TabletopError, UnknownGameError
from .sessions import SessionError, SessionManager


class CreateSessionRequest(BaseModel):
    game: str
    seats: list[str] = Field(min_length=1)
    seed: Optional[int] = None


class SubmitActionRequest(BaseModel):
    seat: str  # seat token
    actionId: str


def create_app(ai_move_delay: float = 0.3) -> FastAPI:
    app = FastAPI(title="tabletop play service", version="1.0")
    manager = SessionManager(ai_move_delay=ai_move_delay)
    app.state.manager = manager

    @app.exception_handler(SessionError)
    async def _session_error(request, exc: SessionError):
        raise HTTPException(status_code=exc.status_code, detail=exc.detail)

    @app.post("/sessions")
    def create_session(body: CreateSessionRequest):
        try:
            session = manager.create(body.game, body.seats, body.seed)
        except (UnknownGameError, InvalidPlayerError, TabletopError) as exc:
            raise HTTPException(status_code=422, detail=str(exc)) from exc
        return {
            "sessionId": session.session_id,
            "seatTokens": session.seat_tokens,
            "seed": session.seed,
        }

    @app.get("/sessions")
    def list_sessions():
        return {"sessions": manager.list_sessions()}

    @app.get("/sessions/{session_id}/observation")
    def get_observation(session_id: str, seat: str = Query(...)):
        session = _get(session_id)
        seat_index = _seat(session, seat)
        return session.observation_view(seat_index)

    @app.post("/sessions/{session_id}/action")
    def submit_action(session_id: str, body: SubmitActionRequest):
        session = _get(session_id)
        seat_index = _seat(session, body.seat)
        try:
            return session.submit_action(seat_index, body.actionId)
        except SessionError as exc:
            raise HTTPException(status_code=exc.status_code,
                                detail=exc.detail) from exc

    @app.get("/sessions/{session_id}/events")
    def subscribe_events(session_id: str):
        session = _get(session_id)
        subscriber = session.subscribe()

        def stream():
            try:
                while True:
                    event = subscriber.events.get()
                    if event is None:
                        break
                    yield f"data: {json.dumps(event)}\n\n"
            finally:
                session.unsubscribe(subscriber)

        return StreamingResponse(stream(), media_type="text/event-stream")

    def _get(session_id: str):
        try:
            return manager.get(session_id)
        except SessionError as exc:
            raise HTTPException(status_code=exc.status_code,
                                detail=exc.detail) from exc

    def _seat(session, token: str) -> int:
        try:
            return session.resolve_seat(token)
        except SessionError as exc:
            raise HTTPException(status_code=exc.status_code,
                                detail=exc.detail) from exc

    return app
