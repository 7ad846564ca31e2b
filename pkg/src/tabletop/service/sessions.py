"""Session management for the play service.

One session owns one canonical game state and one loop thread. Human
seats are backed by RemoteAgent, which blocks the loop until an action
arrives over HTTP; every other seat runs its AI agent in the loop thread.
Observers see the world only through per-seat observation copies and
public action strings.
"""

from __future__ import annotations

import queue
import secrets
import threading
import time
import uuid
from dataclasses import dataclass, field
from typing import Optional

from ..agents import Agent, HUMAN_SPECS, parse_agent_spec
from ..core import CoreConfig, GameStatus, create_game

EVENT_QUEUE_SIZE = 256  # slow subscribers are dropped, not waited for


class SessionError(Exception):
    def __init__(self, status_code: int, detail: str):
        super().__init__(detail)
        self.status_code = status_code
        self.detail = detail


class RemoteAgent(Agent):
    """A seat driven over the wire: get_action parks the game loop until
    submit_action feeds it an index."""

    name = "remote"

    def __init__(self, session: "Session", seat: int):
        super().__init__()
        self._session = session
        self._seat = seat
        self._mailbox: queue.Queue = queue.Queue(maxsize=1)

    def get_action(self, observation, actions):
        self._session._offer_decision(self._seat, actions)
        index = self._mailbox.get()  # blocks until submit or shutdown
        if index is None:
            raise SessionShutdown()
        return actions[index]


class SessionShutdown(Exception):
    pass


def _action_id(epoch: int, index: int) -> str:
    return f"{epoch}-{index}"


@dataclass
class _PendingDecision:
    seat: int
    epoch: int
    actions: list


@dataclass
class _Subscriber:
    events: queue.Queue = field(default_factory=lambda:
                                queue.Queue(maxsize=EVENT_QUEUE_SIZE))
    dropped: bool = False


class Session:
    def __init__(self, game_name: str, seat_specs: list[str],
                 seed: int, ai_move_delay: float):
        self.session_id = uuid.uuid4().hex
        self.ai_move_delay = ai_move_delay
        self.lock = threading.RLock()
        self.subscribers: list[_Subscriber] = []
        self.pending: Optional[_PendingDecision] = None
        self.epoch = 0
        self.finished = threading.Event()
        self.error: Optional[str] = None

        descriptor, state, fm = create_game(
            game_name, len(seat_specs), config=CoreConfig(), seed=seed)
        self.descriptor = descriptor
        self.state = state
        self.fm = fm
        self.seed = state.game_parameters.random_seed

        self.seat_specs = list(seat_specs)
        self.seat_tokens: list[Optional[str]] = []
        self.agents: list[Agent] = []
        for seat, spec in enumerate(seat_specs):
            if spec.lower() in HUMAN_SPECS:
                self.agents.append(RemoteAgent(self, seat))
                self.seat_tokens.append(secrets.token_hex(8))
            else:
                self.agents.append(
                    parse_agent_spec(spec, seed=self.seed * 1000003 + seat))
                self.seat_tokens.append(None)

        self.thread = threading.Thread(target=self._run, daemon=True,
                                       name=f"session-{self.session_id[:8]}")

    # ------------------------------------------------------------------
    # Game loop
    # ------------------------------------------------------------------

    def start(self) -> None:
        self.thread.start()

    def _run(self) -> None:
        state, fm = self.state, self.fm
        try:
            with self.lock:
                fm.setup(state)
                for seat, agent in enumerate(self.agents):
                    agent.initialize(seat, fm)
            self._broadcast("turn-started",
                            {"player": state.current_player})
            while not state.is_terminal():
                player = state.current_player
                with self.lock:
                    actions = fm.compute_available_actions(state)
                    observation = state.copy(player)
                agent = self.agents[player]
                if len(actions) == 1:
                    agent.register_updated_observation(observation)
                    action = actions[0]
                else:
                    action = agent.get_action(observation, list(actions))
                with self.lock:
                    display = action.get_string(state)
                    round_before = state.turn_order.round_counter
                    fm.next(state, action)
                    round_after = state.turn_order.round_counter
                self._broadcast("action-applied",
                                {"player": player, "action": display})
                if round_after != round_before:
                    self._broadcast("round-ended",
                                    {"round": round_before})
                if not state.is_terminal():
                    self._broadcast("turn-started",
                                    {"player": state.current_player})
                    if (not isinstance(agent, RemoteAgent)
                            and self.ai_move_delay > 0
                            and self._has_human_seat()):
                        time.sleep(self.ai_move_delay)
            self._broadcast("game-ended", {
                "results": [r.value for r in state.player_results],
                "ticks": state.tick,
            })
        except SessionShutdown:
            pass
        except Exception as exc:  # surface loop crashes to clients
            self.error = str(exc)
            self._broadcast("error", {"detail": str(exc)})
        finally:
            self.finished.set()
            self._close_streams()

    def _has_human_seat(self) -> bool:
        return any(t is not None for t in self.seat_tokens)

    # ------------------------------------------------------------------
    # Decisions
    # ------------------------------------------------------------------

    def _offer_decision(self, seat: int, actions: list) -> None:
        with self.lock:
            self.epoch += 1
            self.pending = _PendingDecision(seat, self.epoch, list(actions))

    def resolve_seat(self, token: str) -> int:
        for seat, seat_token in enumerate(self.seat_tokens):
            if seat_token is not None and seat_token == token:
                return seat
        raise SessionError(403, "unknown seat token")

    def observation_view(self, seat: int) -> dict:
        with self.lock:
            state = self.state
            observation = state.copy(seat)
            pending = self.pending
            available = []
            your_turn = pending is not None and pending.seat == seat
            if your_turn:
                available = [
                    {"actionId": _action_id(pending.epoch, i),
                     "display": a.get_string(observation)}
                    for i, a in enumerate(pending.actions)
                ]
            return {
                "sessionId": self.session_id,
                "playerId": seat,
                "tick": state.tick,
                "phase": state.game_phase,
                "status": state.game_status.value,
                "yourTurn": your_turn,
                "currentPlayer": state.current_player,
                "availableActions": available,
                "scores": [state.get_score(p)
                           for p in range(state.n_players)],
                "results": [r.value for r in state.player_results],
                "view": observation.to_view(seat),
            }

    def submit_action(self, seat: int, action_id: str) -> dict:
        with self.lock:
            pending = self.pending
            if pending is None or pending.seat != seat:
                raise SessionError(409, "it is not this seat's turn")
            try:
                epoch_raw, index_raw = action_id.split("-", 1)
                epoch, index = int(epoch_raw), int(index_raw)
            except ValueError:
                raise SessionError(422, "malformed actionId") from None
            if epoch != pending.epoch:
                raise SessionError(
                    409, "stale actionId; refresh the observation")
            if not 0 <= index < len(pending.actions):
                raise SessionError(422, "action index out of range")
            self.pending = None
            agent = self.agents[seat]
        agent._mailbox.put(index)
        return {"ok": True, "actionId": action_id}

    # ------------------------------------------------------------------
    # Events
    # ------------------------------------------------------------------

    def subscribe(self) -> _Subscriber:
        subscriber = _Subscriber()
        with self.lock:
            # Late joiners get the current public snapshot first.
            snapshot = {
                "tick": self.state.tick,
                "phase": self.state.game_phase,
                "status": self.state.game_status.value,
                "currentPlayer": self.state.current_player,
                "results": [r.value for r in self.state.player_results],
            }
            subscriber.events.put(
                {"type": "state-snapshot", "payload": snapshot,
                 "tick": self.state.tick})
            if self.finished.is_set():
                subscriber.events.put(None)
            self.subscribers.append(subscriber)
        return subscriber

    def unsubscribe(self, subscriber: _Subscriber) -> None:
        with self.lock:
            if subscriber in self.subscribers:
                self.subscribers.remove(subscriber)

    def _broadcast(self, event_type: str, payload: dict) -> None:
        event = {"type": event_type, "payload": payload,
                 "tick": self.state.tick}
        with self.lock:
            for subscriber in self.subscribers:
                if subscriber.dropped:
                    continue
                try:
                    subscriber.events.put_nowait(event)
                except queue.Full:
                    subscriber.dropped = True

    def _close_streams(self) -> None:
        with self.lock:
            for subscriber in self.subscribers:
                try:
                    subscriber.events.put_nowait(None)
                except queue.Full:
                    pass

    def shutdown(self) -> None:
        for agent in self.agents:
            if isinstance(agent, RemoteAgent):
                try:
                    agent._mailbox.put_nowait(None)
                except queue.Full:
                    pass

    def summary(self) -> dict:
        with self.lock:
            return {
                "sessionId": self.session_id,
                "game": self.descriptor.name,
                "status": self.state.game_status.value,
                "tick": self.state.tick,
                "seats": [
                    {"spec": spec if token is None else "human",
                     "human": token is not None}
                    for spec, token in zip(self.seat_specs, self.seat_tokens)
                ],
            }


class SessionManager:
    def __init__(self, ai_move_delay: float = 0.3):
        self.ai_move_delay = ai_move_delay
        self._sessions: dict[str, Session] = {}
        self._lock = threading.Lock()

    def create(self, game_name: str, seat_specs: list[str],
               seed: Optional[int]) -> Session:
        if seed is None:
            seed = secrets.randbits(32)
        session = Session(game_name, seat_specs, seed, self.ai_move_delay)
        with self._lock:
            self._sessions[session.session_id] = session
        session.start()
        return session

    def get(self, session_id: str) -> Session:
        with self._lock:
            session = self._sessions.get(session_id)
        if session is None:
            raise SessionError(404, "no such session")
        return session

    def list_sessions(self) -> list[dict]:
        with self._lock:
            sessions = list(self._sessions.values())
        return [s.summary() for s in sessions]

    def shutdown(self) -> None:
        with self._lock:
            sessions = list(self._sessions.values())
        for session in sessions:
            session.shutdown()
