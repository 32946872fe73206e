"""HTTP/JSON play API: session lifecycle, moves, engine replies, hints,
and solver queries.

The app is a factory (create_app) so tests and the CLI can configure the
static bundle directory, base path, and session-store capacity.  Games
live in an in-memory LRU store; mutations of a single game are serialized
with a per-game lock, while distinct games proceed concurrently.  Solver
tables are built lazily per (a, b, variant); builds are serialized and
the results live in the solver's process-wide cache, so repeat lookups
are cheap dictionary hits.

Endpoints are plain ``def`` functions: FastAPI runs them in its worker
threadpool, which keeps the locking story ordinary ``threading`` code.
"""

import threading
from collections import OrderedDict
from dataclasses import dataclass, field
from typing import Optional

from fastapi import APIRouter, FastAPI, HTTPException
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import PlainTextResponse
from fastapi.staticfiles import StaticFiles
from pydantic import BaseModel

from .board import GameConfig, realize_digit
from .engine import (
    PlayPolicy,
    Session,
    SessionFinishedError,
    completing_digits,
    engine_reply,
    legal_plays,
    new_session,
    play_digit,
)
from .solver import (
    ACHIEVEMENT,
    AVOIDANCE,
    COMPLETE_NOW,
    SolverLimitError,
    best_moves,
    count_loss_states,
    get_table,
    winner_from_start,
)
from .strategy import strategy_available

VARIANTS = (AVOIDANCE, ACHIEVEMENT)
ENGINE_KINDS = ("strategy", "solver", "none")

_table_lock = threading.Lock()


def _table_or_429(cfg: GameConfig, variant: str):
    try:
        with _table_lock:
            return get_table(cfg, variant)
    except SolverLimitError as exc:
        raise HTTPException(status_code=429, detail=str(exc))


@dataclass
class GameEntry:
    sess: Session
    engine: str = "none"
    engine_player: Optional[int] = None
    policy: Optional[PlayPolicy] = None
    lock: threading.Lock = field(default_factory=threading.Lock)


class GameStore:
    """Thread-safe in-memory store with least-recently-used eviction."""

    def __init__(self, capacity: int = 1024):
        if capacity < 1:
            raise ValueError("store capacity must be positive")
        self.capacity = capacity
        self._games: "OrderedDict[str, GameEntry]" = OrderedDict()
        self._lock = threading.Lock()

    def add(self, entry: GameEntry) -> None:
        with self._lock:
            self._games[entry.sess.id] = entry
            self._games.move_to_end(entry.sess.id)
            while len(self._games) > self.capacity:
                self._games.popitem(last=False)

    def get(self, game_id: str) -> Optional[GameEntry]:
        with self._lock:
            entry = self._games.get(game_id)
            if entry is not None:
                self._games.move_to_end(game_id)
            return entry

    def __len__(self) -> int:
        with self._lock:
            return len(self._games)


class NewGameRequest(BaseModel):
    a: int
    b: int
    variant: str = AVOIDANCE
    engine: str = "none"
    engine_player: Optional[int] = None


class MoveRequest(BaseModel):
    digit: int


def _game_resource(entry: GameEntry) -> dict:
    sess = entry.sess
    cfg = sess.config
    if sess.in_progress:
        cells, digits = legal_plays(sess)
        completing = completing_digits(sess)
    else:
        cells, digits, completing = [], [], []
    legal_digits = list(digits)
    if sess.variant == ACHIEVEMENT:
        legal_digits += completing
    shaded = [
        [p.inc, p.dec]
        for p in sess.pairs
        if p.inc <= cfg.width and p.dec <= cfg.height
    ]
    return {
        "id": sess.id,
        "a": cfg.a,
        "b": cfg.b,
        "variant": sess.variant,
        "to_move": sess.to_move,
        "transcript": list(sess.transcript),
        "shape": list(sess.shape),
        "legal_cells": [[c.c, c.r] for c in cells],
        "legal_digits": legal_digits,
        "completing_digits": completing,
        "shaded_cells": shaded,
        "status": {
            "state": sess.status.state,
            "winner": sess.status.winner,
            "reason": sess.status.reason,
        },
        "engine": entry.engine,
        "engine_player": entry.engine_player,
    }


def _engine_turn(entry: GameEntry) -> list:
    """Let a configured engine move if it is on turn; returns move records."""
    applied = []
    sess = entry.sess
    if (
        entry.policy is not None
        and sess.in_progress
        and sess.to_move == entry.engine_player
    ):
        mover = sess.to_move
        table = None
        if entry.engine in ("strategy", "solver"):
            table = _table_or_429(sess.config, sess.variant)
        _, digit = engine_reply(sess, entry.policy, table)
        applied.append({"player": mover, "digit": digit})
    return applied


def create_app(
    static_dir: Optional[str] = None,
    base_path: str = "",
    capacity: int = 1024,
) -> FastAPI:
    app = FastAPI(title="esgame", docs_url=None, redoc_url=None)
    app.add_middleware(
        CORSMiddleware,
        allow_origins=["*"],
        allow_methods=["*"],
        allow_headers=["*"],
    )
    store = GameStore(capacity)
    app.state.store = store
    router = APIRouter()

    def _entry_or_404(game_id: str) -> GameEntry:
        entry = store.get(game_id)
        if entry is None:
            raise HTTPException(status_code=404, detail=f"no game {game_id}")
        return entry

    @router.post("/games", status_code=201)
    def create_game(body: NewGameRequest) -> dict:
        if body.a < 2 or body.b < 2:
            raise HTTPException(400, "a and b must both be at least 2")
        if body.variant not in VARIANTS:
            raise HTTPException(400, f"unknown variant {body.variant!r}")
        if body.engine not in ENGINE_KINDS:
            raise HTTPException(400, f"unknown engine {body.engine!r}")
        if body.engine_player not in (None, 1, 2):
            raise HTTPException(400, "engine_player must be 1, 2, or null")
        cfg = GameConfig(body.a, body.b)
        if body.engine == "none":
            if body.engine_player is not None:
                raise HTTPException(400, "engine_player requires an engine")
            entry = GameEntry(new_session(cfg, body.variant))
        else:
            if body.engine == "strategy" and not strategy_available(
                cfg, body.variant
            ):
                raise HTTPException(
                    422, f"no strategy for b={body.b} {body.variant}"
                )
            seat = body.engine_player if body.engine_player is not None else 2
            entry = GameEntry(
                new_session(cfg, body.variant),
                engine=body.engine,
                engine_player=seat,
                policy=PlayPolicy(body.engine),
            )
        with entry.lock:
            _engine_turn(entry)  # engine as player 1 pre-moves
            store.add(entry)
            return _game_resource(entry)

    @router.get("/games/{game_id}")
    def get_game(game_id: str) -> dict:
        return _game_resource(_entry_or_404(game_id))

    @router.post("/games/{game_id}/moves")
    def post_move(game_id: str, body: MoveRequest) -> dict:
        entry = _entry_or_404(game_id)
        with entry.lock:
            mover = entry.sess.to_move
            try:
                play_digit(entry.sess, body.digit)
            except SessionFinishedError as exc:
                raise HTTPException(409, str(exc))
            except ValueError as exc:
                raise HTTPException(422, str(exc))
            applied = [{"player": mover, "digit": body.digit}]
            applied += _engine_turn(entry)
            resource = _game_resource(entry)
        resource["moves_applied"] = applied
        return resource

    @router.get("/games/{game_id}/hint")
    def get_hint(game_id: str) -> dict:
        entry = _entry_or_404(game_id)
        sess = entry.sess
        if not sess.in_progress:
            return {"cells": [], "digits": [], "losing_position": False}
        table = _table_or_429(sess.config, sess.variant)
        moves = best_moves(sess.shape, table)
        cells = sorted(
            (mv for mv in moves if mv != COMPLETE_NOW),
            key=lambda c: (c.r, c.c),
        )
        digits = [
            realize_digit(sess.transcript, cell, sess.config) for cell in cells
        ]
        if COMPLETE_NOW in moves:
            digits += completing_digits(sess)
        return {
            "cells": [[c.c, c.r] for c in cells],
            "digits": digits,
            "losing_position": not moves,
        }

    @router.get("/solve")
    def solve(a: int, b: int, variant: str = AVOIDANCE) -> dict:
        if a < 2 or b < 2:
            raise HTTPException(400, "a and b must both be at least 2")
        if variant not in VARIANTS:
            raise HTTPException(400, f"unknown variant {variant!r}")
        cfg = GameConfig(a, b)
        _table_or_429(cfg, variant)
        census = count_loss_states(cfg, variant)
        return {
            "winner": f"player{winner_from_start(cfg, variant)}",
            "states": census.total_states,
            "loss_states": census.loss_count,
        }

    @router.get("/healthz", response_class=PlainTextResponse)
    def healthz() -> str:
        return "ok"

    app.include_router(router, prefix=base_path)
    if static_dir is not None:
        app.mount("/", StaticFiles(directory=static_dir, html=True), name="ui")
    return app
