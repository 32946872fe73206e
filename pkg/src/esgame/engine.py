"""Game sessions, engine opponents, simulation, and verification drivers.

A session tracks one game at the digit level.  Two transcripts coexist:

    moves       the digits exactly as played, e.g. 1,7,3,...
    transcript  the current permutation those plays realize; playing m
                bumps every existing value >= m up by one, then appends m

The shape on the board always equals perm_to_shape(transcript, config);
the (inc, dec) pair of each new digit is computed incrementally, and a
digit whose pair reaches column a or row b finishes the game (avoidance:
the mover loses; achievement: the mover wins).

Engine opponents are PlayPolicy values: the explicit rule-book strategy
(with an exact-solver fallback for off-strategy states), perfect play
from a solver table, a seeded uniform-random player, or a fixed digit
script.  Policies pick a cell and convert it to a digit with
realize_digit, so game logs are always genuine permutation realizations.

Each session is single-writer: callers must serialize mutations of one
session; distinct sessions may progress concurrently, and solver tables
are shared read-only.
"""

from __future__ import annotations

import random
import uuid
from dataclasses import dataclass, field
from typing import Dict, List, NamedTuple, Optional, Sequence, Tuple, Union

from .board import (
    Cell,
    GameConfig,
    IllegalCellError,
    PrefixPair,
    Shape,
    apply_cell,
    empty_shape,
    is_full,
    legal_cells,
    realize_digit,
)
from .solver import (
    ACHIEVEMENT,
    AVOIDANCE,
    COMPLETE_NOW,
    StateTable,
    best_moves,
    check_variant,
    get_table,
    shape_rank,
)
from .strategy import (
    OffStrategyError,
    StrategyReport,
    StrategyUnavailableError,
    achievement_move,
    avoidance_move,
    strategy_available,
    verify_strategy,
)

IN_PROGRESS = "in-progress"
FINISHED = "finished"
REASON_INCREASING = "I_a"
REASON_DECREASING = "J_b"

POLICY_KINDS = ("strategy", "solver", "random", "script")


class SessionFinishedError(RuntimeError):
    """A move was attempted on a finished session."""


@dataclass
class SessionStatus:
    state: str = IN_PROGRESS
    winner: Optional[int] = None
    reason: Optional[str] = None


@dataclass
class Session:
    """One game in progress; mutated in place by play_digit."""

    id: str
    config: GameConfig
    variant: str
    transcript: Tuple[int, ...] = ()
    moves: Tuple[int, ...] = ()
    shape: Shape = ()
    to_move: int = 1
    status: SessionStatus = field(default_factory=SessionStatus)
    pairs: Tuple[PrefixPair, ...] = ()

    @property
    def in_progress(self) -> bool:
        return self.status.state == IN_PROGRESS


def new_session(cfg: GameConfig, variant: str) -> Session:
    """Fresh empty session, player 1 to move."""
    check_variant(variant)
    return Session(
        id=uuid.uuid4().hex[:12],
        config=cfg,
        variant=variant,
        shape=empty_shape(cfg),
    )


def play_digit(sess: Session, m: int) -> Session:
    """Append digit m, updating the shape or finishing the game.

    On a finishing digit, to_move is left at the mover; otherwise the
    turn flips.
    """
    if not sess.in_progress:
        raise SessionFinishedError(f"session {sess.id} is finished")
    n = len(sess.transcript)
    if not isinstance(m, int) or not 1 <= m <= n + 1:
        raise ValueError(f"digit must be in 1..{n + 1}, got {m}")
    inc = 1 + max(
        (p.inc for v, p in zip(sess.transcript, sess.pairs) if v < m), default=0
    )
    dec = 1 + max(
        (p.dec for v, p in zip(sess.transcript, sess.pairs) if v >= m), default=0
    )
    sess.transcript = tuple(v + 1 if v >= m else v for v in sess.transcript) + (m,)
    sess.moves += (m,)
    sess.pairs += (PrefixPair(inc, dec),)
    mover = sess.to_move
    if inc == sess.config.a or dec == sess.config.b:
        reason = REASON_INCREASING if inc == sess.config.a else REASON_DECREASING
        winner = mover if sess.variant == ACHIEVEMENT else 3 - mover
        sess.status = SessionStatus(FINISHED, winner, reason)
    else:
        sess.shape = apply_cell(sess.shape, Cell(inc, dec), sess.config)
        sess.to_move = 3 - mover
    return sess


def completing_digits(sess: Session) -> List[int]:
    """Canonical digits that would finish the game right now.

    A fresh maximum completes an increasing run once row 1 is full; the
    digit 1 completes a descent once the bottom row is occupied.
    """
    out = []
    if sess.shape[0] == sess.config.width:
        out.append(len(sess.transcript) + 1)
    if sess.shape[-1] >= 1:
        out.append(1)
    return out


def legal_plays(sess: Session) -> Tuple[List[Cell], List[int]]:
    """On-board legal cells (sorted by row, then column) with the digit
    realizing each."""
    if is_full(sess.shape, sess.config):
        return [], []
    cells = sorted(legal_cells(sess.shape, sess.config), key=lambda c: (c.r, c.c))
    digits = [realize_digit(sess.transcript, cell, sess.config) for cell in cells]
    return cells, digits


# --------------------------------------------------------------------------
# Engine policies


@dataclass
class PlayPolicy:
    """An automated player: strategy, solver, random(seed), or script."""

    kind: str
    seed: Optional[int] = None
    script: Optional[Tuple[int, ...]] = None
    _rng: Optional[random.Random] = field(
        default=None, repr=False, compare=False
    )

    def __post_init__(self):
        if self.kind not in POLICY_KINDS:
            raise ValueError(f"unknown policy kind {self.kind!r}")
        if self.kind == "script" and not self.script:
            raise ValueError("script policy needs a nonempty digit script")

    def rng(self) -> random.Random:
        if self._rng is None:
            self._rng = random.Random(self.seed)
        return self._rng


def _digit_for_completion(sess: Session) -> int:
    """New maximum when row 1 is full, else the descent-completing 1."""
    if sess.shape[0] == sess.config.width:
        return len(sess.transcript) + 1
    return 1


def _solver_digit(sess: Session, table: Optional[StateTable]) -> int:
    cfg = sess.config
    if table is None:
        table = get_table(cfg, sess.variant)
    moves = best_moves(sess.shape, table)
    if COMPLETE_NOW in moves:
        return _digit_for_completion(sess)
    cells = [mv for mv in moves if isinstance(mv, Cell)]
    if not cells:
        # Losing position: no winning move exists.  Resist deterministically
        # with the smallest-rank successor; on a full board every digit
        # completes a run, so concede with the canonical 1.
        if is_full(sess.shape, cfg):
            return 1
        cells = list(legal_cells(sess.shape, cfg))
    cell = min(
        cells, key=lambda c: (shape_rank(apply_cell(sess.shape, c, cfg), cfg), c)
    )
    return realize_digit(sess.transcript, cell, cfg)


def _strategy_digit(sess: Session, table: Optional[StateTable]) -> int:
    cfg = sess.config
    if not strategy_available(cfg, sess.variant):
        raise StrategyUnavailableError(
            f"no strategy for b={cfg.b} {sess.variant}"
        )
    try:
        if sess.variant == AVOIDANCE:
            if is_full(sess.shape, cfg):
                return 1
            cell = avoidance_move(sess.shape, cfg)
        else:
            move = achievement_move(sess.shape, cfg, sess.transcript)
            if isinstance(move, int):
                return move
            cell = move
        return realize_digit(sess.transcript, cell, cfg)
    except (OffStrategyError, IllegalCellError):
        # Off the strategy's reachable set (we are the losing seat, or the
        # opponent of a strategy engine): defer to perfect play.
        return _solver_digit(sess, table)


def _random_digit(sess: Session, policy: PlayPolicy) -> int:
    cfg = sess.config
    if is_full(sess.shape, cfg):
        return 1
    cells = sorted(legal_cells(sess.shape, cfg))
    cell = policy.rng().choice(cells)
    return realize_digit(sess.transcript, cell, cfg)


def _script_digit(sess: Session, policy: PlayPolicy) -> int:
    # The k-th move of the current seat reads the k-th script entry, so a
    # script restarts cleanly with every new session.
    seat = sess.to_move
    made = sum(1 for i in range(len(sess.moves)) if i % 2 == seat - 1)
    if made >= len(policy.script):
        raise ValueError(f"script policy exhausted after {made} moves")
    return policy.script[made]


def engine_reply(
    sess: Session, policy: PlayPolicy, table: Optional[StateTable] = None
) -> Tuple[Session, int]:
    """Choose a digit with the policy and play it; returns (session, digit)."""
    if not sess.in_progress:
        raise SessionFinishedError(f"session {sess.id} is finished")
    if policy.kind == "strategy":
        digit = _strategy_digit(sess, table)
    elif policy.kind == "solver":
        digit = _solver_digit(sess, table)
    elif policy.kind == "random":
        digit = _random_digit(sess, policy)
    else:
        digit = _script_digit(sess, policy)
    return play_digit(sess, digit), digit


# --------------------------------------------------------------------------
# Simulation and verification


class SimulationStats(NamedTuple):
    trials: int
    min_length: int
    max_length: int
    histogram: Dict[int, int]
    winners: Dict[int, int]


def simulate(
    cfg: GameConfig,
    variant: str,
    p1: PlayPolicy,
    p2: PlayPolicy,
    trials: int,
) -> SimulationStats:
    """Play complete games; lengths include the final game-ending digit."""
    if trials < 1:
        raise ValueError("trials must be positive")
    histogram: Dict[int, int] = {}
    winners: Dict[int, int] = {1: 0, 2: 0}
    lengths = []
    for _ in range(trials):
        sess = new_session(cfg, variant)
        while sess.in_progress:
            engine_reply(sess, p1 if sess.to_move == 1 else p2)
        length = len(sess.moves)
        lengths.append(length)
        histogram[length] = histogram.get(length, 0) + 1
        winners[sess.status.winner] += 1
    return SimulationStats(
        trials, min(lengths), max(lengths), dict(sorted(histogram.items())), winners
    )


def exhaustive_verify(cfg: GameConfig, variant: str) -> StrategyReport:
    """Certify the rule-book strategy against the solver for this config."""
    return verify_strategy(cfg, variant, get_table(cfg, variant))


def format_game_log(sess: Session) -> str:
    """One-line log for a finished game."""
    if sess.in_progress:
        raise ValueError("cannot log an unfinished session")
    moves = ",".join(str(m) for m in sess.moves)
    return (
        f"a={sess.config.a} b={sess.config.b} variant={sess.variant} "
        f"moves={moves} winner={sess.status.winner} "
        f"reason={sess.status.reason} length={len(sess.moves)}"
    )
