"""Deterministic winning-move selectors for small board heights.

For b = 2..5 in the avoidance game (and, via a board reduction, b = 3..6
in the achievement game) the winning player can follow an explicit rule
book instead of a solved table.  Each selector maps a shape the winner
may face to the prescribed reply; the shapes the winner *creates* fall
into a small set of template families:

    b=2   the single open row is taken left to right.
    b=3   B3_LADDER (i, i-1): answer row 1 with row 2 and vice versa,
          and fill the board outright when one cell completes it.
    b=4   B4_FORM1 (k, k, k-2) and B4_FORM2 (k, k-1, k-1), kept in
          rotation until the endgame around (W, W-1, W-2) (ENDGAME_TTT).
    b=5   midgame families S1..S7 and endgame families E1..E3; play
          cycles through S-states, crosses to an E-state when row 1 is
          nearly exhausted, then mirrors the opponent between the two
          open lines of the E-pair until the board fills.

Here W = a-1 (columns) and shapes are written top row first.  All
selectors assume the strategist is the player the solver predicts to
win and that every earlier strategist move followed the same rules;
anything else raises OffStrategyError.  verify_strategy walks the full
game tree of strategist-vs-everything play and certifies every
prescribed move against an exact solver table.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass, field
from typing import List, NamedTuple, Optional, Union

from .board import (
    Cell,
    FullShapeError,
    GameConfig,
    Shape,
    apply_cell,
    empty_shape,
    format_shape,
    is_full,
    legal_cells,
)
from .solver import (
    ACHIEVEMENT,
    AVOIDANCE,
    COMPLETE_NOW,
    StateTable,
    check_variant,
    get_table,
    shape_rank,
    winner_from_start,
)


class OffStrategyError(Exception):
    """The shape is not reachable under the strategy being played."""


class StrategyUnavailableError(ValueError):
    """No explicit strategy is implemented for this configuration."""


def strategy_available(cfg: GameConfig, variant: str) -> bool:
    """True when a rule-book selector exists for (cfg, variant)."""
    check_variant(variant)
    if variant == AVOIDANCE:
        return cfg.b <= 5 and cfg.a >= cfg.b
    return cfg.b == 2 or (3 <= cfg.b <= 6 and cfg.a >= cfg.b)


def _require_strategy(cfg: GameConfig, variant: str) -> None:
    if not strategy_available(cfg, variant):
        raise StrategyUnavailableError(f"no strategy for b={cfg.b} {variant}")


# --------------------------------------------------------------------------
# Shape classification


class MidgameClass(NamedTuple):
    family: str
    k: Optional[int]


def classify(shape: Shape, cfg: GameConfig) -> MidgameClass:
    """Template family of ``shape``, or NONE.

    Families are checked in a fixed order (E1, E2, E3, S1..S7 for b=5)
    and the first match wins; the guards exclude degenerate sizes for
    which the template is not actually a next-player loss.
    """
    W = cfg.width
    if cfg.b == 5:
        t1, t2, t3, t4 = shape
        for p in (0, 1, 2):
            if shape == (W,) * p + (W - 1,) + (W - 2,) * (3 - p):
                return MidgameClass("E1", p)
        for p in (0, 1, 2):
            if W - 4 + p >= 0 and shape == (W,) * p + (W - 1,) * (3 - p) + (W - 4 + p,):
                return MidgameClass("E2", p)
        if t1 == t2 == W and 1 <= t3 <= W - 1 and t4 == t3 - 1:
            return MidgameClass("E3", t3)
        k = t1
        gap = W - k
        if shape == (k, k - 1, k - 1, k - 1) and k >= 2 and gap >= 1 and gap % 2 == 1:
            return MidgameClass("S1", k)
        if shape == (k, k, k, k - 1) and k >= 1 and gap >= 2 and gap % 2 == 0:
            return MidgameClass("S2", k)
        if shape == (k, k, k - 1, k - 3) and k >= 3 and gap >= 2 and gap % 2 == 0:
            return MidgameClass("S3", k)
        if shape == (k, k - 1, k - 1, k - 2) and k >= 2 and gap >= 2 and gap % 2 == 0:
            return MidgameClass("S4", k)
        if shape == (k, k, k - 2, k - 2) and k >= 3 and gap >= 1:
            return MidgameClass("S5", k)
        if shape == (k, k - 1, k - 2, k - 3) and k >= 3 and gap >= 1:
            return MidgameClass("S6", k)
        if (
            t1 == t2 + 1
            and t2 >= t3 + 2
            and t3 == t4 + 1
            and W - t1 >= 1
        ):
            return MidgameClass("S7", t1)
        if shape in ((1, 0, 0, 0), (2, 2, 0, 0)) or (
            shape == (3, 3, 3, 0) and W % 2 == 0 and W >= 6
        ):
            return MidgameClass("OPENING", None)
    elif cfg.b == 4:
        k = shape[0]
        if shape == (k, k, k - 2) and 2 <= k <= W - 1:
            return MidgameClass("B4_FORM1", k)
        if shape == (k, k - 1, k - 1) and 2 <= k <= W - 1:
            return MidgameClass("B4_FORM2", k)
        if shape == (W, W - 1, W - 2):
            return MidgameClass("ENDGAME_TTT", None)
        if shape == (1, 0, 0):
            return MidgameClass("OPENING", None)
    elif cfg.b == 3:
        i = shape[0]
        if shape == (i, i - 1) and 1 <= i <= W - 1:
            return MidgameClass("B3_LADDER", i)
    return MidgameClass("NONE", None)


# --------------------------------------------------------------------------
# Move selectors


def move_b2(shape: Shape, cfg: GameConfig) -> Cell:
    """The only legal cell on a one-row board: leftmost open."""
    if shape[0] >= cfg.width:
        raise FullShapeError(f"no legal moves: board {shape} is full")
    return Cell(shape[0] + 1, 1)


def move_b3(shape: Shape, cfg: GameConfig) -> Cell:
    """Two-row ladder: mirror the opponent's row, fill when one cell wins."""
    W = cfg.width
    t1, t2 = shape
    if shape == (0, 0):
        return Cell(1, 1)
    if t1 == t2:
        if t1 == W - 1:
            return Cell(W, 2)  # corner jump fills the board
        if t1 <= W - 2:
            return Cell(t1 + 1, 1)  # extend the ladder in row 1
    elif t1 == t2 + 2:
        if t1 == W:
            return Cell(W, 2)  # row-2 cell fills the board
        return Cell(t1 - 1, 2)  # catch row 2 up, restoring (i, i-1)
    raise OffStrategyError(f"off-strategy state {shape} for b=3")


def move_b4(shape: Shape, cfg: GameConfig) -> Cell:
    """Three-row strategy: forms 1 and 2 in rotation, then the endgame."""
    W = cfg.width
    t1, t2, t3 = shape
    # Whenever one cell fills the board, play it: the opponent must then
    # append a digit and every digit completes a forbidden run.
    if (t2 == W and t3 < W) or (t2 == W - 1 and t3 == W - 1):
        return Cell(W, 3)
    # Opening.
    if shape == (0, 0, 0):
        return Cell(1, 1)
    if shape in ((1, 1, 0), (2, 0, 0)):
        return Cell(2, 2)
    # Endgame: each reply lands on (W, W-1, W-2), from which both opponent
    # continuations allow filling the board.
    if shape == (W, W - 1, W - 3):
        return Cell(W - 2, 3)
    if shape == (W - 1, W - 1, W - 2):
        return Cell(W, 1)
    if shape == (W, W - 2, W - 2):
        return Cell(W - 1, 2)
    # Midgame: restore form 1 (k,k,k-2) or form 2 (k,k-1,k-1).
    x = t1
    if shape == (x, x, x) and x >= 2:
        return Cell(x + 1, 1)
    if shape == (x, x, x - 1):
        return Cell(x + 1, 2)
    if shape == (x, x - 1, x - 3):
        return Cell(x - 1, 3)
    if shape == (x, x, x - 3):
        return Cell(x - 2, 3)
    if shape == (x, x - 2, x - 2):
        return Cell(x - 1, 3)
    raise OffStrategyError(f"off-strategy state {shape} for b=4")


def move_b5(shape: Shape, cfg: GameConfig) -> Cell:
    """Four-row strategy: opening, S-family midgame, threshold crossing,
    and E-family endgame tit-for-tat."""
    W = cfg.width
    t1, t2, t3, t4 = shape
    # 0. Fill the board outright whenever cell (W, 4) is legal.
    if (t3 == W and t4 < W) or (t3 == W - 1 and t4 == W - 1):
        return Cell(W, 4)
    # 1. Opening book (first four strategist moves).
    if shape == (0, 0, 0, 0):
        return Cell(1, 1)
    if shape in ((1, 1, 0, 0), (2, 0, 0, 0)):
        return Cell(2, 2)
    if shape == (3, 2, 0, 0):
        return Cell(1, 3)
    if shape == (2, 2, 1, 0):
        return Cell(3, 1)
    if shape == (3, 3, 0, 0):
        return Cell(2, 3) if W % 2 else Cell(3, 3)
    if shape == (2, 2, 2, 0):
        return Cell(3, 2) if W % 2 else Cell(3, 3)
    if W % 2 == 0 and W >= 6:
        # Second round after the (3,3) double corner: land in S2/S3/S4.
        if shape == (4, 3, 3, 0):
            return Cell(2, 4)
        if shape == (3, 3, 3, 2):
            return Cell(4, 1)
        if shape == (4, 4, 3, 0):
            return Cell(1, 4)
        if shape == (3, 3, 3, 1):
            return Cell(4, 2)
        if shape == (4, 4, 4, 0):
            return Cell(3, 4)
        if shape == (3, 3, 3, 3):
            return Cell(4, 3)
    # 2. Threshold: row 1 nearly exhausted; cross into an E-family.
    if t1 == W and t2 == W - 2 and t3 == t4 + 1 and t4 <= W - 4:
        return Cell(W, 2)
    if t1 == t2 == W - 1 and t3 == t4 + 1 and t4 <= W - 3:
        return Cell(W, 2)
    if shape == (W - 1, W - 1, W - 1, W - 3):
        return Cell(W, 1)
    if shape == (W - 1, W - 2, W - 3, W - 3):
        return Cell(W - 2, 4)
    if shape == (W, W - 1, W - 3, W - 3):
        return Cell(W - 1, 3)
    # 3. Endgame tit-for-tat between the two open lines of the E-pair.
    if t1 == W and t2 == t3 == t4 == W - 2:
        return Cell(W - 1, 2)
    if t1 == t2 == W and t3 == t4 == W - 2:
        return Cell(W - 1, 3)
    if t1 == t2 == W and t3 == t4 <= W - 2:
        return Cell(t3 + 1, 3)
    if t1 == t2 == W and t3 >= t4 + 2:
        return Cell(t3 - 1, 4)
    for p, m in ((0, 2), (0, 3), (1, 2)):
        if shape == (W,) * p + (W - 1,) * m + (W - 2,) * (4 - p - m):
            return Cell(W, p + m - 1)
    for x in (0, 1, 2):
        if shape[:3] == (W,) * x + (W - 1,) * (3 - x) and t4 <= W - 2:
            col_open = 4 - x
            row_open = W - t4
            if col_open > row_open:
                return Cell(W, x + col_open - row_open)
            if row_open > col_open:
                return Cell(t4 + row_open - col_open, 4)
            break
    # 4. Midgame: restore an S-family.
    x = t1
    if shape == (x, x, x - 1, x - 1) and x <= W - 2:
        return Cell(x + 1, 2)
    if shape == (x, x, x, x - 2):
        return Cell(x + 1, 2) if (W - x) % 2 else Cell(x - 1, 4)
    if shape == (x, x, x, x - 1) and (W - x) % 2 and W - x >= 3:
        return Cell(x + 1, 1)
    if shape == (x, x, x, x):
        return Cell(x + 1, 3) if (W - x) % 2 else Cell(x + 1, 1)
    if shape == (x, x, x, x - 3):
        return Cell(x - 1, 4)
    if shape == (x, x, x - 1, x - 2) and x <= W - 2:
        return Cell(x + 1, 1)
    if shape == (x, x, x - 2, x - 3):
        return Cell(x - 2, 4)
    if shape == (x, x, x - 3, x - 3):
        return Cell(x - 2, 4)
    if shape == (x, x, x - 2, x - 4):
        return Cell(x - 2, 4)
    if t1 == t2 == x and t3 == t4 + 1 and t4 <= x - 4 and x <= W - 2:
        return Cell(x + 1, 1)
    if shape == (x, x - 2, x - 2, x - 2):
        return Cell(x, 2)
    if shape == (x, x - 2, x - 2, x - 3):
        return Cell(x - 1, 2)
    if t1 == x and t2 == x - 2 and t3 == t4 + 1 and t4 <= x - 4:
        return Cell(x - 1, 2)
    if shape == (x, x - 1, x - 1, x - 2) and (W - x) % 2:
        return Cell(x - 1, 4)
    if shape == (x, x - 1, x - 1, x - 1) and (W - x) % 2 == 0 and x >= 2:
        return Cell(x, 3)  # corner jump onto row 3 needs a cell below it
    if shape == (x, x - 1, x - 1, x - 3):
        return Cell(x, 2) if (W - x) % 2 == 0 else Cell(x - 1, 4)
    if t1 == x and t2 == t3 == x - 1 and t4 <= x - 4:
        return Cell(x - 1, 4) if (W - x) % 2 else Cell(x - 2, 4)
    if shape == (x, x - 1, x - 2, x - 2):
        return Cell(x, 2)
    if t1 == x and t2 == x - 1 and t3 == t4 and t4 <= x - 3:
        return Cell(t3 + 1, 3)
    if t1 == x and t2 == x - 1 and t4 + 2 <= t3 <= x - 2:
        return Cell(t3 - 1, 4)
    raise OffStrategyError(f"off-strategy state {shape} for b=5")


_AVOIDANCE_SELECTORS = {2: move_b2, 3: move_b3, 4: move_b4, 5: move_b5}


def avoidance_move(shape: Shape, cfg: GameConfig) -> Cell:
    """Dispatch to the avoidance selector for this board height."""
    _require_strategy(cfg, AVOIDANCE)
    return _AVOIDANCE_SELECTORS[cfg.b](shape, cfg)


def _achievement_shape_move(shape: Shape, cfg: GameConfig):
    """Cell or COMPLETE_NOW for the achievement strategist."""
    _require_strategy(cfg, ACHIEVEMENT)
    if shape[0] == cfg.width or shape[-1] >= 1:
        return COMPLETE_NOW
    if cfg.b == 2:
        # Only the second player has a strategy here, and every shape they
        # face has a nonempty row, caught above.
        raise OffStrategyError(f"off-strategy state {shape} for b=2 achievement")
    sub = GameConfig(cfg.a - 1, cfg.b - 1)
    return avoidance_move(shape[:-1], sub)


def achievement_move(
    shape: Shape, cfg: GameConfig, transcript: tuple
) -> Union[Cell, int]:
    """Achievement strategy: the avoidance strategy on the board with one
    fewer row and column, switching to the completing digit as soon as
    the opponent strays into column a-1 or row b-1.

    Returns a Cell to shade, or the completing digit itself (a new
    maximum or new minimum for the current transcript).
    """
    move = _achievement_shape_move(shape, cfg)
    if move == COMPLETE_NOW:
        return len(transcript) + 1 if shape[0] == cfg.width else 1
    return move


# --------------------------------------------------------------------------
# Exhaustive verification


class ReportEntry(NamedTuple):
    shape: Shape
    move: object  # Cell, COMPLETE_NOW, or None when no move could be chosen
    certified: bool
    fallback: bool


@dataclass
class StrategyReport:
    """Fidelity log of one strategist-vs-everything game-tree walk."""

    config: GameConfig
    variant: str
    strategist: int
    entries: List[ReportEntry] = field(default_factory=list)
    failures: int = 0
    fallbacks: int = 0
    nodes: int = 0
    leaf_totals: frozenset = frozenset()

    @property
    def ok(self) -> bool:
        return self.failures == 0

    def lines(self) -> List[str]:
        out = []
        for e in self.entries:
            if e.move is None:
                move = "none"
            elif isinstance(e.move, Cell):
                move = str(e.move)
            else:
                move = str(e.move)
            out.append(
                f"shape={format_shape(e.shape)} move={move} "
                f"certified={str(e.certified).lower()} "
                f"fallback={str(e.fallback).lower()}"
            )
        return out

    def text(self) -> str:
        return "\n".join(self.lines())


def verify_strategy(
    cfg: GameConfig, variant: str = AVOIDANCE, table: Optional[StateTable] = None
) -> StrategyReport:
    """Walk every line of play where the predicted winner follows the
    strategy and the opponent tries every legal cell; certify each
    strategist move against the solver table.

    Failures (illegal or uncertified moves, or the opponent ever being
    able to complete a run in the achievement game) become report
    entries, not exceptions.  Entries are sorted by shape rank.
    """
    check_variant(variant)
    _require_strategy(cfg, variant)
    if table is None:
        table = get_table(cfg, variant)
    strategist = winner_from_start(cfg, variant)
    width = cfg.width

    heap: list = []
    depths: dict = {}

    def push(shape: Shape, mover: int, depth: int) -> None:
        key = (shape, mover)
        if key in depths:
            depths[key].add(depth)
        else:
            depths[key] = {depth}
            heapq.heappush(heap, (shape_rank(shape, cfg), mover, shape))

    push(empty_shape(cfg), 1, 0)
    report = StrategyReport(cfg, variant, strategist)
    entries = report.entries
    leaf_totals = set()

    while heap:
        _, mover, shape = heapq.heappop(heap)
        ds = depths[(shape, mover)]
        report.nodes += 1
        opponent = 3 - mover
        can_complete = shape[0] == width or shape[-1] >= 1

        if mover != strategist:
            if variant == ACHIEVEMENT and can_complete:
                # The strategy let the opponent finish a run: failure.
                entries.append(ReportEntry(shape, None, False, False))
                report.failures += 1
                continue
            if is_full(shape, cfg):
                # Avoidance leaf: the opponent must append a completing digit.
                leaf_totals.update(d + 1 for d in ds)
                continue
            for cell in legal_cells(shape, cfg):
                succ = apply_cell(shape, cell, cfg)
                for d in ds:
                    push(succ, strategist, d + 1)
            continue

        # Strategist to move.
        if variant == ACHIEVEMENT and can_complete:
            entries.append(ReportEntry(shape, COMPLETE_NOW, True, False))
            leaf_totals.update(d + 1 for d in ds)
            continue
        if is_full(shape, cfg):
            # Avoidance: the strategist is the one trapped — a failure.
            entries.append(ReportEntry(shape, None, False, False))
            report.failures += 1
            leaf_totals.update(d + 1 for d in ds)
            continue

        fallback = False
        try:
            if variant == AVOIDANCE:
                move = _AVOIDANCE_SELECTORS[cfg.b](shape, cfg)
            else:
                move = _achievement_shape_move(shape, cfg)
        except OffStrategyError:
            fallback = True
            move = next(
                (
                    c
                    for c in sorted(legal_cells(shape, cfg))
                    if table.is_loss(apply_cell(shape, c, cfg))
                ),
                None,
            )

        if move is None:
            entries.append(ReportEntry(shape, None, False, fallback))
            report.failures += 1
            continue
        legal = move in legal_cells(shape, cfg)
        certified = False
        if legal:
            succ = apply_cell(shape, move, cfg)
            certified = table.is_loss(succ)
        if fallback:
            report.fallbacks += 1
        if not certified:
            report.failures += 1
        entries.append(ReportEntry(shape, move, certified, fallback))
        if legal:
            for d in ds:
                push(succ, opponent, d + 1)

    entries.sort(key=lambda e: shape_rank(e.shape, cfg))
    report.leaf_totals = frozenset(leaf_totals)
    return report
