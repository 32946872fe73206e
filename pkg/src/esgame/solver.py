"""Exact win/loss solver over board shapes.

Every reachable board of the (a, b)-game is one of C((a-1)+(b-1), a-1)
staircase shapes, so both variants can be solved exactly by retrograde
labeling: each shape is a next-player WIN if some move reaches a LOSS
shape, otherwise a LOSS.

Variants
    avoidance    completing an increasing run of length a or a decreasing
                 run of length b loses; on a full board every digit
                 completes one, so full shapes are LOSS for the mover.
    achievement  completing wins.  A shape allows immediate completion
                 exactly when lambda_1 = a-1 (a new maximum finishes an
                 increasing run) or lambda_{b-1} >= 1 (a new minimum
                 finishes a decreasing run); such shapes are WIN outright.

State indexing
    Shapes are ranked by the combinatorial number system: with H = b-1
    rows and off[j][v] = C(v + H-1-j, H-j), the rank of a shape is
    sum(off[j][shape[j]]).  This is a bijection onto 0..total-1 that
    respects lexicographic order, and every move strictly increases the
    rank.  Labels therefore live in one bytes object indexed by rank, and
    a single pass from the full board (highest rank) down to the empty
    board (rank 0) sees every successor before the shape that moves to it.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import comb
from typing import Iterator, NamedTuple, Union

from .board import (
    Cell,
    GameConfig,
    Shape,
    apply_cell,
    empty_shape,
    is_full,
    legal_cells,
)

AVOIDANCE = "avoidance"
ACHIEVEMENT = "achievement"
VARIANTS = (AVOIDANCE, ACHIEVEMENT)

LOSS = 0
WIN = 1

#: Pseudo-move returned by best_moves when an achievement shape can be
#: completed outright (new-maximum or new-minimum digit, off the board).
COMPLETE_NOW = "complete-now"

Move = Union[Cell, str]

#: Largest state space the solver will label without complaint.
STATE_LIMIT = 10_000_000


class SolverLimitError(RuntimeError):
    """Raised when a board's state space exceeds the configured limit."""


def check_variant(variant: str) -> str:
    """Return ``variant`` if it names a game variant, else raise ValueError."""
    if variant not in VARIANTS:
        raise ValueError(
            f"unknown variant {variant!r}; expected one of {', '.join(VARIANTS)}"
        )
    return variant


@lru_cache(maxsize=None)
def _offsets(cfg: GameConfig) -> tuple:
    """Rank contribution table: off[j][v] = C(v + H-1-j, H-j), 0-indexed rows."""
    height, width = cfg.height, cfg.width
    return tuple(
        tuple(comb(v + height - 1 - j, height - j) for v in range(width + 1))
        for j in range(height)
    )


def shape_rank(shape: Shape, cfg: GameConfig) -> int:
    """Rank of ``shape`` among all staircases of the board, 0-based."""
    off = _offsets(cfg)
    return sum(off[j][v] for j, v in enumerate(shape))


def shape_unrank(idx: int, cfg: GameConfig) -> Shape:
    """Inverse of shape_rank, by greedy combinatorial-number-system decoding."""
    total = cfg.state_count
    if not 0 <= idx < total:
        raise IndexError(f"rank {idx} out of range for {total} shapes")
    off = _offsets(cfg)
    out = []
    cap = cfg.width
    rem = idx
    for j in range(cfg.height):
        row = off[j]
        v = cap
        while row[v] > rem:
            v -= 1
        rem -= row[v]
        out.append(v)
        cap = v
    return tuple(out)


def _check_limit(cfg: GameConfig, limit: int) -> None:
    if cfg.state_count > limit:
        raise SolverLimitError(
            f"board ({cfg.a},{cfg.b}) has {cfg.state_count} states, "
            f"over the limit of {limit}"
        )


def enumerate_shapes(cfg: GameConfig, limit: int = STATE_LIMIT) -> Iterator[Shape]:
    """Yield every shape once, each preceded by all shapes it can move to.

    The order is descending rank, from the full board down to the empty
    board; since moves strictly increase rank, a shape's successors always
    appear before it.
    """
    _check_limit(cfg, limit)
    lam = [cfg.width] * cfg.height
    last = cfg.height - 1
    while True:
        yield tuple(lam)
        i = last
        while i >= 0 and lam[i] == 0:
            i -= 1
        if i < 0:
            return
        v = lam[i] - 1
        for k in range(i, cfg.height):
            lam[k] = v


class StateTable:
    """Win/loss labels for every shape of one (config, variant) pair.

    ``labels`` is an immutable bytes object indexed by shape rank; the
    table is safe to share between threads once built.
    """

    __slots__ = ("config", "variant", "labels")

    def __init__(self, config: GameConfig, variant: str, labels: bytes):
        self.config = config
        self.variant = variant
        self.labels = labels

    def __len__(self) -> int:
        return len(self.labels)

    def __repr__(self) -> str:
        cfg = self.config
        return f"StateTable(a={cfg.a}, b={cfg.b}, variant={self.variant})"

    def is_win(self, shape: Shape) -> bool:
        return self.labels[shape_rank(shape, self.config)] == WIN

    def is_loss(self, shape: Shape) -> bool:
        return self.labels[shape_rank(shape, self.config)] == LOSS

    def label(self, shape: Shape) -> str:
        """Human-readable label, "WIN" or "LOSS" for the player to move."""
        return "WIN" if self.is_win(shape) else "LOSS"


def label_states(
    cfg: GameConfig, variant: str, limit: int = STATE_LIMIT
) -> StateTable:
    """Label every shape WIN or LOSS for the player to move.

    Single retrograde pass in descending rank order; when a shape is
    examined, every shape it can move to is already labeled.
    """
    check_variant(variant)
    _check_limit(cfg, limit)
    width, height = cfg.width, cfg.height
    off = _offsets(cfg)
    total = cfg.state_count
    labels = bytearray(total)
    achievement = variant == ACHIEVEMENT
    lam = [width] * height
    last = height - 1

    for rank in range(total - 1, -1, -1):
        win = False
        if achievement and (lam[0] == width or lam[last] >= 1):
            win = True
        elif lam[last] < width:
            # Not a full board: explore moves until one hits a LOSS shape.
            # (A full board in avoidance keeps win=False: mover must append
            # a digit and every digit completes a forbidden run.)
            v = lam[0]
            if v < width:
                row = off[0]
                if labels[rank + row[v + 1] - row[v]] == LOSS:
                    win = True
            if not win:
                for j in range(1, height):
                    top = lam[j - 1]
                    cur = lam[j]
                    if top > cur:
                        row = off[j]
                        base = rank - row[cur]
                        for c in range(cur + 1, top + 1):
                            if labels[base + row[c]] == LOSS:
                                win = True
                                break
                        if win:
                            break
                    elif 1 <= cur < width:
                        # Corner jump: raises the whole run of rows at cur.
                        delta = 0
                        i = j
                        while i >= 0 and lam[i] == cur:
                            row = off[i]
                            delta += row[cur + 1] - row[cur]
                            i -= 1
                        if labels[rank + delta] == LOSS:
                            win = True
                            break
        if win:
            labels[rank] = WIN
        if rank:
            i = last
            while lam[i] == 0:
                i -= 1
            v = lam[i] - 1
            for k in range(i, height):
                lam[k] = v

    return StateTable(cfg, variant, bytes(labels))


@lru_cache(maxsize=64)
def get_table(cfg: GameConfig, variant: str) -> StateTable:
    """Shared, lazily built table for (cfg, variant); immutable once built."""
    return label_states(cfg, variant)


def winner_from_start(cfg: GameConfig, variant: str) -> int:
    """1 if the first player wins from the empty board, else 2."""
    table = get_table(cfg, variant)
    return 1 if table.is_win(empty_shape(cfg)) else 2


class LossCensus(NamedTuple):
    loss_count: int
    total_states: int
    fraction: Fraction


def count_loss_states(cfg: GameConfig, variant: str) -> LossCensus:
    """Count LOSS-labeled shapes (the census of unsafe positions)."""
    table = get_table(cfg, variant)
    loss = table.labels.count(LOSS)
    total = len(table.labels)
    return LossCensus(loss, total, Fraction(loss, total))


CENSUS_CSV_HEADER = "a,b,variant,loss_count,total,fraction"


def census_csv_line(cfg: GameConfig, variant: str, census: LossCensus) -> str:
    """One CSV row matching CENSUS_CSV_HEADER; fraction to 4 decimal places."""
    return (
        f"{cfg.a},{cfg.b},{variant},{census.loss_count},"
        f"{census.total_states},{float(census.fraction):.4f}"
    )


def best_moves(shape: Shape, table: StateTable) -> set:
    """All winning moves from ``shape``: legal cells whose successor shape is
    LOSS, plus COMPLETE_NOW when an achievement completion is available.

    Empty exactly when ``shape`` is a LOSS state.
    """
    cfg = table.config
    moves: set = set()
    if table.variant == ACHIEVEMENT and (
        shape[0] == cfg.width or shape[-1] >= 1
    ):
        moves.add(COMPLETE_NOW)
    if not is_full(shape, cfg):
        for cell in legal_cells(shape, cfg):
            if table.is_loss(apply_cell(shape, cell, cfg)):
                moves.add(cell)
    return moves
