r"""Permutation/board correspondence for the monotone-subsequence game.

Players take turns appending a digit m in {1,..,n+1} to a permutation of
length n (existing values >= m are bumped up by one).  The game ends when a
player completes an increasing subsequence of length ``a`` or a decreasing
subsequence of length ``b``.

Board layout:
- The board has W = a-1 columns and H = b-1 rows; row 1 is the TOP row.
- Appending a digit shades the cell (c, r) where c is the length of the
  longest increasing subsequence ending at the new digit and r the length
  of the longest decreasing one.  c = a or r = b means the move completed a
  forbidden pattern (an off-board "cell").
- A shaded cell (c, r) eliminates every cell (c*, r*) with c* <= c and
  r* <= r, i.e. the rectangle weakly up-left of it.  The union of those
  rectangles is a staircase region, encoded as the weakly decreasing vector
  of row lengths lambda = (lambda_1 >= ... >= lambda_H), the Shape.
- A cell is a legal move iff it is open (not in the region) and edge-adjacent
  to the region on its left or top side; the first move is always (1, 1).

Boundary word codec:
- Walking the region's boundary cells from lower-left to upper-right, record
  R if only the cell's bottom edge lies on the boundary, B if only its right
  edge does, and P if both do.  Valid words contain at least one P, never
  start with B, never end with R, and never contain the factor RB.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass
from typing import Iterable, NamedTuple, Sequence

# Board dimensions above which the full state space (binomial((a-1)+(b-1), a-1))
# gets impractical to label exhaustively; callers are warned, not stopped.
MAX_SIDE = 64
STATE_WARN_THRESHOLD = 10**7

Shape = tuple  # weakly decreasing row lengths, length b-1


class BoardError(ValueError):
    """Base class for rule violations reported by this module."""


class PatternCompletedError(BoardError):
    """A permutation already contains I_a or J_b and has no board state."""


class IllegalCellError(BoardError):
    """A cell was played that is not legal in the current shape."""


class FullShapeError(BoardError):
    """The shape has no legal cells; the mover must play off-board."""


class WordError(BoardError):
    """A boundary word is malformed or does not fit the board."""


class Cell(NamedTuple):
    c: int  # column, 1-based from the left
    r: int  # row, 1-based from the top

    def __str__(self):
        return f"({self.c},{self.r})"


class PrefixPair(NamedTuple):
    inc: int  # longest increasing subsequence ending at this digit
    dec: int  # longest decreasing subsequence ending at this digit


@dataclass(frozen=True)
class GameConfig:
    """Forbidden pattern lengths: increasing I_a and decreasing J_b."""

    a: int
    b: int

    def __post_init__(self):
        if not (isinstance(self.a, int) and isinstance(self.b, int)):
            raise BoardError(f"a and b must be integers, got a={self.a!r} b={self.b!r}")
        if self.a < 2 or self.b < 2:
            raise BoardError(f"need a >= 2 and b >= 2, got a={self.a} b={self.b}")
        if self.a > MAX_SIDE or self.b > MAX_SIDE:
            raise BoardError(f"a and b are limited to {MAX_SIDE}, got a={self.a} b={self.b}")
        if self.state_count > STATE_WARN_THRESHOLD:
            warnings.warn(
                f"(a={self.a}, b={self.b}) has {self.state_count} board states; "
                "exhaustive solving will be slow",
                ResourceWarning,
                stacklevel=2,
            )

    @property
    def width(self):
        return self.a - 1

    @property
    def height(self):
        return self.b - 1

    @property
    def state_count(self):
        """Number of staircase shapes in the (b-1) x (a-1) box."""
        return math.comb(self.width + self.height, self.height)


def empty_shape(cfg: GameConfig) -> Shape:
    return (0,) * cfg.height


def is_full(shape: Shape, cfg: GameConfig) -> bool:
    return shape[-1] == cfg.width


def check_shape(shape: Sequence[int], cfg: GameConfig) -> Shape:
    """Validate row lengths and return them as a canonical tuple."""
    shape = tuple(shape)
    if len(shape) != cfg.height:
        raise BoardError(f"shape needs {cfg.height} rows, got {len(shape)}")
    prev = cfg.width
    for v in shape:
        if not 0 <= v <= prev:
            raise BoardError(f"row lengths must decrease weakly within 0..{cfg.width}: {shape}")
        prev = v
    return shape


def prefix_pairs(perm: Sequence[int]) -> list:
    """(inc, dec) subsequence lengths ending at each position, in O(n^2)."""
    pairs = []
    for i, v in enumerate(perm):
        inc = dec = 1
        for j in range(i):
            pj = pairs[j]
            if perm[j] < v:
                inc = max(inc, pj.inc + 1)
            else:
                dec = max(dec, pj.dec + 1)
        pairs.append(PrefixPair(inc, dec))
    return pairs


def perm_to_shape(perm: Sequence[int], cfg: GameConfig) -> Shape:
    """Staircase of shaded+eliminated row lengths after playing ``perm``."""
    lam = [0] * cfg.height
    for i, pair in enumerate(prefix_pairs(perm)):
        if pair.inc >= cfg.a or pair.dec >= cfg.b:
            raise PatternCompletedError(
                f"pattern already completed at position {i + 1}: "
                f"digit reaches {pair} with a={cfg.a}, b={cfg.b}"
            )
        for r in range(pair.dec):
            if lam[r] < pair.inc:
                lam[r] = pair.inc
    return tuple(lam)


def legal_cells(shape: Shape, cfg: GameConfig) -> set:
    """Open cells edge-adjacent to the region; {(1,1)} on an empty board."""
    W = cfg.width
    cells = set()
    if shape[0] < W:
        # Left-adjacent in row 1 (or the fixed first move when empty).
        cells.add(Cell(shape[0] + 1, 1))
    for r in range(2, cfg.height + 1):
        top, cur = shape[r - 2], shape[r - 1]
        if top > cur:
            for c in range(cur + 1, top + 1):
                cells.add(Cell(c, r))
        elif 1 <= cur < W:
            cells.add(Cell(cur + 1, r))
    if not cells:
        raise FullShapeError(f"no legal moves: board {shape} is full")
    return cells


def apply_cell(shape: Shape, cell: Cell, cfg: GameConfig) -> Shape:
    """Shade ``cell`` and eliminate everything weakly up-left of it."""
    cell = Cell(*cell)
    if cell not in legal_cells(shape, cfg):
        raise IllegalCellError(
            f"cell {cell} is not legal in shape {shape}; "
            f"legal cells are {sorted(legal_cells(shape, cfg))}"
        )
    c, r = cell
    return tuple(max(v, c) if i < r else v for i, v in enumerate(shape))


def cell_of_append(perm: Sequence[int], m: int) -> Cell:
    """The cell shaded by appending digit ``m`` (may lie off-board)."""
    n = len(perm)
    if not 1 <= m <= n + 1:
        raise BoardError(f"digit must be in 1..{n + 1}, got {m}")
    inc = dec = 1
    for v, pair in zip(perm, prefix_pairs(perm)):
        if v < m:
            inc = max(inc, pair.inc + 1)
        else:
            dec = max(dec, pair.dec + 1)
    return Cell(inc, dec)


def realize_digit(perm: Sequence[int], cell: Cell, cfg: GameConfig) -> int:
    """Smallest digit whose appended cell is ``cell``.

    Proposition 1 guarantees a digit exists for every legal cell; the
    smallest one is this library's tie-break (several digits can share a
    cell).
    """
    cell = Cell(*cell)
    if cell not in legal_cells(perm_to_shape(perm, cfg), cfg):
        raise IllegalCellError(f"cell {cell} is not legal for permutation {list(perm)}")
    for m in range(1, len(perm) + 2):
        if cell_of_append(perm, m) == cell:
            return m
    raise AssertionError(f"no digit realizes legal cell {cell}")  # unreachable


def shape_to_word(shape: Shape) -> str:
    """Boundary word over {R, B, P}, read from lower-left to upper-right."""
    if shape[0] == 0:
        raise BoardError("boundary word is undefined for the empty board state")
    letters = []
    below = 0
    for v in reversed(shape):
        if v == 0:
            continue
        if v > below:
            letters.append("R" * (v - below - 1) + "P")
        else:  # v == below: only the right edge of (v, r) is exposed
            letters.append("B")
        below = v
    return "".join(letters)


def check_word(word: str) -> None:
    """Raise WordError unless ``word`` satisfies the language constraints."""
    if not word:
        raise WordError("empty word")
    bad = set(word) - set("RBP")
    if bad:
        raise WordError(f"unknown letters {sorted(bad)}; alphabet is R, B, P")
    if "RB" in word:
        raise WordError(f"word {word!r} contains the forbidden factor RB")
    if "P" not in word:
        raise WordError(f"word {word!r} contains no P")
    if word[0] == "B":
        raise WordError(f"word {word!r} starts with B")
    if word[-1] == "R":
        raise WordError(f"word {word!r} ends with R")


def word_to_shape(word: str, cfg: GameConfig) -> Shape:
    """Inverse of shape_to_word, placing the region at the top of the board."""
    check_word(word)
    widths = []  # row lengths, bottom-most nonempty row first
    run = 0
    for letter in word:
        if letter == "R":
            run += 1
        elif letter == "P":
            widths.append((widths[-1] if widths else 0) + run + 1)
            run = 0
        else:  # B
            widths.append(widths[-1])
    if len(widths) > cfg.height:
        raise WordError(f"word {word!r} spans {len(widths)} rows; board has {cfg.height}")
    if widths[-1] > cfg.width:
        raise WordError(f"word {word!r} spans {widths[-1]} columns; board has {cfg.width}")
    widths.reverse()
    return tuple(widths) + (0,) * (cfg.height - len(widths))


def transpose_shape(shape: Shape, cfg: GameConfig) -> Shape:
    """Conjugate staircase on the transposed board (swap a and b roles)."""
    return tuple(sum(1 for v in shape if v >= c) for c in range(1, cfg.width + 1))


def shaded_cells(perm: Sequence[int], cfg: GameConfig) -> list:
    """The cells actually played, in move order.

    A finished transcript's final digit lands off-board (column a or row b)
    and is excluded; everything else is a shaded cell of the board.
    """
    return [
        Cell(p.inc, p.dec)
        for p in prefix_pairs(perm)
        if p.inc < cfg.a and p.dec < cfg.b
    ]


# --- plain-text forms ------------------------------------------------------

def format_shape(shape: Shape) -> str:
    return ",".join(str(v) for v in shape)


def parse_shape(text: str, cfg: GameConfig) -> Shape:
    try:
        values = [int(part) for part in text.split(",")]
    except ValueError:
        raise BoardError(f"shape must be comma-separated integers, got {text!r}") from None
    return check_shape(values, cfg)


def format_permutation(perm: Sequence[int]) -> str:
    if len(perm) > 9:
        return " ".join(str(v) for v in perm)
    return "".join(str(v) for v in perm)


def parse_permutation(text: str) -> tuple:
    """Contiguous digits for n <= 9 ("163425"), space-separated above."""
    text = text.strip()
    if not text:
        return ()
    parts = text.split()
    if len(parts) == 1 and len(parts[0]) > 1 and all(ch.isdigit() for ch in parts[0]):
        values = tuple(int(ch) for ch in parts[0])
    else:
        try:
            values = tuple(int(part) for part in parts)
        except ValueError:
            raise BoardError(f"cannot parse permutation from {text!r}") from None
    if sorted(values) != list(range(1, len(values) + 1)):
        raise BoardError(f"{values} is not a permutation of 1..{len(values)}")
    return values
