"""Two players extend a permutation digit by digit; a monotone run of
length a (increasing) or b (decreasing) ends the game.  This package
models the game on its staircase board, solves it exactly, certifies
explicit strategies, and serves it over CLI and HTTP.
"""

from .board import (
    BoardError,
    Cell,
    GameConfig,
    IllegalCellError,
    WordError,
    apply_cell,
    cell_of_append,
    legal_cells,
    perm_to_shape,
    realize_digit,
    shape_to_word,
    word_to_shape,
)
from .engine import (
    PlayPolicy,
    Session,
    SessionFinishedError,
    engine_reply,
    exhaustive_verify,
    format_game_log,
    new_session,
    play_digit,
    simulate,
)
from .solver import (
    ACHIEVEMENT,
    AVOIDANCE,
    COMPLETE_NOW,
    best_moves,
    count_loss_states,
    get_table,
    winner_from_start,
)
from .strategy import (
    OffStrategyError,
    StrategyUnavailableError,
    achievement_move,
    avoidance_move,
    classify,
    strategy_available,
    verify_strategy,
)

__version__ = "0.1.0"

__all__ = [
    "ACHIEVEMENT",
    "AVOIDANCE",
    "BoardError",
    "COMPLETE_NOW",
    "Cell",
    "GameConfig",
    "IllegalCellError",
    "OffStrategyError",
    "PlayPolicy",
    "Session",
    "SessionFinishedError",
    "StrategyUnavailableError",
    "WordError",
    "achievement_move",
    "apply_cell",
    "avoidance_move",
    "best_moves",
    "cell_of_append",
    "classify",
    "count_loss_states",
    "engine_reply",
    "exhaustive_verify",
    "format_game_log",
    "get_table",
    "legal_cells",
    "new_session",
    "perm_to_shape",
    "play_digit",
    "realize_digit",
    "shape_to_word",
    "simulate",
    "strategy_available",
    "verify_strategy",
    "winner_from_start",
    "word_to_shape",
]
