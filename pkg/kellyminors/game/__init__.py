from ._game import (
    GAME_MAX_N,
    GameState,
    has_winning_strategy,
    min_cops,
    resolve_move,
    winning_strategy,
)

__all__ = [
    "GAME_MAX_N",
    "GameState",
    "has_winning_strategy",
    "min_cops",
    "resolve_move",
    "winning_strategy",
]
