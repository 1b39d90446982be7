from .base import (
    GameState,
    Move,
    MoveSequence,
    Verdict,
    apply_move,
    apply_move_unchecked,
    initial_state,
    legal_moves,
    verify_sequence,
)
