"""Unbounded best-first minimax search with completion, transposition
tables and two backpropagation schemes, plus game implementations, an exact
solver and a tournament harness."""
from .config import (PRESETS, Backprop, Iterations, SearchConfig, TerminalEval,
                     TieBreak, WallClockMillis, preset)
from .errors import UBFMError
from .evaluation import HeuristicEval, generate_eval_sets
from .games import get_game
from .oracle import solve
from .search import run_search, search
from .values import CompletedValue, Resolution

__all__ = ["PRESETS", "Backprop", "Iterations", "SearchConfig", "TerminalEval",
           "TieBreak", "WallClockMillis", "preset", "UBFMError", "HeuristicEval",
           "generate_eval_sets", "get_game", "solve", "run_search", "search",
           "CompletedValue", "Resolution"]

__version__ = "0.1.0"
