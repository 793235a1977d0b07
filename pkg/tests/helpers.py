"""Shared test utilities."""


def all_states(game):
    """Every reachable state of a small game (each (board, player) once)."""
    out, stack, seen = [], [game.initial_state()], set()
    while stack:
        s = stack.pop()
        k = (s.board, s.player)
        if k in seen:
            continue
        seen.add(k)
        out.append(s)
        if s.outcome is None:
            stack.extend(child for _, child in game.successors(s))
    return out


# one line per acceptance criterion, printed in the terminal summary
ACCEPTANCE_LINES = []


def record_criterion(number: int, title: str, ok, detail: str):
    status = {True: "PASS", False: "FAIL"}.get(ok, ok)
    ACCEPTANCE_LINES.append((number, f"criterion {number} [{status}] {title}: {detail}"))
