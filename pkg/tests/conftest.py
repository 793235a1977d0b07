import pytest

from ubfm.evaluation import generate_eval_sets
from ubfm.games import get_game


@pytest.fixture
def ttt():
    return get_game("tictactoe")


@pytest.fixture
def heuristic():
    def make(game_name, member=0, injective=False):
        f = generate_eval_sets(game_name, 1, 5)[0].members[member]
        return f.salted(injective)
    return make


def pytest_terminal_summary(terminalreporter):
    from helpers import ACCEPTANCE_LINES
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for _, line in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(line)
