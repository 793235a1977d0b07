"""Exception hierarchy shared by the search, games, oracle and harness."""


class UBFMError(Exception):
    pass


# games
class UnknownGame(UBFMError):
    pass


class IllegalMove(UBFMError):
    pass


class TerminalState(UBFMError):
    """Raised when an operation needs a non-terminal state."""


class NoLegalMoves(UBFMError):
    """A non-terminal state without moves: a bug in the game implementation."""


# search
class SearchError(UBFMError):
    pass


class AllChildrenResolved(SearchError):
    def __init__(self, node):
        super().__init__("every child of the node is resolved")
        self.node = node


class StartResolved(SearchError):
    pass


class TerminalLeaf(SearchError):
    pass


class NotExpanded(SearchError):
    pass


class RootResolved(SearchError):
    pass


class RootNotExpanded(SearchError):
    pass


# transposition
class KeyCollision(UBFMError):
    def __init__(self, key, stored, probe):
        super().__init__(f"zobrist collision on key {key:#018x}")
        self.key = key
        self.stored = stored
        self.probe = probe


class NoProgressMeasure(UBFMError):
    pass


# oracle
class BudgetExceeded(UBFMError):
    pass


# harness
class MoveLimitExceeded(UBFMError):
    pass


class EmptyStratum(UBFMError):
    pass


class ConfigError(UBFMError):
    pass
