"""Unbounded Best-First Minimax over an in-memory search graph.

Each iteration descends from a start node to an unexpanded node along the
children with the best negated value, expands that node, and backs the new
values up the descent path.  Two backpropagation strategies are supported:

* full: recompute every node on the path up to the root, then restart the
  next descent from the root;
* Korf & Chickering: stop climbing at the first node whose value does not
  change (the invariant node) and start the next descent there.

Values are kept in the negamax convention, from the perspective of the
player to move at each node (see :mod:`ubfm.values` for the packed score).
"""
from __future__ import annotations

import gc
import json
import random
import time
from dataclasses import asdict, dataclass

from .config import Backprop, Iterations, SearchConfig, TerminalEval as TerminalMode, TieBreak
from .errors import (AllChildrenResolved, NotExpanded, RootNotExpanded, RootResolved,
                     SearchError, StartResolved, TerminalLeaf, TerminalState)
from .evaluation import EXACT
from .graph import Node
from .transposition import TranspositionTable, lookup_or_create
from .values import LOSS_SCORE, WIN_SCORE, CompletedValue

_EXACT_SCORE = {1: WIN_SCORE, 0: 0.0, -1: LOSS_SCORE}


@dataclass
class SearchStats:
    iterations: int = 0
    nodes_expanded: int = 0
    max_depth_reached: int = 0
    root_resolved: bool = False
    elapsed: float = 0.0
    evaluations: int = 0
    distinct_expanded: int = 0
    resolve_only: int = 0
    stalled: bool = False

    def summary(self) -> dict:
        """Deterministic fields only (no timing)."""
        d = asdict(self)
        del d["elapsed"]
        return d


@dataclass
class LogRecord:
    iteration: int
    expanded: int | None
    path_length: int
    root: str

    def to_json(self) -> str:
        key = None if self.expanded is None else f"{self.expanded:016x}"
        return json.dumps({"i": self.iteration, "key": key,
                           "path": self.path_length, "root": self.root})


class SearchGraph:
    """Partial game graph plus everything an iteration needs."""

    def __init__(self, game, state, heuristic, config: SearchConfig,
                 terminal=EXACT, debug: bool = False, log: bool = False):
        self.game = game
        self.config = config
        self.heuristic = heuristic
        self.terminal = terminal
        self.completion = config.completion
        self.exact_terminals = config.terminal_eval is TerminalMode.EXACT
        self.table = TranspositionTable(game, debug) if config.use_tt else None
        self.debug = debug
        self.rng = random.Random(config.rng_seed)
        self.random_ties = config.tie_break is TieBreak.SEEDED_RANDOM
        self.stats = SearchStats()
        self.log = [] if log else None
        self._expanded_keys = set()
        self.last_stalled = False
        self.leaf_changed = False
        self.root = self.new_node(state)[0]

    # -- node creation --------------------------------------------------
    def new_node(self, state) -> tuple[Node, bool]:
        if self.table is not None:
            node, created = lookup_or_create(self.table, state.key, state)
        else:
            node, created = Node(state.key, state), True
        if created:
            self._evaluate(node)
        return node, created

    def _evaluate(self, node: Node):
        state = node.state
        self.stats.evaluations += 1
        outcome = state.outcome
        if outcome is None:
            node.score = self.heuristic(state)
            return
        node.terminal = True
        if self.completion:
            # resolution always comes from the true outcome
            if self.exact_terminals:
                exact = self.terminal(outcome, state.player)
            else:
                exact = outcome.score_for(state.player)
            node.score = _EXACT_SCORE[exact]
            node.resolved = True
        elif self.exact_terminals:
            node.score = float(self.terminal(outcome, state.player))
        else:
            node.score = self.heuristic(state)

    def nodes(self):
        """Every node reachable from the root (each shared node once)."""
        seen = {id(self.root)}
        stack = [self.root]
        while stack:
            node = stack.pop()
            yield node
            for c in node.children:
                if id(c) not in seen:
                    seen.add(id(c))
                    stack.append(c)

    def write_log(self, fh):
        for rec in self.log or ():
            fh.write(rec.to_json() + "\n")


# -- selection ------------------------------------------------------------
def _best_child(graph: SearchGraph, node: Node, skip_resolved: bool):
    """Index of the child maximising the negated value, or -1 if none."""
    children = node.children
    if not graph.random_ties:
        best, best_i = None, -1
        for i, c in enumerate(children):
            if skip_resolved and c.resolved:
                continue
            s = -c.score
            if best is None or s > best:
                best, best_i = s, i
        return best_i
    best, ties = None, []
    for i, c in enumerate(children):
        if skip_resolved and c.resolved:
            continue
        s = -c.score
        if best is None or s > best:
            best, ties = s, [i]
        elif s == best:
            ties.append(i)
    if not ties:
        return -1
    return ties[0] if len(ties) == 1 else graph.rng.choice(ties)


def descend(graph: SearchGraph, start: list) -> list:
    """Extend ``start`` (a path from the root) down to an unexpanded node.

    With completion on, resolved children are never entered.
    """
    path = list(start)
    node = path[-1]
    skip = graph.completion
    if skip and node.resolved:
        raise StartResolved("descent cannot start at a resolved node")
    while node.expanded:
        i = _best_child(graph, node, skip)
        if i < 0:
            exc = AllChildrenResolved(node)
            exc.path = path
            raise exc
        node = node.children[i]
        assert not (skip and node.resolved)
        path.append(node)
    return path


# -- expansion and backpropagation ---------------------------------------
def recompute(node: Node, completion: bool) -> CompletedValue:
    if not node.expanded:
        raise NotExpanded("recompute needs an expanded node")
    _recompute(node, completion)
    return node.cv


def _recompute(node: Node, completion: bool) -> bool:
    """Negamax update of ``node`` from its children; True if it changed."""
    children = node.children
    worst = min(c.score for c in children)
    best = -worst if worst else 0.0
    resolved = False
    if completion:
        resolved = best == WIN_SCORE or all(c.resolved for c in children)
    changed = best != node.score or resolved != node.resolved
    node.score = best
    node.resolved = resolved
    return changed


def expand(graph: SearchGraph, node: Node) -> Node:
    if node.expanded:
        raise SearchError("node already expanded")
    if node.terminal:
        raise TerminalLeaf("terminal nodes are evaluated, never expanded")
    game = graph.game
    table = graph.table
    state = node.state
    moves = game.legal_moves(state)
    play = game._play
    children = []
    if table is None:
        evaluate = graph._evaluate
        for move in moves:
            st = play(state, move)
            child = Node(st.key, st)
            evaluate(child)
            children.append(child)
    elif table.debug:
        for move in moves:
            st = play(state, move)
            table.check_edge(state, move, st)
            children.append(graph.new_node(st)[0])
    else:
        entries = table.entries
        evaluate = graph._evaluate
        for move in moves:
            st = play(state, move)
            child = entries.get(st.key)
            if child is None:
                child = entries[st.key] = Node(st.key, st)
                evaluate(child)
            children.append(child)
    node.moves = moves
    node.children = children
    node.expanded = True
    stats = graph.stats
    stats.nodes_expanded += 1
    graph._expanded_keys.add(node.key)
    stats.distinct_expanded = len(graph._expanded_keys)
    node.generation = stats.iterations + 1
    graph.leaf_changed = _recompute(node, graph.completion)
    return node


def backpropagate_full(graph: SearchGraph, path: list) -> list:
    """Recompute every expanded node on the path, leaf to root.

    Returns the next descent start: the root.
    """
    completion = graph.completion
    gen = graph.stats.iterations + 1
    for node in reversed(path):
        if node.expanded:
            _recompute(node, completion)
            node.generation = gen
    return path[:1]


def backpropagate_kc(graph: SearchGraph, path: list, leaf_changed: bool | None = None) -> list:
    """Recompute leaf to root until a node's value is unchanged.

    ``leaf_changed`` reports whether expanding the last node changed its
    value (expansion already computed it).  Returns the path prefix ending
    at the invariant node (the root if every node changed); the next descent
    starts there.
    """
    completion = graph.completion
    gen = graph.stats.iterations + 1
    last = len(path) - 1
    if leaf_changed is not None:
        if not leaf_changed:
            return list(path)
        last -= 1
    for i in range(last, -1, -1):
        node = path[i]
        if not node.expanded:
            continue
        node.generation = gen
        if not _recompute(node, completion):
            return path[:i + 1]
    return path[:1]


def _values(path):
    return [(n.score, n.resolved) for n in path]


def iterate(graph: SearchGraph, cursor: list | None = None) -> list:
    """One UBFM iteration; returns the cursor for the next one.

    Sets ``graph.last_stalled`` when the iteration changed nothing, i.e. the
    search sits on a fixpoint that every later iteration would repeat.
    """
    root = graph.root
    completion = graph.completion
    if completion and root.resolved:
        raise RootResolved("the root is resolved")
    kc = graph.config.backprop is Backprop.KORF_CHICKERING
    start = cursor if kc and cursor else [root]
    if completion and start[-1].resolved:
        start = [root]
    stats = graph.stats
    expanded_key = None
    leaf_changed = None
    stuck = False
    try:
        path = descend(graph, start)
    except AllChildrenResolved as exc:
        path = exc.path
        stats.resolve_only += 1
    else:
        leaf = path[-1]
        if leaf.terminal:
            # without completion the best line can end in a terminal state
            stuck = True
        else:
            expand(graph, leaf)
            expanded_key = leaf.key
            leaf_changed = graph.leaf_changed
    before = _values(path) if stuck else None
    if kc:
        nxt = backpropagate_kc(graph, path, leaf_changed)
    else:
        nxt = backpropagate_full(graph, path)
    graph.last_stalled = stuck and before == _values(path)
    stats.iterations += 1
    if len(path) - 1 > stats.max_depth_reached:
        stats.max_depth_reached = len(path) - 1
    stats.root_resolved = root.resolved
    if graph.log is not None:
        graph.log.append(LogRecord(stats.iterations - 1, expanded_key, len(path),
                                   str(root.cv)))
    return nxt


def decide(graph: SearchGraph):
    """Move to the child with the best negated value, resolved ones included."""
    root = graph.root
    if not root.expanded:
        raise RootNotExpanded("run at least one iteration before deciding")
    return root.moves[_best_child(graph, root, False)]


def run_search(game, state, heuristic, config: SearchConfig, terminal=EXACT,
               debug: bool = False, log: bool = False):
    """Search ``state`` within the budget; returns (move, stats, graph)."""
    if state.outcome is not None:
        raise TerminalState("cannot search a terminal state")
    t0 = time.perf_counter()
    graph = SearchGraph(game, state, heuristic, config, terminal, debug, log)
    stats = graph.stats
    budget = config.budget
    if isinstance(budget, Iterations):
        limit, deadline = budget.n, None
    else:
        limit, deadline = None, t0 + budget.n / 1000.0
    cursor = None
    # the search graph is acyclic and freed by reference counting; pausing the
    # cycle collector avoids repeated full traversals of a growing graph
    collecting = gc.isenabled()
    gc.disable()
    try:
        while limit is None or stats.iterations < limit:
            if graph.completion and graph.root.resolved:
                break
            cursor = iterate(graph, cursor)
            if graph.last_stalled and not graph.random_ties:
                # every remaining iteration would repeat this one exactly
                stats.stalled = True
                if limit is not None:
                    stats.iterations = limit
                break
            if deadline is not None and time.perf_counter() >= deadline:
                break
    finally:
        if collecting:
            gc.enable()
    stats.root_resolved = graph.root.resolved
    move = decide(graph)
    stats.elapsed = time.perf_counter() - t0
    return move, stats, graph


def search(game, state, heuristic, config: SearchConfig, terminal=EXACT):
    move, stats, _ = run_search(game, state, heuristic, config, terminal)
    return move, stats
