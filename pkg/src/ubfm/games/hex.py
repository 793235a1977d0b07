from .base import FIRST, Game, Outcome


def _low(x):
    return (x & -x).bit_length() - 1


def _cells(x):
    while x:
        low = x & -x
        yield low.bit_length() - 1
        x ^= low


class Hex(Game):
    """Hex on an n x n rhombus.  X joins the top and bottom rows, O joins
    the left and right columns.  Neighbours of (r, c) are (r, c +- 1),
    (r +- 1, c), (r - 1, c + 1) and (r + 1, c - 1)."""

    feature_names = ("center", "near_center", "span", "adjacency", "axis_links")

    def __init__(self, size: int):
        super().__init__(f"hex{size}", size, size)
        n = size
        col0 = sum(1 << (r * n) for r in range(n))
        self.not_first_col = self.full & ~col0
        self.not_last_col = self.full & ~(col0 << (n - 1))
        self.top = (1 << n) - 1
        self.bottom = self.top << (n * (n - 1))
        self.left = col0
        self.right = col0 << (n - 1)
        self.row_masks = [self.top << (n * r) for r in range(n)]
        self.col_masks = [col0 << c for c in range(n)]
        mid = (n - 1) / 2

        def dist(i):
            dr, dc = i // n - mid, i % n - mid
            return (abs(dr) + abs(dc) + abs(dr + dc)) / 2

        self.center1 = sum(1 << i for i in range(self.n) if dist(i) <= 1)
        self.center2 = sum(1 << i for i in range(self.n) if dist(i) <= 2)
        self._rank = [dist(i) for i in range(self.n)]

    def solver_order(self, moves):
        return sorted(moves, key=self._rank.__getitem__)

    def _flood(self, own, seed):
        reach = own & seed
        while True:
            grown = self._dilate(reach) & own
            if grown == reach:
                return reach
            reach = grown

    def winning_cells(self, own, opp, player):
        """Empty cells completing ``player``'s chain with one more stone."""
        start, goal = (self.top, self.bottom) if player == FIRST else (self.left, self.right)
        empty = ~(own | opp) & self.full
        near_start = self._dilate(self._flood(own, start)) | start
        near_goal = self._dilate(self._flood(own, goal)) | goal
        return empty & near_start & near_goal

    def solver_moves(self, state):
        # Stones never disappear, so one more own stone cannot hurt: a
        # winning cell is taken at once, and when the opponent has such
        # cells, anything but blocking the only one loses on the spot.
        a, b = state.board
        p = state.player
        own, opp = (a, b) if p == FIRST else (b, a)
        mine = self.winning_cells(own, opp, p)
        if mine:
            return [_low(mine)]
        theirs = self.winning_cells(opp, own, 1 - p)
        if theirs:
            return [_low(theirs)]
        # An opponent cell that would open two winning cells is a forced win
        # for them unless we play into it or make a threat of our own.
        empty = ~(a | b) & self.full
        must = empty
        for c in _cells(empty):
            w = self.winning_cells(opp | 1 << c, own, 1 - p)
            if w & (w - 1):
                must &= w | 1 << c
        if must != empty:
            for m in _cells(empty & ~must):
                if self.winning_cells(own | 1 << m, opp, p):
                    must |= 1 << m
        moves = list(_cells(must))
        if len(moves) < 2:
            return moves
        # cells on either side's shortest connections first
        if p == FIRST:
            mine = self.shortest_path_cells(own, empty, self.top, self.bottom)
            theirs = self.shortest_path_cells(opp, empty, self.left, self.right)
        else:
            mine = self.shortest_path_cells(own, empty, self.left, self.right)
            theirs = self.shortest_path_cells(opp, empty, self.top, self.bottom)
        rank = self._rank
        return sorted(moves, key=lambda m: (-2 * (mine >> m & 1) - (theirs >> m & 1), rank[m]))

    def _grow(self, x, own):
        while True:
            y = x | (self._dilate(x) & own)
            if y == x:
                return x
            x = y

    def _distance_layers(self, own, empty, edge):
        """Cumulative sets of cells reachable from ``edge`` by placing at
        most k stones on empty cells, for k = 0, 1, ..."""
        layers = [self._grow(own & edge, own)]
        while len(layers) <= self.n:
            prev = layers[-1]
            nxt = self._grow(prev | (empty & (self._dilate(prev) | edge)), own)
            if nxt == prev:
                break
            layers.append(nxt)
        return layers

    def shortest_path_cells(self, own, empty, start, goal):
        """Empty cells lying on some cheapest chain from ``start`` to ``goal``."""
        fwd = self._distance_layers(own, empty, start)
        back = self._distance_layers(own, empty, goal)
        dist = next((k for k, f in enumerate(fwd) if f & goal), None)
        if dist is None:
            return 0
        on = 0
        for i in range(1, dist + 1):
            j = dist + 1 - i
            if i < len(fwd) and j < len(back):
                on |= (fwd[i] & ~fwd[i - 1]) & (back[j] & ~back[j - 1]) & empty
        return on

    def initial_board(self):
        return (0, 0)

    def _dilate(self, x):
        n = self.width
        return (x | ((x << 1) & self.not_first_col) | ((x >> 1) & self.not_last_col)
                | (x << n) | (x >> n)
                | ((x >> (n - 1)) & self.not_first_col)
                | ((x << (n - 1)) & self.not_last_col)) & self.full

    def connected(self, own, start, goal) -> bool:
        reach = own & start
        while reach:
            if reach & goal:
                return True
            grown = self._dilate(reach) & own
            if grown == reach:
                return False
            reach = grown
        return False

    def _moves(self, state):
        empty = ~(state.board[0] | state.board[1]) & self.full
        return [i for i in range(self.n) if empty >> i & 1]

    def _play(self, state, move):
        a, b = state.board
        p = state.player
        bit = 1 << move
        if p == FIRST:
            a |= bit
            won = (a & self.top and a & self.bottom
                   and self.connected(a, self.top, self.bottom))
        else:
            b |= bit
            won = (b & self.left and b & self.right
                   and self.connected(b, self.left, self.right))
        key = state.key ^ self._z[move][p] ^ self._side
        outcome = None
        if won:
            outcome = Outcome.FIRST_WINS if p == FIRST else Outcome.SECOND_WINS
        return type(state)((a, b), 1 - p, state.move_count + 1, key, outcome)

    def compute_outcome(self, board, player):
        a, b = board
        if self.connected(a, self.top, self.bottom):
            return Outcome.FIRST_WINS
        if self.connected(b, self.left, self.right):
            return Outcome.SECOND_WINS
        return None

    def _links(self, x):
        n = self.width
        horiz = (x & (x >> 1) & self.not_last_col).bit_count()
        vert = (x & (x >> n)).bit_count()
        diag = (x & (x >> (n - 1)) & self.not_first_col).bit_count()
        return horiz, vert, diag

    def _rows_touched(self, x):
        y = x
        for k in range(1, self.width):
            y |= x >> k
        # a bit shifted within its row can only land on column 0 of that row
        return (y & self.left).bit_count()

    def _cols_touched(self, x):
        fold = 0
        while x:
            fold |= x
            x >>= self.width
        return (fold & self.top).bit_count()

    def features(self, state):
        a, b = state.board
        n = self.width
        rows_a = self._rows_touched(a)
        cols_b = self._cols_touched(b)
        ha, va, da = self._links(a)
        hb, vb, db = self._links(b)
        c1, c2 = self.center1, self.center2
        return (
            ((a & c1).bit_count() - (b & c1).bit_count()) / 3,
            ((a & c2).bit_count() - (b & c2).bit_count()) / 6,
            (rows_a - cols_b) / n,
            ((ha + va + da) - (hb + vb + db)) / n,
            # links along each player's own goal axis
            ((va + da) - (hb + db)) / n,
        )
