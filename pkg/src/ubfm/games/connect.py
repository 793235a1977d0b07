from .base import FIRST, Game, Outcome, popcount


class Connect(Game):
    """Gravity k-in-a-row on ``width`` columns and ``height`` rows.

    Row 0 is the top; a move names a column and the disc lands on the lowest
    empty row of that column.
    """

    feature_names = ("center", "threes", "twos", "open_windows")

    def __init__(self, width: int, height: int, k: int):
        super().__init__(f"connect{width}x{height}", width, height)
        self.k = k
        w, h = width, height
        self.col_masks = [sum(1 << (r * w + c) for r in range(h)) for c in range(w)]
        windows = []
        for r in range(h):
            for c in range(w):
                for dr, dc in ((0, 1), (1, 0), (1, 1), (1, -1)):
                    cells = [(r + i * dr, c + i * dc) for i in range(k)]
                    if all(0 <= rr < h and 0 <= cc < w for rr, cc in cells):
                        windows.append(sum(1 << (rr * w + cc) for rr, cc in cells))
        self.windows = tuple(windows)
        self.windows_through = [tuple(m for m in windows if m >> i & 1)
                                for i in range(self.n)]
        mid = (w - 1) / 2
        self.center = sum(m for c, m in enumerate(self.col_masks) if abs(c - mid) < 1)
        self._mid = mid

    def solver_order(self, moves):
        return sorted(moves, key=lambda c: abs(c - self._mid))

    def initial_board(self):
        return (0, 0)

    def _moves(self, state):
        occ = state.board[0] | state.board[1]
        return [c for c in range(self.width) if not occ >> c & 1]

    def move_str(self, move):
        return str(move + 1)

    def parse_move(self, text):
        return int(text) - 1

    def _play(self, state, move):
        a, b = state.board
        p = state.player
        occ = a | b
        filled = popcount(occ & self.col_masks[move])
        cell = (self.height - 1 - filled) * self.width + move
        bit = 1 << cell
        if p == FIRST:
            a |= bit
            own = a
        else:
            b |= bit
            own = b
        key = state.key ^ self._z[cell][p] ^ self._side
        outcome = None
        for m in self.windows_through[cell]:
            if own & m == m:
                outcome = Outcome.FIRST_WINS if p == FIRST else Outcome.SECOND_WINS
                break
        else:
            if occ | bit == self.full:
                outcome = Outcome.DRAW
        return type(state)((a, b), 1 - p, state.move_count + 1, key, outcome)

    def compute_outcome(self, board, player):
        a, b = board
        for m in self.windows:
            if a & m == m:
                return Outcome.FIRST_WINS
            if b & m == m:
                return Outcome.SECOND_WINS
        if a | b == self.full:
            return Outcome.DRAW
        return None

    def features(self, state):
        a, b = state.board
        k = self.k
        threes = twos = opens = 0
        for m in self.windows:
            ia, ib = a & m, b & m
            if ia and not ib:
                c = popcount(ia)
                opens += 1
                if c == k - 1:
                    threes += 1
                elif c == k - 2:
                    twos += 1
            elif ib and not ia:
                c = popcount(ib)
                opens -= 1
                if c == k - 1:
                    threes -= 1
                elif c == k - 2:
                    twos -= 1
        nw = len(self.windows)
        return (
            (popcount(a & self.center) - popcount(b & self.center)) / self.height,
            threes / 4,
            twos / 6,
            opens / nw,
        )
