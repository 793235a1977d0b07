from .base import FIRST, Game, Outcome, popcount


class Breakthrough(Game):
    """Breakthrough on ``width`` x ``height`` with ``rows`` pawn rows a side.

    X starts on the top rows and moves down (increasing row), O starts on the
    bottom rows and moves up.  Pawns step straight ahead onto an empty square
    or diagonally ahead onto an empty or enemy square; captures are diagonal
    only.  Reaching the far row or capturing every enemy pawn wins, and a
    player left without a legal move loses.  A move is ``src * cells + dst``.
    """

    feature_names = ("material", "advancement", "frontmost", "mobility", "attacks")

    def __init__(self, width: int, height: int, rows: int = 2, name: str | None = None):
        super().__init__(name or f"breakthrough{width}x{height}", width, height)
        w = width
        self.rows = rows
        self.row_masks = [((1 << w) - 1) << (r * w) for r in range(height)]
        col0 = sum(1 << (r * w) for r in range(height))
        self.not_first_col = self.full & ~col0
        self.not_last_col = self.full & ~(col0 << (w - 1))
        self.first_home = sum(self.row_masks[:rows])
        self.second_home = sum(self.row_masks[height - rows:])
        self.pawns = w * rows

    def initial_board(self):
        return (self.first_home, self.second_home)

    def progress(self, state):
        a, b = state.board
        h = self.height
        total = h * (2 * self.pawns - popcount(a) - popcount(b))
        for r, m in enumerate(self.row_masks):
            total += r * popcount(a & m) + (h - 1 - r) * popcount(b & m)
        return total

    def _targets(self, own, opp, player):
        """(straight, left-diagonal, right-diagonal) destination sets."""
        w, full = self.width, self.full
        empty = ~(own | opp) & full
        if player == FIRST:
            straight = (own << w) & empty
            down_left = (own << (w - 1)) & ~own & self.not_last_col & full
            down_right = (own << (w + 1)) & ~own & self.not_first_col & full
            return straight, down_left, down_right
        straight = (own >> w) & empty
        up_left = (own >> (w + 1)) & ~own & self.not_last_col
        up_right = (own >> (w - 1)) & ~own & self.not_first_col
        return straight, up_left, up_right

    def _has_moves(self, own, opp, player):
        s, l, r = self._targets(own, opp, player)
        return bool(s | l | r)

    def _moves(self, state):
        a, b = state.board
        p = state.player
        own, opp = (a, b) if p == FIRST else (b, a)
        w, n = self.width, self.n
        sign = 1 if p == FIRST else -1
        # source offset for each target set
        offsets = (w, w - 1, w + 1) if p == FIRST else (w, w + 1, w - 1)
        moves = []
        for targets, off in zip(self._targets(own, opp, p), offsets):
            while targets:
                low = targets & -targets
                dst = low.bit_length() - 1
                moves.append((dst - sign * off) * n + dst)
                targets ^= low
        moves.sort()
        return moves

    def _play(self, state, move):
        a, b = state.board
        p = state.player
        src, dst = divmod(move, self.n)
        z = self._z
        key = state.key ^ z[src][p] ^ z[dst][p] ^ self._side
        sbit, dbit = 1 << src, 1 << dst
        if p == FIRST:
            if b & dbit:
                key ^= z[dst][1]
                b ^= dbit
            a ^= sbit | dbit
            won = bool(dbit & self.row_masks[-1]) or not b
            own, opp = b, a
        else:
            if a & dbit:
                key ^= z[dst][0]
                a ^= dbit
            b ^= sbit | dbit
            won = bool(dbit & self.row_masks[0]) or not a
            own, opp = a, b
        outcome = None
        if won or not self._has_moves(own, opp, 1 - p):
            outcome = Outcome.FIRST_WINS if p == FIRST else Outcome.SECOND_WINS
        return type(state)((a, b), 1 - p, state.move_count + 1, key, outcome)

    def compute_outcome(self, board, player):
        a, b = board
        if a & self.row_masks[-1] or not b:
            return Outcome.FIRST_WINS
        if b & self.row_masks[0] or not a:
            return Outcome.SECOND_WINS
        own, opp = (a, b) if player == FIRST else (b, a)
        if not self._has_moves(own, opp, player):
            return Outcome.SECOND_WINS if player == FIRST else Outcome.FIRST_WINS
        return None

    def move_str(self, move):
        src, dst = divmod(move, self.n)
        return Game.move_str(self, src) + Game.move_str(self, dst)

    def parse_move(self, text):
        text = text.strip().lower()
        for cut in range(2, len(text) - 1):
            try:
                return Game.parse_move(self, text[:cut]) * self.n + Game.parse_move(self, text[cut:])
            except ValueError:
                continue
        raise ValueError(f"bad move {text!r}")

    def features(self, state):
        a, b = state.board
        h = self.height
        adv_a = adv_b = 0
        front_a = front_b = 0
        for r, m in enumerate(self.row_masks):
            ca, cb = popcount(a & m), popcount(b & m)
            adv_a += r * ca
            adv_b += (h - 1 - r) * cb
            if ca:
                front_a = r
            if cb and not front_b:
                front_b = h - 1 - r
        sa, la, ra = self._targets(a, b, FIRST)
        sb, lb, rb = self._targets(b, a, 1)
        mob_a = popcount(sa) + popcount(la) + popcount(ra)
        mob_b = popcount(sb) + popcount(lb) + popcount(rb)
        att_a = popcount((la | ra) & b)
        att_b = popcount((lb | rb) & a)
        return (
            (popcount(a) - popcount(b)) / self.pawns,
            (adv_a - adv_b) / (self.pawns * h),
            (front_a - front_b) / h,
            (mob_a - mob_b) / (3 * self.width),
            (att_a - att_b) / self.width,
        )
