from .base import FIRST, Game, Outcome


class Othello(Game):
    """Othello on an n x n board; X (black) moves first.

    A player without a disc-flipping move plays the explicit pass move
    ``PASS = n * n``; the game ends when neither side can flip.  Each state
    caches the move masks of both players in ``aux`` as
    ``(mover_mask, other_mask)``.
    """

    feature_names = ("discs", "mobility", "corners", "edges", "x_squares")

    def __init__(self, size: int):
        super().__init__(f"othello{size}", size, size)
        n = size
        self.PASS = n * n
        col0 = sum(1 << (r * n) for r in range(n))
        self.nf = self.full & ~col0
        self.nl = self.full & ~(col0 << (n - 1))
        corners = (0, n - 1, n * (n - 1), n * n - 1)
        self.corners = sum(1 << c for c in corners)
        edge = 0
        for i in range(n * n):
            r, c = divmod(i, n)
            if r in (0, n - 1) or c in (0, n - 1):
                edge |= 1 << i
        self.edges = edge & ~self.corners
        self.x_squares = sum(1 << ((1 if r == 0 else n - 2) * n + (1 if c == 0 else n - 2))
                             for r in (0, n - 1) for c in (0, n - 1))
        # (shift, mask applied after shifting); positive shifts go left
        self._dirs = ((1, self.nf), (-1, self.nl), (n, self.full), (-n, self.full),
                      (n + 1, self.nf), (n - 1, self.nl), (-(n - 1), self.nf),
                      (-(n + 1), self.nl))
        # (mover, other) discs -> (mover moves, other moves); pure, bounded
        self._mask_memo = {}

    def clear_caches(self):
        self._mask_memo.clear()

    def initial_board(self):
        n = self.width
        lo, hi = n // 2 - 1, n // 2
        x = (1 << (lo * n + hi)) | (1 << (hi * n + lo))
        o = (1 << (lo * n + lo)) | (1 << (hi * n + hi))
        return (x, o)

    def is_pass(self, move):
        return move == self.PASS

    def move_str(self, move):
        return "pass" if move == self.PASS else Game.move_str(self, move)

    def parse_move(self, text):
        return self.PASS if text.strip().lower() == "pass" else Game.parse_move(self, text)

    def move_mask(self, own, opp):
        """Cells where ``own`` may play (Kogge-Stone style fill per direction)."""
        n = self.width
        nf, nl = self.nf, self.nl
        empty = ~(own | opp) & self.full
        steps = n - 3
        moves = 0
        # east / west / south / north
        o = opp & nf
        t = (own << 1) & o
        for _ in range(steps):
            t |= (t << 1) & o
        moves |= (t << 1) & empty & nf
        o = opp & nl
        t = (own >> 1) & o
        for _ in range(steps):
            t |= (t >> 1) & o
        moves |= (t >> 1) & empty & nl
        t = (own << n) & opp
        for _ in range(steps):
            t |= (t << n) & opp
        moves |= (t << n) & empty
        t = (own >> n) & opp
        for _ in range(steps):
            t |= (t >> n) & opp
        moves |= (t >> n) & empty
        # diagonals
        s = n + 1
        o = opp & nf
        t = (own << s) & o
        for _ in range(steps):
            t |= (t << s) & o
        moves |= (t << s) & empty & nf
        t = (own >> s) & (opp & nl)
        o = opp & nl
        for _ in range(steps):
            t |= (t >> s) & o
        moves |= (t >> s) & empty & nl
        s = n - 1
        o = opp & nl
        t = (own << s) & o
        for _ in range(steps):
            t |= (t << s) & o
        moves |= (t << s) & empty & nl
        o = opp & nf
        t = (own >> s) & o
        for _ in range(steps):
            t |= (t >> s) & o
        moves |= (t >> s) & empty & nf
        return moves

    def flips(self, own, opp, bit):
        flipped = 0
        full = self.full
        for shift, mask in self._dirs:
            run = 0
            if shift > 0:
                x = (bit << shift) & mask & full
                while x & opp:
                    run |= x
                    x = (x << shift) & mask & full
            else:
                x = (bit >> -shift) & mask
                while x & opp:
                    run |= x
                    x = (x >> -shift) & mask
            if x & own:
                flipped |= run
        return flipped

    def compute_aux(self, state):
        a, b = state.board
        own, opp = (a, b) if state.player == FIRST else (b, a)
        return (self.move_mask(own, opp), self.move_mask(opp, own))

    def _moves(self, state):
        m = state.aux[0]
        if not m:
            return [self.PASS]
        moves = []
        while m:
            low = m & -m
            moves.append(low.bit_length() - 1)
            m ^= low
        return moves

    def _play(self, state, move):
        p = state.player
        if move == self.PASS:
            aux = (state.aux[1], state.aux[0])
            return type(state)(state.board, 1 - p, state.move_count + 1,
                               state.key ^ self._side, None, aux)
        a, b = state.board
        own, opp = (a, b) if p == FIRST else (b, a)
        bit = 1 << move
        flipped = self.flips(own, opp, bit)
        z = self._z
        key = state.key ^ z[move][p] ^ self._side
        f = flipped
        while f:
            low = f & -f
            cell = z[low.bit_length() - 1]
            key ^= cell[0] ^ cell[1]
            f ^= low
        own |= bit | flipped
        opp &= ~flipped
        memo = self._mask_memo
        masks = memo.get((opp, own))
        if masks is None:
            if len(memo) >= 1 << 18:
                memo.clear()
            masks = memo[(opp, own)] = (self.move_mask(opp, own), self.move_mask(own, opp))
        next_mask, other_mask = masks
        outcome = None
        if not next_mask and not other_mask:
            outcome = self._count(own, opp, p)
        board = (own, opp) if p == FIRST else (opp, own)
        return type(state)(board, 1 - p, state.move_count + 1, key, outcome,
                           (next_mask, other_mask))

    @staticmethod
    def _count(own, opp, p):
        diff = own.bit_count() - opp.bit_count()
        if diff == 0:
            return Outcome.DRAW
        mover_wins = diff > 0
        return Outcome.FIRST_WINS if mover_wins == (p == FIRST) else Outcome.SECOND_WINS

    def compute_outcome(self, board, player):
        a, b = board
        if self.move_mask(a, b) or self.move_mask(b, a):
            return None
        return self._count(a, b, FIRST)

    def features(self, state):
        a, b = state.board
        mover, other = state.aux
        mob = mover.bit_count() - other.bit_count()
        if state.player != FIRST:
            mob = -mob
        corners, edges, xs = self.corners, self.edges, self.x_squares
        return (
            (a.bit_count() - b.bit_count()) / self.n,
            mob / 10,
            ((a & corners).bit_count() - (b & corners).bit_count()) / 4,
            ((a & edges).bit_count() - (b & edges).bit_count()) / (4 * (self.width - 2)),
            ((a & xs).bit_count() - (b & xs).bit_count()) / 4,
        )
