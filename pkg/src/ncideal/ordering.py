"""Monomial orderings: block degree-lexicographic orders.

A ``MonomialOrder`` partitions the alphabet into blocks, highest-priority
block first.  Words are compared by total degree in the highest block, then
the next, and so on; ties are broken lexicographically using the declared
variable precedence (ascending: the first variable listed in a block is the
smallest).  Letters in higher blocks always outrank letters in lower blocks
in the lexicographic tie-break.

Every such order is a well-order compatible with two-sided multiplication,
and putting a variable set Y into top blocks yields an elimination ordering
for Y: a leading monomial free of Y forces the whole polynomial free of Y.
"""

from .freealg import AlphabetError, Polynomial

LT, EQ, GT = -1, 0, 1


class OrderError(ValueError):
    pass


class MonomialOrder:
    __slots__ = ("alphabet", "blocks", "_block_of", "_rank", "_nblocks", "_sig")

    def __init__(self, alphabet, blocks):
        """blocks: sequence of sequences of variable indices, highest block
        first; within a block the listed order is ascending precedence."""
        self.alphabet = alphabet
        self.blocks = tuple(tuple(b) for b in blocks)
        n = len(alphabet)
        seen = [False] * n
        for b in self.blocks:
            for v in b:
                if not 0 <= v < n:
                    raise OrderError(f"variable index {v} outside the alphabet")
                if seen[v]:
                    raise OrderError(f"variable {alphabet.name(v)!r} appears in two blocks")
                seen[v] = True
        if not all(seen):
            missing = [alphabet.name(i) for i, s in enumerate(seen) if not s]
            raise OrderError(f"variables not covered by any block: {', '.join(missing)}")
        self._nblocks = len(self.blocks)
        self._block_of = [0] * n
        self._rank = [0] * n
        rank = 0
        for bi in range(self._nblocks - 1, -1, -1):
            for v in self.blocks[bi]:
                self._block_of[v] = bi
                self._rank[v] = rank
                rank += 1
        self._sig = None

    # ---- constructors -------------------------------------------------------

    @classmethod
    def deglex(cls, alphabet, precedence=None):
        """Single-block deglex; default precedence is declaration order
        (first declared = smallest)."""
        if precedence is None:
            precedence = range(len(alphabet))
        return cls(alphabet, [list(precedence)])

    def with_top_block(self, top_vars, alphabet=None):
        """New order with an extra highest block on top of this one's blocks.

        When `alphabet` is given (an extension of the current one), the
        result lives over it; variables of `alphabet` not mentioned anywhere
        must not exist.
        """
        alph = alphabet if alphabet is not None else self.alphabet
        return MonomialOrder(alph, [tuple(top_vars)] + list(self.blocks))

    # ---- comparison ----------------------------------------------------------

    def sort_key(self, w):
        """Tuple key; larger key = larger monomial."""
        if self._nblocks == 1:
            rank = self._rank
            return (len(w),), tuple(rank[i] for i in w)
        degs = [0] * self._nblocks
        bo = self._block_of
        for i in w:
            degs[bo[i]] += 1
        rank = self._rank
        return tuple(degs), tuple(rank[i] for i in w)

    def heap_key(self, w):
        """Negated key for max-extraction via a min-heap."""
        degs, ranks = self.sort_key(w)
        return tuple(-d for d in degs), tuple(-r for r in ranks)

    def compare(self, m1, m2):
        """LT/EQ/GT for words over this order's alphabet."""
        n = len(self.alphabet)
        for w in (m1, m2):
            for i in w:
                if not 0 <= i < n:
                    raise OrderError(f"word contains foreign variable index {i}")
        if m1 == m2:
            return EQ
        return GT if self.sort_key(m1) > self.sort_key(m2) else LT

    def key_leq(self, m1, m2):
        return self.sort_key(m1) <= self.sort_key(m2)

    # ---- structure -------------------------------------------------------------

    def is_elimination_for(self, Y):
        """Structural check: Y is a union of blocks, all strictly above every
        block meeting X\\Y.  Sufficient, not complete; False is conservative."""
        Y = set(Y)
        if not Y:
            return True
        top = True
        for b in self.blocks:
            bset = set(b)
            if top:
                if bset <= Y:
                    Y -= bset
                    if not Y:
                        top = False
                    continue
                if bset & Y:
                    return False
                # a non-Y block encountered while Y not yet exhausted
                return False
            if bset & Y:
                return False
        return not Y

    def decompose(self, f):
        """(lm, lc, tail) of a nonzero polynomial under this order."""
        if f.is_zero:
            raise ValueError("cannot decompose the zero polynomial")
        g = f if f.order is self else f.with_order(self)
        return g.lm, g.lc, g.tail()

    def signature(self):
        if self._sig is None:
            self._sig = (self.alphabet.signature(), self.blocks)
        return self._sig

    def describe(self):
        """Echoable text form, e.g. '[t] > [x, y]'."""
        names = self.alphabet.name
        return " > ".join("[" + ", ".join(names(v) for v in b) + "]" for b in self.blocks)

    def __repr__(self):
        return f"MonomialOrder({self.describe()})"
