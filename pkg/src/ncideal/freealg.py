"""Words, terms and polynomials of the free algebra K<X> over the rationals.

Monomials are words over an interned alphabet and are represented as plain
tuples of variable indices; the empty tuple is the unit monomial 1.  A
``Polynomial`` stores its terms strictly descending under an ambient
``MonomialOrder`` (see ordering.py), so the leading term is ``terms[0]``.
All values are immutable after construction.

The alphabet carries the adjoint involution: every symbol may have a partner
(its adjoint); symbols without a meaningful adjoint (tag variables) are
self-paired.
"""

from .rational import QQ, ZERO, rat

Word = tuple  # tuple[int, ...], indices into an Alphabet


class AlphabetError(ValueError):
    pass


class VarSymbol:
    """One alphabet entry: printable name, adjoint flag, partner index."""

    __slots__ = ("name", "is_adjoint", "partner")

    def __init__(self, name, is_adjoint, partner):
        self.name = name
        self.is_adjoint = is_adjoint
        self.partner = partner

    def __repr__(self):
        return f"VarSymbol({self.name!r}, is_adjoint={self.is_adjoint}, partner={self.partner})"


class Alphabet:
    """Interned, append-only table of variable symbols.

    Polynomials refer to alphabets by identity-compatible signature; mixing
    distinct alphabets in one operation is a hard error, never a silent
    coercion.  ``extended`` returns a fresh alphabet sharing this one as a
    prefix, so word tuples stay valid under ``Polynomial.lift``.
    """

    def __init__(self):
        self.symbols = []
        self._by_name = {}
        self._sig = None

    # ---- construction -----------------------------------------------------

    def add_var(self, name, self_paired=True):
        """Add a symbol without an adjoint partner.

        Tag variables are self-paired (adjoint acts as identity on the
        letter); with self_paired=False taking adjoints of words containing
        the symbol is an error.
        """
        i = self._add(name, is_adjoint=False, partner=None)
        if self_paired:
            self.symbols[i].partner = i
        return i

    def add_pair(self, name, adjoint_name=None):
        """Add a symbol and its adjoint partner; returns (index, adjoint index)."""
        if adjoint_name is None:
            adjoint_name = name + "*"
        i = self._add(name, is_adjoint=False, partner=None)
        j = self._add(adjoint_name, is_adjoint=True, partner=i)
        self.symbols[i].partner = j
        return i, j

    def _add(self, name, is_adjoint, partner):
        if not name:
            raise AlphabetError("empty variable name")
        if name in self._by_name:
            raise AlphabetError(f"variable {name!r} already declared")
        self.symbols.append(VarSymbol(name, is_adjoint, partner))
        self._by_name[name] = len(self.symbols) - 1
        self._sig = None
        return len(self.symbols) - 1

    def extended(self):
        """A fresh alphabet with the same symbols, safe to append to."""
        out = Alphabet()
        for s in self.symbols:
            out.symbols.append(VarSymbol(s.name, s.is_adjoint, s.partner))
        out._by_name = dict(self._by_name)
        return out

    # ---- queries ----------------------------------------------------------

    def __len__(self):
        return len(self.symbols)

    def __contains__(self, name):
        return name in self._by_name

    def index(self, name):
        try:
            return self._by_name[name]
        except KeyError:
            raise AlphabetError(f"unknown variable {name!r}") from None

    def name(self, i):
        return self.symbols[i].name

    def names(self):
        return [s.name for s in self.symbols]

    def partner(self, i):
        p = self.symbols[i].partner
        if p is None:
            raise AlphabetError(f"variable {self.symbols[i].name!r} has no declared adjoint")
        return p

    def signature(self):
        if self._sig is None:
            self._sig = tuple((s.name, s.is_adjoint, s.partner) for s in self.symbols)
        return self._sig

    def compatible(self, other):
        return self is other or self.signature() == other.signature()

    def is_prefix_of(self, other):
        sig, osig = self.signature(), other.signature()
        return osig[: len(sig)] == sig

    def fresh_name(self, base):
        """base, or base_, base__, ... until unused."""
        name = base
        while name in self._by_name:
            name += "_"
        return name

    def __repr__(self):
        return f"Alphabet({', '.join(self.names())})"


# ---- monomial (word) helpers ----------------------------------------------

def mono_concat(a, b):
    """Concatenation a·b in the free monoid; len adds."""
    return a + b


def find_divisions(m, mp):
    """All (a, b) with mp = a·m·b, ordered by |a| ascending; [] if m ∤ mp."""
    lm, lmp = len(m), len(mp)
    out = []
    for i in range(lmp - lm + 1):
        if mp[i : i + lm] == m:
            out.append((mp[:i], mp[i + lm :]))
    return out


def is_right_multiple(mp, m):
    """b with mp = m·b if m is a prefix of mp, else None."""
    if mp[: len(m)] == m:
        return mp[len(m) :]
    return None


# ---- polynomials ----------------------------------------------------------

class Polynomial:
    """Normalized rational combination of words, sorted by the ambient order.

    The zero polynomial has an empty term list and is a legitimate value,
    distinct from an error.  Normalization (combining duplicate words,
    dropping zero coefficients, sorting descending) happens at construction
    and is idempotent.
    """

    __slots__ = ("alphabet", "order", "terms")

    def __init__(self, alphabet, order, terms, _presorted=False):
        """terms: iterable of (word, coeff) or a dict word -> coeff."""
        self.alphabet = alphabet
        self.order = order
        if _presorted:
            self.terms = tuple(terms)
            return
        acc = {}
        items = terms.items() if isinstance(terms, dict) else terms
        for w, c in items:
            v = acc.get(w)
            acc[w] = c if v is None else v + c
        key = order.sort_key
        self.terms = tuple(
            (w, QQ(c)) for w, c in sorted(acc.items(), key=lambda t: key(t[0]), reverse=True) if c != 0
        )

    # ---- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, alphabet, order):
        return cls(alphabet, order, (), _presorted=True)

    @classmethod
    def constant(cls, alphabet, order, c):
        c = QQ(c)
        if c == 0:
            return cls.zero(alphabet, order)
        return cls(alphabet, order, (((), c),), _presorted=True)

    @classmethod
    def one(cls, alphabet, order):
        return cls.constant(alphabet, order, 1)

    @classmethod
    def from_word(cls, alphabet, order, word, coeff=1):
        coeff = QQ(coeff)
        if coeff == 0:
            return cls.zero(alphabet, order)
        return cls(alphabet, order, ((tuple(word), coeff),), _presorted=True)

    @classmethod
    def variable(cls, alphabet, order, name):
        return cls.from_word(alphabet, order, (alphabet.index(name),))

    # ---- basic queries -----------------------------------------------------

    @property
    def is_zero(self):
        return not self.terms

    @property
    def lm(self):
        if not self.terms:
            raise ValueError("zero polynomial has no leading monomial")
        return self.terms[0][0]

    @property
    def lc(self):
        if not self.terms:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.terms[0][1]

    def tail(self):
        """f - lc(f)·lm(f)."""
        return Polynomial(self.alphabet, self.order, self.terms[1:], _presorted=True)

    def support(self):
        return [w for w, _ in self.terms]

    def degree(self):
        """Max word length in the support; -1 for the zero polynomial."""
        return max((len(w) for w, _ in self.terms), default=-1)

    def coeff(self, word):
        for w, c in self.terms:
            if w == word:
                return c
        return ZERO

    def as_dict(self):
        return {w: c for w, c in self.terms}

    @property
    def num_terms(self):
        return len(self.terms)

    def is_monomial(self):
        return len(self.terms) == 1

    # ---- arithmetic ---------------------------------------------------------

    def _check(self, other):
        if not self.alphabet.compatible(other.alphabet):
            raise AlphabetError("operands use different alphabets")
        if self.order is not other.order and self.order.signature() != other.order.signature():
            raise AlphabetError("operands use different monomial orders")

    def _coerce(self, other):
        if isinstance(other, Polynomial):
            return other
        return Polynomial.constant(self.alphabet, self.order, QQ(other))

    def __add__(self, other):
        other = self._coerce(other)
        self._check(other)
        acc = dict(self.terms)
        for w, c in other.terms:
            v = acc.get(w)
            if v is None:
                acc[w] = c
            else:
                v = v + c
                if v:
                    acc[w] = v
                else:
                    del acc[w]
        return Polynomial(self.alphabet, self.order, acc)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial(
            self.alphabet, self.order, tuple((w, -c) for w, c in self.terms), _presorted=True
        )

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c):
        c = QQ(c)
        if c == 0:
            return Polynomial.zero(self.alphabet, self.order)
        return Polynomial(
            self.alphabet, self.order, tuple((w, c * k) for w, k in self.terms), _presorted=True
        )

    def __mul__(self, other):
        if not isinstance(other, Polynomial):
            return self.scale(QQ(other))
        self._check(other)
        acc = {}
        for wa, ca in self.terms:
            for wb, cb in other.terms:
                w = wa + wb
                c = ca * cb
                v = acc.get(w)
                if v is None:
                    acc[w] = c
                else:
                    v = v + c
                    if v:
                        acc[w] = v
                    else:
                        del acc[w]
        return Polynomial(self.alphabet, self.order, acc)

    def __rmul__(self, other):
        if not isinstance(other, Polynomial):
            return self.scale(QQ(other))
        return NotImplemented

    def lmul_word(self, w):
        """w·f for a monomial w."""
        w = tuple(w)
        return Polynomial(
            self.alphabet, self.order, tuple((w + u, c) for u, c in self.terms), _presorted=True
        )

    def rmul_word(self, w):
        """f·w for a monomial w."""
        w = tuple(w)
        return Polynomial(
            self.alphabet, self.order, tuple((u + w, c) for u, c in self.terms), _presorted=True
        )

    def sandwich(self, a, b):
        """a·f·b for monomials a, b."""
        a, b = tuple(a), tuple(b)
        return Polynomial(
            self.alphabet, self.order, tuple((a + u + b, c) for u, c in self.terms), _presorted=True
        )

    def monic(self):
        if self.is_zero:
            return self
        lc = self.lc
        if lc == 1:
            return self
        inv = 1 / lc
        return Polynomial(
            self.alphabet, self.order, tuple((w, c * inv) for w, c in self.terms), _presorted=True
        )

    # ---- structure maps ------------------------------------------------------

    def adjoint(self):
        """Involutive antiautomorphism: reverse each word, swap partner letters."""
        alph = self.alphabet
        part = [s.partner for s in alph.symbols]
        acc = []
        for w, c in self.terms:
            try:
                nw = tuple(part[i] for i in reversed(w))
            except TypeError:
                bad = next(alph.name(i) for i in w if part[i] is None)
                raise AlphabetError(f"variable {bad!r} has no declared adjoint") from None
            acc.append((nw, c))
        return Polynomial(alph, self.order, acc)

    def substitute(self, images):
        """Algebra homomorphism given by images: {var index: Polynomial}.

        Unmapped variables go to themselves.  All image polynomials must live
        over self's alphabet/order (lift beforehand if needed).
        """
        out = Polynomial.zero(self.alphabet, self.order)
        for w, c in self.terms:
            prod = Polynomial.constant(self.alphabet, self.order, c)
            for i in w:
                img = images.get(i)
                if img is None:
                    prod = prod.rmul_word((i,))
                else:
                    prod = prod * img
            out = out + prod
        return out

    def lift(self, new_alphabet, new_order):
        """Reinterpret over an extended alphabet (old one must be a prefix)."""
        if not self.alphabet.is_prefix_of(new_alphabet):
            raise AlphabetError("target alphabet does not extend the source alphabet")
        return Polynomial(new_alphabet, new_order, self.terms)

    def project(self, small_alphabet, small_order):
        """Reinterpret over a prefix alphabet; every word must fit."""
        if not small_alphabet.is_prefix_of(self.alphabet):
            raise AlphabetError("target alphabet is not a prefix of the source alphabet")
        n = len(small_alphabet)
        for w, _ in self.terms:
            if any(i >= n for i in w):
                raise AlphabetError("polynomial uses variables outside the target alphabet")
        return Polynomial(small_alphabet, small_order, self.terms)

    def with_order(self, order):
        return Polynomial(self.alphabet, order, self.terms)

    # ---- dunder misc ---------------------------------------------------------

    def __eq__(self, other):
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.alphabet.compatible(other.alphabet) and dict(self.terms) == dict(other.terms)

    def __hash__(self):
        return hash(frozenset(self.terms))

    def __str__(self):
        from .syntax import format_poly

        return format_poly(self)

    def __repr__(self):
        return f"<Polynomial {self}>"


def variables_used(f):
    """Set of variable indices appearing in f."""
    out = set()
    for w, _ in f.terms:
        out.update(w)
    return out
