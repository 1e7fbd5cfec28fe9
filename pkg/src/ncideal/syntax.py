"""Text syntax for noncommutative polynomials, shared by the prover parser.

Grammar sketch::

    poly   :=  [+|-] term { (+|-) term }
    term   :=  coeff | [coeff] factor { [*] factor }
    factor :=  symbol | '(' poly ')' [adjoint marks] | 'adj' '(' poly ')'
    symbol :=  IDENT postfix*          IDENT = [A-Za-z][A-Za-z0-9_]*
    coeff  :=  INT [ '/' INT ]

Postfix marks build symbol names: a trailing ``*`` is the adjoint (applying
it twice cancels), ``^+`` is the Moore-Penrose dagger and is printed ``†``
(also accepted on input).  Multiplication is juxtaposition with whitespace;
an explicit ``*`` acts as multiplication only when it is detached from the
preceding factor (``a* b`` is adjoint(a)·b, ``a * b`` is a·b).
"""

import re

from .freealg import Polynomial
from .rational import QQ, rat_str

_TOKEN_RE = re.compile(
    r"""
    (?P<ws>\s+)
  | (?P<num>\d+)
  | (?P<ident>[A-Za-z][A-Za-z0-9_]*)
  | (?P<dagger>\^\+|†)
  | (?P<star>\*)
  | (?P<plus>\+)
  | (?P<minus>-)
  | (?P<slash>/)
  | (?P<lparen>\()
  | (?P<rparen>\))
    """,
    re.VERBOSE,
)


class ParseError(ValueError):
    def __init__(self, message, pos=None, text=None):
        self.pos = pos
        self.text = text
        loc = f" at column {pos + 1}" if pos is not None else ""
        super().__init__(message + loc)


class _Token:
    __slots__ = ("kind", "value", "pos", "attached")

    def __init__(self, kind, value, pos, attached):
        self.kind = kind
        self.value = value
        self.pos = pos
        self.attached = attached  # no whitespace between this and the previous token

    def __repr__(self):
        return f"{self.kind}({self.value!r})"


def tokenize(text):
    tokens = []
    pos = 0
    attached = False
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if m is None:
            raise ParseError(f"unexpected character {text[pos]!r}", pos, text)
        kind = m.lastgroup
        if kind == "ws":
            attached = False
        else:
            tokens.append(_Token(kind, m.group(), pos, attached))
            attached = True
        pos = m.end()
    tokens.append(_Token("eof", "", len(text), False))
    return tokens


def _apply_star(name):
    return name[:-1] if name.endswith("*") else name + "*"


class _Parser:
    def __init__(self, text, alphabet, order):
        self.text = text
        self.toks = tokenize(text)
        self.i = 0
        self.alphabet = alphabet
        self.order = order

    def peek(self):
        return self.toks[self.i]

    def next(self):
        t = self.toks[self.i]
        self.i += 1
        return t

    def error(self, msg, tok=None):
        tok = tok or self.peek()
        raise ParseError(msg, tok.pos, self.text)

    # ``*`` is adjoint when attached to something adjointable, multiplication
    # otherwise.
    def _star_is_adjoint(self):
        t = self.peek()
        if t.kind != "star" or not t.attached:
            return False
        prev = self.toks[self.i - 1]
        return prev.kind in ("ident", "rparen", "dagger", "star")

    def parse_poly(self, stop_kinds=("eof",)):
        acc = None
        sign = 1
        t = self.peek()
        if t.kind in ("plus", "minus"):
            sign = -1 if t.kind == "minus" else 1
            self.next()
        while True:
            term = self.parse_term()
            term = term.scale(sign)
            acc = term if acc is None else acc + term
            t = self.peek()
            if t.kind in stop_kinds:
                return acc
            if t.kind == "plus":
                sign = 1
            elif t.kind == "minus":
                sign = -1
            else:
                self.error(f"expected '+', '-' or end of expression, found {t.value!r}")
            self.next()

    def parse_coeff(self):
        num = int(self.next().value)
        if self.peek().kind == "slash":
            self.next()
            t = self.next()
            if t.kind != "num":
                self.error("expected integer after '/'", t)
            return QQ(num, int(t.value))
        return QQ(num)

    def _starts_factor(self):
        return self.peek().kind in ("ident", "lparen")

    def parse_term(self):
        coeff = None
        if self.peek().kind == "num":
            coeff = self.parse_coeff()
        factors = []
        while True:
            if self.peek().kind == "star" and not self._star_is_adjoint() and (factors or coeff is not None):
                save = self.i
                self.next()
                if not self._starts_factor():
                    self.i = save
                    break
                continue
            if not self._starts_factor():
                break
            factors.append(self.parse_factor())
        if coeff is None and not factors:
            self.error("expected a term")
        out = Polynomial.constant(self.alphabet, self.order, coeff if coeff is not None else 1)
        for f in factors:
            out = out * f
        return out

    def parse_factor(self):
        t = self.next()
        if t.kind == "ident":
            if t.value == "adj" and self.peek().kind == "lparen" and self.peek().attached:
                self.next()
                inner = self.parse_poly(stop_kinds=("rparen",))
                self.next()  # rparen
                poly = inner.adjoint()
                return self._group_postfix(poly)
            return self.parse_symbol(t)
        if t.kind == "lparen":
            inner = self.parse_poly(stop_kinds=("rparen",))
            self.next()  # rparen
            return self._group_postfix(inner)
        self.error(f"expected a symbol or '(', found {t.value!r}", t)

    def _group_postfix(self, poly):
        while self._star_is_adjoint():
            self.next()
            poly = poly.adjoint()
        if self.peek().kind == "dagger" and self.peek().attached:
            self.error("the dagger applies to a single symbol, not an expression")
        return poly

    def parse_symbol(self, t):
        name = self._symbol_name(t)
        if name not in self.alphabet:
            self.error(f"unknown symbol {name!r}", t)
        return Polynomial.variable(self.alphabet, self.order, name)

    def _symbol_name(self, t):
        name = t.value
        while True:
            nxt = self.peek()
            if nxt.kind == "dagger" and nxt.attached:
                self.next()
                name += "†"
            elif nxt.kind == "star" and nxt.attached and self._star_is_adjoint():
                self.next()
                name = _apply_star(name)
            else:
                return name


def parse_poly(text, alphabet, order):
    """Parse the text form of a polynomial over the given alphabet/order."""
    p = _Parser(text, alphabet, order)
    poly = p.parse_poly()
    return poly


def parse_symbol_name(text):
    """Resolve a standalone symbol reference like 'a^+*' to its canonical name."""
    p = _Parser(text, None, None)
    t = p.next()
    if t.kind != "ident":
        p.error("expected a symbol name", t)
    name = p._symbol_name(t)
    if p.peek().kind != "eof":
        p.error("trailing input after symbol name")
    return name


def parse_word_with_unknowns(text, alphabet):
    """Parse a juxtaposed product of symbols, allowing undeclared names.

    Returns a list whose entries are variable indices (for declared symbols)
    or bare names (for unknowns).  Used by claim parsing, where exactly one
    unknown placeholder is expected.
    """
    p = _Parser(text, alphabet, None)
    out = []
    while p.peek().kind != "eof":
        t = p.next()
        if t.kind == "star" and out:
            continue
        if t.kind != "ident":
            p.error("expected a symbol", t)
        name = p._symbol_name(t)
        out.append(alphabet.index(name) if name in alphabet else name)
    if not out:
        raise ParseError("empty product", 0, text)
    return out


# ---- printing ----------------------------------------------------------------

def format_word(alphabet, w):
    """Space-separated letters; the unit monomial prints as '1'."""
    if not w:
        return "1"
    return " ".join(alphabet.name(i) for i in w)


def format_term(alphabet, w, c, lead=False):
    neg = c < 0
    mag = -c if neg else c
    if not w:
        body = rat_str(mag)
    elif mag == 1:
        body = format_word(alphabet, w)
    else:
        body = f"{rat_str(mag)} {format_word(alphabet, w)}"
    if lead:
        return ("-" if neg else "") + body
    return ("- " if neg else "+ ") + body


def format_poly(f):
    if f.is_zero:
        return "0"
    parts = []
    for k, (w, c) in enumerate(f.terms):
        parts.append(format_term(f.alphabet, w, c, lead=(k == 0)))
    return " ".join(parts)
