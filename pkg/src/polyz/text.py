"""Text form of polynomials: integer literals, variables X1..XN, operators
+ - * ^ and parentheses, whitespace insensitive. The formatter lives on
Polynomial.to_str (descending graded-lex terms); parse and format round-trip.
"""

from .errors import ParseError
from .poly import Polynomial

_SYMBOLS = "+-*^()"


def _tokenize(text):
    toks = []
    i = 0
    L = len(text)
    while i < L:
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        if ch in _SYMBOLS:
            toks.append((ch, ch, i))
            i += 1
            continue
        if ch.isdigit():
            j = i
            while j < L and text[j].isdigit():
                j += 1
            toks.append(("int", int(text[i:j]), i))
            i = j
            continue
        if ch == "X":
            j = i + 1
            while j < L and text[j].isdigit():
                j += 1
            if j == i + 1:
                raise ParseError("expected variable index after 'X'", position=i)
            toks.append(("var", int(text[i + 1 : j]), i))
            i = j
            continue
        raise ParseError(f"unexpected character {ch!r}", position=i)
    toks.append(("end", None, L))
    return toks


class _Parser:
    def __init__(self, text, n, dom):
        self.toks = _tokenize(text)
        self.pos = 0
        self.n = n
        self.dom = dom

    def peek(self):
        return self.toks[self.pos]

    def take(self, kind=None):
        tok = self.toks[self.pos]
        if kind is not None and tok[0] != kind:
            raise ParseError(f"expected {kind}, found {tok[0]}", position=tok[2])
        self.pos += 1
        return tok

    def parse(self):
        out = self.expr()
        tok = self.peek()
        if tok[0] != "end":
            raise ParseError(f"expected operator or end of input, found {tok[0]}", position=tok[2])
        return out

    def expr(self):
        kind = self.peek()[0]
        if kind in "+-":
            self.take()
            out = self.term()
            if kind == "-":
                out = -out
        else:
            out = self.term()
        while self.peek()[0] in "+-":
            op = self.take()[0]
            rhs = self.term()
            out = out + rhs if op == "+" else out - rhs
        return out

    def term(self):
        out = self.power()
        while self.peek()[0] == "*":
            self.take()
            out = out * self.power()
        return out

    def power(self):
        base = self.atom()
        if self.peek()[0] == "^":
            self.take()
            tok = self.take("int")
            base = base ** tok[1]
        return base

    def atom(self):
        tok = self.peek()
        kind = tok[0]
        if kind == "int":
            self.take()
            return Polynomial.const(self.dom, self.n, tok[1])
        if kind == "var":
            self.take()
            idx = tok[1]
            if not 1 <= idx <= self.n:
                raise ParseError(
                    f"unknown variable X{idx} (expected X1..X{self.n})", position=tok[2]
                )
            return Polynomial.var(self.dom, self.n, idx - 1)
        if kind == "(":
            self.take()
            out = self.expr()
            close = self.peek()
            if close[0] != ")":
                raise ParseError(f"expected ')', found {close[0]}", position=close[2])
            self.take()
            return out
        if kind == "-":
            self.take()
            return -self.power()
        raise ParseError(f"expected integer, variable or '(', found {kind}", position=tok[2])


def parse_polynomial(text, n, dom=None):
    """Parse the grammar above into a Polynomial in n variables.

    Coefficients default to integers; pass dom to land in another domain.
    """
    from .domains import ZZ

    return _Parser(text, n, dom if dom is not None else ZZ).parse()


def format_polynomial(f):
    return f.to_str()
