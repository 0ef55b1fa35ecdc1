"""Recursive-descent parser for algebra expressions.

Grammar::

    expr    := term (('+' | '-') term)*
    term    := unary (('*' | '/') unary)*
    unary   := ('-' | '+') unary | power
    power   := atom ('^' exponent)?
    exponent:= INT | '-' INT | '(' ['-'] INT ['/' INT] ')'
    atom    := NUMBER | 'q' | 'eps' | letter | ('qbr' | 'br') '(' expr ',' expr ')' | '(' expr ')'
    letter  := 'I' '[' INT ',' INT ']' | 'T' '[' INT ']' | 'J' '[' INT ']'

Fractional exponents are allowed on ``q`` only and must have denominator 1 or 2.
"""

import re
from fractions import Fraction

from ..algebra import EPS_SO, Eps, So, Trans, commutator, q_commutator
from ..coeffs import invert
from ..coeffs.laurent import LaurentScalar
from ..errors import ParseError, UnknownLetter

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_]+)|(.))")
_NAMES = {"I", "T", "J", "q", "eps", "qbr", "br"}


def _tokenize(text):
    toks = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m.group(0).strip() == "":
            break
        start = m.start(m.lastindex)
        num, name, sym = m.groups()
        if num is not None:
            toks.append(("int", int(num), start))
        elif name is not None:
            if name not in _NAMES:
                raise ParseError(f"unknown name {name!r}", start)
            toks.append(("name", name, start))
        else:
            if sym not in "+-*/^()[],":
                raise ParseError(f"unexpected character {sym!r}", start)
            toks.append(("sym", sym, start))
        pos = m.end()
    toks.append(("end", None, len(text)))
    return toks


def letter_id(kind, indices, pres, position=0):
    """GeneratorId for ``kind[indices]`` checked against ``pres``."""
    if kind == "I" and len(indices) == 2:
        g = So(*indices)
        k, l = indices
        ok = pres.family != EPS_SO and pres.m >= k > l >= 1
    elif kind == "T" and len(indices) == 1:
        g = Trans(indices[0])
        ok = g in pres.index
    elif kind == "J" and len(indices) == 1:
        g = Eps(indices[0])
        ok = g in pres.index
    else:
        raise ParseError(f"wrong number of indices for {kind}", position)
    if not ok:
        raise UnknownLetter(str(g) if kind != "I" else f"I[{indices[0]},{indices[1]}]")
    return g


def parse_letter(text, pres):
    m = re.fullmatch(r"\s*([ITJ])\[\s*(\d+)\s*(?:,\s*(\d+)\s*)?\]\s*", text)
    if not m:
        raise ParseError(f"not a letter: {text!r}", 0)
    idx = tuple(int(x) for x in m.groups()[1:] if x is not None)
    return letter_id(m.group(1), idx, pres)


class _Parser:
    def __init__(self, text, pres):
        self.pres = pres
        self.toks = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.toks[self.i]

    def take(self):
        t = self.toks[self.i]
        self.i += 1
        return t

    def expect(self, sym):
        t = self.take()
        if t[0] != "sym" or t[1] != sym:
            raise ParseError(f"expected {sym!r}", t[2])
        return t

    def at(self, sym):
        t = self.peek()
        return t[0] == "sym" and t[1] == sym

    def parse(self):
        v = self.expr()
        t = self.peek()
        if t[0] != "end":
            raise ParseError("unexpected trailing input", t[2])
        return v

    def expr(self):
        v = self.term()
        while self.at("+") or self.at("-"):
            op = self.take()[1]
            w = self.term()
            v = v + w if op == "+" else v - w
        return v

    def term(self):
        v = self.unary()
        while self.at("*") or self.at("/"):
            _, op, pos = self.take()
            w = self.unary()
            if op == "*":
                v = v * w
            else:
                if not w.is_scalar() or not w:
                    raise ParseError("division by zero or by a non-scalar", pos)
                v = v * self.pres.scalar(invert(w.scalar_value()))
        return v

    def unary(self):
        if self.at("-"):
            self.take()
            return -self.unary()
        if self.at("+"):
            self.take()
            return self.unary()
        return self.power()

    def exponent(self):
        t = self.take()
        if t[0] == "int":
            return Fraction(t[1])
        if t[0] == "sym" and t[1] == "-":
            u = self.take()
            if u[0] != "int":
                raise ParseError("expected integer exponent", u[2])
            return Fraction(-u[1])
        if t[0] == "sym" and t[1] == "(":
            sign = 1
            if self.at("-"):
                self.take()
                sign = -1
            u = self.take()
            if u[0] != "int":
                raise ParseError("expected integer in exponent", u[2])
            val = Fraction(u[1])
            if self.at("/"):
                self.take()
                d = self.take()
                if d[0] != "int" or d[1] == 0:
                    raise ParseError("expected nonzero denominator", d[2])
                val /= d[1]
            self.expect(")")
            return sign * val
        raise ParseError("expected exponent", t[2])

    def power(self):
        start = self.peek()
        is_q = start[0] == "name" and start[1] == "q"
        base = self.atom()
        if not self.at("^"):
            return base
        pos = self.take()[2]
        e = self.exponent()
        if is_q:
            if (2 * e).denominator != 1:
                raise ParseError("q exponents must be multiples of 1/2", pos)
            return self.pres.scalar(LaurentScalar.monomial(int(2 * e)))
        if e.denominator != 1:
            raise ParseError("fractional exponents are allowed on q only", pos)
        e = int(e)
        if e >= 0:
            return base ** e
        if not base.is_scalar() or not base:
            raise ParseError("negative exponent of a non-scalar", pos)
        return self.pres.scalar(invert(base.scalar_value()) ** (-e))

    def atom(self):
        t = self.take()
        kind, val, pos = t
        if kind == "int":
            return self.pres.scalar(val)
        if kind == "sym" and val == "(":
            v = self.expr()
            self.expect(")")
            return v
        if kind == "name":
            if val == "q":
                return self.pres.scalar(LaurentScalar.monomial(2))
            if val == "eps":
                if not self.pres.domain.with_epsilon:
                    raise ParseError("eps is not available in this algebra", pos)
                return self.pres.scalar(LaurentScalar.monomial(0, 1))
            if val in ("qbr", "br"):
                self.expect("(")
                a = self.expr()
                self.expect(",")
                b = self.expr()
                self.expect(")")
                return q_commutator(a, b) if val == "qbr" else commutator(a, b)
            self.expect("[")
            idx = []
            while True:
                u = self.take()
                if u[0] != "int":
                    raise ParseError("expected index", u[2])
                idx.append(u[1])
                if self.at(","):
                    self.take()
                    continue
                self.expect("]")
                break
            return self.pres.letter(letter_id(val, tuple(idx), self.pres, pos))
        raise ParseError("unexpected token", pos)


def parse_expression(text, pres):
    """Parse ``text`` into a normalized element of ``pres``.

    Raises ParseError (a SyntaxError carrying ``position``) or UnknownLetter.
    """
    return _Parser(text, pres).parse()
