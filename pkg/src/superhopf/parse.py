"""Recursive-descent reader for the small expression language of definition files.

Grammar::

    expr  := term (('+' | '-') term)*
    term  := unary ('*' unary)*
    unary := ('+' | '-') unary | power
    power := atom ('^' ['-'] INT)?
    atom  := INT ['/' INT] | NAME | '(' expr ')'

``a/b`` is only accepted between two integer literals.  Evaluation is generic:
the caller supplies how names and numbers become values, so the same reader
serves algebra elements, Lie brackets and plain scalars.
"""
from __future__ import annotations

import re
from fractions import Fraction
from typing import Callable

_TOKEN = re.compile(r"\s*(?:(?P<num>\d+)|(?P<name>[A-Za-z_][A-Za-z0-9_@.']*)|(?P<op>[-+*^/()]))")


class ParseError(ValueError):
    def __init__(self, message: str, position: int, text: str = ""):
        super().__init__(f"{message} at position {position}")
        self.position = position
        self.text = text


def tokenize(text: str) -> list:
    toks, pos = [], 0
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            raise ParseError(f"unexpected character {text[pos]!r}", pos, text)
        kind = m.lastgroup
        start = m.start(kind)
        toks.append((kind, m.group(kind), start))
        pos = m.end()
    toks.append(("end", "", len(text)))
    return toks


class _Reader:
    def __init__(self, text, name_value, number_value):
        self.text = text
        self.toks = tokenize(text)
        self.i = 0
        self.name_value = name_value
        self.number_value = number_value

    def peek(self):
        return self.toks[self.i]

    def take(self):
        t = self.toks[self.i]
        self.i += 1
        return t

    def expect(self, op):
        t = self.take()
        if t[1] != op:
            raise ParseError(f"expected {op!r}", t[2], self.text)

    def expr(self):
        v = self.term()
        while self.peek()[1] in ("+", "-") and self.peek()[0] == "op":
            op = self.take()[1]
            w = self.term()
            v = v + w if op == "+" else v - w
        return v

    def term(self):
        v = self.unary()
        while self.peek()[1] == "*" and self.peek()[0] == "op":
            self.take()
            v = v * self.unary()
        return v

    def unary(self):
        t = self.peek()
        if t[0] == "op" and t[1] in ("+", "-"):
            self.take()
            v = self.unary()
            return -v if t[1] == "-" else v
        return self.power()

    def power(self):
        v = self.atom()
        if self.peek()[1] == "^" and self.peek()[0] == "op":
            self.take()
            sign = 1
            if self.peek()[1] == "-":
                self.take()
                sign = -1
            t = self.take()
            if t[0] != "num":
                raise ParseError("exponent must be an integer", t[2], self.text)
            try:
                v = v ** (sign * int(t[1]))
            except ParseError:
                raise
            except Exception as exc:  # e.g. non-invertible base
                raise ParseError(str(exc), t[2], self.text) from None
        return v

    def atom(self):
        t = self.take()
        if t[0] == "num":
            value = Fraction(int(t[1]))
            if self.peek()[1] == "/" and self.peek()[0] == "op":
                self.take()
                d = self.take()
                if d[0] != "num":
                    raise ParseError("denominator must be an integer literal", d[2], self.text)
                if int(d[1]) == 0:
                    raise ParseError("zero denominator", d[2], self.text)
                value = Fraction(int(t[1]), int(d[1]))
            return self.number_value(value)
        if t[0] == "name":
            try:
                return self.name_value(t[1])
            except KeyError:
                raise ParseError(f"unknown name {t[1]!r}", t[2], self.text) from None
        if t[1] == "(":
            v = self.expr()
            self.expect(")")
            return v
        if t[0] == "end":
            raise ParseError("unexpected end of input", t[2], self.text)
        raise ParseError(f"unexpected token {t[1]!r}", t[2], self.text)


def evaluate(text: str, name_value: Callable, number_value: Callable):
    """Parse ``text`` and evaluate it with the given leaf interpretations."""
    r = _Reader(text, name_value, number_value)
    v = r.expr()
    t = r.peek()
    if t[0] != "end":
        raise ParseError(f"unexpected token {t[1]!r}", t[2], text)
    return v
