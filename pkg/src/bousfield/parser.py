"""Recursive-descent parser for class expressions.

Grammar (whitespace is ignored, '^' binds tighter than 'v')::

    expr   := term ('v' term)*
    term   := factor ('^' factor)*
    factor := '0' | 'S' | 'I' | 'HFp' | 'BP' | 'Q'
            | ('F' | 'T' | 'K' | 'E') '(' nat ')'
            | '(' expr ')'

The unicode connectives '∨' and '∧' are accepted as aliases.
"""

from __future__ import annotations

from .exprs import BP, HFP, I, Q, SPHERE, ZERO, ClassExpr, Gen, Kind, Smash, Wedge

MAX_INDEX = 2**16

_ATOMS = {"HFp": HFP, "BP": BP, "0": ZERO, "S": SPHERE, "I": I, "Q": Q}
_INDEXED = {"F": Kind.F, "T": Kind.T, "K": Kind.K, "E": Kind.E}
_WEDGE = ("v", "∨")
_SMASH = ("^", "∧")


class ParseError(ValueError):
    def __init__(self, message: str, offset: int, text: str = ""):
        self.offset = offset
        self.text = text
        super().__init__(f"{message} at offset {offset}")

    def caret(self) -> str:
        """The input with a marker under the failing position."""
        return f"{self.text}\n{' ' * self.offset}^"


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def error(self, msg: str):
        raise ParseError(msg, self.pos, self.text)

    def skip(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def expect(self, ch: str):
        if self.peek() != ch:
            self.error(f"expected {ch!r}")
        self.pos += 1

    def parse(self) -> ClassExpr:
        e = self.expr()
        if self.peek():
            self.error(f"unexpected {self.peek()!r}")
        return e

    def expr(self) -> ClassExpr:
        e = self.term()
        while self.peek() in _WEDGE:
            self.pos += 1
            e = Wedge(e, self.term())
        return e

    def term(self) -> ClassExpr:
        e = self.factor()
        while self.peek() in _SMASH:
            self.pos += 1
            e = Smash(e, self.factor())
        return e

    def factor(self) -> ClassExpr:
        ch = self.peek()
        if not ch:
            self.error("unexpected end of input")
        if ch == "(":
            self.pos += 1
            e = self.expr()
            self.expect(")")
            return e
        for name, gen in _ATOMS.items():
            if self.text.startswith(name, self.pos):
                self.pos += len(name)
                return gen
        if ch in _INDEXED:
            self.pos += 1
            self.expect("(")
            n = self.nat()
            self.expect(")")
            return Gen(_INDEXED[ch], n)
        self.error(f"unexpected {ch!r}")

    def nat(self) -> int:
        self.skip()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if start == self.pos:
            self.error("expected a natural number")
        n = int(self.text[start:self.pos])
        if n > MAX_INDEX:
            self.pos = start
            self.error(f"index {n} exceeds the limit {MAX_INDEX}")
        return n


def parse_expr(text: str) -> ClassExpr:
    """Parse surface syntax such as ``"K(0) v K(1) ^ F(2)"`` into an expression tree."""
    return _Parser(text).parse()
