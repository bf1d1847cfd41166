"""Recursive-descent parser for the ASCII expression grammar.

Grammar:
    expr    := ['-'] term (('+' | '-') term)*
    term    := factor (('*' | '/') factor)*
    factor  := ['-'] power
    power   := atom ['^' exponent]
    atom    := INTEGER | IDENT | IDENT '(' args ')' | '(' expr ')'
    exponent:= INTEGER | '(' ['-'] INTEGER ')'

Identifiers are [A-Za-z_][A-Za-z0-9_]*.  ``D(ei, f)`` denotes the formal
derivative of the function symbol f along frame direction ei in {e1,e2,e3};
D of a constant is the zero expression.  A small whitelist of numeric
functions (cot, tanh, ...) is admitted for the model-catalog layer; each
application becomes an opaque constant atom.  Printing an Expr emits
canonical text that reparses to the identical Expr.
"""

from __future__ import annotations

import re
from fractions import Fraction

from .rational import NUMERIC_FUNCTIONS, Expr
from .symbols import CONSTANT, DERIVATIVE, DIRECTIONS, SymbolTable


class ExprSyntaxError(ValueError):
    def __init__(self, message: str, pos: int):
        self.pos = pos
        super().__init__(f"{message} (at position {pos})")


class UnknownIdentifierError(ExprSyntaxError):
    pass


_TOKEN_RE = re.compile(
    r"\s*(?:(?P<num>\d+)|(?P<ident>[A-Za-z_][A-Za-z0-9_]*)|(?P<op>[-+*/^(),]))"
)


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if m is None:
            if text[pos:].strip() == "":
                break
            raise ExprSyntaxError(f"unexpected character {text[pos]!r}", pos)
        if m.group("num") is not None:
            tokens.append(("num", m.group("num"), m.start("num")))
        elif m.group("ident") is not None:
            tokens.append(("ident", m.group("ident"), m.start("ident")))
        else:
            tokens.append(("op", m.group("op"), m.start("op")))
        pos = m.end()
    tokens.append(("end", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str, table: SymbolTable, define_missing: bool):
        self.text = text
        self.table = table
        self.define_missing = define_missing
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self) -> tuple[str, str, int]:
        return self.tokens[self.i]

    def next(self) -> tuple[str, str, int]:
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def expect_op(self, op: str) -> None:
        kind, val, pos = self.next()
        if kind != "op" or val != op:
            raise ExprSyntaxError(f"expected {op!r}, found {val!r}", pos)

    def parse(self) -> Expr:
        e = self.expr()
        kind, val, pos = self.peek()
        if kind != "end":
            raise ExprSyntaxError(f"trailing input {val!r}", pos)
        return e

    def expr(self) -> Expr:
        kind, val, _ = self.peek()
        negate = False
        if kind == "op" and val in "+-":
            self.next()
            negate = val == "-"
        e = self.term()
        if negate:
            e = -e
        while True:
            kind, val, _ = self.peek()
            if kind == "op" and val in "+-":
                self.next()
                rhs = self.term()
                e = e + rhs if val == "+" else e - rhs
            else:
                return e

    def term(self) -> Expr:
        e = self.factor()
        while True:
            kind, val, pos = self.peek()
            if kind == "op" and val in "*/":
                self.next()
                rhs = self.factor()
                if val == "*":
                    e = e * rhs
                else:
                    if rhs.is_zero:
                        raise ExprSyntaxError("division by zero expression", pos)
                    e = e / rhs
            else:
                return e

    def factor(self) -> Expr:
        kind, val, _ = self.peek()
        if kind == "op" and val == "-":
            self.next()
            return -self.factor()
        return self.power()

    def power(self) -> Expr:
        base = self.atom()
        kind, val, _ = self.peek()
        if kind == "op" and val == "^":
            self.next()
            return base ** self.exponent()
        return base

    def exponent(self) -> int:
        kind, val, pos = self.next()
        if kind == "num":
            return int(val)
        if kind == "op" and val == "(":
            sign = 1
            kind, val, pos = self.next()
            if kind == "op" and val == "-":
                sign = -1
                kind, val, pos = self.next()
            if kind != "num":
                raise ExprSyntaxError("expected integer exponent", pos)
            self.expect_op(")")
            return sign * int(val)
        raise ExprSyntaxError("expected integer exponent", pos)

    def atom(self) -> Expr:
        kind, val, pos = self.next()
        if kind == "num":
            return Expr.const(Fraction(int(val)))
        if kind == "op" and val == "(":
            e = self.expr()
            self.expect_op(")")
            return e
        if kind == "ident":
            nk, nv, _ = self.peek()
            if nk == "op" and nv == "(":
                return self.call(val, pos)
            return self.resolve(val, pos)
        raise ExprSyntaxError(f"unexpected token {val!r}", pos)

    def call(self, name: str, pos: int) -> Expr:
        self.expect_op("(")
        if name == "D":
            dkind, dval, dpos = self.next()
            if dkind != "ident" or dval not in DIRECTIONS:
                raise ExprSyntaxError("D(...) needs a frame direction e1, e2 or e3", dpos)
            self.expect_op(",")
            fkind, fval, fpos = self.next()
            if fkind != "ident":
                raise ExprSyntaxError("D(...) needs a symbol name", fpos)
            sym = self.table.get(fval)
            if sym is None:
                raise UnknownIdentifierError(f"unknown identifier {fval!r}", fpos)
            self.expect_op(")")
            if sym.kind == CONSTANT:
                return Expr.zero()
            if sym.kind == DERIVATIVE:
                raise ExprSyntaxError(
                    f"second-order derivative D({dval},{fval}) is not supported", fpos
                )
            return Expr.from_symbol(self.table.derivative(sym, dval))
        if name in NUMERIC_FUNCTIONS:
            arg = self.expr()
            self.expect_op(")")
            text = f"{name}({arg.to_text()})"
            return Expr.from_symbol(self.table.applied(name, arg, text))
        raise ExprSyntaxError(f"unknown function {name!r}", pos)

    def resolve(self, name: str, pos: int) -> Expr:
        sym = self.table.get(name)
        if sym is None:
            if not self.define_missing:
                raise UnknownIdentifierError(f"unknown identifier {name!r}", pos)
            sym = self.table.constant(name)
        return Expr.from_symbol(sym)


def parse_expr(text: str, table: SymbolTable, *, define_missing: bool = False) -> Expr:
    """Parse `text` against `table` into a canonical Expr.

    With define_missing, unknown identifiers are registered as constants
    (used by the expression CLI, where bindings supply the values).
    """
    return _Parser(text, table, define_missing).parse()
