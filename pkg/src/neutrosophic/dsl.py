"""Parser and printer for the batch program language.

A program is a sequence of ``;``-terminated statements::

    A = (T=[0.3,0.4] U [0.45,0.5], I={0.1}, F={0.6} U [0.66,0.7]);
    B = (T={1}, I={0}, F={0});
    eval !A \\/ B;
    classify A -> B;
    table A (+) B;

Connectives, tightest first: ``!``; ``/\\``; ``\\/``, ``(+)``, ``|`` (NAND)
and ``nor`` at one level; ``->`` (right associative); ``<->``.  ``#`` starts
a comment that runs to the end of the line.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import DuplicateAssignment, NeutrosophicError, ParseError, UnboundAtom
from .lexer import TokenStream
from .logic import Atom, Bin, Expr, NLValue, Not, Op
from .nsset import read_set

__all__ = [
    "Assign",
    "Eval",
    "Classify",
    "Table",
    "Program",
    "parse_program",
    "parse_expr",
    "parse_value",
    "format_expr",
    "format_statement",
    "format_program",
]


@dataclass(frozen=True)
class Assign:
    name: str
    value: NLValue
    line: int = field(default=0, compare=False)
    column: int = field(default=0, compare=False)


@dataclass(frozen=True)
class Eval:
    expr: Expr
    line: int = field(default=0, compare=False)
    column: int = field(default=0, compare=False)


@dataclass(frozen=True)
class Classify:
    expr: Expr
    line: int = field(default=0, compare=False)
    column: int = field(default=0, compare=False)


@dataclass(frozen=True)
class Table:
    expr: Expr
    line: int = field(default=0, compare=False)
    column: int = field(default=0, compare=False)


@dataclass(frozen=True)
class Program:
    statements: tuple = ()


_QUERY_KINDS = {"EVAL": Eval, "CLASSIFY": Classify, "TABLE": Table}
_KEYWORD = {Eval: "eval", Classify: "classify", Table: "table"}

_LOOSE_OPS = {"OR": Op.OR, "XOR": Op.XOR, "NAND": Op.NAND, "NOR": Op.NOR}
_SPELLING = {
    Op.AND: "/\\",
    Op.OR: "\\/",
    Op.XOR: "(+)",
    Op.NAND: "|",
    Op.NOR: "nor",
    Op.IMP: "->",
    Op.IFF: "<->",
}
_PRECEDENCE = {Op.IFF: 1, Op.IMP: 2, Op.OR: 3, Op.XOR: 3, Op.NAND: 3, Op.NOR: 3, Op.AND: 4}
_NOT_PRECEDENCE = 5
_ATOM_PRECEDENCE = 6


class _Parser:
    def __init__(self, text: str):
        self.stream = TokenStream(text)
        self.atom_refs: list = []

    # expressions, loosest first

    def expr(self) -> Expr:
        left = self.implication()
        while self.stream.accept("IFF"):
            left = Bin(Op.IFF, left, self.implication())
        return left

    def implication(self) -> Expr:
        left = self.disjunction()
        if self.stream.accept("IMP"):
            return Bin(Op.IMP, left, self.implication())
        return left

    def disjunction(self) -> Expr:
        left = self.conjunction()
        while self.stream.at(*_LOOSE_OPS):
            op = _LOOSE_OPS[self.stream.next().kind]
            left = Bin(op, left, self.conjunction())
        return left

    def conjunction(self) -> Expr:
        left = self.unary()
        while self.stream.accept("AND"):
            left = Bin(Op.AND, left, self.unary())
        return left

    def unary(self) -> Expr:
        s = self.stream
        if s.accept("NOT"):
            return Not(self.unary())
        if s.accept("("):
            inner = self.expr()
            s.expect(")")
            return inner
        if s.at("IDENT"):
            tok = s.next()
            self.atom_refs.append(tok)
            return Atom(tok.text)
        raise s.error(f"unexpected {_show(s.peek())}", ["identifier", "'!'", "'('"])

    # values

    def triple(self) -> NLValue:
        s = self.stream
        start = s.expect("(")
        parts = []
        for i, name in enumerate("TIF"):
            if i:
                s.expect(",")
            s.expect("IDENT", text=name)
            s.expect("=")
            parts.append(read_set(s))
        s.expect(")")
        try:
            return NLValue(*parts)
        except NeutrosophicError as exc:
            raise ParseError(str(exc), start.line, start.column) from None

    # statements

    def program(self) -> Program:
        s = self.stream
        statements = []
        assigned: set[str] = set()
        while not s.at("EOF"):
            tok = s.peek()
            if tok.kind in _QUERY_KINDS:
                s.next()
                self.atom_refs = []
                expr = self.expr()
                s.expect(";")
                kind = _QUERY_KINDS[tok.kind]
                if kind is not Table:
                    for ref in self.atom_refs:
                        if ref.text not in assigned:
                            raise UnboundAtom(ref.text, ref.line, ref.column)
                statements.append(kind(expr, tok.line, tok.column))
            elif tok.kind == "IDENT":
                s.next()
                s.expect("=")
                value = self.triple()
                s.expect(";")
                if tok.text in assigned:
                    raise DuplicateAssignment(tok.text, tok.line, tok.column)
                assigned.add(tok.text)
                statements.append(Assign(tok.text, value, tok.line, tok.column))
            else:
                raise s.error(f"unexpected {_show(tok)}", ["identifier", "'eval'", "'classify'", "'table'"])
        return Program(tuple(statements))


def _show(tok) -> str:
    return "end of input" if tok.kind == "EOF" else repr(tok.text)


def parse_program(text: str) -> Program:
    """Parse and validate a program.

    Raises ParseError (with line/column and expected tokens),
    DuplicateAssignment, or UnboundAtom for an eval/classify query that
    mentions a name not assigned earlier.  ``table`` queries substitute
    Boolean corners for their atoms, so they need no assignments.
    """
    return _Parser(text).program()


def parse_expr(text: str) -> Expr:
    p = _Parser(text)
    e = p.expr()
    p.stream.expect("EOF")
    return e


def parse_value(text: str) -> NLValue:
    """Parse a ``(T=..., I=..., F=...)`` literal."""
    p = _Parser(text)
    v = p.triple()
    p.stream.expect("EOF")
    return v


def _precedence(e: Expr) -> int:
    if isinstance(e, Atom):
        return _ATOM_PRECEDENCE
    if isinstance(e, Not):
        return _NOT_PRECEDENCE
    return _PRECEDENCE[e.op]


def _wrap(e: Expr, minimum: int) -> str:
    text = format_expr(e)
    return text if _precedence(e) >= minimum else f"({text})"


def format_expr(e: Expr) -> str:
    """Render with the fewest parentheses that parse back to the same tree."""
    if isinstance(e, Atom):
        return e.name
    if isinstance(e, Not):
        return "!" + _wrap(e.operand, _NOT_PRECEDENCE)
    p = _PRECEDENCE[e.op]
    if e.op is Op.IMP:
        left, right = _wrap(e.left, p + 1), _wrap(e.right, p)
    else:
        left, right = _wrap(e.left, p), _wrap(e.right, p + 1)
    return f"{left} {_SPELLING[e.op]} {right}"


def format_statement(stmt) -> str:
    if isinstance(stmt, Assign):
        return f"{stmt.name} = {stmt.value};"
    return f"{_KEYWORD[type(stmt)]} {format_expr(stmt.expr)};"


def format_program(program: Program) -> str:
    return "".join(format_statement(s) + "\n" for s in program.statements)
