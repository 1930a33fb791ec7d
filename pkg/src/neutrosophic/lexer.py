"""Tokenizer shared by the set-literal parser and the program DSL."""

from __future__ import annotations

import re
from dataclasses import dataclass

from .errors import ParseError

# longest spellings first so '(+)' wins over '(' and '<->' over '<'
_TOKEN_PATTERNS = [
    ("WS", r"[ \t\r]+"),
    ("NEWLINE", r"\n"),
    ("COMMENT", r"#[^\n]*"),
    ("BOUND", r"-?\d+(?:\.\d+)?(?:/\d+)?(?:-\+|-|\+)?"),
    ("IFF", r"<->"),
    ("IMP", r"->"),
    ("XOR", r"\(\+\)"),
    ("AND", r"/\\"),
    ("OR", r"\\/"),
    ("NAND", r"\|"),
    ("NOT", r"!"),
    ("IDENT", r"[A-Za-z_][A-Za-z0-9_]*"),
    ("PUNCT", r"[(){}\[\],;=]"),
]
_MASTER = re.compile("|".join(f"(?P<{name}>{rx})" for name, rx in _TOKEN_PATTERNS))

# keywords lexed as IDENT and re-tagged
KEYWORDS = {"eval": "EVAL", "classify": "CLASSIFY", "table": "TABLE", "nor": "NOR"}


@dataclass(frozen=True)
class Token:
    kind: str
    text: str
    line: int
    column: int


def tokenize(text: str) -> list[Token]:
    tokens = []
    line, line_start, pos = 1, 0, 0
    while pos < len(text):
        m = _MASTER.match(text, pos)
        if m is None:
            raise ParseError(f"unexpected character {text[pos]!r}", line, pos - line_start + 1)
        kind, value = m.lastgroup, m.group()
        column = pos - line_start + 1
        if kind == "NEWLINE":
            line += 1
            line_start = m.end()
        elif kind == "PUNCT":
            tokens.append(Token(value, value, line, column))
        elif kind == "IDENT":
            tokens.append(Token(KEYWORDS.get(value, "IDENT"), value, line, column))
        elif kind not in ("WS", "COMMENT"):
            tokens.append(Token(kind, value, line, column))
        pos = m.end()
    tokens.append(Token("EOF", "", line, pos - line_start + 1))
    return tokens


class TokenStream:
    def __init__(self, text: str):
        self.tokens = tokenize(text)
        self.pos = 0

    def peek(self, offset: int = 0) -> Token:
        return self.tokens[min(self.pos + offset, len(self.tokens) - 1)]

    def next(self) -> Token:
        tok = self.peek()
        if tok.kind != "EOF":
            self.pos += 1
        return tok

    def at(self, *kinds: str) -> bool:
        return self.peek().kind in kinds

    def accept(self, *kinds: str) -> Token | None:
        if self.at(*kinds):
            return self.next()
        return None

    def expect(self, *kinds: str, text: str | None = None) -> Token:
        tok = self.peek()
        if tok.kind in kinds and (text is None or tok.text == text):
            return self.next()
        wanted = [repr(text)] if text is not None else [_describe(k) for k in kinds]
        raise self.error(f"unexpected {_describe_token(tok)}", wanted)

    def error(self, message: str, expected=()) -> ParseError:
        tok = self.peek()
        return ParseError(message, tok.line, tok.column, expected)


_NAMES = {
    "BOUND": "number",
    "IDENT": "identifier",
    "EOF": "end of input",
    "IFF": "'<->'",
    "IMP": "'->'",
    "XOR": "'(+)'",
    "AND": "'/\\'",
    "OR": "'\\/'",
    "NAND": "'|'",
    "NOR": "'nor'",
    "NOT": "'!'",
    "EVAL": "'eval'",
    "CLASSIFY": "'classify'",
    "TABLE": "'table'",
}


def _describe(kind: str) -> str:
    return _NAMES.get(kind, repr(kind))


def _describe_token(tok: Token) -> str:
    if tok.kind == "EOF":
        return "end of input"
    return repr(tok.text)
