"""Lexer for C-mini.

Comments, whitespace and preprocessor lines never become tokens; preprocessor
lines are dropped with a recorded warning. The scanner keeps tokens in
parallel arrays (kind/lexeme/line/column) because the parser is far faster
iterating arrays than objects; `tokenize` wraps them into Token objects for
callers that want the object form.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import List

from .errors import InvalidCharacter, UnterminatedComment, UnterminatedLiteral

K_KEYWORD = 0
K_IDENT = 1
K_INT = 2
K_CHAR = 3
K_STRING = 4
K_OP = 5
K_PUNCT = 6

KIND_NAMES = (
    "keyword",
    "identifier",
    "integer-literal",
    "char-literal",
    "string-literal",
    "operator",
    "punctuation",
)

KEYWORDS = frozenset(
    "char int long float double void signed unsigned if else while do for "
    "switch case default break continue return true false".split()
)

# Recognized so the parser can reject them by name instead of misparsing.
RESERVED = frozenset(
    "auto const enum extern goto inline register restrict short sizeof "
    "static struct typedef union volatile".split()
)

OPERATORS = (
    "<<= >>= <= >= == != && || ++ -- += -= *= /= %= &= |= ^= << >> "
    "+ - * / % < > = ! ~ & | ^"
).split()

PUNCTUATION = list("(){};,:[]?.")

_TOKEN_RE = re.compile(
    r"//[^\n]*"
    r"|/\*(?:[^*]|\*(?!/))*\*/"
    r"|/\*"                                   # unterminated block comment
    r"|[A-Za-z_]\w*"
    r"|0[xX][0-9a-fA-F]+|\d+"
    r"|'(?:\\.|[^'\\\n])*'"
    r"|'"                                     # unterminated char literal
    r"|\"(?:\\.|[^\"\\\n])*\""
    r"|\""                                    # unterminated string literal
    r"|\#[^\n]*"
    r"|<<=|>>=|<=|>=|==|!=|&&|\|\||\+\+|--|\+=|-=|\*=|/=|%=|&=|\|=|\^=|<<|>>"
    r"|[-+*/%<>=!~&|^(){};,:\[\]?.]"
    r"|\S"
)

_FIXED_KINDS = {}
for _w in KEYWORDS | RESERVED:
    _FIXED_KINDS[_w] = K_KEYWORD
for _w in OPERATORS:
    _FIXED_KINDS[_w] = K_OP
for _w in PUNCTUATION:
    _FIXED_KINDS[_w] = K_PUNCT


@dataclass(slots=True)
class Token:
    kind: str          # one of KIND_NAMES
    lexeme: str
    line: int
    column: int


@dataclass(slots=True)
class ScanResult:
    kinds: List[int]
    lexemes: List[str]
    lines: List[int]
    cols: List[int]
    warnings: List[str]


def scan(source: str) -> ScanResult:
    """Scan source text into parallel token arrays; raises on lexical errors."""
    kinds: List[int] = []
    lexemes: List[str] = []
    lines: List[int] = []
    cols: List[int] = []
    warnings: List[str] = []
    kind_of = dict(_FIXED_KINDS)

    k_append = kinds.append
    x_append = lexemes.append
    l_append = lines.append
    c_append = cols.append
    nl_count = source.count

    line = 1
    line_start = 0
    prev_end = 0
    for m in _TOKEN_RE.finditer(source):
        start = m.start()
        if start > prev_end:
            n = nl_count("\n", prev_end, start)
            if n:
                line += n
                line_start = source.rfind("\n", prev_end, start) + 1
        prev_end = m.end()
        text = m.group()
        kind = kind_of.get(text)
        if kind is None:
            c = text[0]
            if c == "/" and len(text) > 1:
                c2 = text[1]
                if c2 == "/":
                    continue
                if c2 == "*":
                    if text == "/*":
                        raise UnterminatedComment(
                            "block comment is never closed", line, start - line_start + 1
                        )
                    n = text.count("\n")
                    if n:
                        line += n
                        line_start = start + text.rfind("\n") + 1
                    continue
            col = start - line_start + 1
            if c == "'" or c == '"':
                if len(text) < 2 or text[-1] != c:
                    raise UnterminatedLiteral(
                        "character literal is never closed" if c == "'"
                        else "string literal is never closed",
                        line, col,
                    )
                kind = K_CHAR if c == "'" else K_STRING
            elif c == "#":
                before = source[source.rfind("\n", 0, start) + 1 : start]
                if before.strip():
                    raise InvalidCharacter("unexpected character '#'", line, col)
                warnings.append(
                    f"{line}:{col}: preprocessor line dropped: {text.strip()}"
                )
                continue
            elif c.isdigit():
                kind = K_INT
            elif c.isalpha() or c == "_":
                kind = K_IDENT
            else:
                raise InvalidCharacter(f"unexpected character {text!r}", line, col)
            kind_of[text] = kind

        k_append(kind)
        x_append(text)
        l_append(line)
        c_append(start - line_start + 1)

    return ScanResult(kinds, lexemes, lines, cols, warnings)


def tokenize(source: str, warnings: List[str] | None = None) -> List[Token]:
    """Lex source into Token objects. Collects preprocessor warnings into
    `warnings` when a list is passed."""
    r = scan(source)
    if warnings is not None:
        warnings.extend(r.warnings)
    names = KIND_NAMES
    return [
        Token(names[k], x, l, c)
        for k, x, l, c in zip(r.kinds, r.lexemes, r.lines, r.cols)
    ]
