"""Deterministic pretty-printer for C-mini ASTs.

Layout contract: one statement per line, four-space indents, opening brace on
the statement line, single spaces around binary operators, `!` spelled with a
trailing space (the other unary operators bind tight), minimal parentheses by
precedence. Equal ASTs produce byte-identical text.
"""

from __future__ import annotations

from typing import List, Optional

from .nodes import (
    Assign, Binary, Block, Break, Call, CharLit, Comma, Continue, Decl,
    DoWhile, Expr, ExprStmt, For, FunctionDef, Ident, If, IntLit, Return,
    Stmt, Switch, TranslationUnit, Unary, While,
)

_PREC_COMMA = 0
_PREC_ASSIGN = 1
_BIN_PREC = {
    "||": 2, "&&": 3, "|": 4, "^": 5, "&": 6,
    "==": 7, "!=": 7,
    "<": 8, ">": 8, "<=": 8, ">=": 8,
    "<<": 9, ">>": 9,
    "+": 10, "-": 10,
    "*": 11, "/": 11, "%": 11,
}
_PREC_UNARY = 12
_PREC_PRIMARY = 13

_CHAR_ESCAPES = {10: "\\n", 9: "\\t", 13: "\\r", 0: "\\0", 92: "\\\\",
                 39: "\\'", 34: '\\"', 7: "\\a", 8: "\\b", 12: "\\f", 11: "\\v"}


def char_text(value: int) -> str:
    esc = _CHAR_ESCAPES.get(value)
    if esc is not None:
        return f"'{esc}'"
    if 32 <= value <= 126:
        return f"'{chr(value)}'"
    return f"'\\x{value:02x}'"


def expr_text(e: Expr, masked: bool = False) -> str:
    """Render an expression with minimal parentheses. With masked=True every
    identifier (including callees) becomes the placeholder ID; literals are
    kept verbatim."""
    return _expr(e, _PREC_COMMA, masked)


def _expr(e: Expr, min_prec: int, masked: bool) -> str:
    t = type(e)
    if t is Ident:
        return "ID" if masked else e.name
    if t is IntLit:
        return e.text if e.text is not None else str(e.value)
    if t is CharLit:
        return char_text(e.value)
    if t is Binary:
        prec = _BIN_PREC[e.op]
        s = f"{_expr(e.lhs, prec, masked)} {e.op} {_expr(e.rhs, prec + 1, masked)}"
        return f"({s})" if prec < min_prec else s
    if t is Unary:
        op = e.op
        if e.postfix:
            s = _expr(e.operand, _PREC_PRIMARY, masked) + op
        else:
            inner = _expr(e.operand, _PREC_UNARY, masked)
            if op == "!":
                s = "! " + inner
            elif inner[0] == op[0]:
                s = op + " " + inner       # keep `- -x` from lexing as `--x`
            else:
                s = op + inner
        return f"({s})" if _PREC_UNARY < min_prec else s
    if t is Assign:
        target = "ID" if masked else e.target.name
        s = f"{target} {e.op} {_expr(e.value, _PREC_ASSIGN, masked)}"
        return f"({s})" if _PREC_ASSIGN < min_prec else s
    if t is Call:
        callee = "ID" if masked else e.callee
        args = ", ".join(_expr(a, _PREC_ASSIGN, masked) for a in e.args)
        return f"{callee}({args})"
    if t is Comma:
        s = ", ".join(_expr(p, _PREC_ASSIGN, masked) for p in e.parts)
        return f"({s})" if _PREC_COMMA < min_prec else s
    raise TypeError(f"not an expression node: {e!r}")


class _Emitter:
    def __init__(self) -> None:
        self.lines: List[str] = []

    def unit(self, u: TranslationUnit) -> str:
        first = True
        for g in u.globals:
            self.lines.append(self._decl_text(g, ""))
            first = False
        for f in u.functions:
            if not first:
                self.lines.append("")
            first = False
            self.function(f)
        return "\n".join(self.lines) + "\n"

    def function(self, f: FunctionDef) -> None:
        params = ", ".join(f"{p.type.spelling} {p.name}" for p in f.params)
        self.lines.append(f"{f.return_type.spelling} {f.name}({params}) {{")
        self.block_body(f.body, "    ")
        self.lines.append("}")

    def block_body(self, block: Block, indent: str) -> None:
        for s in block.stmts:
            self.stmt(s, indent)

    def stmt(self, s: Stmt, indent: str) -> None:
        t = type(s)
        out = self.lines
        if t is ExprStmt:
            out.append(indent + expr_text(s.expr) + ";")
        elif t is Decl:
            out.append(self._decl_text(s, indent))
        elif t is Block:
            out.append(indent + "{")
            self.block_body(s, indent + "    ")
            out.append(indent + "}")
        elif t is If:
            self._if(s, indent)
        elif t is While:
            out.append(f"{indent}while ({expr_text(s.cond)}) {{")
            self.block_body(s.body, indent + "    ")
            out.append(indent + "}")
        elif t is DoWhile:
            out.append(indent + "do {")
            self.block_body(s.body, indent + "    ")
            out.append(f"{indent}}} while ({expr_text(s.cond)});")
        elif t is For:
            init = ""
            if s.init is not None:
                if type(s.init) is Decl:
                    init = self._decl_text(s.init, "")[:-1]   # strip ';'
                else:
                    init = expr_text(s.init)
            cond = expr_text(s.cond) if s.cond is not None else ""
            step = expr_text(s.step) if s.step is not None else ""
            out.append(f"{indent}for ({init}; {cond}; {step}) {{")
            self.block_body(s.body, indent + "    ")
            out.append(indent + "}")
        elif t is Switch:
            out.append(f"{indent}switch ({expr_text(s.scrutinee)}) {{")
            inner = indent + "    "
            for case in s.cases:
                out.append(f"{indent}case {expr_text(case.label)}:")
                for cs in case.body:
                    self.stmt(cs, inner)
            if s.default is not None:
                out.append(f"{indent}default:")
                for cs in s.default:
                    self.stmt(cs, inner)
            out.append(indent + "}")
        elif t is Break:
            out.append(indent + "break;")
        elif t is Continue:
            out.append(indent + "continue;")
        elif t is Return:
            if s.value is None:
                out.append(indent + "return;")
            else:
                out.append(f"{indent}return {expr_text(s.value)};")
        else:
            raise TypeError(f"not a statement node: {s!r}")

    def _if(self, s: If, indent: str) -> None:
        out = self.lines
        out.append(f"{indent}if ({expr_text(s.cond)}) {{")
        self.block_body(s.then, indent + "    ")
        node = s
        while True:
            orelse = node.orelse
            if orelse is None:
                out.append(indent + "}")
                return
            # `else if` chains are flattened back to the familiar layout;
            # the parser re-wraps them identically, so round trips are exact.
            if len(orelse.stmts) == 1 and type(orelse.stmts[0]) is If:
                node = orelse.stmts[0]
                out.append(f"{indent}}} else if ({expr_text(node.cond)}) {{")
                self.block_body(node.then, indent + "    ")
            else:
                out.append(indent + "} else {")
                self.block_body(orelse, indent + "    ")
                out.append(indent + "}")
                return

    def _decl_text(self, d: Decl, indent: str) -> str:
        parts = []
        for dec in d.declarators:
            if dec.init is not None:
                parts.append(f"{dec.name} = {_expr(dec.init, _PREC_ASSIGN, False)}")
            else:
                parts.append(dec.name)
        return f"{indent}{d.type.spelling} {', '.join(parts)};"


def emit(unit: TranslationUnit) -> str:
    """Pretty-print a TranslationUnit; total on well-formed trees."""
    return _Emitter().unit(unit)


def emit_stmts(stmts, indent: str = "") -> str:
    """Render a statement sequence (test/debug helper)."""
    em = _Emitter()
    for s in stmts:
        em.stmt(s, indent)
    return "\n".join(em.lines) + ("\n" if em.lines else "")
