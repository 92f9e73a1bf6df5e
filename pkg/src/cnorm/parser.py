"""Recursive-descent parser for C-mini.

The grammar is deliberately small: scalar types, the full operator set,
functions, and the usual control statements. Anything else C has (pointers,
aggregates, typedefs, goto, labels, string expressions, the conditional
operator) raises UnsupportedConstruct with its position.

Two deviations from plain C worth knowing about:
  * every loop/if body is wrapped in a Block at parse time, so emitted text
    re-parses to a structurally equal tree;
  * parentheses are not stored — precedence is structural and the emitter
    regenerates the minimal parenthesization.
"""

from __future__ import annotations

from typing import List, Optional, Sequence, Tuple, Union

from .errors import ParseError, UnsupportedConstruct
from .lexer import (
    K_CHAR, K_IDENT, K_INT, K_KEYWORD, K_OP, K_PUNCT, K_STRING,
    KIND_NAMES, RESERVED, ScanResult, Token, scan,
)
from .nodes import (
    Assign, Binary, Block, Break, Call, CharLit, Comma, Continue, Decl,
    Declarator, DoWhile, Expr, ExprStmt, For, FunctionDef, Ident, If, IntLit,
    Param, Return, Stmt, Switch, SwitchCase, TranslationUnit, TypeSpec, Unary,
    While,
)

RESERVED_NAME_PREFIX = "__t"

_TYPE_WORDS = frozenset(
    ["char", "int", "long", "float", "double", "void", "signed", "unsigned"]
)

_BIN_PREC = {
    "||": 1, "&&": 2, "|": 3, "^": 4, "&": 5,
    "==": 6, "!=": 6,
    "<": 7, ">": 7, "<=": 7, ">=": 7,
    "<<": 8, ">>": 8,
    "+": 9, "-": 9,
    "*": 10, "/": 10, "%": 10,
}

_ASSIGN_OPS = frozenset(
    ["=", "+=", "-=", "*=", "/=", "%=", "&=", "|=", "^=", "<<=", ">>="]
)

_ESCAPES = {
    "n": 10, "t": 9, "r": 13, "0": 0, "\\": 92, "'": 39, '"': 34,
    "a": 7, "b": 8, "f": 12, "v": 11,
}

_U64 = 1 << 64
_I64_MAX = (1 << 63) - 1


def _wrap64(v: int) -> int:
    v &= _U64 - 1
    return v - _U64 if v > _I64_MAX else v


class _Parser:
    def __init__(self, kinds: List[int], lexemes: List[str],
                 lines: List[int], cols: List[int]):
        # sentinel avoids bounds checks in the hot loop
        kinds = kinds + [-1]
        lexemes = lexemes + ["<eof>"]
        last_line = lines[-1] if lines else 1
        lines = lines + [last_line]
        cols = cols + [1]
        self.kinds = kinds
        self.lexemes = lexemes
        self.lines = lines
        self.cols = cols
        self.i = 0

    # -- error helpers ------------------------------------------------------

    def _err(self, expected: str) -> ParseError:
        i = self.i
        found = self.lexemes[i]
        return ParseError(
            f"expected {expected}, found {found!r}",
            self.lines[i], self.cols[i],
        )

    def _unsupported(self, what: str, at: Optional[int] = None) -> UnsupportedConstruct:
        i = self.i if at is None else at
        return UnsupportedConstruct(
            f"{what} is outside the supported C subset",
            self.lines[i], self.cols[i],
        )

    def _expect(self, lexeme: str) -> None:
        if self.lexemes[self.i] != lexeme:
            raise self._err(f"'{lexeme}'")
        self.i += 1

    # -- types --------------------------------------------------------------

    def _at_type(self) -> bool:
        return self.kinds[self.i] == K_KEYWORD and self.lexemes[self.i] in _TYPE_WORDS

    def _type_spec(self) -> TypeSpec:
        words = []
        start = self.i
        while self.kinds[self.i] == K_KEYWORD and self.lexemes[self.i] in _TYPE_WORDS:
            words.append(self.lexemes[self.i])
            self.i += 1
        if not words:
            if self.kinds[self.i] == K_KEYWORD and self.lexemes[self.i] in RESERVED:
                raise self._unsupported(f"'{self.lexemes[self.i]}'")
            raise self._err("a type specifier")
        sign = ""
        base = ""
        long_seen = int_seen = False
        for w in words:
            if w in ("signed", "unsigned"):
                if sign:
                    raise self._unsupported(" ".join(words), start)
                sign = w
            elif w == "long":
                if long_seen:
                    raise self._unsupported("'long long'", start)
                long_seen = True
            elif w == "int":
                if int_seen:
                    raise self._unsupported(" ".join(words), start)
                int_seen = True
            else:
                if base:
                    raise self._unsupported(" ".join(words), start)
                base = w
        if long_seen:
            if base or (int_seen and base):
                raise self._unsupported(" ".join(words), start)
            base = "long"
        elif not base:
            base = "int"
        elif int_seen or (sign and base in ("float", "double", "void")):
            raise self._unsupported(" ".join(words), start)
        return TypeSpec(base, sign, tuple(words))

    # -- expressions --------------------------------------------------------

    def _expr(self) -> Expr:
        first = self._assign_expr()
        if self.lexemes[self.i] != ",":
            return first
        line = self.lines[self.i]
        parts = [first]
        while self.lexemes[self.i] == ",":
            self.i += 1
            parts.append(self._assign_expr())
        return Comma(tuple(parts), line)

    def _assign_expr(self) -> Expr:
        lhs = self._binary(1)
        lex = self.lexemes[self.i]
        if lex in _ASSIGN_OPS and self.kinds[self.i] == K_OP:
            if type(lhs) is not Ident:
                raise ParseError(
                    "assignment target must be a plain variable",
                    self.lines[self.i], self.cols[self.i],
                )
            line = self.lines[self.i]
            self.i += 1
            return Assign(lex, lhs, self._assign_expr(), line)
        if lex == "?":
            raise self._unsupported("the conditional operator")
        return lhs

    def _binary(self, min_prec: int) -> Expr:
        kinds = self.kinds
        lexemes = self.lexemes
        prec_of = _BIN_PREC
        lhs = self._unary()
        while True:
            i = self.i
            if kinds[i] != K_OP:
                return lhs
            lex = lexemes[i]
            prec = prec_of.get(lex)
            if prec is None or prec < min_prec:
                return lhs
            line = self.lines[i]
            self.i = i + 1
            rhs = self._binary(prec + 1)
            lhs = Binary(lex, lhs, rhs, line)

    def _unary(self) -> Expr:
        # one flat function for unary / postfix / primary: this is the
        # hottest spot in the parser
        i = self.i
        kinds = self.kinds
        lexemes = self.lexemes
        kind = kinds[i]
        lex = lexemes[i]
        line = self.lines[i]

        if kind == K_IDENT:
            self.i = i + 1
            nxt = lexemes[i + 1]
            if nxt == "(":
                e: Expr = self._call(lex, line)
            else:
                e = Ident(lex, line)
        elif kind == K_INT:
            self.i = i + 1
            value = int(lex, 16) if lex[:2] in ("0x", "0X") else int(lex)
            e = IntLit(_wrap64(value), None, line)
        elif kind == K_OP:
            if lex == "-" or lex == "!" or lex == "~":
                self.i = i + 1
                return Unary(lex, self._unary(), False, line)
            if lex == "++" or lex == "--":
                self.i = i + 1
                operand = self._unary()
                if type(operand) is not Ident:
                    raise ParseError(
                        f"operand of prefix '{lex}' must be a plain variable",
                        line, self.cols[i],
                    )
                return Unary(lex, operand, False, line)
            if lex == "&":
                raise self._unsupported("the address-of operator")
            if lex == "*":
                raise self._unsupported("the dereference operator")
            if lex == "+":
                raise self._unsupported("unary plus")
            raise self._err("an expression")
        elif lex == "(":
            self.i = i + 1
            e = self._expr()
            self._expect(")")
        elif kind == K_CHAR:
            self.i = i + 1
            e = CharLit(self._char_value(lex, i), line)
        elif kind == K_KEYWORD and lex == "true":
            self.i = i + 1
            e = IntLit(1, "true", line)
        elif kind == K_KEYWORD and lex == "false":
            self.i = i + 1
            e = IntLit(0, "false", line)
        elif kind == K_KEYWORD and lex in RESERVED:
            raise self._unsupported(f"'{lex}'")
        elif kind == K_STRING:
            raise self._unsupported("a string literal in an expression")
        else:
            raise self._err("an expression")

        # postfix operators
        while True:
            i = self.i
            lex = lexemes[i]
            if lex == "++" or lex == "--":
                if type(e) is not Ident:
                    raise ParseError(
                        f"operand of postfix '{lex}' must be a plain variable",
                        self.lines[i], self.cols[i],
                    )
                self.i = i + 1
                e = Unary(lex, e, True, self.lines[i])
            elif lex == "[":
                raise self._unsupported("array indexing")
            elif lex == ".":
                raise self._unsupported("member access")
            else:
                return e

    def _call(self, callee: str, line: int) -> Call:
        self._expect("(")
        args: List[Expr] = []
        if self.lexemes[self.i] != ")":
            args.append(self._assign_expr())
            while self.lexemes[self.i] == ",":
                self.i += 1
                args.append(self._assign_expr())
        self._expect(")")
        return Call(callee, tuple(args), line)

    def _char_value(self, lex: str, at: int) -> int:
        body = lex[1:-1]
        if not body:
            raise ParseError("empty character literal", self.lines[at], self.cols[at])
        if body[0] == "\\":
            esc = body[1:]
            if esc and esc[0] in _ESCAPES and len(esc) == 1:
                return _ESCAPES[esc[0]]
            if esc[:1] == "x" and len(esc) > 1:
                try:
                    return int(esc[1:], 16) & 0xFF
                except ValueError:
                    pass
            raise ParseError(
                f"unknown escape sequence '\\{esc}'", self.lines[at], self.cols[at]
            )
        if len(body) != 1:
            raise ParseError(
                "character literal must hold a single character",
                self.lines[at], self.cols[at],
            )
        return ord(body)

    # -- statements ---------------------------------------------------------

    def _block(self) -> Block:
        line = self.lines[self.i]
        self._expect("{")
        stmts: List[Stmt] = []
        while self.lexemes[self.i] != "}":
            if self.kinds[self.i] == -1:
                raise self._err("'}'")
            stmts.append(self._stmt())
        self.i += 1
        return Block(tuple(stmts), line)

    def _body(self) -> Block:
        """Parse a statement position that acts as a loop/branch body,
        normalizing it to a Block."""
        if self.lexemes[self.i] == "{":
            return self._block()
        s = self._stmt()
        if type(s) is Block:
            return s
        return Block((s,), s.line)

    def _stmt(self) -> Stmt:
        i = self.i
        kind = self.kinds[i]
        lex = self.lexemes[i]
        line = self.lines[i]
        if kind == K_KEYWORD:
            handler = _STMT_KEYWORDS.get(lex)
            if handler is not None:
                return handler(self, line)
            if lex in _TYPE_WORDS:
                return self._decl_stmt()
            if lex in RESERVED:
                raise self._unsupported(f"'{lex}'")
            raise self._err("a statement")
        if lex == "{":
            return self._block()
        if lex == ";":
            self.i = i + 1
            return Block((), line)
        if kind == K_IDENT:
            nxt = self.lexemes[i + 1]
            if nxt == ":":
                raise self._unsupported("a statement label")
            # fast path for the most common statement form: `name op= expr;`
            if nxt in _ASSIGN_OPS and self.kinds[i + 1] == K_OP:
                self.i = i + 2
                e: Expr = Assign(nxt, Ident(lex, line), self._assign_expr(), line)
                if self.lexemes[self.i] == ",":
                    parts = [e]
                    while self.lexemes[self.i] == ",":
                        self.i += 1
                        parts.append(self._assign_expr())
                    e = Comma(tuple(parts), line)
                self._expect(";")
                return ExprStmt(e, line)
        e = self._expr()
        self._expect(";")
        return ExprStmt(e, line)

    def _decl_stmt(self) -> Decl:
        line = self.lines[self.i]
        ts = self._type_spec()
        if ts.base == "void":
            raise ParseError(
                "cannot declare a variable of type void",
                self.lines[self.i], self.cols[self.i],
            )
        decls: List[Declarator] = []
        while True:
            if self.lexemes[self.i] == "*":
                raise self._unsupported("a pointer declarator")
            if self.kinds[self.i] != K_IDENT:
                raise self._err("a variable name")
            name = self.lexemes[self.i]
            self.i += 1
            if self.lexemes[self.i] == "[":
                raise self._unsupported("an array declarator")
            init = None
            if self.lexemes[self.i] == "=":
                self.i += 1
                init = self._assign_expr()
            decls.append(Declarator(name, init))
            if self.lexemes[self.i] != ",":
                break
            self.i += 1
        self._expect(";")
        return Decl(ts, tuple(decls), line)

    def _if_stmt(self, line: int) -> If:
        self.i += 1
        self._expect("(")
        cond = self._expr()
        self._expect(")")
        then = self._body()
        orelse = None
        if self.lexemes[self.i] == "else":
            self.i += 1
            orelse = self._body()
        return If(cond, then, orelse, line)

    def _while_stmt(self, line: int) -> While:
        self.i += 1
        self._expect("(")
        cond = self._expr()
        self._expect(")")
        return While(cond, self._body(), line)

    def _do_stmt(self, line: int) -> DoWhile:
        self.i += 1
        body = self._body()
        self._expect("while")
        self._expect("(")
        cond = self._expr()
        self._expect(")")
        self._expect(";")
        return DoWhile(body, cond, line)

    def _for_stmt(self, line: int) -> For:
        self.i += 1
        self._expect("(")
        init: Optional[Union[Decl, Expr]] = None
        if self._at_type():
            init = self._decl_stmt()      # consumes the ';'
        elif self.lexemes[self.i] == ";":
            self.i += 1
        else:
            init = self._expr()
            self._expect(";")
        cond = None
        if self.lexemes[self.i] != ";":
            cond = self._expr()
        self._expect(";")
        step = None
        if self.lexemes[self.i] != ")":
            step = self._expr()
        self._expect(")")
        return For(init, cond, step, self._body(), line)

    def _switch_stmt(self, line: int) -> Switch:
        self.i += 1
        self._expect("(")
        scrutinee = self._expr()
        self._expect(")")
        self._expect("{")
        cases: List[SwitchCase] = []
        default: Optional[Tuple[Stmt, ...]] = None
        seen: dict = {}
        while self.lexemes[self.i] != "}":
            at = self.i
            if self.lexemes[self.i] == "case":
                if default is not None:
                    raise self._unsupported("a case after the default clause")
                case_line = self.lines[self.i]
                self.i += 1
                label = self._case_label()
                self._expect(":")
                body = self._case_body()
                value = label.value if type(label) is not Unary else -label.operand.value
                if value in seen:
                    raise ParseError(
                        f"duplicate case label {self.lexemes[at + 1]!r}",
                        self.lines[at], self.cols[at],
                    )
                seen[value] = True
                cases.append(SwitchCase(label, body, case_line))
            elif self.lexemes[self.i] == "default":
                self.i += 1
                self._expect(":")
                default = self._case_body()
            else:
                raise self._err("'case', 'default' or '}'")
        self.i += 1
        return Switch(scrutinee, tuple(cases), default, line)

    def _case_label(self) -> Expr:
        i = self.i
        negate = False
        if self.lexemes[i] == "-":
            negate = True
            self.i += 1
            i = self.i
        kind = self.kinds[i]
        lex = self.lexemes[i]
        if kind == K_INT:
            self.i = i + 1
            lit: Expr = IntLit(_wrap64(int(lex, 16) if lex[:2] in ("0x", "0X") else int(lex)),
                               None, self.lines[i])
        elif kind == K_CHAR:
            self.i = i + 1
            lit = CharLit(self._char_value(lex, i), self.lines[i])
        else:
            raise self._err("an integer or character constant")
        if negate:
            return Unary("-", lit, False, self.lines[i])
        return lit

    def _case_body(self) -> Tuple[Stmt, ...]:
        stmts: List[Stmt] = []
        while self.lexemes[self.i] not in ("case", "default", "}"):
            if self.kinds[self.i] == -1:
                raise self._err("'}'")
            at = self.i
            stmts.append(self._stmt())
            if _binds_switch_break(stmts[-1]) and self.lexemes[self.i] not in ("case", "default", "}"):
                raise self._unsupported(
                    "a switch break that is not the final statement of its case", at
                )
        for s in stmts[:-1]:
            if _binds_switch_break(s):
                raise self._unsupported("a conditional break inside a switch case")
        if stmts and _binds_switch_break(stmts[-1]) and type(stmts[-1]) is not Break:
            raise self._unsupported("a conditional break inside a switch case")
        return tuple(stmts)

    def _break_stmt(self, line: int) -> Break:
        self.i += 1
        self._expect(";")
        return Break(line)

    def _continue_stmt(self, line: int) -> Continue:
        self.i += 1
        self._expect(";")
        return Continue(line)

    def _return_stmt(self, line: int) -> Return:
        self.i += 1
        value = None
        if self.lexemes[self.i] != ";":
            value = self._expr()
        self._expect(";")
        return Return(value, line)

    # -- top level -----------------------------------------------------------

    def _global_tail(self, ts: TypeSpec, first_name: str, line: int) -> Decl:
        if ts.base == "void":
            raise ParseError(
                "cannot declare a variable of type void",
                self.lines[self.i], self.cols[self.i],
            )
        decls: List[Declarator] = []
        name = first_name
        while True:
            if self.lexemes[self.i] == "[":
                raise self._unsupported("an array declarator")
            init = None
            if self.lexemes[self.i] == "=":
                self.i += 1
                init = self._assign_expr()
            decls.append(Declarator(name, init))
            if self.lexemes[self.i] != ",":
                break
            self.i += 1
            if self.lexemes[self.i] == "*":
                raise self._unsupported("a pointer declarator")
            if self.kinds[self.i] != K_IDENT:
                raise self._err("a variable name")
            name = self.lexemes[self.i]
            self.i += 1
        self._expect(";")
        return Decl(ts, tuple(decls), line)

    def _function(self, ts: TypeSpec, name: str, line: int) -> FunctionDef:
        self._expect("(")
        params: List[Param] = []
        if self.lexemes[self.i] == ")":
            self.i += 1
        elif self.lexemes[self.i] == "void" and self.lexemes[self.i + 1] == ")":
            self.i += 2
        else:
            while True:
                pts = self._type_spec()
                if self.lexemes[self.i] == "*":
                    raise self._unsupported("a pointer parameter")
                if self.kinds[self.i] != K_IDENT:
                    raise self._err("a parameter name")
                params.append(Param(pts, self.lexemes[self.i]))
                self.i += 1
                if self.lexemes[self.i] != ",":
                    break
                self.i += 1
                if self.lexemes[self.i] == "...":
                    raise self._unsupported("a variadic parameter list")
            self._expect(")")
        if self.lexemes[self.i] == ";":
            raise self._unsupported("a function prototype")
        if self.lexemes[self.i] != "{":
            raise self._err("'{'")
        body = self._block()
        return FunctionDef(ts, name, tuple(params), body, line)


_STMT_KEYWORDS = {
    "if": _Parser._if_stmt,
    "while": _Parser._while_stmt,
    "do": _Parser._do_stmt,
    "for": _Parser._for_stmt,
    "switch": _Parser._switch_stmt,
    "break": _Parser._break_stmt,
    "continue": _Parser._continue_stmt,
    "return": _Parser._return_stmt,
}


def _binds_switch_break(s: Stmt) -> bool:
    """True if s contains a break that would bind to the switch whose case
    holds s (i.e. a break not captured by a loop or switch inside s)."""
    t = type(s)
    if t is Break:
        return True
    if t is Block:
        return any(_binds_switch_break(x) for x in s.stmts)
    if t is If:
        if _binds_switch_break(s.then):
            return True
        return s.orelse is not None and _binds_switch_break(s.orelse)
    # While/DoWhile/For/Switch capture their own breaks.
    return False


# ---------------------------------------------------------------------------
# post-parse checks

def _check_unit(unit: TranslationUnit, order: List[Tuple[str, int]],
                allow_reserved: bool = False) -> None:
    fn_names = set()
    for f in unit.functions:
        if f.name in fn_names:
            raise ParseError(f"function '{f.name}' is defined twice", f.line, 1)
        fn_names.add(f.name)

    checker = _ScopeChecker(fn_names, allow_reserved)
    global_scope: dict = {}
    for tag, idx in order:
        if tag == "g":
            checker.check_decl(unit.globals[idx], [global_scope])
        else:
            checker.check_function(unit.functions[idx], global_scope)


class _ScopeChecker:
    def __init__(self, fn_names: set, allow_reserved: bool):
        self.fn_names = fn_names
        self.allow_reserved = allow_reserved

    def _name_ok(self, name: str, line: int) -> None:
        if not self.allow_reserved and name.startswith(RESERVED_NAME_PREFIX):
            raise ParseError(
                f"identifier '{name}' uses the reserved prefix "
                f"'{RESERVED_NAME_PREFIX}'", line, 1,
            )

    def check_function(self, f: FunctionDef, global_scope: dict) -> None:
        scope: dict = {}
        for p in f.params:
            self._name_ok(p.name, f.line)
            if p.name in scope:
                raise ParseError(
                    f"duplicate parameter '{p.name}' in '{f.name}'", f.line, 1
                )
            scope[p.name] = True
        self.check_block(f.body, [global_scope, scope])

    def check_block(self, block: Block, scopes: List[dict]) -> None:
        scopes.append({})
        for s in block.stmts:
            self.check_stmt(s, scopes)
        scopes.pop()

    def check_stmt(self, s: Stmt, scopes: List[dict]) -> None:
        t = type(s)
        if t is ExprStmt:
            self.check_expr(s.expr, scopes)
        elif t is Decl:
            self.check_decl(s, scopes)
        elif t is Block:
            self.check_block(s, scopes)
        elif t is If:
            self.check_expr(s.cond, scopes)
            self.check_block(s.then, scopes)
            if s.orelse is not None:
                self.check_block(s.orelse, scopes)
        elif t is While:
            self.check_expr(s.cond, scopes)
            self.check_block(s.body, scopes)
        elif t is DoWhile:
            self.check_block(s.body, scopes)
            self.check_expr(s.cond, scopes)
        elif t is For:
            scopes.append({})
            if s.init is not None:
                if type(s.init) is Decl:
                    self.check_decl(s.init, scopes)
                else:
                    self.check_expr(s.init, scopes)
            if s.cond is not None:
                self.check_expr(s.cond, scopes)
            if s.step is not None:
                self.check_expr(s.step, scopes)
            self.check_block(s.body, scopes)
            scopes.pop()
        elif t is Switch:
            self.check_expr(s.scrutinee, scopes)
            for case in s.cases:
                scopes.append({})
                for cs in case.body:
                    self.check_stmt(cs, scopes)
                scopes.pop()
            if s.default is not None:
                scopes.append({})
                for cs in s.default:
                    self.check_stmt(cs, scopes)
                scopes.pop()
        elif t is Return:
            if s.value is not None:
                self.check_expr(s.value, scopes)
        # Break/Continue carry nothing to check.

    def check_decl(self, d: Decl, scopes: List[dict]) -> None:
        scope = scopes[-1]
        for decl in d.declarators:
            self._name_ok(decl.name, d.line)
            scope[decl.name] = True
            if decl.init is not None:
                self.check_expr(decl.init, scopes)

    def check_expr(self, e: Expr, scopes: List[dict]) -> None:
        t = type(e)
        if t is Ident:
            name = e.name
            for scope in reversed(scopes):
                if name in scope:
                    return
            raise ParseError(f"'{name}' used before declaration", e.line, 1)
        if t is Binary:
            self.check_expr(e.lhs, scopes)
            self.check_expr(e.rhs, scopes)
            if e.op in ("&&", "||"):
                _check_short_circuit_rhs(e.rhs)
        elif t is Unary:
            self.check_expr(e.operand, scopes)
        elif t is Assign:
            self.check_expr(e.target, scopes)
            self.check_expr(e.value, scopes)
        elif t is Call:
            if e.callee not in self.fn_names:
                raise ParseError(
                    f"call to undefined function '{e.callee}'", e.line, 1
                )
            for a in e.args:
                self.check_expr(a, scopes)
        elif t is Comma:
            for p in e.parts:
                self.check_expr(p, scopes)


def _check_short_circuit_rhs(e: Expr) -> None:
    """C-mini fence: the right operand of && / || must be free of assignments,
    increments and comma expressions, so statement restructuring never has to
    hoist a conditionally-evaluated side effect."""
    t = type(e)
    if t is Assign or t is Comma or (t is Unary and e.op in ("++", "--")):
        raise UnsupportedConstruct(
            "a side effect in the right operand of '&&' or '||'", e.line, 1
        )
    if t is Binary:
        _check_short_circuit_rhs(e.lhs)
        _check_short_circuit_rhs(e.rhs)
    elif t is Unary:
        _check_short_circuit_rhs(e.operand)
    elif t is Call:
        for a in e.args:
            _check_short_circuit_rhs(a)


# ---------------------------------------------------------------------------
# entry points

_KIND_INDEX = {name: i for i, name in enumerate(KIND_NAMES)}


def parse(tokens: Sequence[Token], allow_reserved: bool = False) -> TranslationUnit:
    """Parse a token sequence (as produced by tokenize) into a TranslationUnit."""
    index = _KIND_INDEX
    kinds = [index[t.kind] for t in tokens]
    lexemes = [t.lexeme for t in tokens]
    lines = [t.line for t in tokens]
    cols = [t.column for t in tokens]
    return _parse_arrays(kinds, lexemes, lines, cols, allow_reserved)


def parse_source(source: str, allow_reserved: bool = False) -> TranslationUnit:
    """Scan and parse source text in one step (the fast path)."""
    r = scan(source)
    return _parse_arrays(r.kinds, r.lexemes, r.lines, r.cols, allow_reserved)


def _parse_arrays(kinds, lexemes, lines, cols, allow_reserved: bool) -> TranslationUnit:
    p = _Parser(kinds, lexemes, lines, cols)
    functions: List[FunctionDef] = []
    globals_: List[Decl] = []
    order: List[Tuple[str, int]] = []
    while p.kinds[p.i] != -1:
        if p.kinds[p.i] == K_KEYWORD and p.lexemes[p.i] in RESERVED:
            raise p._unsupported(f"'{p.lexemes[p.i]}'")
        line = p.lines[p.i]
        ts = p._type_spec()
        if p.lexemes[p.i] == "*":
            raise p._unsupported("a pointer declarator")
        if p.kinds[p.i] != K_IDENT:
            raise p._err("a name")
        name = p.lexemes[p.i]
        p.i += 1
        if p.lexemes[p.i] == "(":
            functions.append(p._function(ts, name, line))
            order.append(("f", len(functions) - 1))
        else:
            globals_.append(p._global_tail(ts, name, line))
            order.append(("g", len(globals_) - 1))
    unit = TranslationUnit(tuple(functions), tuple(globals_))
    _check_unit(unit, order, allow_reserved)
    return unit
