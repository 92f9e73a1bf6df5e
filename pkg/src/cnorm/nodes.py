"""AST node types for the supported C subset ("C-mini").

Every construct the toolkit understands is represented here. Nodes are
plain dataclasses, treated as immutable after construction; transformation
passes build new nodes instead of mutating. Equality is structural and
ignores source line numbers, so a parse/emit round trip compares equal.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional, Tuple, Union


# ---------------------------------------------------------------------------
# types

CANONICAL_BASES = ("char", "int", "long", "float", "double", "void")


@dataclass(slots=True, frozen=True)
class TypeSpec:
    """A scalar type: base keyword plus signedness, keeping the spelling
    as written so `signed long int` and `long` stay distinguishable until
    a pass canonicalizes them."""

    base: str                      # one of CANONICAL_BASES
    signedness: str = ""           # "signed" | "unsigned" | ""
    words: Tuple[str, ...] = ()    # spelling as written, e.g. ("signed", "long", "int")

    def canonical(self) -> "TypeSpec":
        words = canonical_type_words(self.base, self.signedness)
        return TypeSpec(self.base, "unsigned" if self.signedness == "unsigned" else "", words)

    @property
    def spelling(self) -> str:
        return " ".join(self.words)


def canonical_type_words(base: str, signedness: str) -> Tuple[str, ...]:
    # `signed` is the default for every integer base, so it is dropped.
    if signedness == "unsigned":
        return ("unsigned", base) if base != "int" else ("unsigned",)
    return (base,)


# ---------------------------------------------------------------------------
# expressions

@dataclass(slots=True)
class IntLit:
    value: int
    text: Optional[str] = None     # "true" / "false" when spelled as a keyword
    line: int = field(default=0, compare=False)


@dataclass(slots=True)
class CharLit:
    value: int
    line: int = field(default=0, compare=False)


@dataclass(slots=True)
class Ident:
    name: str
    line: int = field(default=0, compare=False)


@dataclass(slots=True)
class Unary:
    op: str                        # "-", "!", "~", "++", "--"
    operand: "Expr"
    postfix: bool = False          # only meaningful for ++/--
    line: int = field(default=0, compare=False)


@dataclass(slots=True)
class Binary:
    op: str
    lhs: "Expr"
    rhs: "Expr"
    line: int = field(default=0, compare=False)


@dataclass(slots=True)
class Assign:
    op: str                        # "=", "+=", ... target is always a plain Ident
    target: Ident
    value: "Expr"
    line: int = field(default=0, compare=False)


@dataclass(slots=True)
class Call:
    callee: str
    args: Tuple["Expr", ...]
    line: int = field(default=0, compare=False)


@dataclass(slots=True)
class Comma:
    parts: Tuple["Expr", ...]      # always >= 2 parts
    line: int = field(default=0, compare=False)


Expr = Union[IntLit, CharLit, Ident, Unary, Binary, Assign, Call, Comma]

TRUE_LIT = IntLit(1, "true")
FALSE_LIT = IntLit(0, "false")


# ---------------------------------------------------------------------------
# statements

@dataclass(slots=True)
class Declarator:
    name: str
    init: Optional[Expr] = None


@dataclass(slots=True)
class Decl:
    type: TypeSpec
    declarators: Tuple[Declarator, ...]
    line: int = field(default=0, compare=False)

    @property
    def names(self) -> Tuple[str, ...]:
        return tuple(d.name for d in self.declarators)


@dataclass(slots=True)
class ExprStmt:
    expr: Expr
    line: int = field(default=0, compare=False)


@dataclass(slots=True)
class Block:
    stmts: Tuple["Stmt", ...]
    line: int = field(default=0, compare=False)


@dataclass(slots=True)
class If:
    cond: Expr
    then: Block
    orelse: Optional[Block] = None
    line: int = field(default=0, compare=False)


@dataclass(slots=True)
class While:
    cond: Expr
    body: Block
    line: int = field(default=0, compare=False)


@dataclass(slots=True)
class DoWhile:
    body: Block
    cond: Expr
    line: int = field(default=0, compare=False)


@dataclass(slots=True)
class For:
    init: Optional[Union[Decl, Expr]]
    cond: Optional[Expr]
    step: Optional[Expr]
    body: Block
    line: int = field(default=0, compare=False)


@dataclass(slots=True)
class SwitchCase:
    label: Expr                    # integer/char constant expression
    body: Tuple["Stmt", ...]
    line: int = field(default=0, compare=False)


@dataclass(slots=True)
class Switch:
    scrutinee: Expr
    cases: Tuple[SwitchCase, ...]
    default: Optional[Tuple["Stmt", ...]] = None
    line: int = field(default=0, compare=False)


@dataclass(slots=True)
class Break:
    line: int = field(default=0, compare=False)


@dataclass(slots=True)
class Continue:
    line: int = field(default=0, compare=False)


@dataclass(slots=True)
class Return:
    value: Optional[Expr] = None
    line: int = field(default=0, compare=False)


Stmt = Union[ExprStmt, Decl, Block, If, While, DoWhile, For, Switch, Break, Continue, Return]


# ---------------------------------------------------------------------------
# top level

@dataclass(slots=True)
class Param:
    type: TypeSpec
    name: str


@dataclass(slots=True)
class FunctionDef:
    return_type: TypeSpec
    name: str
    params: Tuple[Param, ...]
    body: Block
    line: int = field(default=0, compare=False)


@dataclass(slots=True)
class TranslationUnit:
    functions: Tuple[FunctionDef, ...]
    globals: Tuple[Decl, ...]

    def function(self, name: str) -> FunctionDef:
        for f in self.functions:
            if f.name == name:
                return f
        raise KeyError(name)
