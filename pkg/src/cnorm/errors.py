"""Exception types shared across the toolkit.

Source-level errors carry a (line, column) pair and a short machine code so
the CLI can print them in `file:line:col: code: message` form.
"""

from __future__ import annotations


class CnormError(Exception):
    """Base class for all toolkit errors."""


class SourceError(CnormError):
    """An error at a specific position in the input text."""

    code = "error"

    def __init__(self, message: str, line: int, column: int):
        super().__init__(message)
        self.message = message
        self.line = line
        self.column = column

    def format(self, filename: str = "<input>") -> str:
        return f"{filename}:{self.line}:{self.column}: {self.code}: {self.message}"


class UnterminatedComment(SourceError):
    code = "unterminated-comment"


class UnterminatedLiteral(SourceError):
    code = "unterminated-literal"


class InvalidCharacter(SourceError):
    code = "invalid-character"


class ParseError(SourceError):
    code = "syntax-error"


class UnsupportedConstruct(SourceError):
    code = "unsupported-construct"


class FixpointNotReached(CnormError):
    """The normalizer hit its iteration bound; signals a rule-interaction bug."""


class InvalidParameter(CnormError):
    """A caller-supplied parameter is out of range."""


class ParameterMismatch(CnormError):
    """Two fingerprint sets were built with different (k, w) parameters."""


class UnknownFunction(CnormError):
    """Entry point not present in the translation unit."""


class ArityMismatch(CnormError):
    """Entry point called with the wrong number of arguments."""


class UnsupportedForEvaluation(CnormError):
    """The unit uses a feature the interpreter does not model (float/double)."""
