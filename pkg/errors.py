#!/usr/bin/env python3
"""
Errors - Exception hierarchy for the generalized Clifford algebra workbench.

Every error carries a machine-readable ``kind`` and the CLI exit code it maps to:
0 pass, 1 check failure, 2 usage/parse error, 3 internal.
"""

from typing import Any, Dict, Optional

EXIT_PASS = 0
EXIT_CHECK_FAILURE = 1
EXIT_USAGE = 2
EXIT_INTERNAL = 3


class GCAError(Exception):
    """Base exception for workbench errors."""
    kind = "error"
    exit_code = EXIT_INTERNAL

    def __init__(self, message: str, offset: Optional[int] = None):
        super().__init__(message)
        self.message = message
        self.offset = offset

    def to_dict(self) -> Dict[str, Any]:
        """Machine-readable form written to stderr by the CLI."""
        data: Dict[str, Any] = {"error": self.kind, "message": self.message}
        if self.offset is not None:
            data["offset"] = self.offset
        return data


class ScalarError(GCAError):
    """Invalid cyclotomic arithmetic (division by zero, modulus mismatch)."""
    kind = "scalar"


class RootOfUnityError(GCAError):
    """The Gauss-sum phase could not be identified as a power of the ambient root."""
    kind = "root_of_unity"


class PreconditionError(GCAError):
    """An operation was called outside its documented preconditions."""
    kind = "precondition"
    exit_code = EXIT_USAGE


class IndexRangeError(PreconditionError):
    """A generator, projector or braid index is out of range."""
    kind = "index_range"


class TokenizeError(GCAError):
    """Unknown character or unbalanced bracket in an expression."""
    kind = "tokenize"
    exit_code = EXIT_USAGE


class ParseError(GCAError):
    """Syntax error in an expression."""
    kind = "parse"
    exit_code = EXIT_USAGE


class EvaluationError(GCAError):
    """An expression parsed but cannot be evaluated."""
    kind = "evaluation"
    exit_code = EXIT_USAGE


class ContextMisuseError(EvaluationError):
    """A state-only construct (projector, vacuum) used in a pure algebra expression."""
    kind = "context_misuse"


class BackendMismatchError(EvaluationError):
    """Values built under different backends or scalar contexts were combined."""
    kind = "backend_mismatch"


class SerializationError(GCAError):
    """Malformed JSON, schema violation or modulus mismatch on load."""
    kind = "serialization"
    exit_code = EXIT_USAGE


class RepBudgetError(GCAError):
    """Matrix representation larger than the configured dimension budget."""
    kind = "rep_budget"
    exit_code = EXIT_USAGE


class DiagramError(GCAError):
    """A diagram primitive was requested in a disallowed placement."""
    kind = "diagram"
    exit_code = EXIT_USAGE


class UsageError(GCAError):
    """Bad command-line arguments."""
    kind = "usage"
    exit_code = EXIT_USAGE
