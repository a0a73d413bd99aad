"""
Error types and exit-code mapping for orbk.

Every failure a command can report is an OrbifoldError subclass carrying a
machine-readable error code. handle_error() turns any exception into the
standard error payload and the process exit code:

    0  success
    1  verification failure or internal inconsistency
    2  input error (syntax, semantics, unsupported request)
"""

from typing import Any, Dict, Optional

from model.utils.response import ReportResponse

EXIT_OK = 0
EXIT_VERIFICATION_FAILED = 1
EXIT_INPUT_ERROR = 2


class OrbifoldError(Exception):
    """Base exception for all orbk errors."""

    error_code = "ORBIFOLD_ERROR"
    exit_code = EXIT_INPUT_ERROR

    def __init__(self, message: str, error_code: Optional[str] = None, details: Optional[Dict[str, Any]] = None):
        self.message = message
        if error_code:
            self.error_code = error_code
        self.details = details or {}
        super().__init__(self.message)


# ── Input errors ──

class ExpressionSyntaxError(OrbifoldError):
    """A scalar entry string or the input file violates its grammar."""

    error_code = "SYNTAX_ERROR"

    def __init__(self, message: str, line: int = 1, column: int = 1, path: Optional[str] = None):
        details = {'line': line, 'column': column}
        if path:
            details['path'] = path
        super().__init__(f"{message} (line {line}, column {column})", details=details)
        self.line = line
        self.column = column
        self.path = path


class SemanticError(OrbifoldError):
    """Well-formed input that describes an invalid object."""

    error_code = "SEMANTIC_ERROR"


class ConductorMismatch(OrbifoldError):
    error_code = "CONDUCTOR_MISMATCH"


class UnknownCommand(OrbifoldError):
    error_code = "UNKNOWN_COMMAND"


class UnsupportedGeometry(OrbifoldError):
    error_code = "UNSUPPORTED_GEOMETRY"


class CapExceeded(OrbifoldError):
    """Closure grew past the cap: the group is infinite or too large."""

    error_code = "CAP_EXCEEDED"


class NonInvertibleGenerator(OrbifoldError):
    error_code = "NON_INVERTIBLE_GENERATOR"


class NonEffectiveAction(OrbifoldError):
    error_code = "NON_EFFECTIVE_ACTION"


class NotSL(OrbifoldError):
    error_code = "NOT_SL"


class NonAbelian(OrbifoldError):
    error_code = "NON_ABELIAN"


class TrivialFixedSpace(OrbifoldError):
    error_code = "TRIVIAL_FIXED_SPACE"


class IdentityElement(OrbifoldError):
    error_code = "IDENTITY_ELEMENT"


class OrderMismatch(OrbifoldError):
    error_code = "ORDER_MISMATCH"


# ── Results reported as verdicts ──

class NoLifts(OrbifoldError):
    """No equivariant monomorphism exists; the map is not good in the linear model."""

    error_code = "NO_LIFTS"
    exit_code = EXIT_OK


# ── Internal errors ──

class InternalInconsistency(OrbifoldError):
    """Exact arithmetic produced something a theorem forbids. Always a bug."""

    error_code = "INTERNAL_INCONSISTENCY"
    exit_code = EXIT_VERIFICATION_FAILED


def handle_error(error: Exception) -> tuple:
    """
    Map an exception to an error payload and exit code.

    Args:
        error: The exception raised while running a command

    Returns:
        Tuple of (payload dict, exit code)
    """
    if isinstance(error, OrbifoldError):
        return ReportResponse.error(
            message=error.message,
            error_code=error.error_code,
            status_code=error.exit_code,
            details=error.details or None
        )
    return ReportResponse.error(
        message=f"Internal error - {error}",
        error_code="INTERNAL_ERROR",
        status_code=EXIT_VERIFICATION_FAILED
    )
