"""
Consistent JSON report formatting for orbk.

Payloads are plain dicts rendered with sorted keys so that identical input
yields byte-identical output. Rationals are never floats: they are rendered
as "p/q" strings in lowest terms, "p" when integral.
"""

import json
from fractions import Fraction
from typing import Any, Dict, Optional


def render_rational(value) -> str:
    """Render an exact rational as "p/q" (or "p" when integral)."""
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


class OrderedMap(dict):
    """A dict whose insertion order is meaningful (degree tables ascend by value, not by string)."""


def _canonical(obj):
    if isinstance(obj, Fraction):
        return render_rational(obj)
    if hasattr(obj, 'to_json'):
        return _canonical(obj.to_json())
    if isinstance(obj, OrderedMap):
        return {str(k): _canonical(v) for k, v in obj.items()}
    if isinstance(obj, dict):
        return {str(k): _canonical(obj[k]) for k in sorted(obj, key=str)}
    if isinstance(obj, (list, tuple)):
        return [_canonical(v) for v in obj]
    return obj


def render_json(payload: Any) -> str:
    """
    Serialize a payload deterministically: keys sorted (except in OrderedMap),
    fixed indent, trailing newline.
    """
    return json.dumps(_canonical(payload), indent=2, ensure_ascii=False) + "\n"


class ReportResponse:
    """Standardized command report formatter."""

    @staticmethod
    def success(data: Any = None) -> tuple:
        """
        Format a successful report.

        Args:
            data: The report body (dict, list, or any JSON-serializable object)

        Returns:
            Tuple of (payload, exit code 0)
        """
        return data, 0

    @staticmethod
    def verification(data: Dict[str, Any], passed: bool) -> tuple:
        """
        Format a verification report.

        Args:
            data: The report body
            passed: Whether every check passed

        Returns:
            Tuple of (payload, 0 when passed else 1)
        """
        return data, 0 if passed else 1

    @staticmethod
    def error(message: str, error_code: str = "INTERNAL_ERROR", status_code: int = 2, details: Optional[Dict] = None) -> tuple:
        """
        Format an error report.

        Args:
            message: Human-readable error message
            error_code: Machine-readable error code
            status_code: Process exit code
            details: Additional error details (optional)

        Returns:
            Tuple of (payload, status_code)
        """
        response = {
            "success": False,
            "message": message,
            "error": error_code,
            "status": status_code
        }
        if details:
            response["details"] = details

        return response, status_code
