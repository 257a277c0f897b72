"""
Exception hierarchy. Every error the CLI can report carries its exit code.
"""

from typing import Any, Dict, Optional


class QdcError(Exception):
    exit_code = 1


class InputError(QdcError):
    """Malformed group, representation or section input, or a bad selector."""

    exit_code = 2


class CoverageError(QdcError):
    """A centralizer is not covered by the irreducible-representation catalog."""

    exit_code = 3

    def __init__(self, message: str, class_elements=None, centralizer_order: Optional[int] = None):
        super().__init__(message)
        self.class_elements = list(class_elements or [])
        self.centralizer_order = centralizer_order


class GateFailure(QdcError):
    """An identity that must hold exactly failed."""

    exit_code = 4

    def __init__(self, gate: str, message: str, counterexample: Optional[Dict[str, Any]] = None):
        super().__init__(f"[{gate}] {message}")
        self.gate = gate
        self.counterexample = counterexample or {}


class ResourceBound(QdcError):
    """A configured size bound would be exceeded."""

    exit_code = 5

    def __init__(self, message: str, partial: Optional[Dict[str, Any]] = None):
        super().__init__(message)
        self.partial = partial or {}
