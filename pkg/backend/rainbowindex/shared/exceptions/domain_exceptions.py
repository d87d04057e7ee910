"""
Domain-specific Exceptions
Graph, coloring and search related exceptions
"""

from typing import Any, Dict, List, Optional, Sequence

from .custom_exceptions import RainbowIndexException


class InvalidGraphError(RainbowIndexException):
    """Raised when a graph violates the simple-graph invariants."""

    def __init__(
        self,
        message: str,
        n: Optional[int] = None,
        edge: Optional[Sequence[int]] = None,
    ):
        details: Dict[str, Any] = {}
        if n is not None:
            details["n"] = n
        if edge is not None:
            details["edge"] = list(edge)

        super().__init__(
            message=message,
            error_type="invalid_graph",
            exit_code=1,
            details=details,
        )


class DisconnectedGraphError(RainbowIndexException):
    """Raised when an operation that presumes connectivity gets a disconnected graph."""

    def __init__(self, message: str = "graph is not connected", n: Optional[int] = None):
        details = {"n": n} if n is not None else {}
        super().__init__(
            message=message,
            error_type="disconnected_graph",
            exit_code=1,
            details=details,
        )


class InvalidTerminalSetError(RainbowIndexException):
    """Raised when a terminal set or k is out of range."""

    def __init__(self, message: str, terminals: Optional[Sequence[int]] = None):
        details = {"terminals": sorted(terminals)} if terminals is not None else {}
        super().__init__(
            message=message,
            error_type="invalid_terminal_set",
            exit_code=1,
            details=details,
        )


class ColoringMismatchError(RainbowIndexException):
    """Raised when a coloring does not fit the graph it is applied to."""

    def __init__(
        self,
        message: str,
        expected_edges: Optional[int] = None,
        actual_edges: Optional[int] = None,
    ):
        details: Dict[str, Any] = {}
        if expected_edges is not None:
            details["expected_edges"] = expected_edges
        if actual_edges is not None:
            details["actual_edges"] = actual_edges

        super().__init__(
            message=message,
            error_type="coloring_mismatch",
            exit_code=1,
            details=details,
        )


class SearchBudgetExceededError(RainbowIndexException):
    """Raised when the exact search runs out of its node budget."""

    def __init__(self, message: str, lower: int, upper: int, nodes: int):
        super().__init__(
            message=message,
            error_type="budget_exhausted",
            exit_code=3,
            details={"lower": lower, "upper": upper, "nodes": nodes},
        )
        self.lower = lower
        self.upper = upper
        self.nodes = nodes


class OracleRefusedError(RainbowIndexException):
    """Raised when the brute-force oracle is asked for an instance above its size limit."""

    def __init__(self, message: str, edges: int, limit: int):
        super().__init__(
            message=message,
            error_type="oracle_refused",
            exit_code=1,
            details={"edges": edges, "limit": limit},
        )


class RecipePreconditionError(RainbowIndexException):
    """Raised when a coloring recipe does not apply to the given graph."""

    def __init__(self, message: str, recipe_id: Optional[str] = None):
        details = {"recipe_id": recipe_id} if recipe_id else {}
        super().__init__(
            message=message,
            error_type="recipe_precondition",
            exit_code=1,
            details=details,
        )


class RecipeVerificationError(RainbowIndexException):
    """Raised when no verified coloring can be produced for a recipe."""

    def __init__(
        self,
        message: str,
        recipe_id: Optional[str] = None,
        graph6: Optional[str] = None,
    ):
        details: Dict[str, Any] = {}
        if recipe_id:
            details["recipe_id"] = recipe_id
        if graph6:
            details["graph6"] = graph6

        super().__init__(
            message=message,
            error_type="recipe_verification_failed",
            exit_code=2,
            details=details,
        )


class TrivialBoundError(RainbowIndexException):
    """Raised when only the trivial bound n-1 is available."""

    def __init__(self, message: str, n: int):
        super().__init__(
            message=message,
            error_type="trivial_bound",
            exit_code=1,
            details={"n": n, "bound": n - 1},
        )
        self.bound = n - 1


class CalibrationError(RainbowIndexException):
    """Raised when no consistent catalog labeling exists."""

    def __init__(
        self,
        message: str,
        entry_id: Optional[str] = None,
        counterexamples: Optional[List[str]] = None,
        classes: Optional[List[List[str]]] = None,
    ):
        error_details: Dict[str, Any] = {"counterexamples": list(counterexamples or [])}
        if entry_id:
            error_details["entry_id"] = entry_id
        if classes is not None:
            error_details["classes"] = classes

        super().__init__(
            message=message,
            error_type="calibration_failed",
            exit_code=2,
            details=error_details,
        )
        self.counterexamples = error_details["counterexamples"]


class EnumerationRangeError(RainbowIndexException):
    """Raised when an enumeration or sweep is requested outside the supported orders."""

    def __init__(self, message: str, n: int, limit: int):
        super().__init__(
            message=message,
            error_type="enumeration_range",
            exit_code=1,
            details={"n": n, "limit": limit},
        )


class WitnessVerificationError(RainbowIndexException):
    """Raised when a coloring produced internally fails the rainbow check."""

    def __init__(self, message: str, failing_set: Optional[Sequence[int]] = None):
        details = {"failing_set": list(failing_set)} if failing_set is not None else {}
        super().__init__(
            message=message,
            error_type="witness_verification_failed",
            exit_code=2,
            details=details,
        )
