"""
Base Exception Classes for RainbowIndex
Custom exception hierarchy shared by the library and the CLI
"""

from typing import Any, Dict, Optional


class RainbowIndexException(Exception):
    """Base exception for RainbowIndex."""

    def __init__(
        self,
        message: str,
        error_type: str = "rainbowindex_error",
        exit_code: int = 1,
        details: Optional[Dict[str, Any]] = None,
    ):
        super().__init__(message)
        self.message = message
        self.error_type = error_type
        self.exit_code = exit_code
        self.details = details or {}

    def __str__(self) -> str:
        return f"{self.error_type}: {self.message}"

    def to_dict(self) -> Dict[str, Any]:
        """Convert exception to a dictionary for JSON output."""
        return {
            "error_type": self.error_type,
            "message": self.message,
            "exit_code": self.exit_code,
            "details": self.details,
        }
