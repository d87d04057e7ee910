"""
Infrastructure-specific Exceptions
File format and I/O related exceptions
"""

from typing import Optional

from .custom_exceptions import RainbowIndexException


class Graph6ParseError(RainbowIndexException):
    """Raised when a graph6 record is malformed."""

    def __init__(self, message: str, offset: int, record: Optional[str] = None):
        details = {"offset": offset}
        if record is not None:
            details["record"] = record

        super().__init__(
            message=f"{message} (byte offset {offset})",
            error_type="graph6_parse_error",
            exit_code=1,
            details=details,
        )
        self.offset = offset


class FileFormatError(RainbowIndexException):
    """Raised when a JSON or CSV artifact does not follow its documented schema."""

    def __init__(self, message: str, path: Optional[str] = None):
        details = {"path": path} if path else {}
        super().__init__(
            message=message,
            error_type="file_format_error",
            exit_code=1,
            details=details,
        )


class NotFoundError(RainbowIndexException):
    """Raised when an input file is missing."""

    def __init__(self, message: str, path: Optional[str] = None):
        details = {"path": path} if path else {}
        super().__init__(
            message=message,
            error_type="not_found",
            exit_code=1,
            details=details,
        )


class ReportWriteError(RainbowIndexException):
    """Raised when a report or export cannot be written."""

    def __init__(self, message: str, path: Optional[str] = None):
        details = {"path": path} if path else {}
        super().__init__(
            message=message,
            error_type="report_write_error",
            exit_code=1,
            details=details,
        )
