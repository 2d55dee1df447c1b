"""
Logging utilities for etapoly.
Structured JSON logging on stderr; stdout is reserved for computed results.
"""

import json
import logging
import sys
from datetime import datetime, timezone
from typing import Any, Dict, Optional


class StructuredFormatter(logging.Formatter):
    """Custom formatter for structured logging"""

    def format(self, record: logging.LogRecord) -> str:
        """Format log record as structured JSON"""
        log_entry = {
            "timestamp": datetime.now(timezone.utc).isoformat(),
            "level": record.levelname,
            "logger": record.name,
            "message": record.getMessage(),
            "module": record.module,
            "function": record.funcName,
            "line": record.lineno,
        }

        # Add extra fields if present
        if hasattr(record, "extra_fields"):
            log_entry.update(record.extra_fields)

        # Add exception info if present
        if record.exc_info:
            log_entry["exception"] = self.formatException(record.exc_info)

        return json.dumps(log_entry, default=str)


_HANDLER_TAG = "_etapoly_handler"


def setup_logging(level: str = "INFO", log_file: Optional[str] = None) -> logging.Logger:
    """Attach structured handlers to the root logger (idempotent)."""
    root = logging.getLogger()
    root.setLevel(getattr(logging, level.upper()))

    # Prevent duplicate handlers
    for handler in list(root.handlers):
        if getattr(handler, _HANDLER_TAG, False):
            root.removeHandler(handler)

    console_handler = logging.StreamHandler(sys.stderr)
    console_handler.setFormatter(StructuredFormatter())
    setattr(console_handler, _HANDLER_TAG, True)
    root.addHandler(console_handler)

    # File handler for errors
    if log_file:
        try:
            file_handler = logging.FileHandler(log_file)
            file_handler.setLevel(logging.ERROR)
            file_handler.setFormatter(StructuredFormatter())
            setattr(file_handler, _HANDLER_TAG, True)
            root.addHandler(file_handler)
        except OSError as e:
            # If file logging fails, just log to stderr
            root.warning(f"Failed to setup file logging: {e}")

    return root


_logger = logging.getLogger("etapoly")


def log_check_result(suite: str, passed: bool, details: str = "", extra_fields: Optional[Dict[str, Any]] = None):
    """Log the outcome of a verification suite with structured data"""
    fields = {
        "suite": suite,
        "passed": passed,
        "details": details,
        "log_type": "check_result",
    }
    if extra_fields:
        fields.update(extra_fields)

    level = logging.INFO if passed else logging.WARNING
    _logger.log(level, f"Suite {suite}: {'PASS' if passed else 'FAIL'}", extra={"extra_fields": fields})


def log_error(error: Exception, context: str = "", extra_fields: Optional[Dict[str, Any]] = None):
    """Log errors with context and optional extra fields"""
    error_fields = {
        "error_type": type(error).__name__,
        "error_message": str(error),
        "context": context,
        "log_type": "error",
    }

    if extra_fields:
        error_fields.update(extra_fields)

    _logger.error(f"Error in {context}: {error}", extra={"extra_fields": error_fields})
