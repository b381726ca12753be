"""
Error handling for command execution
"""
import json
import sys
from typing import Callable

from app.core.errors import GameError, InternalError, EXIT_SUCCESS
from app.core.logging import get_error_logger


def execute(command: str, handler: Callable[[], str], as_json: bool = False) -> int:
    """
    Run a command handler and write its output.

    Catches every exception and converts it into an error message plus the
    exit status of its error code.
    """
    try:
        output = handler()
        sys.stdout.write(output)
        return EXIT_SUCCESS

    except GameError as e:
        return handle_game_error(e, command, as_json)

    except Exception as e:
        return handle_unexpected_error(e, command, as_json)


def handle_game_error(error: GameError, command: str, as_json: bool) -> int:
    """Report a known solver error"""
    get_error_logger().log_error(
        error_code=error.code.value,
        message=error.message,
        category=error.category.value,
        command=command,
        details=error.details,
    )
    _write_error(error, as_json)
    return error.exit_code


def handle_unexpected_error(error: Exception, command: str, as_json: bool) -> int:
    """Report an unexpected failure"""
    wrapped = InternalError(
        f"Unexpected error: {type(error).__name__}: {error}",
        details={"exception_type": type(error).__name__}
    )
    get_error_logger().log_error(
        error_code=wrapped.code.value,
        message=wrapped.message,
        category=wrapped.category.value,
        command=command,
        exc_info=sys.exc_info(),
    )
    _write_error(wrapped, as_json)
    return wrapped.exit_code


def _write_error(error: GameError, as_json: bool) -> None:
    if as_json:
        sys.stdout.write(json.dumps(error.to_dict(), indent=2, default=str) + "\n")
    sys.stderr.write(f"error: [{error.code.value}] {error.message}\n")
