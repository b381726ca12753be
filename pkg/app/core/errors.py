"""
Error handling and categorization for the game solver
"""
from typing import Optional, Dict, Any
from enum import Enum


class ErrorCategory(str, Enum):
    """Error categories for classification"""
    VALIDATION = "validation"
    PARSE = "parse"
    NOT_FOUND = "not_found"
    LIMIT = "limit"
    INTERNAL = "internal"


class ErrorCode(str, Enum):
    """Standardized error codes"""
    # Game construction
    SHAPE_MISMATCH = "SHAPE_MISMATCH"
    NON_FINITE_PAYOFF = "NON_FINITE_PAYOFF"
    EMPTY_GAME = "EMPTY_GAME"
    DUPLICATE_LABEL = "DUPLICATE_LABEL"
    INVALID_ORDERING = "INVALID_ORDERING"
    INVALID_VALUATION = "INVALID_VALUATION"
    INVALID_MODEL = "INVALID_MODEL"

    # Solver arguments
    INDEX_OUT_OF_BOUNDS = "INDEX_OUT_OF_BOUNDS"
    SAME_STRATEGY = "SAME_STRATEGY"
    NOT_TWO_BY_TWO = "NOT_TWO_BY_TWO"
    INVALID_MIXED_PROFILE = "INVALID_MIXED_PROFILE"
    INVALID_PARAMETER = "INVALID_PARAMETER"

    # Limits
    GAME_TOO_LARGE = "GAME_TOO_LARGE"

    # Input files and flags
    FILE_NOT_FOUND = "FILE_NOT_FOUND"
    PARSE_ERROR = "PARSE_ERROR"
    BAD_FLAG = "BAD_FLAG"

    # Internal errors
    UNEXPECTED_ERROR = "UNEXPECTED_ERROR"


EXIT_SUCCESS = 0
EXIT_UNEXPECTED = 1
EXIT_INVALID_INPUT = 2
EXIT_GAME_TOO_LARGE = 3


class GameError(Exception):
    """Base exception for solver errors"""

    def __init__(
        self,
        code: ErrorCode,
        message: str,
        category: ErrorCategory,
        exit_code: int = EXIT_UNEXPECTED,
        details: Optional[Dict[str, Any]] = None
    ):
        self.code = code
        self.message = message
        self.category = category
        self.exit_code = exit_code
        self.details = details or {}
        super().__init__(self.message)

    def to_dict(self) -> Dict[str, Any]:
        """Convert error to dictionary format"""
        error_data = {
            "error": {
                "code": self.code.value,
                "message": self.message,
                "category": self.category.value,
            }
        }

        if self.details:
            error_data["error"]["details"] = self.details

        return error_data


class ValidationError(GameError):
    """Invalid game data, model parameters or solver arguments (exit 2)"""
    def __init__(self, code: ErrorCode, message: str, details: Optional[Dict[str, Any]] = None):
        super().__init__(
            code=code,
            message=message,
            category=ErrorCategory.VALIDATION,
            exit_code=get_exit_status_for_error_code(code),
            details=details
        )


class ParseError(GameError):
    """Malformed game file (exit 2)"""
    def __init__(self, message: str, details: Optional[Dict[str, Any]] = None):
        super().__init__(
            code=ErrorCode.PARSE_ERROR,
            message=message,
            category=ErrorCategory.PARSE,
            exit_code=EXIT_INVALID_INPUT,
            details=details
        )


class NotFoundError(GameError):
    """Missing input file (exit 2)"""
    def __init__(self, message: str, details: Optional[Dict[str, Any]] = None):
        super().__init__(
            code=ErrorCode.FILE_NOT_FOUND,
            message=message,
            category=ErrorCategory.NOT_FOUND,
            exit_code=EXIT_INVALID_INPUT,
            details=details
        )


class GameTooLargeError(GameError):
    """Profile count above the enumeration cap (exit 3)"""
    def __init__(self, message: str, details: Optional[Dict[str, Any]] = None):
        super().__init__(
            code=ErrorCode.GAME_TOO_LARGE,
            message=message,
            category=ErrorCategory.LIMIT,
            exit_code=EXIT_GAME_TOO_LARGE,
            details=details
        )


class InternalError(GameError):
    """Unexpected failure (exit 1)"""
    def __init__(self, message: str, details: Optional[Dict[str, Any]] = None):
        super().__init__(
            code=ErrorCode.UNEXPECTED_ERROR,
            message=message,
            category=ErrorCategory.INTERNAL,
            exit_code=EXIT_UNEXPECTED,
            details=details
        )


# Error mapping for process exit codes
ERROR_CODE_TO_EXIT_STATUS = {
    ErrorCode.SHAPE_MISMATCH: EXIT_INVALID_INPUT,
    ErrorCode.NON_FINITE_PAYOFF: EXIT_INVALID_INPUT,
    ErrorCode.EMPTY_GAME: EXIT_INVALID_INPUT,
    ErrorCode.DUPLICATE_LABEL: EXIT_INVALID_INPUT,
    ErrorCode.INVALID_ORDERING: EXIT_INVALID_INPUT,
    ErrorCode.INVALID_VALUATION: EXIT_INVALID_INPUT,
    ErrorCode.INVALID_MODEL: EXIT_INVALID_INPUT,
    ErrorCode.INDEX_OUT_OF_BOUNDS: EXIT_INVALID_INPUT,
    ErrorCode.SAME_STRATEGY: EXIT_INVALID_INPUT,
    ErrorCode.NOT_TWO_BY_TWO: EXIT_INVALID_INPUT,
    ErrorCode.INVALID_MIXED_PROFILE: EXIT_INVALID_INPUT,
    ErrorCode.INVALID_PARAMETER: EXIT_INVALID_INPUT,
    ErrorCode.GAME_TOO_LARGE: EXIT_GAME_TOO_LARGE,
    ErrorCode.FILE_NOT_FOUND: EXIT_INVALID_INPUT,
    ErrorCode.PARSE_ERROR: EXIT_INVALID_INPUT,
    ErrorCode.BAD_FLAG: EXIT_INVALID_INPUT,
    ErrorCode.UNEXPECTED_ERROR: EXIT_UNEXPECTED,
}


def get_exit_status_for_error_code(error_code: ErrorCode) -> int:
    """Get process exit status for an error code"""
    return ERROR_CODE_TO_EXIT_STATUS.get(error_code, EXIT_UNEXPECTED)
