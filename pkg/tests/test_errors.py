"""
Tests for error categorization and structured logging
"""
import json
import logging

from app.core.errors import (
    ERROR_CODE_TO_EXIT_STATUS,
    ErrorCode,
    GameTooLargeError,
    NotFoundError,
    ValidationError,
    get_exit_status_for_error_code,
)
from app.core.logging import ErrorLogger, PlainFormatter, StructuredFormatter, get_error_logger, setup_logging


class TestErrors:
    """Test error payloads and exit statuses"""

    def test_every_code_has_an_exit_status(self):
        assert set(ERROR_CODE_TO_EXIT_STATUS) == set(ErrorCode)

    def test_exit_statuses(self):
        assert get_exit_status_for_error_code(ErrorCode.BAD_FLAG) == 2
        assert get_exit_status_for_error_code(ErrorCode.GAME_TOO_LARGE) == 3
        assert get_exit_status_for_error_code(ErrorCode.UNEXPECTED_ERROR) == 1
        assert NotFoundError("gone").exit_code == 2
        assert GameTooLargeError("big").exit_code == 3

    def test_to_dict(self):
        error = ValidationError(ErrorCode.SAME_STRATEGY, "Cannot compare", details={"player": "Bob"})
        assert error.to_dict() == {
            "error": {
                "code": "SAME_STRATEGY",
                "message": "Cannot compare",
                "category": "validation",
                "details": {"player": "Bob"},
            }
        }

    def test_to_dict_without_details(self):
        assert "details" not in NotFoundError("gone").to_dict()["error"]


class TestLogging:
    """Test formatters and error tracking"""

    def make_record(self, **extra):
        record = logging.LogRecord("app.test", logging.INFO, __file__, 10, "solved", (), None)
        for key, value in extra.items():
            setattr(record, key, value)
        return record

    def test_structured_formatter(self):
        record = self.make_record(command="solve", extra_data={"profiles": 4})
        data = json.loads(StructuredFormatter().format(record))
        assert data["message"] == "solved"
        assert data["command"] == "solve"
        assert data["profiles"] == 4
        assert data["timestamp"].endswith("Z")

    def test_plain_formatter(self):
        text = PlainFormatter().format(self.make_record(command="iesds", error_code="BAD_FLAG"))
        assert text.endswith("solved [cmd:iesds] [error:BAD_FLAG]")

    def test_error_record_fields(self):
        tracker = ErrorLogger()
        records = []
        handler = logging.Handler()
        handler.emit = records.append
        tracker.logger.addHandler(handler)
        try:
            tracker.log_error("PARSE_ERROR", "bad file", category="parse", command="solve", details={"line": 3})
        finally:
            tracker.logger.removeHandler(handler)
        assert len(records) == 1
        assert records[0].error_code == "PARSE_ERROR"
        assert records[0].error_category == "parse"
        assert records[0].getMessage() == "bad file [cmd:solve] [details:line:3] [error:PARSE_ERROR]"

    def test_tracked_errors_stay_off_stderr(self, capsys):
        setup_logging()
        get_error_logger().log_error("BAD_FLAG", "bad flag", category="validation", command="solve")
        assert capsys.readouterr().err == ""
