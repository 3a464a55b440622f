"""
Unit tests for core.logging_config module
"""

import unittest
import io
import sys
import os
import logging
import tempfile
from pathlib import Path
from unittest.mock import patch

# Add the project root to the path
sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from core.config import BraidFloerConfig, PathConfig, set_config
from core.validation import BudgetExceeded
from core.logging_config import (
    BraidFloerLogFormatter, PerformanceLogFilter, LoggingContext,
    setup_logging, get_logger, log_command, log_performance, log_error_with_context,
    log_function_call
)


def _record(msg="Test message", level=logging.INFO):
    return logging.LogRecord(
        name="test_logger",
        level=level,
        pathname="/path/to/test.py",
        lineno=42,
        msg=msg,
        args=(),
        exc_info=None
    )


class TestBraidFloerLogFormatter(unittest.TestCase):
    """Test cases for BraidFloerLogFormatter class"""

    def test_format_basic_message(self):
        """Test basic message formatting"""
        formatted = BraidFloerLogFormatter(use_colors=False).format(_record())
        self.assertIn("INFO", formatted)
        self.assertIn("test_logger", formatted)
        self.assertIn("Test message", formatted)

    def test_format_with_colors(self):
        """Test message formatting with colors enabled"""
        formatted = BraidFloerLogFormatter(use_colors=True).format(_record())
        self.assertIn("\033[32mINFO\033[0m", formatted)

    def test_format_without_module(self):
        """Test that the logger name can be left out"""
        formatted = BraidFloerLogFormatter(use_colors=False, include_module=False).format(_record())
        self.assertNotIn("test_logger", formatted)

    def test_different_log_levels(self):
        """Test formatting for different log levels"""
        formatter = BraidFloerLogFormatter(use_colors=True)
        for level in (logging.DEBUG, logging.INFO, logging.WARNING, logging.ERROR, logging.CRITICAL):
            with self.subTest(level=level):
                formatted = formatter.format(_record(level=level))
                self.assertIn(logging.getLevelName(level), formatted)


class TestPerformanceLogFilter(unittest.TestCase):
    """Test cases for PerformanceLogFilter class"""

    def test_plain_records_pass_unchanged(self):
        """Test that records without timing are untouched"""
        record = _record()
        self.assertTrue(PerformanceLogFilter().filter(record))
        self.assertEqual(record.msg, "Test message")
        self.assertFalse(hasattr(record, 'timing_suffix'))

    def test_timing_is_appended(self):
        """Test that timed records get their duration from the formatter"""
        record = _record("Performance: solve")
        record.timing = 1.5
        self.assertTrue(PerformanceLogFilter().filter(record))
        self.assertEqual(record.msg, "Performance: solve")
        formatted = BraidFloerLogFormatter(use_colors=False).format(record)
        self.assertTrue(formatted.endswith("Performance: solve (took 1.500s)"))

    def test_timing_appears_once_per_handler(self):
        """Test two handlers sharing a record each show the duration once"""
        logger = logging.getLogger("test_two_handlers")
        logger.propagate = False
        streams = [io.StringIO(), io.StringIO()]
        for stream in streams:
            handler = logging.StreamHandler(stream)
            handler.setFormatter(BraidFloerLogFormatter(use_colors=False))
            handler.addFilter(PerformanceLogFilter())
            logger.addHandler(handler)
        logger.setLevel(logging.INFO)
        try:
            log_performance("solve", 0.25, logger)
        finally:
            logger.handlers.clear()
        for index, stream in enumerate(streams):
            with self.subTest(handler=index):
                self.assertEqual(stream.getvalue().count("(took 0.250s)"), 1)


class TestLoggingContext(unittest.TestCase):
    """Test cases for LoggingContext context manager"""

    def test_logging_context_basic(self):
        """Test basic LoggingContext functionality"""
        with LoggingContext("test_operation") as ctx:
            self.assertEqual(ctx.operation, "test_operation")
            self.assertIsNotNone(ctx.start_time)

    def test_logging_context_success(self):
        """Test start and completion messages"""
        logger = get_logger("test_context")
        with patch.object(logger, 'info') as mock_info:
            with LoggingContext("test_op", logger=logger):
                pass
        self.assertEqual(mock_info.call_count, 2)
        self.assertIn("Starting: test_op", mock_info.call_args_list[0][0][0])
        self.assertIn("Completed: test_op", mock_info.call_args_list[1][0][0])

    def test_logging_context_failure(self):
        """Test that exceptions are logged and propagate"""
        logger = get_logger("test_context_failure")
        with patch.object(logger, 'error') as mock_error:
            with self.assertRaises(ValueError):
                with LoggingContext("test_op", logger=logger):
                    raise ValueError("boom")
        mock_error.assert_called_once()
        self.assertIn("ValueError: boom", mock_error.call_args[0][0])


class TestLoggingFunctions(unittest.TestCase):
    """Test cases for logging utility functions"""

    def test_get_logger(self):
        """Test logger creation"""
        logger = get_logger("test_module")
        self.assertIsInstance(logger, logging.Logger)
        self.assertEqual(logger.name, "test_module")

    def test_log_performance(self):
        """Test performance logging function"""
        logger = get_logger("test_perf")
        with patch.object(logger, 'handle') as mock_handle:
            log_performance("test_operation", 1.5, logger)
        mock_handle.assert_called_once()
        record = mock_handle.call_args[0][0]
        self.assertIn("test_operation", record.msg)
        self.assertEqual(record.timing, 1.5)

    def test_log_command(self):
        """Test command logging"""
        logger = get_logger("test_command")
        with patch.object(logger, 'info') as mock_info:
            log_command("floor", {"strands": 3}, logger)
        mock_info.assert_called_once_with("Command: floor (strands=3)")

    def test_log_error_with_context(self):
        """Test error logging with context data"""
        logger = get_logger("test_error")
        try:
            raise ValueError("Test error")
        except ValueError as e:
            with patch.object(logger, 'error') as mock_error:
                log_error_with_context(e, "reducing word", {"word": "1 -1"}, logger)
        mock_error.assert_called_once()
        message = mock_error.call_args[0][0]
        self.assertIn("Error during reducing word", message)
        self.assertIn("ValueError", message)
        self.assertIn("word=1 -1", message)

    def test_log_function_call(self):
        """Test function call logging decorator"""
        logger = get_logger("test_func")

        @log_function_call(logger)
        def add(x, y):
            return x + y

        with patch.object(logger, 'handle') as mock_handle:
            self.assertEqual(add(1, 2), 3)
        mock_handle.assert_called_once()
        self.assertEqual(add.__name__, "add")

    def test_log_function_call_reraises(self):
        """Test that the decorator logs and re-raises"""
        logger = get_logger("test_func_error")

        @log_function_call(logger)
        def fail():
            raise RuntimeError("no")

        with patch.object(logger, 'error') as mock_error:
            with self.assertRaises(RuntimeError):
                fail()
        mock_error.assert_called_once()

    def test_log_function_call_limit_is_a_warning(self):
        """Test a fired budget is logged once as a warning, without a traceback"""
        logger = get_logger("test_func_budget")

        @log_function_call(logger)
        def inner():
            raise BudgetExceeded("over budget", limit="step_budget")

        @log_function_call(logger)
        def outer():
            return inner()

        with patch.object(logger, 'warning') as mock_warning, patch.object(logger, 'error') as mock_error:
            with self.assertRaises(BudgetExceeded):
                outer()
        mock_warning.assert_called_once()
        self.assertIn("inner stopped", mock_warning.call_args[0][0])
        self.assertNotIn('exc_info', mock_warning.call_args[1])
        mock_error.assert_not_called()


class TestSetupLogging(unittest.TestCase):
    """Integration tests for setup_logging"""

    def setUp(self):
        self.temp_dir = tempfile.TemporaryDirectory()
        set_config(BraidFloerConfig(paths=PathConfig(app_data_dir=Path(self.temp_dir.name))))
        self.root_handlers = logging.getLogger().handlers[:]
        self.root_level = logging.getLogger().level

    def tearDown(self):
        root = logging.getLogger()
        for handler in root.handlers:
            handler.close()
        root.handlers[:] = self.root_handlers
        root.setLevel(self.root_level)
        set_config(None)
        self.temp_dir.cleanup()

    def test_setup_logging_level(self):
        """Test the configured level reaches the root logger"""
        logger = setup_logging(log_level="DEBUG", file_output=False)
        self.assertIsInstance(logger, logging.Logger)
        self.assertEqual(logger.level, logging.DEBUG)

    def test_console_goes_to_stderr(self):
        """Test that console logging never writes to stdout"""
        logger = setup_logging(log_level="INFO", file_output=False)
        streams = [handler.stream for handler in logger.handlers
                   if isinstance(handler, logging.StreamHandler)]
        self.assertEqual(streams, [sys.stderr])

    def test_log_level_filtering(self):
        """Test that records under the level stay out of the log file"""
        log_file = Path(self.temp_dir.name) / "level_test.log"
        setup_logging(log_level="WARNING", log_file=log_file,
                      console_output=False, file_output=True)
        logger = get_logger("level_test")

        logger.info("Info message")
        logger.warning("Warning message")
        with LoggingContext("test_operation", logger=logger):
            pass
        for handler in logging.getLogger().handlers:
            handler.flush()

        log_content = log_file.read_text(encoding='utf-8')
        self.assertNotIn("Info message", log_content)
        self.assertIn("Warning message", log_content)
        self.assertNotIn("test_operation", log_content)


if __name__ == '__main__':
    unittest.main()
