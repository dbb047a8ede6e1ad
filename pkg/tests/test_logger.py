"""Tests for logger module."""

import json
import logging
import sys

import pytest

from zipfred.core.config import Config
from zipfred.core.logger import get_logger, reset_logging, set_log_level, setup_logging


@pytest.fixture
def reset_logger(reset_config):
    """Reset logging configuration before and after test."""
    reset_logging()
    yield
    reset_logging()


class TestSetupLogging:
    """Test logging setup functionality."""

    def test_setup_logging_defaults(self, reset_logger):
        """Test that setup_logging uses default configuration."""
        setup_logging()
        logger = logging.getLogger("zipfred.test")
        assert logger.level == logging.NOTSET  # Inherits from root
        assert len(logging.getLogger().handlers) > 0

    def test_console_goes_to_stderr(self, reset_logger):
        """Log lines never share stdout with reports."""
        setup_logging()
        streams = [
            h.stream
            for h in logging.getLogger().handlers
            if isinstance(h, logging.StreamHandler) and not isinstance(h, logging.FileHandler)
        ]
        assert streams and all(s is sys.stderr for s in streams)

    def test_setup_logging_with_config(self, reset_logger):
        """Test setup_logging with custom config."""
        config = Config()
        config.set("logging.level", "DEBUG")
        config.set("logging.file_enabled", False)

        setup_logging(config=config)
        assert logging.getLogger().level == logging.DEBUG

    def test_setup_logging_idempotent(self, reset_logger):
        """Test that setup_logging can be called multiple times safely."""
        setup_logging()
        handler_count_1 = len(logging.getLogger().handlers)

        setup_logging()
        handler_count_2 = len(logging.getLogger().handlers)

        # Should not add duplicate handlers
        assert handler_count_1 == handler_count_2

    def test_setup_logging_force(self, reset_logger):
        """Test that force parameter reconfigures logging."""
        setup_logging()
        config = Config()
        config.set("logging.level", "ERROR")

        setup_logging(config=config, force=True)
        assert logging.getLogger().level == logging.ERROR
        assert len(logging.getLogger().handlers) == 1

    def test_setup_logging_file_handler(self, reset_logger, tmp_path):
        """Test file handler creation when enabled."""
        log_file = tmp_path / "zipfred.log"
        config = Config()
        config.set("logging.file_enabled", True)
        config.set("logging.file_path", str(log_file))
        config.set("logging.level", "INFO")
        config.set("logging.format", "%(levelname)s - %(message)s")

        setup_logging(config=config)
        logging.getLogger("zipfred.test").info("Test message")
        for handler in logging.getLogger().handlers:
            handler.flush()

        assert log_file.exists()
        content = log_file.read_text()
        assert "INFO - Test message" in content

    def test_setup_logging_file_handler_failure(self, reset_logger, tmp_path):
        """Test that file handler failure doesn't crash the app."""
        blocker = tmp_path / "not_a_dir"
        blocker.write_text("")
        config = Config()
        config.set("logging.file_enabled", True)
        config.set("logging.file_path", str(blocker / "zipfred.log"))

        # Should not raise exception
        setup_logging(config=config)
        # Console handler should still be present
        assert len(logging.getLogger().handlers) == 1

    def test_setup_logging_invalid_level(self, reset_logger):
        """Test that invalid log level defaults to WARNING."""
        config = Config()
        config.set("logging.level", "INVALID_LEVEL")

        setup_logging(config=config)
        assert logging.getLogger().level == logging.WARNING


class TestGetLogger:
    """Test get_logger function."""

    def test_get_logger_auto_setup(self, reset_logger):
        """Test that get_logger automatically sets up logging."""
        # Clear handlers the test runner attached during the call phase
        reset_logging()
        assert len(logging.getLogger().handlers) == 0

        logger = get_logger("zipfred.core.codec")
        assert len(logging.getLogger().handlers) > 0
        assert logger.name == "zipfred.core.codec"

    def test_get_logger_root(self, reset_logger):
        """Test get_logger without name returns root logger."""
        setup_logging()
        assert get_logger().name == "root"

    def test_get_logger_multiple_calls(self, reset_logger):
        """Test that multiple calls to get_logger work correctly."""
        setup_logging()
        assert get_logger("test") is get_logger("test")


class TestResetLogging:
    """Test reset_logging function."""

    def test_reset_logging(self, reset_logger):
        """Test that reset_logging clears handlers."""
        setup_logging()
        assert len(logging.getLogger().handlers) > 0

        reset_logging()
        assert len(logging.getLogger().handlers) == 0

    def test_reset_logging_allows_reconfiguration(self, reset_logger):
        """Test that reset allows reconfiguration."""
        setup_logging()
        reset_logging()

        setup_logging()
        assert len(logging.getLogger().handlers) > 0


class TestSetLogLevel:
    """Test set_log_level function."""

    @pytest.mark.parametrize(
        "name, level",
        [
            ("DEBUG", logging.DEBUG),
            ("info", logging.INFO),
            ("WARNING", logging.WARNING),
            ("ERROR", logging.ERROR),
            ("INVALID", logging.WARNING),
        ],
    )
    def test_set_log_level(self, name, level, reset_logger):
        """Root logger and its handlers follow the requested level."""
        setup_logging()
        set_log_level(name)

        root_logger = logging.getLogger()
        assert root_logger.level == level
        for handler in root_logger.handlers:
            assert handler.level == level


class TestLoggingIntegration:
    """Test logging integration with Config."""

    def test_logging_with_env_vars(self, reset_logger, monkeypatch):
        """Test that logging respects environment variables."""
        monkeypatch.setenv("ZIPFRED_LOGGING__LEVEL", "DEBUG")
        Config._instance = None
        Config._config = {}

        setup_logging(config=Config())
        assert logging.getLogger().level == logging.DEBUG

    def test_logging_with_config_file(self, reset_logger, tmp_path):
        """Test logging with config file settings."""
        config_file = tmp_path / "config.json"
        config_file.write_text(json.dumps({"logging": {"level": "ERROR", "file_enabled": False}}))

        setup_logging(config=Config(str(config_file)))
        assert logging.getLogger().level == logging.ERROR
