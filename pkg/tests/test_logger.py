"""ロガー設定のテスト."""

from __future__ import annotations

import logging
from logging.handlers import RotatingFileHandler

import pytest

from wilfinv.logger import ROOT_NAME, get_logger, setup_logger


class TestSetupLogger:
    def test_handlers_and_file(self, settings):
        logger = setup_logger(settings)
        kinds = sorted(type(h).__name__ for h in logger.handlers)
        assert kinds == ["RotatingFileHandler", "StreamHandler"]
        assert settings.resolve_path(settings.logging.file).parent.exists()

    def test_reconfigure_replaces_handlers(self, settings):
        setup_logger(settings)
        settings.logging.level = "WARNING"
        logger = setup_logger(settings)
        assert len(logger.handlers) == 2
        assert logger.level == logging.WARNING

    def test_no_file(self, settings):
        settings.logging.file = ""
        logger = setup_logger(settings)
        assert not any(isinstance(h, RotatingFileHandler) for h in logger.handlers)

    def test_bad_level(self, settings):
        settings.logging.level = "LOUD"
        with pytest.raises(ValueError):
            setup_logger(settings)


class TestGetLogger:
    def test_child(self):
        parent = get_logger("wilfinv.enumeration.verify").parent
        assert parent.name in (ROOT_NAME, "wilfinv.enumeration")
        assert get_logger().name == ROOT_NAME
