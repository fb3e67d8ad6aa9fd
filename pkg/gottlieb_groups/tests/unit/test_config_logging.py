import logging
from pathlib import Path

import pytest
from pydantic import ValidationError

from gottlieb_groups.config import BUNDLED_CATALOG, Settings, get_settings
from gottlieb_groups.logging import NoOpLogger, resolve_level, set_package_level, setup_logger


class TestSettings:
    def test_defaults(self, monkeypatch):
        for name in ("GOTTLIEB_CATALOG", "GOTTLIEB_LOG_LEVEL", "GOTTLIEB_CHECK_LIMIT", "GOTTLIEB_DUMP_K_MAX"):
            monkeypatch.delenv(name, raising=False)
        settings = Settings()
        assert settings.catalog is None
        assert settings.log_level == "INFO"
        assert settings.check_limit == 1000
        assert settings.dump_k_max == 30
        assert settings.catalog_path() == BUNDLED_CATALOG

    def test_environment(self, monkeypatch, tmp_path):
        monkeypatch.setenv("GOTTLIEB_CATALOG", str(tmp_path / "env.txt"))
        monkeypatch.setenv("GOTTLIEB_CHECK_LIMIT", "50")
        settings = Settings()
        assert settings.check_limit == 50
        assert settings.catalog_path() == tmp_path / "env.txt"

    def test_override_wins(self, monkeypatch, tmp_path):
        monkeypatch.setenv("GOTTLIEB_CATALOG", str(tmp_path / "env.txt"))
        assert Settings().catalog_path(Path("flag.txt")) == Path("flag.txt")

    def test_invalid_limit(self, monkeypatch):
        monkeypatch.setenv("GOTTLIEB_CHECK_LIMIT", "0")
        with pytest.raises(ValidationError):
            Settings()

    def test_cached(self):
        assert get_settings() is get_settings()

    def test_bundled_catalog_exists(self):
        assert BUNDLED_CATALOG.is_file()


class TestLogging:
    def test_noop_by_default(self, monkeypatch):
        monkeypatch.delenv("REAL_LOGGER", raising=False)
        logger = setup_logger("gottlieb_groups.test_noop")
        assert isinstance(logger, NoOpLogger)
        logger.info("ignored")
        logger.exception("ignored")
        assert not logger.isEnabledFor(logging.CRITICAL)

    def test_real_logger(self, monkeypatch, tmp_path):
        monkeypatch.setenv("REAL_LOGGER", "true")
        monkeypatch.chdir(tmp_path)
        logger = setup_logger("gottlieb_groups.test_real", "debug")
        assert isinstance(logger, logging.Logger)
        assert logger.level == logging.DEBUG
        package = logging.getLogger("gottlieb_groups")
        assert not package.propagate
        assert any(type(h) is logging.StreamHandler for h in package.handlers)

    def test_module_loggers_share_handlers(self, monkeypatch, tmp_path):
        monkeypatch.setenv("REAL_LOGGER", "true")
        monkeypatch.chdir(tmp_path)
        first = setup_logger("gottlieb_groups.test_share_a")
        handlers = list(logging.getLogger("gottlieb_groups").handlers)
        setup_logger("gottlieb_groups.test_share_b")
        assert logging.getLogger("gottlieb_groups").handlers == handlers
        assert not first.handlers

    def test_package_level(self, monkeypatch, tmp_path):
        monkeypatch.setenv("REAL_LOGGER", "true")
        monkeypatch.chdir(tmp_path)
        logger = setup_logger("gottlieb_groups.test_level")
        set_package_level("warning")
        assert logger.level == logging.WARNING

    @pytest.mark.parametrize("level, expected", [
        ("debug", logging.DEBUG),
        (" Warning ", logging.WARNING),
        ("nonsense", logging.INFO),
        (None, logging.INFO),
        (logging.ERROR, logging.ERROR),
    ])
    def test_resolve_level(self, level, expected):
        assert resolve_level(level) == expected
