"""設定読込のテスト."""

from __future__ import annotations

from pathlib import Path

from wilfinv.config import DEFAULT_CONFIG_PATH, load_settings, save_settings


class TestLoadSettings:
    def test_defaults(self):
        s = load_settings(use_env=False)
        assert DEFAULT_CONFIG_PATH.exists()
        assert s.enumeration.max_length == 16
        assert s.enumeration.max_perm_length == 10
        assert s.verify.default_max_n["table1"] == 6
        assert s.verify.slow_max_n["phi_bijection"] == 12
        assert s.output.report_dir == "data/reports"

    def test_missing_file_gives_defaults(self, tmp_path):
        s = load_settings(tmp_path / "none.yaml", use_env=False)
        assert s.enumeration.shard_min_length == 11
        assert s.logging.level == "INFO"

    def test_partial_verify_table_is_merged(self, tmp_path):
        path = tmp_path / "cfg.yaml"
        path.write_text("verify:\n  default_max_n:\n    table1: 3\n", encoding="utf-8")
        s = load_settings(path, use_env=False)
        assert s.verify.default_max_n["table1"] == 3
        assert s.verify.default_max_n["motzkin"] == 30

    def test_env_override(self, monkeypatch):
        monkeypatch.setenv("WILF_THREADS", "3")
        monkeypatch.setenv("WILF_MAX_PERM_LENGTH", "8")
        monkeypatch.setenv("WILF_LOG_LEVEL", "DEBUG")
        s = load_settings()
        assert s.enumeration.threads == 3
        assert s.worker_count == 3
        assert s.enumeration.max_perm_length == 8
        assert s.logging.level == "DEBUG"

    def test_save_round_trip(self, tmp_path, settings):
        settings.enumeration.max_length = 12
        path = tmp_path / "saved.yaml"
        save_settings(settings, path)
        again = load_settings(path, use_env=False)
        assert again.enumeration.max_length == 12
        assert again.enumeration.threads == 1
        assert again.verify.default_max_n == settings.verify.default_max_n


class TestSettings:
    def test_worker_count_defaults_to_cpus(self, settings):
        settings.enumeration.threads = 0
        assert settings.worker_count >= 1

    def test_resolve_path(self, settings, tmp_path):
        assert settings.resolve_path(str(tmp_path)) == tmp_path
        relative = settings.resolve_path("data/reports")
        assert relative.is_absolute()
        assert relative.parts[-2:] == ("data", "reports")
        assert Path(relative).parent.parent == DEFAULT_CONFIG_PATH.parent.parent
