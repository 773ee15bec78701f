"""設定管理: YAML読込 + Settings dataclass."""

from __future__ import annotations

import copy
import dataclasses
import os
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any

import yaml

_PROJECT_ROOT = Path(__file__).resolve().parents[2]
DEFAULT_CONFIG_PATH = _PROJECT_ROOT / "config" / "default_settings.yaml"

# 検証ターゲットごとの既定上限（Motzkin 添字 n、または対象ごとの長さパラメータ）
_DEFAULT_MAX_N: dict[str, int] = {
    "motzkin": 30,
    "table1": 6,
    "conj1": 6,
    "conj2": 5,
    "conj3": 12,
    "lemma_f": 6,
    "lemma_R": 6,
    "lemma_P": 6,
    "lemma_Q": 6,
    "eq_O": 6,
    "psi_bijection": 7,
    "phi_bijection": 10,
    "matching_suite": 5,
    "path_suite": 8,
}

_SLOW_MAX_N: dict[str, int] = {
    "motzkin": 60,
    "table1": 7,
    "conj1": 7,
    "conj2": 7,
    "conj3": 14,
    "lemma_f": 7,
    "lemma_R": 7,
    "lemma_P": 7,
    "lemma_Q": 7,
    "eq_O": 7,
    "psi_bijection": 8,
    "phi_bijection": 12,
    "matching_suite": 6,
    "path_suite": 9,
}


@dataclass
class LoggingConfig:
    level: str = "INFO"
    file: str = "data/wilfinv.log"
    max_bytes: int = 10_485_760
    backup_count: int = 3


@dataclass
class EnumerationConfig:
    max_length: int = 16          # インボリューション族の長さ上限（i(16)=46206736）
    max_perm_length: int = 10     # 置換族 S の長さ上限（10!=3628800）
    threads: int = 0              # 0=CPU数, WILF_THREADS で上書き
    shard_min_length: int = 11    # この長さ以上でのみ並列シャーディング


@dataclass
class VerifyConfig:
    default_max_n: dict[str, int] = field(default_factory=lambda: dict(_DEFAULT_MAX_N))
    slow_max_n: dict[str, int] = field(default_factory=lambda: dict(_SLOW_MAX_N))


@dataclass
class OutputConfig:
    report_dir: str = "data/reports"
    progress: bool = True


@dataclass
class Settings:
    logging: LoggingConfig = field(default_factory=LoggingConfig)
    enumeration: EnumerationConfig = field(default_factory=EnumerationConfig)
    verify: VerifyConfig = field(default_factory=VerifyConfig)
    output: OutputConfig = field(default_factory=OutputConfig)

    @property
    def worker_count(self) -> int:
        """並列ワーカー数（0 以下なら CPU 数）."""
        threads = self.enumeration.threads
        if threads <= 0:
            threads = os.cpu_count() or 1
        return max(1, threads)

    def resolve_path(self, relative: str) -> Path:
        """プロジェクトルートからの相対パスを絶対パスに変換."""
        path = Path(relative)
        if path.is_absolute():
            return path
        return _PROJECT_ROOT / relative


def _merge_dict(base: dict, override: dict) -> dict:
    """再帰的にdictをマージ."""
    result = copy.deepcopy(base)
    for k, v in override.items():
        if k in result and isinstance(result[k], dict) and isinstance(v, dict):
            result[k] = _merge_dict(result[k], v)
        else:
            result[k] = copy.deepcopy(v)
    return result


def _dict_to_dataclass(cls, data: dict):
    """dictからdataclassインスタンスを構築（未知のキーは無視）."""
    field_names = {f.name for f in dataclasses.fields(cls)}
    return cls(**{k: v for k, v in data.items() if k in field_names})


def _apply_env(settings: Settings) -> None:
    """.env と環境変数で設定を上書き."""
    from dotenv import load_dotenv

    load_dotenv(_PROJECT_ROOT / ".env", override=False)

    threads = os.environ.get("WILF_THREADS", "").strip()
    if threads.isdigit():
        settings.enumeration.threads = int(threads)

    max_length = os.environ.get("WILF_MAX_LENGTH", "").strip()
    if max_length.isdigit():
        settings.enumeration.max_length = int(max_length)

    max_perm_length = os.environ.get("WILF_MAX_PERM_LENGTH", "").strip()
    if max_perm_length.isdigit():
        settings.enumeration.max_perm_length = int(max_perm_length)

    level = os.environ.get("WILF_LOG_LEVEL", "").strip()
    if level:
        settings.logging.level = level


def save_settings(settings: Settings, path: Path | str | None = None) -> None:
    """SettingsをYAMLファイルに書き込む."""
    cfg_path = Path(path) if path else DEFAULT_CONFIG_PATH
    cfg_path.parent.mkdir(parents=True, exist_ok=True)
    data = dataclasses.asdict(settings)
    with open(cfg_path, "w", encoding="utf-8") as f:
        yaml.dump(data, f, allow_unicode=True, default_flow_style=False, sort_keys=False)


def load_settings(path: Path | str | None = None, use_env: bool = True) -> Settings:
    """YAML設定ファイルを読み込みSettingsを返す（環境変数でオーバーライド）."""
    cfg_path = Path(path) if path else DEFAULT_CONFIG_PATH
    settings = Settings()

    if cfg_path.exists():
        with open(cfg_path, "r", encoding="utf-8") as f:
            raw: dict[str, Any] = yaml.safe_load(f) or {}

        for yaml_key, cls in (
            ("logging", LoggingConfig),
            ("enumeration", EnumerationConfig),
            ("output", OutputConfig),
        ):
            if yaml_key in raw:
                setattr(settings, yaml_key, _dict_to_dataclass(cls, raw[yaml_key]))

        # verify はターゲット表を既定値にマージ（YAML に無いターゲットも残す）
        if "verify" in raw:
            merged = _merge_dict(dataclasses.asdict(settings.verify), raw["verify"])
            settings.verify = _dict_to_dataclass(VerifyConfig, merged)

    if use_env:
        _apply_env(settings)
    return settings
