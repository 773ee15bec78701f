"""ロガー設定.

stdout は JSON/CSV の出力に使うため、ログはすべて stderr とファイルへ流す。
"""

from __future__ import annotations

import logging
import sys
from logging.handlers import RotatingFileHandler

from wilfinv.config import Settings

ROOT_NAME = "wilfinv"
_FORMAT = "%(asctime)s [%(levelname)-8s] %(name)s: %(message)s"
_DATEFMT = "%Y-%m-%d %H:%M:%S"


def _parse_level(level: str) -> int:
    value = logging.getLevelName(level.upper())
    if not isinstance(value, int):
        raise ValueError(f"未知のログレベル: {level}")
    return value


def setup_logger(settings: Settings) -> logging.Logger:
    """ルートロガー wilfinv を構成して返す.

    再呼び出し時は前回のハンドラを外して付け直す（同一プロセスで CLI を複数回実行しても
    レベル・出力先が最新の設定に従う）。logging.file が空ならファイル出力なし。
    """
    log_cfg = settings.logging
    logger = logging.getLogger(ROOT_NAME)
    logger.setLevel(_parse_level(log_cfg.level))
    logger.propagate = False

    for handler in list(logger.handlers):
        logger.removeHandler(handler)
        handler.close()

    fmt = logging.Formatter(_FORMAT, datefmt=_DATEFMT)

    console = logging.StreamHandler(sys.stderr)
    console.setFormatter(fmt)
    logger.addHandler(console)

    if log_cfg.file:
        log_path = settings.resolve_path(log_cfg.file)
        log_path.parent.mkdir(parents=True, exist_ok=True)
        file_handler = RotatingFileHandler(
            log_path,
            maxBytes=log_cfg.max_bytes,
            backupCount=log_cfg.backup_count,
            encoding="utf-8",
        )
        file_handler.setFormatter(fmt)
        logger.addHandler(file_handler)

    logger.debug(f"ロガー構成: level={log_cfg.level}, file={log_cfg.file or '(なし)'}")
    return logger


def get_logger(name: str = ROOT_NAME) -> logging.Logger:
    """子ロガーを取得（モジュールでは get_logger(__name__)）."""
    return logging.getLogger(name)
