"""例外定義: すべて ValueError 派生."""

from __future__ import annotations

from typing import Any


class InvalidObjectError(ValueError):
    """不正な組合せ対象（置換・分割・タブロー・マッチング・経路）."""


class PreconditionError(ValueError):
    """写像の定義域外の入力.

    パターン出現が理由の場合は pattern と witness（1始まりの位置列）を保持する。
    """

    def __init__(self, message: str, pattern: Any = None, witness: Any = None):
        super().__init__(message)
        self.pattern = pattern
        self.witness = witness


class InfeasibleError(ValueError):
    """ガードレールを超える網羅検証."""

    def __init__(self, message: str, estimate: int | None = None):
        super().__init__(message)
        self.estimate = estimate
