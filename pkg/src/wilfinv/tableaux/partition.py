"""分割 λ と 1マスの増減."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Literal

from wilfinv.errors import InvalidObjectError


@dataclass(frozen=True)
class Partition:
    parts: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        parts = tuple(int(v) for v in self.parts)
        if any(v <= 0 for v in parts) or any(a < b for a, b in zip(parts, parts[1:])):
            raise InvalidObjectError(f"分割は正の広義単調減少列です: {list(parts)}")
        object.__setattr__(self, "parts", parts)

    def __len__(self) -> int:
        return len(self.parts)

    def __str__(self) -> str:
        if not self.parts:
            return "∅"
        return "(" + ",".join(str(v) for v in self.parts) + ")"

    @property
    def size(self) -> int:
        return sum(self.parts)

    def part(self, row: int) -> int:
        """第 row 行（1始まり）の長さ。範囲外は 0."""
        return self.parts[row - 1] if 0 < row <= len(self.parts) else 0

    @property
    def conjugate(self) -> Partition:
        if not self.parts:
            return Partition(())
        return Partition(tuple(
            sum(1 for v in self.parts if v >= c) for c in range(1, self.parts[0] + 1)
        ))

    def add_cell(self, row: int) -> Partition:
        parts = list(self.parts)
        if row == len(parts) + 1:
            parts.append(1)
        elif 1 <= row <= len(parts):
            parts[row - 1] += 1
        else:
            raise InvalidObjectError(f"{self} の第 {row} 行にはマスを追加できません")
        return Partition(tuple(parts))

    def remove_cell(self, row: int) -> Partition:
        if not 1 <= row <= len(self.parts):
            raise InvalidObjectError(f"{self} の第 {row} 行からはマスを削除できません")
        parts = list(self.parts)
        parts[row - 1] -= 1
        return Partition(tuple(v for v in parts if v > 0))


@dataclass(frozen=True)
class Step:
    """λ^{i−1} → λ^i の変化: 追加/削除されたマス (row, column)."""

    kind: Literal["add", "delete"]
    row: int
    column: int


def step_between(before: Partition, after: Partition) -> Step:
    """ちょうど1マス異なる二つの分割の差分。それ以外は拒否."""
    if after.size == before.size + 1:
        kind, small, large = "add", before, after
    elif after.size == before.size - 1:
        kind, small, large = "delete", after, before
    else:
        raise InvalidObjectError(f"{before} → {after} は1マスの増減ではありません")

    diff_rows = [r for r in range(1, len(large) + 1) if large.part(r) != small.part(r)]
    if len(diff_rows) != 1 or large.part(diff_rows[0]) != small.part(diff_rows[0]) + 1:
        raise InvalidObjectError(f"{before} → {after} は1マスの増減ではありません")
    row = diff_rows[0]
    return Step(kind=kind, row=row, column=large.part(row))


def partitions(
    n: int, max_part: int | None = None, max_rows: int | None = None
) -> Iterator[Partition]:
    """n の分割を辞書式降順で列挙（部分の上限・行数の上限つき）."""
    if max_part is None:
        max_part = n
    if max_rows is None:
        max_rows = n

    def rec(remaining: int, bound: int, rows_left: int, acc: list[int]) -> Iterator[Partition]:
        if remaining == 0:
            yield Partition(tuple(acc))
            return
        if rows_left == 0:
            return
        for v in range(min(bound, remaining), 0, -1):
            acc.append(v)
            yield from rec(remaining - v, v, rows_left - 1, acc)
            acc.pop()

    yield from rec(n, max_part, max_rows, [])
