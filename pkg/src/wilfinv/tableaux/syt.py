"""標準ヤング盤 (SYT): 行優先で保持し、列は計算で得る."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from wilfinv.errors import InvalidObjectError
from wilfinv.tableaux.partition import Partition, partitions

Rows = tuple[tuple[int, ...], ...]


def _check_rows(rows: Rows) -> None:
    """行・列が狭義増加かつ形が分割になっているか."""
    if any(len(r) == 0 for r in rows):
        raise InvalidObjectError(f"空の行があります: {rows}")
    if any(len(a) < len(b) for a, b in zip(rows, rows[1:])):
        raise InvalidObjectError(f"行の長さが単調減少ではありません: {rows}")
    for r in rows:
        if any(a >= b for a, b in zip(r, r[1:])):
            raise InvalidObjectError(f"行が狭義増加ではありません: {rows}")
    for upper, lower in zip(rows, rows[1:]):
        if any(upper[c] >= lower[c] for c in range(len(lower))):
            raise InvalidObjectError(f"列が狭義増加ではありません: {rows}")


@dataclass(frozen=True)
class StandardYoungTableau:
    rows: Rows = ()

    def __post_init__(self) -> None:
        rows = tuple(tuple(int(v) for v in r) for r in self.rows)
        _check_rows(rows)
        entries = sorted(v for r in rows for v in r)
        if entries != list(range(1, len(entries) + 1)):
            raise InvalidObjectError(f"成分が 1..n ではありません: {rows}")
        object.__setattr__(self, "rows", rows)

    def __len__(self) -> int:
        return sum(len(r) for r in self.rows)

    @property
    def shape(self) -> Partition:
        return Partition(tuple(len(r) for r in self.rows))

    @property
    def columns(self) -> Rows:
        if not self.rows:
            return ()
        return tuple(
            tuple(r[c] for r in self.rows if len(r) > c) for c in range(len(self.rows[0]))
        )

    @property
    def num_columns(self) -> int:
        return len(self.rows[0]) if self.rows else 0

    def position(self, k: int) -> tuple[int, int]:
        """成分 k の (行, 列)（1始まり）."""
        for r, row in enumerate(self.rows, start=1):
            if k in row:
                return r, row.index(k) + 1
        raise InvalidObjectError(f"{k} はこの盤にありません")


def syt_descents(t: StandardYoungTableau) -> frozenset[int]:
    """k+1 が k より下の行にある k の集合."""
    row_of = {v: r for r, row in enumerate(t.rows) for v in row}
    return frozenset(k for k in range(1, len(t)) if row_of[k + 1] > row_of[k])


def syt_ascents(t: StandardYoungTableau) -> frozenset[int]:
    return frozenset(range(1, len(t))) - syt_descents(t)


def standard_young_tableaux(shape: Partition) -> Iterator[StandardYoungTableau]:
    """形 shape の SYT を全列挙（最大成分を角に置いて再帰）."""

    def rec(parts: tuple[int, ...]) -> Iterator[list[list[int]]]:
        size = sum(parts)
        if size == 0:
            yield [[] for _ in shape.parts]
            return
        for r in range(len(parts)):
            if parts[r] == 0:
                continue
            # 角: 次の行が短い
            if r + 1 < len(parts) and parts[r + 1] == parts[r]:
                continue
            smaller = parts[:r] + (parts[r] - 1,) + parts[r + 1:]
            for filling in rec(smaller):
                filling[r].append(size)
                yield filling
                filling[r].pop()

    for filling in rec(shape.parts):
        yield StandardYoungTableau(tuple(tuple(row) for row in filling if row))


def tableaux_with_max_columns(n: int, max_columns: int) -> Iterator[StandardYoungTableau]:
    """成分数 n・列数 max_columns 以下の SYT を全列挙."""
    for shape in partitions(n, max_part=max_columns):
        yield from standard_young_tableaux(shape)
