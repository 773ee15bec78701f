"""RSK 行挿入とインボリューション版 RSK."""

from __future__ import annotations

import bisect
from dataclasses import dataclass
from typing import Sequence

from wilfinv.errors import InvalidObjectError, PreconditionError
from wilfinv.perm.core import Permutation
from wilfinv.tableaux.syt import Rows, StandardYoungTableau

Cell = tuple[int, int]


@dataclass(frozen=True)
class RSKResult:
    insertion: StandardYoungTableau
    recording: StandardYoungTableau
    paths: tuple[tuple[Cell, ...], ...]   # 各挿入で値が置かれた (行, 列) の列


def row_insert(rows: Rows, x: int) -> tuple[Rows, tuple[Cell, ...]]:
    """x を行挿入（x より大きい最小の成分を押し出す）。新しい盤と挿入経路を返す.

    経路の最後が新しく増えたマス。
    """
    new_rows = [list(r) for r in rows]
    path: list[Cell] = []
    for r, row in enumerate(new_rows, start=1):
        c = bisect.bisect_right(row, x)
        path.append((r, c + 1))
        if c == len(row):
            row.append(x)
            return tuple(tuple(v) for v in new_rows), tuple(path)
        row[c], x = x, row[c]
    new_rows.append([x])
    path.append((len(new_rows), 1))
    return tuple(tuple(v) for v in new_rows), tuple(path)


def reverse_bump(rows: Rows, row: int) -> tuple[Rows, int]:
    """第 row 行の末尾マスを取り除き逆挿入。押し出された値を返す."""
    if not 1 <= row <= len(rows) or (row < len(rows) and len(rows[row]) == len(rows[row - 1])):
        raise InvalidObjectError(f"第 {row} 行の末尾は角ではありません: {rows}")
    new_rows = [list(r) for r in rows]
    x = new_rows[row - 1].pop()
    for r in range(row - 2, -1, -1):
        target = new_rows[r]
        # x より小さい最大の成分と入れ替える
        c = bisect.bisect_left(target, x) - 1
        target[c], x = x, target[c]
    return tuple(tuple(v) for v in new_rows if v), x


def remove_corner(rows: Rows, value: int) -> Rows:
    """角にある value をそのまま取り除く（押し出しなし）."""
    for r, row in enumerate(rows):
        if row and row[-1] == value:
            below = rows[r + 1] if r + 1 < len(rows) else ()
            assert len(below) < len(row), f"{value} は角にありません: {rows}"
            new_rows = list(rows)
            new_rows[r] = row[:-1]
            return tuple(v for v in new_rows if v)
    raise AssertionError(f"{value} は行末にありません: {rows}")


def rsk(word: Permutation | Sequence[int]) -> RSKResult:
    """一般の置換の RSK 対応 π ↦ (P, Q)."""
    values = word.word if isinstance(word, Permutation) else tuple(word)
    p_rows: Rows = ()
    q_rows: list[list[int]] = []
    paths = []
    for step, x in enumerate(values, start=1):
        p_rows, path = row_insert(p_rows, x)
        r, _ = path[-1]
        if r > len(q_rows):
            q_rows.append([])
        q_rows[r - 1].append(step)
        paths.append(path)
    return RSKResult(
        insertion=StandardYoungTableau(p_rows),
        recording=StandardYoungTableau(tuple(tuple(r) for r in q_rows)),
        paths=tuple(paths),
    )


def rsk_inverse(p_tab: StandardYoungTableau, q_tab: StandardYoungTableau) -> Permutation:
    if p_tab.shape != q_tab.shape:
        raise InvalidObjectError(f"P と Q の形が異なります: {p_tab.shape} / {q_tab.shape}")
    p_rows = p_tab.rows
    q_rows = [list(r) for r in q_tab.rows]
    out = []
    for step in range(len(p_tab), 0, -1):
        r = next(i for i, row in enumerate(q_rows, start=1) if row and row[-1] == step)
        q_rows[r - 1].pop()
        p_rows, x = reverse_bump(p_rows, r)
        out.append(x)
    return Permutation(tuple(reversed(out)))


def rsk_involution(p: Permutation) -> StandardYoungTableau:
    """インボリューション π の RSK 盤（P = Q）."""
    if not p.is_involution:
        raise PreconditionError(f"インボリューションではありません: {p}")
    return rsk(p).insertion


def rsk_involution_inv(t: StandardYoungTableau) -> Permutation:
    return rsk_inverse(t, t)


def longest_increasing(p: Permutation | Sequence[int]) -> int:
    """最長増加部分列の長さ（patience sorting）."""
    tails: list[int] = []
    for x in p:
        i = bisect.bisect_left(tails, x)
        if i == len(tails):
            tails.append(x)
        else:
            tails[i] = x
    return len(tails)
