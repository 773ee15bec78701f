"""ヤング図形の横断（各行・各列に 1 がちょうど一つ）とそのパターン包含・ピーク."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

from wilfinv.errors import InvalidObjectError
from wilfinv.fillings.diagram import YoungDiagram
from wilfinv.perm.core import Permutation, pattern_bounds

Point = tuple[int, int]   # (column, row)


@dataclass(frozen=True)
class Transversal:
    """列 i の 1 が行 t_i にある横断."""

    diagram: YoungDiagram
    ones: tuple[int, ...]

    def __post_init__(self) -> None:
        ones = tuple(int(v) for v in self.ones)
        k = len(ones)
        d = self.diagram
        if d.num_columns != k or d.num_rows != k:
            raise InvalidObjectError(
                f"横断には列数 = 行数 = {k} の図形が必要です: {list(d.row_lengths)}"
            )
        if sorted(ones) != list(range(1, k + 1)):
            raise InvalidObjectError(f"各行に 1 がちょうど一つではありません: {list(ones)}")
        for i, t in enumerate(ones, start=1):
            if not d.contains(i, t):
                raise InvalidObjectError(f"マス ({i},{t}) が図形 {list(d.row_lengths)} の外です")
        object.__setattr__(self, "ones", ones)

    def __len__(self) -> int:
        return len(self.ones)

    @property
    def points(self) -> tuple[Point, ...]:
        return tuple(enumerate(self.ones, start=1))

    @property
    def word(self) -> Permutation:
        return Permutation(self.ones)

    @property
    def is_symmetric(self) -> bool:
        """(i,j) に 1 ⇔ (j,i) に 1（図形は自己共役）."""
        return self.diagram.is_self_conjugate and self.word.is_involution

    def type_word(self) -> str:
        return self.diagram.type_word()


def permutation_matrix(p: Permutation) -> Transversal:
    return Transversal(YoungDiagram.square(len(p)), p.word)


def _search(
    points: list[Point],
    bounds: list[tuple[int, int]],
    diagram: YoungDiagram,
    chosen: list[Point],
    start: int,
    max_row: int,
) -> tuple[int, ...] | None:
    k = len(chosen)
    if k == len(bounds):
        return tuple(col for col, _ in chosen)
    lo, hi = bounds[k]
    for idx in range(start, len(points) - (len(bounds) - k) + 1):
        col, row = points[idx]
        if lo >= 0 and chosen[lo][1] > row:
            continue
        if hi >= 0 and chosen[hi][1] < row:
            continue
        corner_row = max(max_row, row)
        # 部分行列の右下隅が図形外なら、以降の拡張も図形外
        if not diagram.contains(col, corner_row):
            continue
        chosen.append((col, row))
        found = _search(points, bounds, diagram, chosen, idx + 1, corner_row)
        if found is not None:
            return found
        chosen.pop()
    return None


def find_filling_occurrence(
    points: Iterable[Point], diagram: YoungDiagram, pat: Permutation
) -> tuple[int, ...] | None:
    """pat を図形内の部分行列として実現する列の組（1 の集合 points の中から）."""
    if len(pat) == 0:
        return ()
    pts = sorted(points)
    if len(pat) > len(pts):
        return None
    return _search(pts, pattern_bounds(pat.word), diagram, [], 0, 0)


def filling_contains(points: Iterable[Point], diagram: YoungDiagram, pat: Permutation) -> bool:
    return find_filling_occurrence(points, diagram, pat) is not None


def transversal_contains(t: Transversal, pat: Permutation) -> bool:
    return filling_contains(t.points, t.diagram, pat)


def transversal_peaks(t: Transversal) -> frozenset[int]:
    """c_{i−1}=c_i=c_{i+1} かつ t_{i−1}<t_i>t_{i+1} となる列 i."""
    heights = t.diagram.column_heights
    w = t.ones
    return frozenset(
        i for i in range(2, len(w))
        if heights[i - 2] == heights[i - 1] == heights[i] and w[i - 2] < w[i - 1] > w[i]
    )


def transversals(diagram: YoungDiagram) -> Iterator[Transversal]:
    """図形の横断を全列挙（列ごとに行を小さい順に選ぶ）."""
    k = diagram.num_columns
    if diagram.num_rows != k:
        return
    ones = [0] * k
    used = [False] * (k + 1)

    def rec(col: int) -> Iterator[Transversal]:
        if col > k:
            yield Transversal(diagram, tuple(ones))
            return
        for row in range(1, diagram.column_heights[col - 1] + 1):
            if used[row]:
                continue
            used[row] = True
            ones[col - 1] = row
            yield from rec(col + 1)
            used[row] = False

    yield from rec(1)


def symmetric_transversals(diagram: YoungDiagram) -> Iterator[Transversal]:
    """自己共役図形の対称横断を全列挙（最小の未決定列 i に行 j ≥ i を置き (j,i) も埋める）."""
    if not diagram.is_self_conjugate:
        return
    k = diagram.num_columns
    ones = [0] * (k + 1)

    def rec(col: int) -> Iterator[Transversal]:
        while col <= k and ones[col]:
            col += 1
        if col > k:
            yield Transversal(diagram, tuple(ones[1:]))
            return
        for row in range(col, diagram.column_heights[col - 1] + 1):
            if ones[row]:
                continue
            ones[col], ones[row] = row, col
            yield from rec(col + 1)
            ones[col] = ones[row] = 0

    yield from rec(1)
