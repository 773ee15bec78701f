"""ヤング図形（列は左から、行は上から番号付け）."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from wilfinv.errors import InvalidObjectError
from wilfinv.tableaux.partition import Partition, partitions


@dataclass(frozen=True)
class YoungDiagram:
    row_lengths: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        rows = tuple(int(v) for v in self.row_lengths)
        try:
            Partition(rows)
        except InvalidObjectError as e:
            raise InvalidObjectError(f"ヤング図形の行の長さが不正です: {list(rows)}") from e
        object.__setattr__(self, "row_lengths", rows)

    @classmethod
    def square(cls, n: int) -> YoungDiagram:
        return cls((n,) * n)

    @classmethod
    def from_type_word(cls, word: str) -> YoungDiagram:
        """境界の U/D 語から図形を復元（下から上へ行を積む）."""
        rows_bottom_up = []
        east = 0
        for step in word:
            if step == "U":
                east += 1
            elif step == "D":
                if east == 0:
                    raise InvalidObjectError(f"境界語が長さ 0 の行を作ります: {word}")
                rows_bottom_up.append(east)
            else:
                raise InvalidObjectError(f"境界語は U/D のみです: {word}")
        if word and word[-1] != "D":
            raise InvalidObjectError(f"境界語が D で終わっていません: {word}")
        return cls(tuple(reversed(rows_bottom_up)))

    @property
    def num_rows(self) -> int:
        return len(self.row_lengths)

    @property
    def num_columns(self) -> int:
        return self.row_lengths[0] if self.row_lengths else 0

    @property
    def column_heights(self) -> tuple[int, ...]:
        """c_i = 長さ i 以上の行の数."""
        return Partition(self.row_lengths).conjugate.parts

    @property
    def conjugate(self) -> YoungDiagram:
        return YoungDiagram(self.column_heights)

    @property
    def is_self_conjugate(self) -> bool:
        return self.column_heights == self.row_lengths

    @property
    def size(self) -> int:
        return sum(self.row_lengths)

    def contains(self, column: int, row: int) -> bool:
        """マス (column, row) が図形内にあるか."""
        return 1 <= row <= self.num_rows and 1 <= column <= self.row_lengths[row - 1]

    def cells(self) -> Iterator[tuple[int, int]]:
        for r, length in enumerate(self.row_lengths, start=1):
            for c in range(1, length + 1):
                yield c, r

    def type_word(self) -> str:
        """右境界を左下から右上へなぞった語（東 U, 北 D）."""
        word = []
        prev = 0
        for length in reversed(self.row_lengths):
            word.append("U" * (length - prev))
            word.append("D")
            prev = length
        return "".join(word)


def type_of(obj) -> str:
    """図形・横断・マッチング・振動盤の型語."""
    return obj.type_word()


def self_conjugate_diagrams(max_columns: int) -> Iterator[YoungDiagram]:
    """列数 max_columns 以下の自己共役な（空でない）図形を全列挙."""
    for size in range(1, max_columns * max_columns + 1):
        for shape in partitions(size, max_part=max_columns, max_rows=max_columns):
            diagram = YoungDiagram(shape.parts)
            if diagram.is_self_conjugate:
                yield diagram
