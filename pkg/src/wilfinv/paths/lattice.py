"""格子路（上昇 U=(1,1), 下降 D=(1,−1)）と Dyck 路の列挙."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Iterator

from wilfinv.errors import InvalidObjectError


@dataclass(frozen=True)
class LatticePath:
    steps: str
    start: tuple[int, int] = (0, 0)

    def __post_init__(self) -> None:
        if set(self.steps) - {"U", "D"}:
            raise InvalidObjectError(f"経路は U/D のみです: {self.steps!r}")

    def __len__(self) -> int:
        return len(self.steps)

    def __str__(self) -> str:
        return self.steps

    @property
    def x_range(self) -> tuple[int, int]:
        return self.start[0], self.start[0] + len(self.steps)

    @property
    def heights(self) -> tuple[int, ...]:
        """h₀, …, h_m（絶対高さ）."""
        h = self.start[1]
        out = [h]
        for s in self.steps:
            h += 1 if s == "U" else -1
            out.append(h)
        return tuple(out)

    def height_at(self, x: int) -> int:
        lo, hi = self.x_range
        if not lo <= x <= hi:
            raise InvalidObjectError(f"x={x} は経路の範囲 [{lo},{hi}] の外です")
        return self.heights[x - lo]

    @property
    def end(self) -> tuple[int, int]:
        return self.x_range[1], self.heights[-1]

    @property
    def is_nonnegative(self) -> bool:
        return min(self.heights) >= 0

    @property
    def is_dyck(self) -> bool:
        return self.start[1] == 0 and self.heights[-1] == 0 and self.is_nonnegative

    def segment(self, x0: int, x1: int) -> LatticePath:
        """絶対横座標 [x0, x1] の部分路."""
        lo, _ = self.x_range
        return LatticePath(self.steps[x0 - lo:x1 - lo], (x0, self.height_at(x0)))

    def reflected(self, axis: int) -> LatticePath:
        """直線 x = axis に関する鏡映（語を逆順にし U/D を入れ替える）."""
        lo, hi = self.x_range
        word = "".join("D" if s == "U" else "U" for s in reversed(self.steps))
        return LatticePath(word, (2 * axis - hi, self.heights[-1]))

    def is_symmetric(self, axis: int | None = None) -> bool:
        lo, hi = self.x_range
        if axis is None:
            axis = (lo + hi) // 2
        return self.reflected(axis) == self


def dyck_paths(n: int) -> Iterator[LatticePath]:
    """半長 n の Dyck 路（U 優先の辞書順）."""

    def rec(prefix: list[str], height: int, ups: int) -> Iterator[LatticePath]:
        if len(prefix) == 2 * n:
            yield LatticePath("".join(prefix))
            return
        if ups < n:
            prefix.append("U")
            yield from rec(prefix, height + 1, ups + 1)
            prefix.pop()
        if height > 0:
            prefix.append("D")
            yield from rec(prefix, height - 1, ups)
            prefix.pop()

    yield from rec([], 0, 0)


def symmetric_dyck_paths(n: int) -> Iterator[LatticePath]:
    """x=n に関して対称な Dyck 路: 非負な長さ n の前半から決まる."""
    for half in product("UD", repeat=n):
        prefix = LatticePath("".join(half))
        if prefix.is_nonnegative:
            mirror = "".join("D" if s == "U" else "U" for s in reversed(prefix.steps))
            yield LatticePath(prefix.steps + mirror)


def lattice_paths_under(length: int) -> Iterator[tuple[LatticePath, LatticePath]]:
    """(S, R) の組: S は上昇のみ、R は S と同じ始点から x 軸の上にある長さ length の路.

    R の始点の高さは 0..length。S は R と同じ始点から上昇する（最も厳しい上界）。
    """
    for h0 in range(length + 1):
        s_path = LatticePath("U" * length, (0, h0))
        for word in product("UD", repeat=length):
            r_path = LatticePath("".join(word), (0, h0))
            if r_path.is_nonnegative:
                yield s_path, r_path
