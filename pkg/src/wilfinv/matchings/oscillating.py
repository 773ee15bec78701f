"""振動盤: 空から空へ 1マスずつ増減する分割の列."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterable

from wilfinv.errors import InvalidObjectError
from wilfinv.tableaux.partition import Partition, Step, step_between


@dataclass(frozen=True)
class OscillatingTableau:
    shapes: tuple[Partition, ...]

    def __post_init__(self) -> None:
        shapes = tuple(s if isinstance(s, Partition) else Partition(tuple(s)) for s in self.shapes)
        if not shapes or shapes[0].size or shapes[-1].size:
            raise InvalidObjectError("振動盤は空の分割で始まり空の分割で終わります")
        for before, after in zip(shapes, shapes[1:]):
            step_between(before, after)
        object.__setattr__(self, "shapes", shapes)

    @classmethod
    def from_parts(cls, shapes: Iterable[Iterable[int]]) -> OscillatingTableau:
        return cls(tuple(Partition(tuple(s)) for s in shapes))

    def __len__(self) -> int:
        """ステップ数 2n."""
        return len(self.shapes) - 1

    @property
    def steps(self) -> tuple[Step, ...]:
        """steps[i−1] が λ^{i−1} → λ^i."""
        return tuple(step_between(a, b) for a, b in zip(self.shapes, self.shapes[1:]))

    def type_word(self) -> str:
        return "".join("U" if s.kind == "add" else "D" for s in self.steps)

    def reverse(self) -> OscillatingTableau:
        return OscillatingTableau(self.shapes[::-1])

    @property
    def max_rows(self) -> int:
        return max(len(s) for s in self.shapes)

    @property
    def max_columns(self) -> int:
        return max(s.part(1) for s in self.shapes)

    @property
    def is_symmetric(self) -> bool:
        return self.shapes == self.shapes[::-1]


@dataclass(frozen=True)
class OscFeatures:
    type_word: str
    valleys: frozenset[int] | None   # 2行以下でなければ None
    peaks: frozenset[int] | None     # 2列以下でなければ None
    symmetric: bool


def _scan(
    steps: tuple[Step, ...],
    first: Callable[[Step], bool],
    middle: Callable[[Step], bool],
    last: Callable[[Step], bool],
) -> frozenset[int]:
    # 位置 i: ステップ i−1, i, i+1 がそれぞれ first, middle, last
    return frozenset(
        i for i in range(2, len(steps))
        if first(steps[i - 2]) and middle(steps[i - 1]) and last(steps[i])
    )


def _added(s: Step) -> bool:
    return s.kind == "add"


def osc_valleys(o: OscillatingTableau) -> frozenset[int]:
    """谷: λ^{i−1} で追加, λ^i で1行目に追加, λ^{i+1} で2行目に追加."""
    return _scan(
        o.steps,
        _added,
        lambda s: _added(s) and s.row == 1,
        lambda s: _added(s) and s.row == 2,
    )


def osc_peaks(o: OscillatingTableau) -> frozenset[int]:
    """ピーク: λ^{i−1} で1列目に追加, λ^i で2列目に追加, λ^{i+1} で追加."""
    return _scan(
        o.steps,
        lambda s: _added(s) and s.column == 1,
        lambda s: _added(s) and s.column == 2,
        _added,
    )


def osc_features(o: OscillatingTableau) -> OscFeatures:
    return OscFeatures(
        type_word=o.type_word(),
        valleys=osc_valleys(o) if o.max_rows <= 2 else None,
        peaks=osc_peaks(o) if o.max_columns <= 2 else None,
        symmetric=o.is_symmetric,
    )
