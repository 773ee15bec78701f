"""置換の基本操作: パターン包含, 対称変換, 直和, 標準化, 統計量."""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Literal, Sequence

from wilfinv.errors import InvalidObjectError

Symmetry = Literal["reverse", "complement", "reverse_complement", "inverse"]


@dataclass(frozen=True)
class Permutation:
    """1始まりの一行記法 π₁π₂⋯πₙ."""

    word: tuple[int, ...]

    def __post_init__(self) -> None:
        word = tuple(int(v) for v in self.word)
        if sorted(word) != list(range(1, len(word) + 1)):
            raise InvalidObjectError(f"{{1..{len(word)}}} の並べ替えではありません: {list(word)}")
        object.__setattr__(self, "word", word)

    @classmethod
    def identity(cls, n: int) -> Permutation:
        return cls(tuple(range(1, n + 1)))

    @classmethod
    def decreasing(cls, n: int) -> Permutation:
        return cls(tuple(range(n, 0, -1)))

    def __len__(self) -> int:
        return len(self.word)

    def __iter__(self):
        return iter(self.word)

    def __str__(self) -> str:
        return "".join(str(v) if v < 10 else f"({v})" for v in self.word)

    def at(self, i: int) -> int:
        """位置 i（1始まり）の値."""
        return self.word[i - 1]

    @property
    def inverse(self) -> Permutation:
        inv = [0] * len(self.word)
        for pos, v in enumerate(self.word, start=1):
            inv[v - 1] = pos
        return Permutation(tuple(inv))

    @property
    def is_involution(self) -> bool:
        return all(self.word[v - 1] == pos for pos, v in enumerate(self.word, start=1))


@dataclass(frozen=True)
class StatReport:
    peaks: frozenset[int]
    descents: frozenset[int]
    ascents: frozenset[int]


@dataclass(frozen=True)
class Classification:
    involution: bool
    alternating: bool
    reverse_alternating: bool


# ---------------------------------------------------------------------------
# パターン包含
# ---------------------------------------------------------------------------

def pattern_bounds(pat: Sequence[int]) -> list[tuple[int, int]]:
    """各 k について、pat[:k] 内で値が直下・直上となる添字（無ければ -1）.

    k 番目の候補値 v は chosen[lo] < v < chosen[hi] を満たせば順序同型を保つ。
    """
    bounds = []
    for k, v in enumerate(pat):
        lo, hi = -1, -1
        for j in range(k):
            if pat[j] < v and (lo < 0 or pat[j] > pat[lo]):
                lo = j
            if pat[j] > v and (hi < 0 or pat[j] < pat[hi]):
                hi = j
        bounds.append((lo, hi))
    return bounds


def _extend(
    values: Sequence[int],
    bounds: list[tuple[int, int]],
    chosen: list[int],
    positions: list[int],
    start: int,
    end: int,
    anchor_last: bool,
) -> tuple[int, ...] | None:
    k = len(chosen)
    m = len(bounds)
    if k == m:
        return tuple(positions)
    if anchor_last and k == m - 1:
        candidates = range(end - 1, end) if end - 1 >= start else range(0)
    else:
        candidates = range(start, end - (m - k) + 1)
    lo, hi = bounds[k]
    for pos in candidates:
        v = values[pos]
        if lo >= 0 and chosen[lo] > v:
            continue
        if hi >= 0 and chosen[hi] < v:
            continue
        chosen.append(v)
        positions.append(pos)
        found = _extend(values, bounds, chosen, positions, pos + 1, end, anchor_last)
        if found is not None:
            return found
        chosen.pop()
        positions.pop()
    return None


def find_occurrence(p: Permutation | Sequence[int], pat: Permutation) -> tuple[int, ...] | None:
    """pat と順序同型な部分列の位置（1始まり、辞書順最小）。回避していれば None."""
    values = p.word if isinstance(p, Permutation) else tuple(p)
    if len(pat) == 0:
        return ()
    if len(pat) > len(values):
        return None
    found = _extend(values, pattern_bounds(pat.word), [], [], 0, len(values), False)
    if found is None:
        return None
    return tuple(pos + 1 for pos in found)


def ends_with_occurrence(values: Sequence[int], pat: Permutation) -> bool:
    """最後の位置を pat の最後の文字とする出現があるか（接頭辞の逐次検査用）."""
    m = len(pat)
    if m == 0:
        return True
    if m > len(values):
        return False
    return _extend(values, pattern_bounds(pat.word), [], [], 0, len(values), True) is not None


def contains_pattern(p: Permutation, pat: Permutation) -> bool:
    return find_occurrence(p, pat) is not None


def avoids(p: Permutation, pat: Permutation) -> bool:
    return find_occurrence(p, pat) is None


# ---------------------------------------------------------------------------
# 変換
# ---------------------------------------------------------------------------

def symmetry(p: Permutation, which: Symmetry) -> Permutation:
    """逆順 πʳ, 補 πᶜ, 逆順補 πʳᶜ, 逆置換 π⁻¹."""
    n = len(p)
    if which == "reverse":
        return Permutation(p.word[::-1])
    if which == "complement":
        return Permutation(tuple(n + 1 - v for v in p.word))
    if which == "reverse_complement":
        return Permutation(tuple(n + 1 - v for v in reversed(p.word)))
    if which == "inverse":
        return p.inverse
    raise ValueError(f"未知の対称変換: {which}")


def direct_sum(p: Permutation, q: Permutation) -> Permutation:
    """π⊕τ: π の後ろに len(π) だけ持ち上げた τ を連結."""
    shift = len(p)
    return Permutation(p.word + tuple(v + shift for v in q.word))


def standardize(word: Iterable[int]) -> Permutation:
    values = list(word)
    if len(set(values)) != len(values):
        raise InvalidObjectError(f"重複した値を含む語は標準化できません: {values}")
    rank = {v: i for i, v in enumerate(sorted(values), start=1)}
    return Permutation(tuple(rank[v] for v in values))


# ---------------------------------------------------------------------------
# 統計量・分類
# ---------------------------------------------------------------------------

def stats(p: Permutation) -> StatReport:
    w = p.word
    n = len(w)
    descents = frozenset(i for i in range(1, n) if w[i - 1] > w[i])
    ascents = frozenset(range(1, n)) - descents
    peaks = frozenset(i for i in range(2, n) if w[i - 2] < w[i - 1] > w[i])
    return StatReport(peaks=peaks, descents=descents, ascents=ascents)


def peaks(p: Permutation) -> frozenset[int]:
    return stats(p).peaks


def descents(p: Permutation) -> frozenset[int]:
    return stats(p).descents


def is_alternating(word: Sequence[int]) -> bool:
    """π₁ < π₂ > π₃ < ⋯."""
    return all((w1 < w2) == (i % 2 == 0) for i, (w1, w2) in enumerate(zip(word, word[1:])))


def is_reverse_alternating(word: Sequence[int]) -> bool:
    """π₁ > π₂ < π₃ > ⋯."""
    return all((w1 > w2) == (i % 2 == 0) for i, (w1, w2) in enumerate(zip(word, word[1:])))


def classify(p: Permutation) -> Classification:
    return Classification(
        involution=p.is_involution,
        alternating=is_alternating(p.word),
        reverse_alternating=is_reverse_alternating(p.word),
    )


def alternating_peaks(n: int) -> frozenset[int]:
    """交代置換のピーク集合 {2,4,…,2⌊(n−1)/2⌋}."""
    return frozenset(range(2, n, 2))


# ---------------------------------------------------------------------------
# パターン文字列
# ---------------------------------------------------------------------------

_TOKEN = re.compile(r"\((\d+)\)|(\d)")


def parse_pattern(text: str) -> Permutation:
    """'1243', '(10)1923…', '10,1,9' 形式の一行記法を解釈."""
    text = text.strip()
    if not text:
        return Permutation(())
    if re.search(r"[,\s]", text):
        try:
            values = [int(tok) for tok in re.split(r"[,\s]+", text) if tok]
        except ValueError as e:
            raise InvalidObjectError(f"パターン文字列を解釈できません: {text!r}") from e
        return Permutation(tuple(values))

    values = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            raise InvalidObjectError(f"パターン文字列を解釈できません: {text!r}")
        values.append(int(m.group(1) or m.group(2)))
        pos = m.end()
    return Permutation(tuple(values))
