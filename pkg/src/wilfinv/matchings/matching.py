"""[2n] の完全マッチング: 交差・入れ子数, 谷, 左右対称性."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterable, Iterator

from wilfinv.errors import InvalidObjectError

Arc = tuple[int, int]


@dataclass(frozen=True)
class Matching:
    """弧 (i, j), i < j の集合。左端点順に保持."""

    arcs: tuple[Arc, ...]

    def __post_init__(self) -> None:
        arcs = tuple(sorted((int(i), int(j)) for i, j in self.arcs))
        if any(i >= j for i, j in arcs):
            raise InvalidObjectError(f"弧は i < j でなければなりません: {list(arcs)}")
        points = sorted(v for arc in arcs for v in arc)
        if points != list(range(1, 2 * len(arcs) + 1)):
            raise InvalidObjectError(f"[2n] の完全マッチングではありません: {list(arcs)}")
        object.__setattr__(self, "arcs", arcs)

    @classmethod
    def from_pairs(cls, pairs: Iterable[Iterable[int]]) -> Matching:
        return cls(tuple(tuple(p) for p in pairs))

    def __len__(self) -> int:
        return len(self.arcs)

    @property
    def size(self) -> int:
        """点の数 2n."""
        return 2 * len(self.arcs)

    @property
    def partner(self) -> dict[int, int]:
        out = {}
        for i, j in self.arcs:
            out[i] = j
            out[j] = i
        return out

    @property
    def openers(self) -> tuple[int, ...]:
        return tuple(i for i, _ in self.arcs)

    @property
    def closers(self) -> tuple[int, ...]:
        return tuple(sorted(j for _, j in self.arcs))

    def type_word(self) -> str:
        """開点 U, 閉点 D."""
        openers = set(self.openers)
        return "".join("U" if x in openers else "D" for x in range(1, self.size + 1))


def _longest_chain(arcs: tuple[Arc, ...], extends: Callable[[list[Arc], Arc], bool]) -> int:
    best = 0

    def rec(chain: list[Arc], start: int) -> None:
        nonlocal best
        best = max(best, len(chain))
        for idx in range(start, len(arcs)):
            if extends(chain, arcs[idx]):
                chain.append(arcs[idx])
                rec(chain, idx + 1)
                chain.pop()

    rec([], 0)
    return best


def _crosses(chain: list[Arc], arc: Arc) -> bool:
    # i₁<⋯<i_k<j₁<⋯<j_k: 右端点は増加、左端点はすべて j₁ より前
    if not chain:
        return True
    return arc[1] > chain[-1][1] and arc[0] < chain[0][1]


def _nests(chain: list[Arc], arc: Arc) -> bool:
    return not chain or arc[1] < chain[-1][1]


def crossing_nesting(m: Matching) -> tuple[int, int]:
    """(cr, ne): 最大の k-交差と k-入れ子の k."""
    return _longest_chain(m.arcs, _crosses), _longest_chain(m.arcs, _nests)


def valleys(m: Matching) -> tuple[frozenset[int], frozenset[int]]:
    """(Val, Ṽal): 連続する開点 i−1, i, i+1 で j_{i−1} > j_i < j_{i+1} となる i と、その開点番号."""
    partner = m.partner
    openers = set(m.openers)
    ordinal = {x: k for k, x in enumerate(m.openers, start=1)}
    val = frozenset(
        i for i in m.openers
        if i - 1 in openers and i + 1 in openers
        and partner[i - 1] > partner[i] < partner[i + 1]
    )
    return val, frozenset(ordinal[i] for i in val)


def reflect(m: Matching) -> Matching:
    """直線 x=(2n+1)/2 に関する鏡映."""
    top = m.size + 1
    return Matching(tuple((top - j, top - i) for i, j in m.arcs))


def is_bilaterally_symmetric(m: Matching) -> bool:
    return reflect(m) == m


def matchings(n: int) -> Iterator[Matching]:
    """[2n] の完全マッチングを相手列の辞書順で全列挙."""
    partner = [0] * (2 * n + 1)

    def rec(start: int) -> Iterator[Matching]:
        a = start
        while a <= 2 * n and partner[a]:
            a += 1
        if a > 2 * n:
            yield Matching(tuple((i, partner[i]) for i in range(1, 2 * n + 1) if i < partner[i]))
            return
        for b in range(a + 1, 2 * n + 1):
            if partner[b]:
                continue
            partner[a], partner[b] = b, a
            yield from rec(a + 1)
            partner[a] = partner[b] = 0

    yield from rec(1)


def symmetric_matchings(n: int) -> Iterator[Matching]:
    """左右対称な完全マッチングを全列挙（弧 (a,b) と鏡映弧を同時に置く）."""
    top = 2 * n + 1
    partner = [0] * (2 * n + 1)

    def rec(start: int) -> Iterator[Matching]:
        a = start
        while a <= 2 * n and partner[a]:
            a += 1
        if a > 2 * n:
            yield Matching(tuple((i, partner[i]) for i in range(1, 2 * n + 1) if i < partner[i]))
            return
        for b in range(a + 1, 2 * n + 1):
            if partner[b]:
                continue
            ma, mb = top - b, top - a
            if (ma, mb) != (a, b) and (partner[ma] or partner[mb] or {ma, mb} & {a, b}):
                continue
            partner[a], partner[b] = b, a
            partner[ma], partner[mb] = mb, ma
            yield from rec(a + 1)
            partner[a] = partner[b] = partner[ma] = partner[mb] = 0

    yield from rec(1)
