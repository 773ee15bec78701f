"""非交差 Dyck 路の組 (P, Q) と添字集合 A, B."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from wilfinv.errors import InvalidObjectError
from wilfinv.paths.lattice import LatticePath, dyck_paths, symmetric_dyck_paths


@dataclass(frozen=True)
class DyckPair:
    """P が Q より下に来ない Dyck 路の組."""

    P: LatticePath
    Q: LatticePath

    def __post_init__(self) -> None:
        p = self.P if isinstance(self.P, LatticePath) else LatticePath(str(self.P))
        q = self.Q if isinstance(self.Q, LatticePath) else LatticePath(str(self.Q))
        if len(p) != len(q):
            raise InvalidObjectError(f"P と Q の長さが異なります: {p} / {q}")
        if not (p.is_dyck and q.is_dyck):
            raise InvalidObjectError(f"P, Q は Dyck 路でなければなりません: {p} / {q}")
        if any(hp < hq for hp, hq in zip(p.heights, q.heights)):
            raise InvalidObjectError(f"P が Q の下に出ます: {p} / {q}")
        object.__setattr__(self, "P", p)
        object.__setattr__(self, "Q", q)

    @classmethod
    def of(cls, p_word: str, q_word: str) -> DyckPair:
        return cls(LatticePath(p_word), LatticePath(q_word))

    def __len__(self) -> int:
        return len(self.P)

    @property
    def is_symmetric(self) -> bool:
        return self.P.is_symmetric() and self.Q.is_symmetric()


def ab_sets(pair: DyckPair) -> tuple[frozenset[int], frozenset[int]]:
    return ab_indices(pair.P.steps, pair.Q.steps)


def ab_indices(p: str, q: str) -> tuple[frozenset[int], frozenset[int]]:
    """A・B の添字集合（1<i<m）.

    A = {i : p_{i−1}p_ip_{i+1}=UUU, q_iq_{i+1}=UD}
    B = {i : p_{i−1}p_ip_{i+1}=UUU, q_{i−1}q_i=UD}
    部分路（S, R）にもそのまま使う。
    """
    m = len(p)
    # i は 1始まり: p_{i−1}p_ip_{i+1} = p[i−2:i+1]
    triple = [i for i in range(2, m) if p[i - 2:i + 1] == "UUU"]
    a = frozenset(i for i in triple if q[i - 1:i + 1] == "UD")
    b = frozenset(i for i in triple if q[i - 2:i] == "UD")
    return a, b


def noncrossing_pairs(n: int) -> Iterator[DyckPair]:
    paths = list(dyck_paths(n))
    for p in paths:
        for q in paths:
            if all(hp >= hq for hp, hq in zip(p.heights, q.heights)):
                yield DyckPair(p, q)


def symmetric_noncrossing_pairs(n: int) -> Iterator[DyckPair]:
    paths = list(symmetric_dyck_paths(n))
    for p in paths:
        for q in paths:
            if all(hp >= hq for hp, hq in zip(p.heights, q.heights)):
                yield DyckPair(p, q)
