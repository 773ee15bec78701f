"""ランク列と West の全単射 f: Sₙ(I_k) → Sₙ(I_{k−2}⊕21)."""

from __future__ import annotations

import bisect
from dataclasses import dataclass

from wilfinv.errors import InvalidObjectError, PreconditionError
from wilfinv.perm.core import Permutation, direct_sum, find_occurrence


@dataclass(frozen=True)
class RankProfile:
    """位置ごとのランク（π_i で終わる最長増加部分列の長さ）."""

    word: tuple[int, ...]
    ranks: tuple[int, ...]

    @property
    def max_rank(self) -> int:
        return max(self.ranks, default=0)

    @property
    def rank_classes(self) -> dict[int, tuple[int, ...]]:
        """ランク → 位置（1始まり）."""
        classes: dict[int, list[int]] = {}
        for pos, r in enumerate(self.ranks, start=1):
            classes.setdefault(r, []).append(pos)
        return {r: tuple(v) for r, v in sorted(classes.items())}

    def positions(self, rank: int) -> tuple[int, ...]:
        return self.rank_classes.get(rank, ())

    def elements(self, rank: int) -> frozenset[int]:
        return frozenset(self.word[pos - 1] for pos in self.positions(rank))


def rank_sequence(p: Permutation) -> RankProfile:
    tails: list[int] = []
    ranks = []
    for x in p.word:
        i = bisect.bisect_left(tails, x)
        if i == len(tails):
            tails.append(x)
        else:
            tails[i] = x
        ranks.append(i + 1)
    return RankProfile(word=p.word, ranks=tuple(ranks))


def _check_k(k: int) -> None:
    if k < 3:
        raise InvalidObjectError(f"k は 3 以上が必要です: k={k}")


def west_f(p: Permutation, k: int) -> Permutation:
    """ランク k−1 の要素を左から「直近のランク k−2 の要素より大きい未使用最小」で置き直す."""
    _check_k(k)
    pattern = Permutation.identity(k)
    witness = find_occurrence(p, pattern)
    if witness is not None:
        raise PreconditionError(f"{p} は {pattern} を含みます", pattern=pattern, witness=witness)

    profile = rank_sequence(p)
    if profile.max_rank < k - 1:
        return p
    unused = sorted(profile.elements(k - 1))

    sigma = list(p.word)
    last_lower: int | None = None
    for pos, (x, r) in enumerate(zip(p.word, profile.ranks)):
        if r == k - 2:
            last_lower = x
        elif r == k - 1:
            assert last_lower is not None, f"位置 {pos + 1} の左にランク {k - 2} の要素がありません"
            i = bisect.bisect_right(unused, last_lower)
            assert i < len(unused), f"{last_lower} より大きい未使用のランク {k - 1} 要素がありません"
            sigma[pos] = unused.pop(i)
    return Permutation(tuple(sigma))


def west_f_inv(sigma: Permutation, k: int) -> Permutation:
    """ランク k−1 以上の要素を減少順に並べ直す."""
    _check_k(k)
    pattern = direct_sum(Permutation.identity(k - 2), Permutation((2, 1)))
    witness = find_occurrence(sigma, pattern)
    if witness is not None:
        raise PreconditionError(f"{sigma} は {pattern} を含みます", pattern=pattern, witness=witness)

    profile = rank_sequence(sigma)
    top = [pos for pos, r in enumerate(profile.ranks) if r >= k - 1]
    values = sorted((sigma.word[pos] for pos in top), reverse=True)
    pi = list(sigma.word)
    for pos, v in zip(top, values):
        pi[pos] = v
    return Permutation(tuple(pi))
