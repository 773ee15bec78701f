"""インボリューション族・置換族の決定的な全列挙.

インボリューションは固定点と 2-サイクルを直接組み立てて生成し（Sₙ の篩ではない）、
交代条件・降下集合・値の固定・パターン回避で接頭辞ごとに枝刈りする。
出力は辞書順。
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterator, Literal

from wilfinv.errors import InvalidObjectError
from wilfinv.perm.core import Permutation, ends_with_occurrence
from wilfinv.tableaux.gamma import p_descent_set, rrc_descent_set

Base = Literal["I", "AI", "RAI", "S"]

CLASS_ALIASES: dict[str, Base] = {"inv": "I", "ai": "AI", "rai": "RAI", "perm": "S"}

I4 = Permutation.identity(4)


@dataclass(frozen=True)
class ClassSpec:
    base: Base
    n: int
    avoid: tuple[Permutation, ...] = ()
    fixed: tuple[tuple[int, int], ...] = ()       # (位置, 値)
    descents: frozenset[int] | None = None        # 降下集合の完全一致
    label: str = field(default="", compare=False)

    def __post_init__(self) -> None:
        if self.base not in ("I", "AI", "RAI", "S"):
            raise InvalidObjectError(f"未知の基本クラス: {self.base}")
        if self.n < 0:
            raise InvalidObjectError(f"長さは 0 以上: n={self.n}")
        for pos, value in self.fixed:
            if not (1 <= pos <= self.n and 1 <= value <= self.n):
                raise InvalidObjectError(f"固定条件 π_{pos}={value} が長さ {self.n} の範囲外です")
        object.__setattr__(self, "avoid", tuple(self.avoid))
        object.__setattr__(self, "fixed", tuple(sorted(self.fixed)))
        if self.descents is not None:
            object.__setattr__(self, "descents", frozenset(self.descents))

    @property
    def involutive(self) -> bool:
        return self.base != "S"

    def with_fixed(self, position: int, value: int) -> ClassSpec:
        return ClassSpec(
            base=self.base,
            n=self.n,
            avoid=self.avoid,
            fixed=self.fixed + ((position, value),),
            descents=self.descents,
            label=self.label,
        )

    def describe(self) -> str:
        if self.label:
            return self.label
        pats = ",".join(str(p) for p in self.avoid)
        return f"{self.base}_{self.n}({pats})"


def _relation_ok(spec: ClassSpec, w: list[int], i: int) -> bool:
    """位置 i−1 と i の大小関係の条件."""
    if i < 2:
        return True
    descent = w[i - 1] > w[i]
    odd = (i - 1) % 2 == 1
    if spec.base == "AI" and descent == odd:
        return False
    if spec.base == "RAI" and descent != odd:
        return False
    if spec.descents is not None and descent != ((i - 1) in spec.descents):
        return False
    return True


def generate(spec: ClassSpec) -> Iterator[Permutation]:
    n = spec.n
    fixed = dict(spec.fixed)
    w = [0] * (n + 1)
    used = [False] * (n + 2)

    def admissible(i: int) -> bool:
        if fixed.get(i, w[i]) != w[i]:
            return False
        if not _relation_ok(spec, w, i):
            return False
        prefix = w[1:i + 1]
        return not any(ends_with_occurrence(prefix, pat) for pat in spec.avoid)

    def rec(i: int) -> Iterator[Permutation]:
        if i > n:
            yield Permutation(tuple(w[1:]))
            return
        if w[i]:
            # 相手として既に決まっている位置
            if admissible(i):
                yield from rec(i + 1)
            return

        if spec.involutive:
            candidates = [i] + [j for j in range(i + 1, n + 1) if not w[j]]
        else:
            candidates = [v for v in range(1, n + 1) if not used[v]]

        for v in candidates:
            w[i] = v
            used[v] = True
            if spec.involutive and v != i:
                if fixed.get(v, i) != i:
                    w[i] = 0
                    used[v] = False
                    continue
                w[v] = i
            if admissible(i):
                yield from rec(i + 1)
            if spec.involutive and v != i:
                w[v] = 0
            w[i] = 0
            used[v] = False

    yield from rec(1)


def count_avoiders(spec: ClassSpec) -> int:
    return sum(1 for _ in generate(spec))


# ---------------------------------------------------------------------------
# 降下集合で定まる族
# ---------------------------------------------------------------------------

def family_p(n: int) -> ClassSpec:
    """𝒫_{2n−2} = {π ∈ I_{2n−2}(1234) : Des(π) = {1}∪{2,4,…,2n−4}}."""
    length = 2 * n - 2
    return ClassSpec("I", length, (I4,), descents=p_descent_set(length), label=f"P_{length}")


def family_q(n: int) -> ClassSpec:
    """𝒬_{2n} = {π ∈ I_{2n}(1234) : Des(π) = {1}∪{4,6,…,2n−2}}."""
    des = frozenset({1}) | frozenset(range(4, 2 * n - 1, 2))
    return ClassSpec("I", 2 * n, (I4,), descents=des, label=f"Q_{2 * n}")


def family_r(n: int) -> ClassSpec:
    """ℛ_{2n+1} = {π ∈ I_{2n+1}(1234) : Des(π) = {3,5,…,2n−1}∪{2n}}."""
    des = frozenset(range(3, 2 * n, 2)) | frozenset({2 * n})
    return ClassSpec("I", 2 * n + 1, (I4,), descents=des, label=f"R_{2 * n + 1}")


def family_rrc(n: int) -> ClassSpec:
    """ℛʳᶜ_{2n+1} = {π ∈ I_{2n+1}(1234) : Des(π) = {1}∪{2,4,…,2n−2}}."""
    length = 2 * n + 1
    return ClassSpec("I", length, (I4,), descents=rrc_descent_set(length), label=f"Rrc_{length}")


def family_o(n: int) -> ClassSpec:
    """𝒪_{2n} = {π ∈ RAI_{2n}(1234) : π₃ = 2n}."""
    return ClassSpec("RAI", 2 * n, (I4,), fixed=((3, 2 * n),), label=f"O_{2 * n}")
