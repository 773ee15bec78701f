"""2行（2列）以下の振動盤 ↔ 非交差 Dyck 路の組.

ψ: λⁱ = (x, y) に対し P の高さ x+y, Q の高さ x−y。
ψ̄: 共役 (λⁱ)ᵀ = (x, y) で同じ対応。
"""

from __future__ import annotations

from typing import Sequence

from wilfinv.errors import InvalidObjectError, PreconditionError
from wilfinv.matchings.oscillating import OscillatingTableau
from wilfinv.paths.lattice import LatticePath
from wilfinv.paths.pairs import DyckPair
from wilfinv.tableaux.partition import Partition


def _word(heights: Sequence[int]) -> str:
    return "".join("U" if b > a else "D" for a, b in zip(heights, heights[1:]))


def _pair_from_rows(rows: Sequence[tuple[int, int]]) -> DyckPair:
    p = [x + y for x, y in rows]
    q = [x - y for x, y in rows]
    return DyckPair(LatticePath(_word(p)), LatticePath(_word(q)))


def _rows_from_pair(pair: DyckPair) -> list[tuple[int, int]]:
    rows = []
    for x, (hp, hq) in enumerate(zip(pair.P.heights, pair.Q.heights)):
        if (hp + hq) % 2:
            raise InvalidObjectError(f"x={x} で P と Q の高さの偶奇が異なります: {pair.P} / {pair.Q}")
        rows.append(((hp + hq) // 2, (hp - hq) // 2))
    return rows


def psi(o: OscillatingTableau) -> DyckPair:
    if o.max_rows > 2:
        raise PreconditionError(f"3行以上の形を含みます (最大 {o.max_rows} 行)")
    return _pair_from_rows([(s.part(1), s.part(2)) for s in o.shapes])


def psi_inv(pair: DyckPair) -> OscillatingTableau:
    return OscillatingTableau(tuple(
        Partition(tuple(v for v in (x, y) if v > 0)) for x, y in _rows_from_pair(pair)
    ))


def psibar(o: OscillatingTableau) -> DyckPair:
    if o.max_columns > 2:
        raise PreconditionError(f"3列以上の形を含みます (最大 {o.max_columns} 列)")
    return _pair_from_rows([(len(s), sum(1 for v in s.parts if v >= 2)) for s in o.shapes])


def psibar_inv(pair: DyckPair) -> OscillatingTableau:
    """(x, y) を共役に戻す: λ = (2^y, 1^{x−y})."""
    return OscillatingTableau(tuple(
        Partition((2,) * y + (1,) * (x - y)) for x, y in _rows_from_pair(pair)
    ))
