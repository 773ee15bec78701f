"""マッチング ↔ 振動盤 の全単射 φ.

j = 2n から 1 へ読み、閉点 j（弧 (i,j)）では i を RSK 行挿入し、
開点 j では j を取り除く。途中の盤 T_j の形の列が φ(M)。
"""

from __future__ import annotations

from wilfinv.logger import get_logger
from wilfinv.matchings.matching import Matching
from wilfinv.matchings.oscillating import OscillatingTableau
from wilfinv.tableaux.partition import Partition
from wilfinv.tableaux.rsk import remove_corner, reverse_bump, row_insert
from wilfinv.tableaux.syt import Rows

log = get_logger(__name__)


def phi_trace(m: Matching) -> tuple[Rows, ...]:
    """盤の列 T₀, …, T_{2n}."""
    partner = m.partner
    tableaux: list[Rows] = [()] * (m.size + 1)
    current: Rows = ()
    for j in range(m.size, 0, -1):
        i = partner[j]
        if i < j:
            current, _ = row_insert(current, i)
        else:
            # 開点 j は盤の最大成分で、必ず角にある
            assert all(v <= j for row in current for v in row), f"{j} が最大成分ではありません"
            current = remove_corner(current, j)
        tableaux[j - 1] = current
    assert tableaux[0] == (), "T₀ が空になりません"
    return tuple(tableaux)


def phi(m: Matching) -> OscillatingTableau:
    trace = phi_trace(m)
    return OscillatingTableau(tuple(Partition(tuple(len(r) for r in t)) for t in trace))


def phi_inv(o: OscillatingTableau) -> Matching:
    """左から読み、追加では j を新しいマスに置き、削除では逆挿入で i を取り出して弧 (i,j)."""
    current: Rows = ()
    arcs = []
    for j, step in enumerate(o.steps, start=1):
        if step.kind == "add":
            rows = [list(r) for r in current]
            if step.row > len(rows):
                rows.append([])
            rows[step.row - 1].append(j)
            current = tuple(tuple(r) for r in rows)
        else:
            current, i = reverse_bump(current, step.row)
            arcs.append((i, j))
    log.debug(f"φ⁻¹: {len(arcs)} 弧を復元")
    return Matching(tuple(arcs))
