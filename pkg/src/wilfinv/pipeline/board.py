"""盤面の白黒（灰）塗り分けと、白い部分図形への抽出・埋め戻し.

マス (c, r) は、その真に右下（列 > c かつ 行 > r, 図形内）の 1 が τ または τ⁻¹ を含むとき白。
灰色のマスにある 1 の行と列はすべて灰色にする。
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from wilfinv.errors import PreconditionError
from wilfinv.fillings.diagram import YoungDiagram
from wilfinv.fillings.transversal import Transversal, filling_contains
from wilfinv.perm.core import Permutation

Cell = tuple[int, int]   # (column, row)


@dataclass(frozen=True)
class BoardMask:
    diagram: YoungDiagram
    white: frozenset[Cell]
    column_map: dict[int, int]   # λ の列 → λ′ の列
    row_map: dict[int, int]      # λ の行 → λ′ の行
    white_diagram: YoungDiagram

    def __hash__(self) -> int:
        return hash((self.diagram, self.white))

    @property
    def gray(self) -> frozenset[Cell]:
        return frozenset(self.diagram.cells()) - self.white

    @property
    def is_symmetric(self) -> bool:
        return all((r, c) in self.white for c, r in self.white)

    def to_array(self) -> np.ndarray:
        """行 × 列 の bool 配列（白 = True, 図形外 = False）."""
        arr = np.zeros((self.diagram.num_rows, self.diagram.num_columns), dtype=bool)
        for c, r in self.white:
            arr[r - 1, c - 1] = True
        return arr


def _southeast_white(t: Transversal, tau: Permutation) -> np.ndarray:
    """第1段: 右下の盤に τ/τ⁻¹ を含むマスを白に（白は左上に閉じているので各列を下から走査）."""
    d = t.diagram
    tau_inv = tau.inverse
    patterns = (tau,) if tau_inv == tau else (tau, tau_inv)
    white = np.zeros((d.num_rows, d.num_columns), dtype=bool)
    heights = d.column_heights
    for c in range(1, d.num_columns + 1):
        for r in range(heights[c - 1], 0, -1):
            board = [(cc, rr) for cc, rr in t.points if cc > c and rr > r]
            if any(filling_contains(board, d, pat) for pat in patterns):
                white[:r, c - 1] = True
                break
    return white


def color_board(t: Transversal, tau: Permutation) -> BoardMask:
    if len(tau) == 0:
        raise PreconditionError("τ が空です（空の τ には Ψ を直接使ってください）")
    d = t.diagram
    white = _southeast_white(t, tau)

    # 第2段: 灰色のマスにある 1 の行・列を灰色に
    gray_one = [(c, r) for c, r in t.points if not white[r - 1, c - 1]]
    for c, r in gray_one:
        white[:, c - 1] = False
        white[r - 1, :] = False

    keep_columns = [c for c, r in t.points if white[r - 1, c - 1]]
    keep_rows = sorted(r for c, r in t.points if white[r - 1, c - 1])
    column_map = {c: i for i, c in enumerate(keep_columns, start=1)}
    row_map = {r: j for j, r in enumerate(keep_rows, start=1)}
    column_index = [c - 1 for c in keep_columns]
    row_lengths = tuple(int(white[r - 1, column_index].sum()) for r in keep_rows)

    return BoardMask(
        diagram=d,
        white=frozenset((int(c) + 1, int(r) + 1) for r, c in zip(*np.nonzero(white))),
        column_map=column_map,
        row_map=row_map,
        white_diagram=YoungDiagram(row_lengths),
    )


def white_transversal(t: Transversal, mask: BoardMask) -> Transversal:
    """白い 1 を λ′ の番号に付け替えた横断 T′."""
    ones = [0] * len(mask.column_map)
    for c, r in t.points:
        if c in mask.column_map:
            ones[mask.column_map[c] - 1] = mask.row_map[r]
    return Transversal(mask.white_diagram, tuple(ones))


def embed(mask: BoardMask, t_prime: Transversal, t: Transversal) -> Transversal:
    """T′ を λ に埋め戻し、灰色の列の 1 は T のまま復元."""
    columns = {i: c for c, i in mask.column_map.items()}
    rows = {j: r for r, j in mask.row_map.items()}
    ones = list(t.ones)
    for i, j in t_prime.points:
        ones[columns[i] - 1] = rows[j]
    return Transversal(t.diagram, tuple(ones))
