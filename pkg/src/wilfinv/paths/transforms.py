"""上昇路 S の下にある部分路の変換 α, β と、対称な組に対する θ, θ⁻¹."""

from __future__ import annotations

from typing import Callable

from wilfinv.errors import PreconditionError
from wilfinv.logger import get_logger
from wilfinv.paths.lattice import LatticePath
from wilfinv.paths.pairs import DyckPair

log = get_logger(__name__)

Block = tuple[int, int, str]   # (x0, x1, "U" | "D")


def _check_under(s: LatticePath, r: LatticePath) -> None:
    if set(s.steps) - {"U"}:
        raise PreconditionError(f"S は上昇のみの路でなければなりません: {s}")
    if s.x_range != r.x_range:
        raise PreconditionError(f"S と R の x 範囲が異なります: {s.x_range} / {r.x_range}")
    if not r.is_nonnegative:
        raise PreconditionError(f"R が x 軸の下に出ます: {r}")
    if any(hr > hs for hr, hs in zip(r.heights, s.heights)):
        raise PreconditionError(f"R が S の上に出ます: {r}")


def alpha(s: LatticePath, r: LatticePath) -> LatticePath:
    """w₁=D、または w₁=U で右端を含む内部の高さがすべて正なら左巡回。
    それ以外は最初に高さ 0 となる点 ℓ で w₁ を取り除き U を挿入、末尾に D を付ける.
    """
    _check_under(s, r)
    w = r.steps
    if len(w) <= 1:
        return r
    heights = r.heights
    if w[0] == "D" or all(h > 0 for h in heights[1:]):
        word = w[1:] + w[0]
    else:
        idx = next(k for k in range(1, len(w) + 1) if heights[k] == 0)
        word = w[1:idx - 1] + "U" + w[idx:] + "D"
    return LatticePath(word, r.start)


def beta(s: LatticePath, r: LatticePath) -> LatticePath:
    """α の逆: v_m=U、または v_m=D で左端を含む高さがすべて正なら右巡回。
    それ以外は最後に高さ 0 となる点 ℓ で先頭に U、ℓ の直後に D を置き末尾を落とす.
    """
    _check_under(s, r)
    v = r.steps
    m = len(v)
    if m <= 1:
        return r
    heights = r.heights
    if v[-1] == "U" or all(h > 0 for h in heights[:-1]):
        word = v[-1] + v[:-1]
    else:
        idx = max(k for k in range(m) if heights[k] == 0)
        word = "U" + v[:idx] + "D" + v[idx + 1:m - 1]
    return LatticePath(word, r.start)


def maximal_chains(p: LatticePath) -> list[Block]:
    """P を極大な上昇列 S_i と下降列 T_i に分解（絶対横座標の区間）."""
    blocks: list[Block] = []
    x0 = p.x_range[0]
    for k, step in enumerate(p.steps):
        x = x0 + k
        if blocks and blocks[-1][2] == step:
            blocks[-1] = (blocks[-1][0], x + 1, step)
        else:
            blocks.append((x, x + 1, step))
    return blocks


def _blockwise(
    pair: DyckPair, transform: Callable[[LatticePath, LatticePath], LatticePath]
) -> DyckPair:
    if not pair.is_symmetric:
        raise PreconditionError(f"対称な組ではありません: {pair.P} / {pair.Q}")
    p, q = pair.P, pair.Q
    blocks = maximal_chains(p)
    rises = [(x0, x1) for x0, x1, step in blocks if step == "U"]
    k = len(rises)
    axis = len(p) // 2

    images = []
    for x0, x1 in rises:
        images.append(transform(p.segment(x0, x1), q.segment(x0, x1)))

    # Q′ = α(U₁)V′₁⋯α(U_k)V′_k, V′_i は α(U_{k+1−i}) の x=n に関する鏡映
    word = []
    for i in range(k):
        word.append(images[i].steps)
        word.append(images[k - 1 - i].reflected(axis).steps)
    result = DyckPair(p, LatticePath("".join(word)))
    log.debug(f"ブロック変換: {q} → {result.Q}")
    return result


def theta(pair: DyckPair) -> DyckPair:
    return _blockwise(pair, alpha)


def theta_inv(pair: DyckPair) -> DyckPair:
    return _blockwise(pair, beta)
