"""Φ: 321⊕τ 回避の対称横断 → 123⊕τ 回避の対称横断、およびインボリューションへの特殊化."""

from __future__ import annotations

from typing import Callable

from wilfinv.errors import PreconditionError
from wilfinv.fillings.transversal import Transversal, permutation_matrix
from wilfinv.logger import get_logger
from wilfinv.perm.core import Permutation, direct_sum
from wilfinv.pipeline.board import color_board, embed, white_transversal
from wilfinv.pipeline.psi_cap import I3, J3, psi_cap, psi_cap_inv, require_symmetric_avoiding

log = get_logger(__name__)


def _through_white(
    t: Transversal,
    tau: Permutation,
    inner: Callable[[Transversal], Transversal],
) -> Transversal:
    """白い部分に inner を適用し、灰色の部分はそのまま戻す."""
    mask = color_board(t, tau)
    t_prime = white_transversal(t, mask)
    if len(t_prime) == 0:
        return t
    result = embed(mask, inner(t_prime), t)
    # 出力側の塗り分けは入力側と一致する
    assert color_board(result, tau).white == mask.white, "塗り分けが変化しました"
    log.debug(f"Φ: 白 {len(t_prime)} 列, {list(t.ones)} → {list(result.ones)}")
    return result


def phi_cap(t: Transversal, tau: Permutation) -> Transversal:
    if len(tau) == 0:
        return psi_cap(t)
    require_symmetric_avoiding(t, direct_sum(J3, tau))
    return _through_white(t, tau, psi_cap)


def phi_cap_inv(t: Transversal, tau: Permutation) -> Transversal:
    if len(tau) == 0:
        return psi_cap_inv(t)
    require_symmetric_avoiding(t, direct_sum(I3, tau))
    return _through_white(t, tau, psi_cap_inv)


def _require_involution(p: Permutation) -> None:
    if not p.is_involution:
        raise PreconditionError(f"インボリューションではありません: {p}")


def phi_involution(p: Permutation, tau: Permutation) -> Permutation:
    """I_n(321⊕τ) → I_n(123⊕τ)、ピーク集合を保つ."""
    _require_involution(p)
    return phi_cap(permutation_matrix(p), tau).word


def phi_involution_inv(p: Permutation, tau: Permutation) -> Permutation:
    _require_involution(p)
    return phi_cap_inv(permutation_matrix(p), tau).word
