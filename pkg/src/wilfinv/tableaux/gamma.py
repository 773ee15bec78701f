"""η: 3列以下の SYT に 3マスを足す写像と、それを経由する γ: 𝒫_{2n−2} → ℛʳᶜ_{2n+1}."""

from __future__ import annotations

from wilfinv.errors import InvalidObjectError, PreconditionError
from wilfinv.perm.core import Permutation, descents, find_occurrence
from wilfinv.tableaux.rsk import rsk_involution, rsk_involution_inv
from wilfinv.tableaux.syt import StandardYoungTableau

_I4 = Permutation.identity(4)


def eta(t: StandardYoungTableau) -> StandardYoungTableau:
    """1, 2, 3 列目の底に m+1, m+2, m+3 を追加（m = 成分数）."""
    if len(t) == 0:
        raise InvalidObjectError("空の盤には η を適用できません")
    if t.num_columns > 3:
        raise InvalidObjectError(f"列数が 3 を超えています: {t.rows}")

    m = len(t)
    rows = [list(r) for r in t.rows]
    for col, value in enumerate((m + 1, m + 2, m + 3)):
        height = sum(1 for r in rows if len(r) > col)
        if height == len(rows):
            rows.append([])
        rows[height].append(value)
    return StandardYoungTableau(tuple(tuple(r) for r in rows))


def eta_inv(t: StandardYoungTableau) -> StandardYoungTableau:
    """3, 2, 1 列目の底から最大の3成分を取り除く。η の像でなければ拒否."""
    m = len(t)
    if m < 4 or t.num_columns != 3:
        raise InvalidObjectError(f"η の像ではありません: {t.rows}")
    rows = [list(r) for r in t.rows]
    for col, value in ((2, m), (1, m - 1), (0, m - 2)):
        height = sum(1 for r in rows if len(r) > col)
        bottom = rows[height - 1]
        if len(bottom) != col + 1 or bottom[col] != value:
            raise InvalidObjectError(f"{value} が第 {col + 1} 列の底にありません: {t.rows}")
        bottom.pop()
    return StandardYoungTableau(tuple(tuple(r) for r in rows if r))


def p_descent_set(length: int) -> frozenset[int]:
    """𝒫_{2n−2} の降下集合 {1}∪{2,4,…,2n−4}（length = 2n−2）."""
    return frozenset({1}) | frozenset(range(2, length - 1, 2))


def rrc_descent_set(length: int) -> frozenset[int]:
    """ℛʳᶜ_{2n+1} の降下集合 {1}∪{2,4,…,2n−2}（length = 2n+1）."""
    return frozenset({1}) | frozenset(range(2, length - 2, 2))


def _check_family(p: Permutation, expected: frozenset[int], family: str) -> None:
    if not p.is_involution:
        raise PreconditionError(f"{p} はインボリューションではありません ({family})")
    witness = find_occurrence(p, _I4)
    if witness is not None:
        raise PreconditionError(f"{p} は 1234 を含みます ({family})", pattern=_I4, witness=witness)
    if descents(p) != expected:
        raise PreconditionError(
            f"{p} の降下集合 {sorted(descents(p))} が {family} の条件 {sorted(expected)} と異なります"
        )


def gamma(p: Permutation) -> Permutation:
    """π →RSK T →η T′ →RSK⁻¹ σ."""
    if len(p) < 2 or len(p) % 2:
        raise PreconditionError(f"{p} の長さは 2 以上の偶数でなければなりません")
    _check_family(p, p_descent_set(len(p)), "𝒫")
    return rsk_involution_inv(eta(rsk_involution(p)))


def gamma_inv(sigma: Permutation) -> Permutation:
    if len(sigma) < 5 or len(sigma) % 2 == 0:
        raise PreconditionError(f"{sigma} の長さは 5 以上の奇数でなければなりません")
    _check_family(sigma, rrc_descent_set(len(sigma)), "ℛʳᶜ")
    return rsk_involution_inv(eta_inv(rsk_involution(sigma)))
