"""Ψ = χ′∘φ⁻¹∘ψ̄⁻¹∘θ∘ψ∘φ∘χ: 321 回避の対称横断 → 123 回避の対称横断（ピーク保存）."""

from __future__ import annotations

from dataclasses import dataclass

from wilfinv.errors import PreconditionError
from wilfinv.fillings.chi import chi, chi_inv
from wilfinv.fillings.transversal import Transversal, find_filling_occurrence
from wilfinv.logger import get_logger
from wilfinv.matchings.matching import Matching
from wilfinv.matchings.oscillating import OscillatingTableau
from wilfinv.matchings.phi import phi, phi_inv
from wilfinv.paths.pairs import DyckPair
from wilfinv.paths.psi import psi, psi_inv, psibar, psibar_inv
from wilfinv.paths.transforms import theta, theta_inv
from wilfinv.perm.core import Permutation

log = get_logger(__name__)

J3 = Permutation.decreasing(3)
I3 = Permutation.identity(3)


@dataclass(frozen=True)
class PsiTrace:
    """Ψ の各段の中間結果."""

    transversal: Transversal
    matching: Matching
    tableau: OscillatingTableau
    pair: DyckPair
    pair_prime: DyckPair
    tableau_prime: OscillatingTableau
    matching_prime: Matching
    transversal_prime: Transversal

    @property
    def result(self) -> Transversal:
        return self.transversal_prime


def require_symmetric_avoiding(t: Transversal, pattern: Permutation) -> None:
    """自己共役図形上の対称横断で pattern を含まないこと。違反は出現列つきで拒否."""
    if not t.diagram.is_self_conjugate:
        raise PreconditionError(f"図形 {list(t.diagram.row_lengths)} は自己共役ではありません")
    if not t.is_symmetric:
        raise PreconditionError(f"対称横断ではありません: {list(t.ones)}")
    witness = find_filling_occurrence(t.points, t.diagram, pattern)
    if witness is not None:
        raise PreconditionError(
            f"横断 {list(t.ones)} は {pattern} を含みます（列 {list(witness)}）",
            pattern=pattern,
            witness=witness,
        )


def psi_cap_trace(t: Transversal) -> PsiTrace:
    require_symmetric_avoiding(t, J3)
    matching = chi(t)
    tableau = phi(matching)
    pair = psi(tableau)
    pair_prime = theta(pair)
    tableau_prime = psibar_inv(pair_prime)
    matching_prime = phi_inv(tableau_prime)
    result = chi_inv(matching_prime)
    log.debug(f"Ψ: {list(t.ones)} → {list(result.ones)}")
    return PsiTrace(
        transversal=t,
        matching=matching,
        tableau=tableau,
        pair=pair,
        pair_prime=pair_prime,
        tableau_prime=tableau_prime,
        matching_prime=matching_prime,
        transversal_prime=result,
    )


def psi_cap(t: Transversal) -> Transversal:
    return psi_cap_trace(t).result


def psi_cap_inv(t: Transversal) -> Transversal:
    require_symmetric_avoiding(t, I3)
    tableau = phi(chi(t))
    pair = theta_inv(psibar(tableau))
    return chi_inv(phi_inv(psi_inv(pair)))
