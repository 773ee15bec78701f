"""数え上げ恒等式と全単射の網羅検証.

各検証対象は n ごとに期待値と計算値の行を作り、全行が一致したときのみ合格とする。
"""

from __future__ import annotations

import json
import sys
import time
from collections.abc import Callable, Iterable, Iterator
from dataclasses import asdict, dataclass, field
from datetime import datetime
from math import factorial
from pathlib import Path
from typing import TypeVar

import pandas as pd
from tqdm import tqdm

from wilfinv.config import Settings, load_settings
from wilfinv.enumeration.classes import (
    Base,
    ClassSpec,
    I4,
    family_o,
    family_p,
    family_q,
    family_r,
    family_rrc,
)
from wilfinv.enumeration.motzkin import M, involution_count, motzkin_formula, motzkin_recurrence
from wilfinv.enumeration.shard import count_parallel, generate_parallel
from wilfinv.errors import InfeasibleError
from wilfinv.fillings.diagram import self_conjugate_diagrams
from wilfinv.fillings.transversal import (
    Transversal,
    symmetric_transversals,
    transversal_contains,
    transversal_peaks,
)
from wilfinv.logger import get_logger
from wilfinv.matchings.matching import (
    Matching,
    crossing_nesting,
    matchings,
    reflect,
    symmetric_matchings,
    valleys,
)
from wilfinv.matchings.oscillating import osc_peaks, osc_valleys
from wilfinv.matchings.phi import phi, phi_inv
from wilfinv.paths.lattice import LatticePath, lattice_paths_under
from wilfinv.paths.pairs import DyckPair, ab_indices, ab_sets, symmetric_noncrossing_pairs
from wilfinv.paths.psi import psi, psibar
from wilfinv.paths.transforms import alpha, beta, maximal_chains, theta, theta_inv
from wilfinv.perm.core import Permutation, direct_sum, parse_pattern, peaks, symmetry
from wilfinv.pipeline.phi_cap import phi_involution, phi_involution_inv
from wilfinv.pipeline.psi_cap import I3, J3, psi_cap, psi_cap_inv
from wilfinv.tableaux.gamma import gamma, gamma_inv
from wilfinv.tableaux.west import west_f, west_f_inv

log = get_logger(__name__)

T = TypeVar("T")

TAUS = ("1", "12", "21", "132", "213")


@dataclass(frozen=True)
class ReportRow:
    label: str
    n: int
    expected: int
    computed: int
    ok: bool

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "expected": self.expected,
            "computed": self.computed,
            "label": self.label,
            "ok": self.ok,
        }


@dataclass
class VerificationReport:
    name: str
    parameters: dict
    rows: list[ReportRow] = field(default_factory=list)
    elapsed: float = 0.0

    @property
    def passed(self) -> bool:
        return all(r.ok for r in self.rows)

    @property
    def failures(self) -> list[ReportRow]:
        return [r for r in self.rows if not r.ok]

    def to_frame(self) -> pd.DataFrame:
        return pd.DataFrame(
            [asdict(r) for r in self.rows],
            columns=["label", "n", "expected", "computed", "ok"],
        )

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "parameters": self.parameters,
            "rows": [r.to_dict() for r in self.rows],
            "pass": self.passed,
            "elapsed": round(self.elapsed, 3),
        }


@dataclass(frozen=True)
class Identity:
    """|base_{length(n)}(pattern)| = expected(n)（n ≥ min_n）."""

    base: Base
    length: Callable[[int], int]
    pattern: str
    expected: Callable[[int], int]
    min_n: int = 1

    def spec(self, n: int) -> ClassSpec:
        return ClassSpec(self.base, self.length(n), (parse_pattern(self.pattern),))


def _even(n: int) -> int:
    return 2 * n


def _odd_below(n: int) -> int:
    return 2 * n - 1


def _odd_above(n: int) -> int:
    return 2 * n + 1


def _even_above(n: int) -> int:
    return 2 * n + 2


def _m(n: int) -> int:
    return M(n)


def _m_gap(n: int) -> int:
    return M(n) - M(n - 2)


def _m_prev(n: int) -> int:
    return M(n - 1)


TABLE1: tuple[Identity, ...] = (
    Identity("RAI", _even, "4321", _m),
    Identity("AI", _even, "1234", _m),
    Identity("RAI", _odd_below, "1234", _m_gap),
    Identity("AI", _odd_below, "4321", _m_gap),
    Identity("RAI", _odd_below, "4321", _m_gap),
    Identity("AI", _odd_below, "1234", _m_gap),
    Identity("RAI", _even, "1234", lambda n: M(n + 1) - 2 * M(n - 1) + M(n - 3), min_n=2),
    Identity("AI", _even, "4321", lambda n: M(n + 1) - 2 * M(n - 1) + M(n - 3), min_n=2),
    Identity("RAI", _even, "3412", _m),
    Identity("AI", _even_above, "3412", _m),
    Identity("AI", _odd_above, "3412", _m),
    Identity("RAI", _odd_above, "3412", _m),
    Identity("AI", _even, "1243", _m),
    Identity("AI", _even, "2143", _m),
    Identity("AI", _even, "2134", _m),
    Identity("AI", _odd_below, "2134", _m_gap),
    Identity("RAI", _odd_below, "1243", _m_gap),
    Identity("AI", _odd_above, "1243", _m),
    Identity("AI", _odd_above, "2143", _m),
    Identity("RAI", _odd_above, "2143", _m),
    Identity("RAI", _odd_above, "2134", _m),
    Identity("RAI", _even, "2143", _m_prev),
)

CONJ1: tuple[Identity, ...] = (
    Identity("RAI", _even, "1243", _m),
    Identity("RAI", _even, "2134", _m),
)

CONJ2: tuple[Identity, ...] = (
    Identity("AI", _even, "1432", _m),
    Identity("AI", _even, "3214", _m),
    Identity("AI", _odd_below, "3214", _m_gap),
    Identity("RAI", _odd_below, "1432", _m_gap),
    Identity("RAI", _even, "1432", _m),
    Identity("RAI", _even, "3214", _m),
    Identity("AI", _odd_above, "1432", _m),
    Identity("RAI", _odd_above, "3214", _m),
)


# ---------------------------------------------------------------------------
# ガードレール
# ---------------------------------------------------------------------------

def require_feasible(spec: ClassSpec, settings: Settings) -> None:
    """長さ上限を超える族は拒否（インボリューション族は max_length、S は max_perm_length）."""
    enum = settings.enumeration
    limit = enum.max_length if spec.involutive else enum.max_perm_length
    if spec.n > limit:
        estimate = involution_count(spec.n) if spec.involutive else factorial(spec.n)
        raise InfeasibleError(
            f"{spec.describe()}: 長さ {spec.n} は上限 {limit} を超えます（対象数の見積り {estimate}）",
            estimate=estimate,
        )


def _double_factorial(n: int) -> int:
    return factorial(2 * n) // (2 ** n * factorial(n))


_ESTIMATES: dict[str, Callable[[int], int]] = {
    "motzkin": lambda n: n + 1,
    "table1": lambda n: involution_count(2 * n + 2),
    "conj1": lambda n: involution_count(2 * n),
    "conj2": lambda n: involution_count(2 * n + 1),
    "conj3": involution_count,
    "lemma_f": lambda n: involution_count(2 * n),
    "lemma_R": lambda n: involution_count(2 * n + 1),
    "lemma_P": lambda n: involution_count(2 * n + 1),
    "lemma_Q": lambda n: involution_count(2 * n),
    "eq_O": lambda n: involution_count(2 * n),
    "psi_bijection": lambda n: 2 ** n * involution_count(n),
    "phi_bijection": involution_count,
    "matching_suite": _double_factorial,
    "path_suite": lambda n: (n + 3) * 2 ** (n + 2) + 4 ** n,
}


def check_feasible(name: str, max_n: int, settings: Settings, slow: bool = False) -> None:
    """max_n が既定上限（--slow なら低速上限）以内か."""
    if name not in TARGETS:
        raise ValueError(f"未知の検証対象: {name}（{', '.join(TARGETS)}）")
    if max_n < 1:
        raise ValueError(f"max_n は 1 以上: {max_n}")
    table = settings.verify.slow_max_n if slow else settings.verify.default_max_n
    bound = table.get(name)
    if bound is not None and max_n > bound:
        estimate = _ESTIMATES[name](max_n)
        hint = "" if slow else "（--slow で上限を引き上げ）"
        raise InfeasibleError(
            f"{name}: max_n={max_n} は上限 {bound} を超えます{hint}。対象数の見積り {estimate}",
            estimate=estimate,
        )


# ---------------------------------------------------------------------------
# 実行コンテキスト
# ---------------------------------------------------------------------------

@dataclass
class _Run:
    settings: Settings
    progress: bool

    def count(self, spec: ClassSpec) -> int:
        require_feasible(spec, self.settings)
        enum = self.settings.enumeration
        return count_parallel(spec, self.settings.worker_count, enum.shard_min_length)

    def members(self, spec: ClassSpec) -> list[Permutation]:
        require_feasible(spec, self.settings)
        enum = self.settings.enumeration
        return list(generate_parallel(spec, self.settings.worker_count, enum.shard_min_length))

    def track(self, items: Iterable[T], desc: str, total: int | None = None) -> Iterator[T]:
        disable = not self.progress or not sys.stderr.isatty()
        return iter(tqdm(items, desc=desc, total=total, disable=disable, leave=False))


def _holds(check: Callable[[], bool], subject: object) -> bool:
    """検査関数を評価。拒否や内部の表明違反は不成立として記録."""
    try:
        return bool(check())
    except (ValueError, AssertionError) as e:
        log.warning(f"{subject}: {type(e).__name__}: {e}")
        return False


def _attempt(apply: Callable[[], T], subject: object) -> T | None:
    try:
        return apply()
    except (ValueError, AssertionError) as e:
        log.warning(f"{subject}: {type(e).__name__}: {e}")
        return None


def _row(label: str, n: int, expected: int, computed: int, ok: bool = True) -> ReportRow:
    return ReportRow(label, n, expected, computed, ok and expected == computed)


# ---------------------------------------------------------------------------
# 検証対象
# ---------------------------------------------------------------------------

def _verify_motzkin(run: _Run, max_n: int) -> list[ReportRow]:
    return [
        _row(f"M_{n}", n, motzkin_recurrence(n), motzkin_formula(n))
        for n in run.track(range(max_n + 1), "motzkin", total=max_n + 1)
    ]


def _identity_rows(
    run: _Run, identities: tuple[Identity, ...], max_n: int, desc: str
) -> list[ReportRow]:
    rows = []
    for ident in run.track(identities, desc, total=len(identities)):
        for n in range(ident.min_n, max_n + 1):
            spec = ident.spec(n)
            rows.append(_row(spec.describe(), n, ident.expected(n), run.count(spec)))
    return rows


def _verify_table1(run: _Run, max_n: int) -> list[ReportRow]:
    return _identity_rows(run, TABLE1, max_n, "table1")


def _verify_conj1(run: _Run, max_n: int) -> list[ReportRow]:
    return _identity_rows(run, CONJ1, max_n, "conj1")


def _verify_conj2(run: _Run, max_n: int) -> list[ReportRow]:
    return _identity_rows(run, CONJ2, max_n, "conj2")


def _verify_conj3(run: _Run, max_n: int) -> list[ReportRow]:
    """|AI_n(123⊕τ)| = |AI_n(321⊕τ)| と、Φ が前者を後者の上へ写すこと（max_n は長さ）."""
    rows = []
    for text in run.track(TAUS, "conj3", total=len(TAUS)):
        tau = parse_pattern(text)
        inc, dec = direct_sum(I3, tau), direct_sum(J3, tau)
        for n in range(1, max_n + 1):
            domain = run.members(ClassSpec("AI", n, (dec,)))
            target = set(run.members(ClassSpec("AI", n, (inc,))))
            rows.append(_row(f"AI_{n}({inc}) = AI_{n}({dec})", n, len(domain), len(target)))

            images = {_attempt(lambda p=p: phi_involution(p, tau), p) for p in domain}
            label = f"Φ(AI_{n}({dec})) = AI_{n}({inc})"
            rows.append(_row(label, n, len(target), len(images), images == target))
    return rows


def _verify_lemma_f(run: _Run, max_n: int) -> list[ReportRow]:
    """f⁻¹: RAI_{2n}(1243) → {π ∈ RAI_{2n}(1234) : π₁=2n または π₃=2n}."""
    p1243 = parse_pattern("1243")
    rows = []
    for n in run.track(range(1, max_n + 1), "lemma_f", total=max_n):
        length = 2 * n
        domain = run.members(ClassSpec("RAI", length, (p1243,)))
        base = ClassSpec("RAI", length, (I4,))
        target = set(run.members(base.with_fixed(1, length)))
        if length >= 3:
            target |= set(run.members(base.with_fixed(3, length)))

        images = [_attempt(lambda s=s: west_f_inv(s, 4), s) for s in domain]
        ok = None not in images and len(set(images)) == len(domain) and set(images) == target
        ok = ok and all(
            _holds(lambda p=p, s=s: west_f(p, 4) == s, s) for p, s in zip(images, domain)
        )
        rows.append(_row(f"f⁻¹(RAI_{length}(1243))", n, len(target), len(set(images)), ok))
    return rows


def _m_minus_two_prev(n: int) -> int:
    return M(n) - M(n - 1) - M(n - 2)


def _verify_lemma_r(run: _Run, max_n: int) -> list[ReportRow]:
    rows = []
    for n in run.track(range(3, max_n + 1), "lemma_R", total=max(0, max_n - 2)):
        r = run.members(family_r(n))
        rrc = run.members(family_rrc(n))
        rows.append(_row(f"|R_{2 * n + 1}|", n, _m_minus_two_prev(n), len(r)))
        rows.append(_row(f"|Rrc_{2 * n + 1}|", n, _m_minus_two_prev(n), len(rrc)))
        image = {symmetry(p, "reverse_complement") for p in r}
        label = f"rc(R_{2 * n + 1}) = Rrc_{2 * n + 1}"
        rows.append(_row(label, n, len(rrc), len(image), image == set(rrc)))
    return rows


def _verify_lemma_p(run: _Run, max_n: int) -> list[ReportRow]:
    """|𝒫_{2n−2}| と γ: 𝒫_{2n−2} → ℛʳᶜ_{2n+1}."""
    rows = []
    for n in run.track(range(3, max_n + 1), "lemma_P", total=max(0, max_n - 2)):
        family = run.members(family_p(n))
        rows.append(_row(f"|P_{2 * n - 2}|", n, _m_minus_two_prev(n), len(family)))

        target = set(run.members(family_rrc(n)))
        images = [_attempt(lambda p=p: gamma(p), p) for p in family]
        ok = None not in images and len(set(images)) == len(family) and set(images) == target
        ok = ok and all(
            _holds(lambda p=p, s=s: gamma_inv(s) == p, p) for p, s in zip(family, images)
        )
        label = f"γ(P_{2 * n - 2}) = Rrc_{2 * n + 1}"
        rows.append(_row(label, n, len(target), len(set(images)), ok))
    return rows


def _verify_lemma_q(run: _Run, max_n: int) -> list[ReportRow]:
    return [
        _row(f"|Q_{2 * n}|", n, M(n - 1), run.count(family_q(n)))
        for n in run.track(range(3, max_n + 1), "lemma_Q", total=max(0, max_n - 2))
    ]


def _verify_eq_o(run: _Run, max_n: int) -> list[ReportRow]:
    rows = []
    for n in run.track(range(1, max_n + 1), "eq_O", total=max_n):
        top = ClassSpec("RAI", 2 * n, (I4,)).with_fixed(1, 2 * n)
        rows.append(_row(f"|RAI_{2 * n}(1234), π₁={2 * n}|", n, M(n - 1), run.count(top)))
        if n < 2:
            continue
        size = run.count(family_o(n))
        rows.append(_row(f"|O_{2 * n}|", n, M(n) - M(n - 1), size))
        if n >= 3:
            split = run.count(family_p(n)) + run.count(family_q(n - 1))
            rows.append(_row(f"|O_{2 * n}| = |P_{2 * n - 2}| + |Q_{2 * n - 2}|", n, split, size))
    return rows


def _verify_psi(run: _Run, max_n: int) -> list[ReportRow]:
    """Ψ: ST_λ(321) → ST_λ(123)（max_n は列数の上限）."""
    diagrams = list(self_conjugate_diagrams(max_n))
    rows = []
    for k in run.track(range(1, max_n + 1), "psi_bijection", total=max_n):
        domain: list[Transversal] = []
        target: set[Transversal] = set()
        for d in diagrams:
            if d.num_columns != k:
                continue
            for t in symmetric_transversals(d):
                if not transversal_contains(t, J3):
                    domain.append(t)
                if not transversal_contains(t, I3):
                    target.add(t)

        images = []
        ok = True
        for t in domain:
            image = _attempt(lambda t=t: psi_cap(t), list(t.ones))
            images.append(image)
            ok = ok and image is not None and _holds(
                lambda t=t, image=image: (
                    transversal_peaks(image) == transversal_peaks(t)
                    and image.type_word() == t.type_word()
                    and psi_cap_inv(image) == t
                ),
                list(t.ones),
            )
        ok = ok and len(set(images)) == len(domain) and set(images) == target
        rows.append(_row(f"Ψ: ST(321) → ST(123), {k} 列", k, len(target), len(set(images)), ok))
    return rows


def _verify_phi(run: _Run, max_n: int) -> list[ReportRow]:
    """Φ: I_n(321⊕τ) → I_n(123⊕τ)（max_n は長さ）."""
    rows = []
    for text in run.track(TAUS, "phi_bijection", total=len(TAUS)):
        tau = parse_pattern(text)
        dec, inc = direct_sum(J3, tau), direct_sum(I3, tau)
        for n in range(1, max_n + 1):
            domain = run.members(ClassSpec("I", n, (dec,)))
            target = set(run.members(ClassSpec("I", n, (inc,))))
            images = []
            ok = True
            for p in domain:
                image = _attempt(lambda p=p: phi_involution(p, tau), p)
                images.append(image)
                ok = ok and image is not None and _holds(
                    lambda p=p, image=image: (
                        peaks(image) == peaks(p) and phi_involution_inv(image, tau) == p
                    ),
                    p,
                )
            ok = ok and len(set(images)) == len(domain) and set(images) == target
            label = f"Φ: I_{n}({dec}) → I_{n}({inc})"
            rows.append(_row(label, n, len(target), len(set(images)), ok))
    return rows


def _verify_matchings(run: _Run, max_n: int) -> list[ReportRow]:
    rows = []
    for n in run.track(range(1, max_n + 1), "matching_suite", total=max_n):
        total = passed = 0
        for m in matchings(n):
            total += 1
            passed += _holds(lambda m=m: _phi_properties(m), list(m.arcs))
        rows.append(_row(f"φ: M_{2 * n}", n, total, passed))

        total = passed = 0
        for m in symmetric_matchings(n):
            total += 1
            passed += _holds(lambda m=m: _symmetric_transport(m), list(m.arcs))
        rows.append(_row(f"φ, ψ, ψ̄: 対称 M_{2 * n}", n, total, passed))
    return rows


def _phi_properties(m: Matching) -> bool:
    o = phi(m)
    cr, ne = crossing_nesting(m)
    return (
        phi_inv(o) == m
        and o.type_word() == m.type_word()
        and cr == o.max_rows
        and ne == o.max_columns
        and phi(reflect(m)) == o.reverse()
    )


def _symmetric_transport(m: Matching) -> bool:
    o = phi(m)
    cr, ne = crossing_nesting(m)
    val, _ = valleys(m)
    ok = o.is_symmetric
    if cr <= 2:
        pair = psi(o)
        ok = ok and osc_valleys(o) == val
        ok = ok and pair.is_symmetric and pair.P.steps == o.type_word()
        ok = ok and ab_sets(pair)[0] == val
    if ne <= 2:
        pair = psibar(o)
        ok = ok and osc_peaks(o) == val
        ok = ok and pair.is_symmetric and pair.P.steps == o.type_word()
        ok = ok and ab_sets(pair)[1] == val
    return ok


def _alpha_properties(s: LatticePath, r: LatticePath) -> bool:
    image = alpha(s, r)
    back = beta(s, image)
    return (
        back == r
        and alpha(s, beta(s, r)) == r
        and image.x_range == r.x_range
        and image.heights[-1] == r.heights[-1]
        and image.is_nonnegative
        and all(h <= hs for h, hs in zip(image.heights, s.heights))
        and ab_indices(s.steps, r.steps)[0] == ab_indices(s.steps, image.steps)[1]
    )


def _theta_properties(pair: DyckPair) -> bool:
    image = theta(pair)
    blocks = maximal_chains(pair.P)
    letters = [step for _, _, step in blocks]
    return (
        image.P == pair.P
        and image.is_symmetric
        and theta_inv(image) == pair
        and theta(theta_inv(pair)) == pair
        and ab_sets(pair)[0] == ab_sets(image)[1]
        and letters[0] == "U"
        and letters[-1] == "D"
        and all(a != b for a, b in zip(letters, letters[1:]))
    )


def _verify_paths(run: _Run, max_n: int) -> list[ReportRow]:
    """α/β は長さ max_n+2 まで、θ は長さ 2·max_n までの対称な組."""
    rows = []
    for length in run.track(range(1, max_n + 3), "path_suite α/β", total=max_n + 2):
        total = passed = 0
        for s, r in lattice_paths_under(length):
            total += 1
            passed += _holds(lambda s=s, r=r: _alpha_properties(s, r), (s.start, r.steps))
        rows.append(_row(f"α/β: |R|={length}", length, total, passed))

    for half in run.track(range(1, max_n + 1), "path_suite θ", total=max_n):
        total = passed = 0
        for pair in symmetric_noncrossing_pairs(half):
            total += 1
            subject = (pair.P.steps, pair.Q.steps)
            passed += _holds(lambda pair=pair: _theta_properties(pair), subject)
        rows.append(_row(f"θ: SNC, 長さ {2 * half}", half, total, passed))
    return rows


TARGETS: dict[str, Callable[[_Run, int], list[ReportRow]]] = {
    "motzkin": _verify_motzkin,
    "table1": _verify_table1,
    "conj1": _verify_conj1,
    "conj2": _verify_conj2,
    "conj3": _verify_conj3,
    "lemma_f": _verify_lemma_f,
    "lemma_R": _verify_lemma_r,
    "lemma_P": _verify_lemma_p,
    "lemma_Q": _verify_lemma_q,
    "eq_O": _verify_eq_o,
    "psi_bijection": _verify_psi,
    "phi_bijection": _verify_phi,
    "matching_suite": _verify_matchings,
    "path_suite": _verify_paths,
}


# ---------------------------------------------------------------------------
# 実行・保存
# ---------------------------------------------------------------------------

def verify(
    name: str,
    max_n: int,
    settings: Settings | None = None,
    slow: bool = False,
    progress: bool | None = None,
) -> VerificationReport:
    if settings is None:
        settings = load_settings()
    check_feasible(name, max_n, settings, slow)
    if progress is None:
        progress = settings.output.progress
    run = _Run(settings=settings, progress=progress)

    log.info(f"検証開始: {name} (max_n={max_n}{', slow' if slow else ''})")
    start = time.perf_counter()
    rows = TARGETS[name](run, max_n)
    report = VerificationReport(
        name=name,
        parameters={"max_n": max_n, "slow": slow},
        rows=rows,
        elapsed=time.perf_counter() - start,
    )
    if report.passed:
        log.info(f"検証合格: {name} ({len(rows)} 行, {report.elapsed:.2f}s)")
    else:
        for r in report.failures:
            log.warning(f"不一致: {name} {r.label} n={r.n}: 期待 {r.expected}, 計算 {r.computed}")
        log.warning(f"検証不合格: {name} ({len(report.failures)}/{len(rows)} 行)")
    return report


def default_bound(name: str, settings: Settings, slow: bool = False) -> int:
    table = settings.verify.slow_max_n if slow else settings.verify.default_max_n
    if name not in table:
        raise ValueError(f"{name} の上限が設定にありません")
    return table[name]


def selftest(
    settings: Settings | None = None,
    slow: bool = False,
    progress: bool | None = None,
) -> list[VerificationReport]:
    """全検証対象を既定上限（slow なら低速上限）で実行."""
    if settings is None:
        settings = load_settings()
    return [
        verify(name, default_bound(name, settings, slow), settings, slow=slow, progress=progress)
        for name in TARGETS
    ]


def save_report(report: VerificationReport, settings: Settings) -> Path:
    """JSON と CSV を output.report_dir に保存し、JSON のパスを返す."""
    out_dir = settings.resolve_path(settings.output.report_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    stamp = datetime.now().strftime("%Y%m%d_%H%M%S")
    json_path = out_dir / f"{report.name}_{stamp}.json"
    with open(json_path, "w", encoding="utf-8") as f:
        json.dump(report.to_dict(), f, indent=2, ensure_ascii=False)
    report.to_frame().to_csv(out_dir / f"{report.name}_{stamp}.csv", index=False)
    log.info(f"レポート保存: {json_path}")
    return json_path
