"""エントリーポイント: count / enumerate / map / verify / selftest."""

from __future__ import annotations

import argparse
import sys
from typing import Any, Callable

import pandas as pd

from wilfinv import codec
from wilfinv.config import Settings, load_settings
from wilfinv.enumeration.classes import CLASS_ALIASES, ClassSpec
from wilfinv.enumeration.shard import count_parallel, generate_parallel
from wilfinv.enumeration.verify import (
    TARGETS,
    VerificationReport,
    require_feasible,
    save_report,
    selftest,
    verify,
)
from wilfinv.fillings.chi import chi, chi_inv
from wilfinv.fillings.transversal import Transversal
from wilfinv.logger import get_logger, setup_logger
from wilfinv.matchings.phi import phi, phi_inv
from wilfinv.paths.psi import psi, psibar
from wilfinv.paths.transforms import theta
from wilfinv.perm.core import Permutation, parse_pattern
from wilfinv.pipeline.board import color_board, white_transversal
from wilfinv.pipeline.phi_cap import phi_cap
from wilfinv.pipeline.psi_cap import psi_cap, psi_cap_trace
from wilfinv.tableaux.gamma import gamma, gamma_inv
from wilfinv.tableaux.west import west_f, west_f_inv

log = get_logger(__name__)

BIJECTIONS = (
    "f", "f-inv", "gamma", "gamma-inv", "chi", "chi-inv", "phi", "phi-inv",
    "psi", "psibar", "theta", "Psi", "Phi",
)


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="wilfinv",
        description="パターン回避インボリューションの全単射と数え上げ検証",
    )
    parser.add_argument("--config", help="設定 YAML のパス")
    parser.add_argument("--quiet", action="store_true", help="進捗表示と INFO ログを抑止")
    sub = parser.add_subparsers(dest="command", required=True)

    for name, help_text in (("count", "族の要素数"), ("enumerate", "族の要素を辞書順に出力")):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("--class", dest="base", choices=sorted(CLASS_ALIASES), required=True)
        p.add_argument("--length", type=int, required=True)
        p.add_argument("--avoid", action="append", default=[], help="回避パターン（複数可）")
        if name == "enumerate":
            p.add_argument("--format", choices=("json", "csv"), default="json")

    p = sub.add_parser("map", help="全単射を JSON 入力に適用")
    p.add_argument("--bijection", choices=BIJECTIONS, required=True)
    p.add_argument("--input", default="-", help="入力 JSON ファイル（'-' で標準入力）")
    p.add_argument("--tau", default="", help="Φ の τ（空なら Ψ）")
    p.add_argument("--k", type=int, default=4, help="f の k（I_k 回避）")
    p.add_argument("--trace", action="store_true", help="Ψ/Φ の各段を出力")

    p = sub.add_parser("verify", help="検証対象を実行")
    p.add_argument("name", choices=list(TARGETS))
    p.add_argument("--max-n", type=int, required=True)
    p.add_argument("--slow", action="store_true", help="低速上限まで許可")
    p.add_argument("--save", action="store_true", help="レポートを output.report_dir に保存")

    p = sub.add_parser("selftest", help="全検証対象を既定上限で実行")
    p.add_argument("--slow", action="store_true")
    p.add_argument("--save", action="store_true")
    return parser


def _class_spec(args: argparse.Namespace) -> ClassSpec:
    avoid = tuple(parse_pattern(text) for text in args.avoid)
    return ClassSpec(CLASS_ALIASES[args.base], args.length, avoid)


def _cmd_count(args: argparse.Namespace, settings: Settings) -> int:
    spec = _class_spec(args)
    require_feasible(spec, settings)
    total = count_parallel(spec, settings.worker_count, settings.enumeration.shard_min_length)
    log.info(f"{spec.describe()}: {total}")
    print(total)
    return 0


def _cmd_enumerate(args: argparse.Namespace, settings: Settings) -> int:
    spec = _class_spec(args)
    require_feasible(spec, settings)
    members = list(generate_parallel(
        spec, settings.worker_count, settings.enumeration.shard_min_length
    ))
    log.info(f"{spec.describe()}: {len(members)} 件")
    if args.format == "csv":
        df = pd.DataFrame(
            [p.word for p in members],
            columns=[f"p{i}" for i in range(1, spec.n + 1)],
        )
        df.to_csv(sys.stdout, index=False)
    else:
        print(codec.dumps(members))
    return 0


def _phi_trace(t: Transversal, tau: Permutation) -> dict:
    """白い部分の Ψ の各段と、全体の結果."""
    if len(tau) == 0:
        return codec.encode_trace(psi_cap_trace(t))
    result = phi_cap(t, tau)
    mask = color_board(t, tau)
    inner = white_transversal(t, mask)
    return {
        "white": sorted([c, r] for c, r in mask.white),
        "white_diagram": list(mask.white_diagram.row_lengths),
        "inner": codec.encode_trace(psi_cap_trace(inner)) if len(inner) else None,
        "result": codec.encode_transversal(result),
    }


def _apply_bijection(args: argparse.Namespace, data: Any) -> Any:
    tau = parse_pattern(args.tau)
    maps: dict[str, Callable[[Any], Any]] = {
        "f": lambda d: west_f(codec.decode_permutation(d), args.k),
        "f-inv": lambda d: west_f_inv(codec.decode_permutation(d), args.k),
        "gamma": lambda d: gamma(codec.decode_permutation(d)),
        "gamma-inv": lambda d: gamma_inv(codec.decode_permutation(d)),
        "chi": lambda d: chi(codec.decode_transversal(d)),
        "chi-inv": lambda d: chi_inv(codec.decode_matching(d)),
        "phi": lambda d: phi(codec.decode_matching(d)),
        "phi-inv": lambda d: phi_inv(codec.decode_oscillating(d)),
        "psi": lambda d: psi(codec.decode_oscillating(d)),
        "psibar": lambda d: psibar(codec.decode_oscillating(d)),
        "theta": lambda d: theta(codec.decode_pair(d)),
        "Psi": lambda d: psi_cap(codec.decode_transversal(d)),
        "Phi": lambda d: phi_cap(codec.decode_transversal(d), tau),
    }
    if args.trace and args.bijection == "Psi":
        return psi_cap_trace(codec.decode_transversal(data))
    if args.trace and args.bijection == "Phi":
        return _phi_trace(codec.decode_transversal(data), tau)
    return maps[args.bijection](data)


def _cmd_map(args: argparse.Namespace, settings: Settings) -> int:
    data = codec.load_json(args.input)
    result = _apply_bijection(args, data)
    print(codec.dumps(result))
    return 0


def _finish(reports: list[VerificationReport], settings: Settings, save: bool) -> int:
    if save:
        for report in reports:
            save_report(report, settings)
    return 0 if all(r.passed for r in reports) else 1


def _cmd_verify(args: argparse.Namespace, settings: Settings) -> int:
    report = verify(args.name, args.max_n, settings, slow=args.slow)
    print(codec.dumps(report))
    return _finish([report], settings, args.save)


def _cmd_selftest(args: argparse.Namespace, settings: Settings) -> int:
    reports = selftest(settings, slow=args.slow)
    summary = pd.DataFrame([
        {
            "name": r.name,
            "max_n": r.parameters["max_n"],
            "rows": len(r.rows),
            "pass": r.passed,
            "elapsed": round(r.elapsed, 2),
        }
        for r in reports
    ])
    print(summary.to_string(index=False))
    return _finish(reports, settings, args.save)


_COMMANDS: dict[str, Callable[[argparse.Namespace, Settings], int]] = {
    "count": _cmd_count,
    "enumerate": _cmd_enumerate,
    "map": _cmd_map,
    "verify": _cmd_verify,
    "selftest": _cmd_selftest,
}


def run(argv: list[str] | None = None) -> int:
    """終了コード: 0 = 合格, 1 = 検証不一致, 2 = 入力・前提条件のエラー."""
    args = _build_parser().parse_args(argv)
    settings = load_settings(args.config)
    if args.quiet:
        settings.logging.level = "WARNING"
        settings.output.progress = False
    try:
        setup_logger(settings)
        return _COMMANDS[args.command](args, settings)
    except ValueError as e:
        log.error(f"{type(e).__name__}: {e}")
        return 2


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
