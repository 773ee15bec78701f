"""JSON 形式との相互変換.

置換は配列、分割・SYT は配列の配列、横断は {"rows", "ones"}、マッチングは [i, j] の配列、
振動盤は分割の配列、経路は {"steps", "start_height"}、経路の組は {"P", "Q"}。
"""

from __future__ import annotations

import functools
import json
import sys
from collections.abc import Callable
from pathlib import Path
from typing import Any, TypeVar

from wilfinv.errors import InvalidObjectError
from wilfinv.fillings.diagram import YoungDiagram
from wilfinv.fillings.transversal import Transversal
from wilfinv.matchings.matching import Matching
from wilfinv.matchings.oscillating import OscillatingTableau
from wilfinv.paths.lattice import LatticePath
from wilfinv.paths.pairs import DyckPair
from wilfinv.perm.core import Permutation, parse_pattern
from wilfinv.pipeline.psi_cap import PsiTrace
from wilfinv.tableaux.partition import Partition
from wilfinv.tableaux.syt import StandardYoungTableau


# ---------------------------------------------------------------------------
# encode
# ---------------------------------------------------------------------------

def encode_transversal(t: Transversal) -> dict:
    return {"rows": list(t.diagram.row_lengths), "ones": [[c, r] for c, r in t.points]}


def encode_path(path: LatticePath) -> dict:
    return {"steps": path.steps, "start_height": path.start[1]}


def encode_pair(pair: DyckPair) -> dict:
    return {"P": pair.P.steps, "Q": pair.Q.steps}


def encode_trace(trace: PsiTrace) -> dict:
    return {
        "transversal": encode_transversal(trace.transversal),
        "matching": encode(trace.matching),
        "tableau": encode(trace.tableau),
        "pair": encode_pair(trace.pair),
        "pair_prime": encode_pair(trace.pair_prime),
        "tableau_prime": encode(trace.tableau_prime),
        "matching_prime": encode(trace.matching_prime),
        "transversal_prime": encode_transversal(trace.transversal_prime),
    }


def encode(obj: Any) -> Any:
    """組合せ対象を JSON 化可能な値へ."""
    if isinstance(obj, Permutation):
        return list(obj.word)
    if isinstance(obj, Partition):
        return list(obj.parts)
    if isinstance(obj, StandardYoungTableau):
        return [list(r) for r in obj.rows]
    if isinstance(obj, Transversal):
        return encode_transversal(obj)
    if isinstance(obj, Matching):
        return [[i, j] for i, j in obj.arcs]
    if isinstance(obj, OscillatingTableau):
        return [list(s.parts) for s in obj.shapes]
    if isinstance(obj, LatticePath):
        return encode_path(obj)
    if isinstance(obj, DyckPair):
        return encode_pair(obj)
    if isinstance(obj, PsiTrace):
        return encode_trace(obj)
    if hasattr(obj, "to_dict"):
        return obj.to_dict()
    if isinstance(obj, (frozenset, set)):
        return sorted(obj)
    if isinstance(obj, (list, tuple)):
        return [encode(v) for v in obj]
    return obj


def dumps(obj: Any) -> str:
    return json.dumps(encode(obj), indent=2, ensure_ascii=False)


# ---------------------------------------------------------------------------
# decode
# ---------------------------------------------------------------------------

_D = TypeVar("_D")


def _decoder(func: Callable[[Any], _D]) -> Callable[[Any], _D]:
    """入れ子の形が合わない入力（数値の代わりに配列など）も InvalidObjectError にする."""

    @functools.wraps(func)
    def wrapper(data: Any) -> _D:
        try:
            return func(data)
        except InvalidObjectError:
            raise
        except (TypeError, ValueError) as e:
            raise InvalidObjectError(f"{func.__name__}: 構造が不正です: {data!r}") from e

    return wrapper


@_decoder
def decode_permutation(data: Any) -> Permutation:
    """配列、または一行記法の文字列."""
    if isinstance(data, str):
        return parse_pattern(data)
    if isinstance(data, list):
        return Permutation(tuple(data))
    raise InvalidObjectError(f"置換として解釈できません: {data!r}")


@_decoder
def decode_tableau(data: Any) -> StandardYoungTableau:
    if not isinstance(data, list):
        raise InvalidObjectError(f"SYT は配列の配列です: {data!r}")
    return StandardYoungTableau(tuple(tuple(r) for r in data))


@_decoder
def decode_transversal(data: Any) -> Transversal:
    """{"rows": [...], "ones": [[c, r], ...]}。置換（配列・文字列）なら正方形の置換行列."""
    if isinstance(data, (list, str)):
        p = decode_permutation(data)
        return Transversal(YoungDiagram.square(len(p)), p.word)
    if not isinstance(data, dict) or "rows" not in data or "ones" not in data:
        raise InvalidObjectError(f"横断は {{'rows', 'ones'}} を持つオブジェクトです: {data!r}")
    cells = sorted((int(c), int(r)) for c, r in data["ones"])
    if [c for c, _ in cells] != list(range(1, len(cells) + 1)):
        raise InvalidObjectError(f"各列に 1 がちょうど一つではありません: {data['ones']}")
    return Transversal(YoungDiagram(tuple(data["rows"])), tuple(r for _, r in cells))


@_decoder
def decode_matching(data: Any) -> Matching:
    if not isinstance(data, list):
        raise InvalidObjectError(f"マッチングは [i, j] の配列です: {data!r}")
    return Matching.from_pairs(data)


@_decoder
def decode_oscillating(data: Any) -> OscillatingTableau:
    if not isinstance(data, list):
        raise InvalidObjectError(f"振動盤は分割の配列です: {data!r}")
    return OscillatingTableau.from_parts(data)


@_decoder
def decode_path(data: Any) -> LatticePath:
    if isinstance(data, str):
        return LatticePath(data)
    if not isinstance(data, dict) or "steps" not in data:
        raise InvalidObjectError(f"経路は {{'steps', 'start_height'}} です: {data!r}")
    return LatticePath(data["steps"], (0, int(data.get("start_height", 0))))


@_decoder
def decode_pair(data: Any) -> DyckPair:
    if not isinstance(data, dict) or "P" not in data or "Q" not in data:
        raise InvalidObjectError(f"経路の組は {{'P', 'Q'}} です: {data!r}")
    return DyckPair(decode_path(data["P"]), decode_path(data["Q"]))


def load_json(source: str | Path) -> Any:
    """ファイル、または '-' で標準入力から JSON を読む."""
    if str(source) == "-":
        text = sys.stdin.read()
    else:
        try:
            with open(source, "r", encoding="utf-8") as f:
                text = f.read()
        except OSError as e:
            raise InvalidObjectError(f"入力を読めません: {source}: {e}") from e
    try:
        return json.loads(text)
    except json.JSONDecodeError as e:
        raise InvalidObjectError(f"JSON を解釈できません ({source}): {e}") from e
