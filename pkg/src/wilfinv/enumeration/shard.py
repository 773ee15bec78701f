"""π₁ による分割と multiprocessing.Pool での並列列挙（出力順は逐次版と同一）."""

from __future__ import annotations

from multiprocessing import Pool
from typing import Iterator

from wilfinv.enumeration.classes import ClassSpec, count_avoiders, generate
from wilfinv.logger import get_logger
from wilfinv.perm.core import Permutation

log = get_logger(__name__)


def shards(spec: ClassSpec) -> list[ClassSpec]:
    """π₁ の値ごとの部分族（値の昇順）。π₁ が固定済みならそのまま."""
    if spec.n == 0 or any(pos == 1 for pos, _ in spec.fixed):
        return [spec]
    return [spec.with_fixed(1, v) for v in range(1, spec.n + 1)]


def _collect(spec: ClassSpec) -> list[tuple[int, ...]]:
    return [p.word for p in generate(spec)]


def generate_parallel(spec: ClassSpec, threads: int, min_length: int = 0) -> Iterator[Permutation]:
    """順序付き imap でシャードを並列に処理し、辞書順のまま連結."""
    if threads <= 1 or spec.n < min_length:
        yield from generate(spec)
        return
    parts = shards(spec)
    log.info(f"{spec.describe()}: {len(parts)} シャードを {threads} プロセスで列挙")
    with Pool(processes=threads) as pool:
        for words in pool.imap(_collect, parts):
            for word in words:
                yield Permutation(word)


def count_parallel(spec: ClassSpec, threads: int, min_length: int = 0) -> int:
    if threads <= 1 or spec.n < min_length:
        return count_avoiders(spec)
    parts = shards(spec)
    with Pool(processes=threads) as pool:
        return sum(pool.imap(count_avoiders, parts))
