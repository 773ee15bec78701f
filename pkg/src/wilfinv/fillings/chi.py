"""横断 ↔ マッチング の対応 χ.

型語の U を左から i 番目の開点（列 i）、D を右から j 番目の閉点（行 j）とし、
1 のあるマス (i, t_i) を弧で結ぶ。
"""

from __future__ import annotations

from wilfinv.errors import InvalidObjectError
from wilfinv.fillings.diagram import YoungDiagram
from wilfinv.fillings.transversal import Transversal
from wilfinv.matchings.matching import Matching


def _openers_closers(word: str) -> tuple[list[int], list[int]]:
    """開点を左から、閉点を右から並べた位置（1始まり）."""
    openers = [x for x, s in enumerate(word, start=1) if s == "U"]
    closers = [x for x, s in enumerate(word, start=1) if s == "D"][::-1]
    return openers, closers


def chi(t: Transversal) -> Matching:
    openers, closers = _openers_closers(t.type_word())
    return Matching(tuple((openers[i - 1], closers[row - 1]) for i, row in t.points))


def chi_inv(m: Matching) -> Transversal:
    word = m.type_word()
    diagram = YoungDiagram.from_type_word(word)
    openers, closers = _openers_closers(word)
    column_of = {x: i for i, x in enumerate(openers, start=1)}
    row_of = {x: j for j, x in enumerate(closers, start=1)}
    ones = [0] * len(openers)
    for i, j in m.arcs:
        ones[column_of[i] - 1] = row_of[j]
    try:
        return Transversal(diagram, tuple(ones))
    except InvalidObjectError as e:
        raise InvalidObjectError(f"マッチング {list(m.arcs)} は横断に戻せません: {e}") from e
