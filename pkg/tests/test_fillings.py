"""ヤング図形・横断・χ のテスト."""

from __future__ import annotations

import pytest

from wilfinv.enumeration.classes import ClassSpec, generate
from wilfinv.errors import InvalidObjectError
from wilfinv.fillings.chi import chi, chi_inv
from wilfinv.fillings.diagram import YoungDiagram, self_conjugate_diagrams, type_of
from wilfinv.fillings.transversal import (
    Transversal,
    find_filling_occurrence,
    permutation_matrix,
    symmetric_transversals,
    transversal_contains,
    transversal_peaks,
    transversals,
)
from wilfinv.matchings.matching import (
    Matching,
    crossing_nesting,
    is_bilaterally_symmetric,
    valleys,
)
from wilfinv.perm.core import Permutation, contains_pattern, parse_pattern, stats


class TestYoungDiagram:
    def test_type_word(self, sample_transversal):
        d = sample_transversal.diagram
        assert d.type_word() == "UUUUUDDDUUUDDDDD"
        assert YoungDiagram.from_type_word(d.type_word()) == d
        assert type_of(sample_transversal) == d.type_word()

    def test_self_conjugate(self, sample_transversal):
        d = sample_transversal.diagram
        assert d.column_heights == d.row_lengths
        assert d.is_self_conjugate
        assert not YoungDiagram((2, 1, 1)).is_self_conjugate

    def test_contains(self):
        d = YoungDiagram((3, 1))
        assert d.contains(3, 1)
        assert not d.contains(2, 2)
        assert d.size == 4

    def test_rejects_bad_rows(self):
        with pytest.raises(InvalidObjectError):
            YoungDiagram((1, 2))

    def test_rejects_bad_type_word(self):
        with pytest.raises(InvalidObjectError):
            YoungDiagram.from_type_word("UUDU")
        with pytest.raises(InvalidObjectError):
            YoungDiagram.from_type_word("DU")

    def test_self_conjugate_diagrams(self):
        assert [d.row_lengths for d in self_conjugate_diagrams(2)] == [(1,), (2, 1), (2, 2)]

    def test_staircase_type_word(self):
        assert type_of(YoungDiagram((2, 1))) == "UDUD"


class TestTransversal:
    def test_sample(self, sample_transversal):
        t = sample_transversal
        assert t.is_symmetric
        assert transversal_peaks(t) == {3, 7}
        assert not transversal_contains(t, Permutation.decreasing(3))

    def test_rejects_cell_outside(self):
        with pytest.raises(InvalidObjectError):
            Transversal(YoungDiagram((2, 1)), (1, 2))

    def test_rejects_non_square_boundary(self):
        with pytest.raises(InvalidObjectError):
            Transversal(YoungDiagram((2, 2, 2)), (1, 2))

    def test_enumeration_on_square(self):
        square = YoungDiagram.square(3)
        assert len(list(transversals(square))) == 6
        assert len(list(symmetric_transversals(square))) == 4

    def test_enumeration_on_staircase(self):
        # (2,1) には横断が一つだけ
        assert [t.ones for t in transversals(YoungDiagram((2, 1)))] == [(2, 1)]

    def test_containment_depends_on_shape(self):
        t = Transversal(YoungDiagram((2, 1)), (2, 1))
        pat = parse_pattern("21")
        assert contains_pattern(t.word, pat)
        assert not transversal_contains(t, pat)
        assert transversal_contains(permutation_matrix(t.word), pat)

    def test_witness_columns(self):
        t = permutation_matrix(parse_pattern("321"))
        assert find_filling_occurrence(t.points, t.diagram, parse_pattern("321")) == (1, 2, 3)

    @pytest.mark.parametrize("text", ["12", "21", "123", "132", "321", "2143", "3142"])
    def test_square_containment_matches_permutations(self, text):
        pat = parse_pattern(text)
        for n in range(1, 7):
            for p in generate(ClassSpec("S", n)):
                t = permutation_matrix(p)
                assert transversal_contains(t, pat) == contains_pattern(p, pat)

    def test_square_peaks_match_permutations(self):
        for p in generate(ClassSpec("S", 6)):
            assert transversal_peaks(permutation_matrix(p)) == stats(p).peaks

    def test_peaks_need_equal_column_heights(self):
        # 132 のピーク 2 も、列の高さが揃わない図形では数えない
        assert transversal_peaks(permutation_matrix(parse_pattern("132"))) == {2}
        t = Transversal(YoungDiagram((3, 3, 2)), (1, 3, 2))
        assert transversal_peaks(t) == frozenset()


class TestChi:
    def test_sample_to_matching(self, sample_transversal, sample_matching):
        assert chi(sample_transversal) == sample_matching
        assert chi_inv(sample_matching) == sample_transversal

    def test_round_trip_on_square(self):
        for t in transversals(YoungDiagram.square(4)):
            assert chi_inv(chi(t)) == t
            assert chi(t).type_word() == t.type_word()

    def test_small_examples(self):
        nested = chi_inv(Matching(((1, 4), (2, 3))))
        assert nested.diagram == YoungDiagram.square(2)
        assert nested.ones == (1, 2)
        assert chi(permutation_matrix(Permutation.identity(3))).arcs == ((1, 6), (2, 5), (3, 4))

    def test_symmetric_family(self):
        for d in self_conjugate_diagrams(6):
            for t in symmetric_transversals(d):
                m = chi(t)
                assert chi_inv(m) == t
                assert m.type_word() == t.type_word()
                assert is_bilaterally_symmetric(m)
                assert transversal_peaks(t) == valleys(m)[1]

    def test_symmetry_correspondence(self):
        for d in self_conjugate_diagrams(5):
            for t in transversals(d):
                assert t.is_symmetric == is_bilaterally_symmetric(chi(t))

    @pytest.mark.parametrize("k", [2, 3, 4])
    def test_crossings_and_nestings(self, k):
        for d in self_conjugate_diagrams(6):
            for t in symmetric_transversals(d):
                cr, ne = crossing_nesting(chi(t))
                assert transversal_contains(t, Permutation.decreasing(k)) == (cr >= k)
                assert transversal_contains(t, Permutation.identity(k)) == (ne >= k)
