"""マッチング・振動盤・φ のテスト."""

from __future__ import annotations

import pytest

from wilfinv.errors import InvalidObjectError
from wilfinv.matchings.matching import (
    Matching,
    crossing_nesting,
    is_bilaterally_symmetric,
    matchings,
    reflect,
    symmetric_matchings,
    valleys,
)
from wilfinv.matchings.oscillating import OscillatingTableau, osc_features
from wilfinv.matchings.phi import phi, phi_inv, phi_trace


class TestMatching:
    def test_rejects_incomplete(self):
        with pytest.raises(InvalidObjectError):
            Matching.from_pairs([(1, 2), (3, 5)])
        with pytest.raises(InvalidObjectError):
            Matching.from_pairs([(2, 1)])

    def test_sample_statistics(self, sample_matching):
        m = sample_matching
        assert m.type_word() == "UUUUUDDDUUUDDDDD"
        assert crossing_nesting(m) == (2, 3)
        assert valleys(m) == ({3, 10}, {3, 7})
        assert is_bilaterally_symmetric(m)

    def test_reflect(self):
        m = Matching.from_pairs([(1, 2), (3, 6), (4, 5)])
        assert reflect(m) == Matching.from_pairs([(1, 4), (2, 3), (5, 6)])
        assert not is_bilaterally_symmetric(m)

    def test_no_valleys_without_three_openers(self):
        assert valleys(Matching.from_pairs([(1, 4), (2, 3)])) == (frozenset(), frozenset())

    def test_enumeration(self):
        assert len(list(matchings(3))) == 15
        assert len(list(symmetric_matchings(2))) == 3
        expected = {m for m in matchings(4) if is_bilaterally_symmetric(m)}
        assert set(symmetric_matchings(4)) == expected


class TestOscillatingTableau:
    def test_rejects_jump(self):
        with pytest.raises(InvalidObjectError):
            OscillatingTableau.from_parts([(), (2,), (1,), ()])

    def test_rejects_nonempty_end(self):
        with pytest.raises(InvalidObjectError):
            OscillatingTableau.from_parts([(), (1,)])

    def test_features_sample(self, sample_tableau):
        f = osc_features(sample_tableau)
        assert f.type_word == "UUUUUDDDUUUDDDDD"
        assert f.valleys == {3, 10}
        assert f.peaks is None
        assert f.symmetric

    def test_features_image(self, image_tableau):
        f = osc_features(image_tableau)
        assert f.peaks == {3, 10}
        assert f.valleys is None


class TestPhi:
    def test_sample_to_tableau(self, sample_matching, sample_tableau):
        assert phi(sample_matching) == sample_tableau
        assert phi_inv(sample_tableau) == sample_matching

    def test_image_tableau_to_matching(self, image_matching, image_tableau):
        assert phi(image_matching) == image_tableau
        assert phi_inv(image_tableau) == image_matching
        assert valleys(image_matching)[0] == {3, 10}

    def test_single_arc(self):
        o = phi(Matching.from_pairs([(1, 2)]))
        assert [s.parts for s in o.shapes] == [(), (1,), ()]

    def test_trace_starts_and_ends_empty(self, sample_matching):
        trace = phi_trace(sample_matching)
        assert len(trace) == 17
        assert trace[0] == () and trace[-1] == ()

    def test_properties_on_all_matchings(self):
        for m in matchings(4):
            o = phi(m)
            cr, ne = crossing_nesting(m)
            assert phi_inv(o) == m
            assert o.type_word() == m.type_word()
            assert (o.max_rows, o.max_columns) == (cr, ne)
            assert phi(reflect(m)) == o.reverse()
