"""分割・SYT・RSK・West の f・γ のテスト."""

from __future__ import annotations

import pytest
from hypothesis import assume, given
from hypothesis import strategies as st

from wilfinv.enumeration.classes import ClassSpec, generate
from wilfinv.errors import InvalidObjectError, PreconditionError
from wilfinv.perm.core import Permutation, avoids, descents, parse_pattern
from wilfinv.tableaux.gamma import eta, eta_inv, gamma, gamma_inv
from wilfinv.tableaux.partition import Partition, partitions, step_between
from wilfinv.tableaux.rsk import (
    longest_increasing,
    reverse_bump,
    row_insert,
    rsk,
    rsk_involution,
    rsk_involution_inv,
    rsk_inverse,
)
from wilfinv.tableaux.syt import (
    StandardYoungTableau,
    standard_young_tableaux,
    syt_ascents,
    syt_descents,
    tableaux_with_max_columns,
)
from wilfinv.tableaux.west import rank_sequence, west_f, west_f_inv

perms7 = st.permutations(list(range(1, 8))).map(lambda w: Permutation(tuple(w)))


class TestPartition:
    def test_rejects_increasing(self):
        with pytest.raises(InvalidObjectError):
            Partition((1, 2))

    def test_conjugate(self):
        assert Partition((3, 1)).conjugate == Partition((2, 1, 1))
        assert Partition(()).conjugate == Partition(())

    def test_add_remove(self):
        p = Partition((2, 1))
        assert p.add_cell(3) == Partition((2, 1, 1))
        assert p.remove_cell(2) == Partition((2,))
        with pytest.raises(InvalidObjectError):
            p.add_cell(4)

    def test_step_between(self):
        step = step_between(Partition((2, 1)), Partition((2, 2)))
        assert (step.kind, step.row, step.column) == ("add", 2, 2)
        step = step_between(Partition((3, 1)), Partition((2, 1)))
        assert (step.kind, step.row, step.column) == ("delete", 1, 3)

    def test_step_between_rejects_jump(self):
        with pytest.raises(InvalidObjectError):
            step_between(Partition((1,)), Partition((3,)))
        with pytest.raises(InvalidObjectError):
            step_between(Partition((2,)), Partition((1, 1)))

    def test_partitions(self):
        assert len(list(partitions(4))) == 5
        assert list(partitions(4, max_part=2)) == [Partition((2, 2)), Partition((2, 1, 1)),
                                                    Partition((1, 1, 1, 1))]


class TestStandardYoungTableau:
    def test_rejects_bad_columns(self):
        with pytest.raises(InvalidObjectError):
            StandardYoungTableau(((1, 2), (3, 4, 5)))
        with pytest.raises(InvalidObjectError):
            StandardYoungTableau(((2, 3), (1,)))

    def test_shape_and_columns(self):
        t = StandardYoungTableau(((1, 4, 6), (2, 5), (3,)))
        assert t.shape == Partition((3, 2, 1))
        assert t.columns == ((1, 2, 3), (4, 5), (6,))
        assert t.position(5) == (2, 2)

    def test_descents(self):
        assert syt_descents(StandardYoungTableau(((1, 2), (3,)))) == {2}

    def test_descents_and_ascents_of_shape_4322(self):
        t = StandardYoungTableau(((1, 2, 5, 8), (3, 4, 7), (6, 9), (10, 11)))
        assert t.shape == Partition((4, 3, 2, 2))
        assert syt_descents(t) == {2, 5, 8, 9}
        assert syt_ascents(t) == {1, 3, 4, 6, 7, 10}

    def test_descents_of_row_and_column(self):
        assert syt_descents(StandardYoungTableau(((1, 2, 3, 4),))) == frozenset()
        column = StandardYoungTableau(((1,), (2,), (3,), (4,)))
        assert syt_descents(column) == {1, 2, 3}
        assert syt_ascents(column) == frozenset()

    def test_enumeration(self):
        assert len(list(standard_young_tableaux(Partition((2, 1))))) == 2
        assert len(list(standard_young_tableaux(Partition((3, 2, 1))))) == 16
        # (2,2), (2,1,1), (1,1,1,1)
        assert len(list(tableaux_with_max_columns(4, 2))) == 6


class TestRSK:
    def test_row_insert_bumps(self):
        rows, path = row_insert(((1, 4), (2,)), 3)
        assert rows == ((1, 3), (2, 4))
        assert path == ((1, 2), (2, 2))

    def test_reverse_bump_requires_corner(self):
        with pytest.raises(InvalidObjectError):
            reverse_bump(((1, 2), (3, 4)), 1)

    def test_involution_tableau(self):
        t = rsk_involution(parse_pattern("321546"))
        assert t.rows == ((1, 4, 6), (2, 5), (3,))
        assert rsk_involution_inv(t) == parse_pattern("321546")

    def test_involution_required(self):
        with pytest.raises(PreconditionError):
            rsk_involution(parse_pattern("231"))

    @given(perms7)
    def test_inverse_round_trip(self, p):
        result = rsk(p)
        assert rsk_inverse(result.insertion, result.recording) == p
        assert result.insertion.num_columns == longest_increasing(p)

    def test_involutions_have_equal_tableaux(self):
        for p in generate(ClassSpec("I", 7)):
            result = rsk(p)
            assert result.insertion == result.recording
            assert rsk_involution_inv(result.insertion) == p

    def test_involution_descents_and_columns(self):
        for n in range(1, 9):
            for p in generate(ClassSpec("I", n)):
                t = rsk_involution(p)
                assert syt_descents(t) == descents(p)
                assert t.num_columns == longest_increasing(p)

    def test_monotone_involutions(self):
        assert rsk_involution(Permutation.identity(4)).rows == ((1, 2, 3, 4),)
        assert rsk_involution(Permutation.decreasing(4)).rows == ((1,), (2,), (3,), (4,))


class TestWestF:
    def test_known_image(self):
        p = Permutation((6, 4, 8, 2, 10, 1, 9, 3, 7, 5))
        assert west_f(p, 4) == Permutation((6, 4, 8, 2, 9, 1, 10, 3, 5, 7))
        assert west_f_inv(Permutation((6, 4, 8, 2, 9, 1, 10, 3, 5, 7)), 4) == p

    def test_rank_sequence(self):
        profile = rank_sequence(parse_pattern("213"))
        assert profile.ranks == (1, 1, 2)
        assert profile.elements(1) == {1, 2}

    def test_rank_sequence_top_class(self):
        profile = rank_sequence(Permutation((6, 4, 8, 2, 10, 1, 9, 3, 7, 5)))
        assert profile.max_rank == 3
        assert profile.elements(3) == {10, 9, 7, 5}
        assert profile.positions(3) == (5, 7, 9, 10)

    def test_rank_sequence_monotone(self):
        assert rank_sequence(Permutation.identity(5)).ranks == (1, 2, 3, 4, 5)
        assert rank_sequence(Permutation.decreasing(5)).ranks == (1, 1, 1, 1, 1)

    def test_without_top_rank_is_unchanged(self):
        p = parse_pattern("2143")
        assert west_f(p, 4) == p

    @pytest.mark.parametrize("k", [3, 4, 5])
    def test_low_ranks_are_fixed(self, k):
        for p in generate(ClassSpec("S", 6, (Permutation.identity(k),))):
            ranks = rank_sequence(p).ranks
            image = west_f(p, k)
            for pos, r in enumerate(ranks, start=1):
                if r <= k - 2:
                    assert image.at(pos) == p.at(pos)

    def test_rejects_pattern_with_witness(self):
        with pytest.raises(PreconditionError) as exc:
            west_f(Permutation.identity(4), 4)
        assert exc.value.witness == (1, 2, 3, 4)

    def test_rejects_small_k(self):
        with pytest.raises(InvalidObjectError):
            west_f(parse_pattern("21"), 2)

    @given(perms7)
    def test_round_trip(self, p):
        assume(avoids(p, Permutation.identity(4)))
        assert west_f_inv(west_f(p, 4), 4) == p

    def test_round_trip_k3(self):
        for p in generate(ClassSpec("S", 6, (Permutation.identity(3),))):
            assert west_f_inv(west_f(p, 3), 3) == p


class TestGamma:
    def test_eta(self):
        t = rsk_involution(parse_pattern("321546"))
        grown = eta(t)
        assert grown.rows == ((1, 4, 6), (2, 5, 9), (3, 8), (7,))
        assert eta_inv(grown) == t

    def test_eta_round_trip(self):
        for m in range(1, 9):
            for t in tableaux_with_max_columns(m, 3):
                grown = eta(t)
                assert len(grown) == m + 3
                assert eta_inv(grown) == t

    def test_eta_rejects_wide(self):
        with pytest.raises(InvalidObjectError):
            eta(StandardYoungTableau(((1, 2, 3, 4),)))

    def test_gamma(self):
        assert gamma(parse_pattern("321546")) == parse_pattern("732859146")
        assert gamma_inv(parse_pattern("732859146")) == parse_pattern("321546")

    def test_gamma_rejects_odd_length(self):
        with pytest.raises(PreconditionError):
            gamma(parse_pattern("132"))

    def test_gamma_rejects_wrong_descents(self):
        with pytest.raises(PreconditionError):
            gamma(parse_pattern("214365"))
