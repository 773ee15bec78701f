"""Ψ と Φ（盤面の塗り分け込み）のテスト."""

from __future__ import annotations

import pytest

from wilfinv.enumeration.classes import ClassSpec, generate
from wilfinv.errors import PreconditionError
from wilfinv.fillings.diagram import YoungDiagram
from wilfinv.fillings.transversal import permutation_matrix, transversal_peaks
from wilfinv.perm.core import Permutation, direct_sum, parse_pattern, peaks
from wilfinv.pipeline.board import color_board, embed, white_transversal
from wilfinv.pipeline.phi_cap import phi_cap, phi_cap_inv, phi_involution, phi_involution_inv
from wilfinv.pipeline.psi_cap import I3, J3, psi_cap, psi_cap_inv, psi_cap_trace


class TestPsiCap:
    def test_worked_example_stages(
        self,
        sample_transversal,
        sample_matching,
        sample_tableau,
        sample_pair,
        image_pair,
        image_tableau,
        image_matching,
        image_transversal,
    ):
        trace = psi_cap_trace(sample_transversal)
        assert trace.matching == sample_matching
        assert trace.tableau == sample_tableau
        assert trace.pair == sample_pair
        assert trace.pair_prime == image_pair
        assert trace.tableau_prime == image_tableau
        assert trace.matching_prime == image_matching
        assert trace.result == image_transversal

    def test_preserves_peaks_and_shape(self, sample_transversal):
        image = psi_cap(sample_transversal)
        assert transversal_peaks(image) == transversal_peaks(sample_transversal) == {3, 7}
        assert image.diagram == sample_transversal.diagram

    def test_inverse(self, sample_transversal, image_transversal):
        assert psi_cap_inv(image_transversal) == sample_transversal

    def test_identity_matrix(self):
        assert psi_cap(permutation_matrix(parse_pattern("123"))).word == parse_pattern("321")

    def test_rejects_pattern_with_witness(self):
        with pytest.raises(PreconditionError) as exc:
            psi_cap(permutation_matrix(parse_pattern("321")))
        assert exc.value.pattern == J3
        assert exc.value.witness == (1, 2, 3)

    def test_rejects_asymmetric(self):
        with pytest.raises(PreconditionError):
            psi_cap(permutation_matrix(parse_pattern("231")))

    def test_all_square_involutions(self):
        for n in range(1, 8):
            for p in generate(ClassSpec("I", n, (Permutation.decreasing(3),))):
                image = psi_cap(permutation_matrix(p)).word
                assert peaks(image) == peaks(p)
                assert psi_cap_inv(permutation_matrix(image)).word == p


class TestBoard:
    def test_identity_with_single_cell_tau(self):
        t = permutation_matrix(Permutation.identity(4))
        mask = color_board(t, parse_pattern("1"))
        assert mask.white_diagram == YoungDiagram((3, 3, 3))
        assert mask.white == {(c, r) for c in range(1, 4) for r in range(1, 4)}
        assert mask.is_symmetric
        assert mask.to_array().sum() == 9
        assert (4, 4) in mask.gray

        inner = white_transversal(t, mask)
        assert inner.ones == (1, 2, 3)
        assert embed(mask, psi_cap(inner), t).ones == (3, 2, 1, 4)

    def test_empty_tau_rejected(self):
        with pytest.raises(PreconditionError):
            color_board(permutation_matrix(Permutation.identity(2)), Permutation(()))


class TestPhiCap:
    def test_involution_example(self):
        assert phi_involution(Permutation.identity(4), parse_pattern("1")) == parse_pattern("3214")
        identity = Permutation.identity(4)
        assert phi_involution_inv(parse_pattern("3214"), parse_pattern("1")) == identity

    def test_empty_tau_is_psi(self, sample_transversal, image_transversal):
        assert phi_cap(sample_transversal, Permutation(())) == image_transversal
        assert phi_cap_inv(image_transversal, Permutation(())) == sample_transversal

    def test_rejects_non_involution(self):
        with pytest.raises(PreconditionError):
            phi_involution(parse_pattern("231"), parse_pattern("1"))

    def test_rejects_pattern(self):
        with pytest.raises(PreconditionError):
            phi_involution(parse_pattern("3214"), parse_pattern("1"))

    @pytest.mark.parametrize("tau", ["1", "12", "21"])
    def test_bijection_on_small_lengths(self, tau):
        t = parse_pattern(tau)
        dec, inc = direct_sum(J3, t), direct_sum(I3, t)
        for n in range(1, 8):
            domain = list(generate(ClassSpec("I", n, (dec,))))
            images = [phi_involution(p, t) for p in domain]
            assert set(images) == set(generate(ClassSpec("I", n, (inc,))))
            assert len(set(images)) == len(domain)
            for p, image in zip(domain, images):
                assert peaks(image) == peaks(p)
                assert phi_involution_inv(image, t) == p

    @pytest.mark.parametrize("tau", ["1", "12", "21", "132", "213"])
    def test_alternating_involutions_map_onto_alternating(self, tau):
        t = parse_pattern(tau)
        dec, inc = direct_sum(J3, t), direct_sum(I3, t)
        for n in range(1, 10):
            domain = list(generate(ClassSpec("AI", n, (dec,))))
            images = {phi_involution(p, t) for p in domain}
            assert len(images) == len(domain)
            assert images == set(generate(ClassSpec("AI", n, (inc,))))
