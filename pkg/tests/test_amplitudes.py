import pytest

from dle3q import (BasisState, ParameterDomainError, SingularityError,
                   SystemParams, amplitude_closed_form, amplitude_set,
                   amplitude_via_overlap, entanglement_witness_product_gap,
                   probabilities)
from dle3q.amplitudes import DLE_CHANNELS, amplitude_rows


class TestClosedForms:
    def test_paper_point_values(self, paper_params):
        a = amplitude_set(paper_params)
        assert a.a_2_0 == pytest.approx(-0.671014584236905, rel=1e-12)
        assert a.a_1_1 == pytest.approx(+0.003837028153549456, rel=1e-12)
        assert a.a_0_2 == pytest.approx(+0.3163193085259916, rel=1e-12)
        assert a.a_2_2 == pytest.approx(-0.001736440721266251, rel=1e-12)

    def test_zero_contract(self, paper_params):
        for n in range(6):
            for m in range(4):
                if (n, m) in DLE_CHANNELS:
                    continue
                assert amplitude_closed_form(n, m, paper_params) == 0.0

    def test_three_qubit_channel_forbidden(self, paper_params):
        assert amplitude_closed_form(5, 1, paper_params) == 0.0
        for n in range(8):
            assert amplitude_closed_form(n, 3, paper_params) == 0.0

    def test_no_switch_means_no_single_excitation(self):
        p = SystemParams(5.0, 5.0, 3.721, 0.2)
        assert amplitude_closed_form(1, 1, p) == 0.0

    def test_sign_flips_with_detuning_side(self):
        above = SystemParams(5.0, 4.0, 3.721, 0.2)
        below = SystemParams(5.0, 3.5, 3.721, 0.2)
        assert amplitude_closed_form(0, 2, above) > 0 > amplitude_closed_form(0, 2, below)
        assert amplitude_closed_form(2, 0, above) < 0 < amplitude_closed_form(2, 0, below)

    def test_singular_channels_guarded(self, paper_params):
        p = SystemParams(5.0, 3.721 * (1 + 1e-14), 3.721, 0.2)
        for channel in ((2, 0), (0, 2)):
            with pytest.raises(SingularityError):
                amplitude_closed_form(*channel, p)
        # the regular channels still evaluate there
        assert amplitude_closed_form(1, 1, p) != 0.0
        assert amplitude_closed_form(2, 2, p) != 0.0

    def test_invalid_channel_rejected(self, paper_params):
        with pytest.raises(ParameterDomainError):
            amplitude_closed_form(-1, 0, paper_params)
        with pytest.raises(ParameterDomainError):
            amplitude_closed_form(0, 4, paper_params)


class TestOverlapRoute:
    @pytest.mark.parametrize("channel", DLE_CHANNELS)
    def test_matches_closed_form(self, paper_params, channel):
        # first-order-state overlaps reproduce the closed forms identically
        closed = amplitude_closed_form(*channel, paper_params)
        via = amplitude_via_overlap(*channel, paper_params)
        assert via == pytest.approx(closed, rel=1e-12)

    def test_weak_coupling_example(self):
        p = SystemParams(5.0, 4.5, 3.721, 0.005)
        assert amplitude_via_overlap(1, 1, p) == pytest.approx(
            amplitude_closed_form(1, 1, p), rel=1e-4)

    @pytest.mark.parametrize("target_qubits", [(1, 0, 0), (0, 1, 0), (0, 0, 1)])
    def test_target_permutation_equality(self, paper_params, target_qubits):
        value = amplitude_via_overlap(1, 1, paper_params,
                                      target=BasisState(1, target_qubits))
        assert value == pytest.approx(amplitude_closed_form(1, 1, paper_params), rel=1e-12)

    @pytest.mark.parametrize("target_qubits", [(1, 1, 0), (1, 0, 1), (0, 1, 1)])
    def test_two_excitation_targets_equal(self, paper_params, target_qubits):
        value = amplitude_via_overlap(0, 2, paper_params,
                                      target=BasisState(0, target_qubits))
        assert value == pytest.approx(amplitude_closed_form(0, 2, paper_params), rel=1e-12)

    def test_survival_channel_excludes_unity(self, paper_params):
        # switch-induced part of the (0,0) overlap, O(lambda^2), not ~1
        value = amplitude_via_overlap(0, 0, paper_params)
        assert 0.0 < value < 0.01
        expected = 3 * 0.04 / ((3.75 + 3.721) * (5.0 + 3.721))
        assert value == pytest.approx(expected, rel=1e-12)

    def test_forbidden_channels_vanish_at_first_order(self, paper_params):
        for channel in ((0, 1), (1, 0), (0, 3), (1, 3), (3, 1), (2, 1)):
            assert amplitude_via_overlap(*channel, paper_params) == pytest.approx(0.0, abs=1e-15)

    def test_mismatched_target_rejected(self, paper_params):
        with pytest.raises(ParameterDomainError):
            amplitude_via_overlap(1, 1, paper_params, target=BasisState(1, (1, 1, 0)))

    @pytest.mark.parametrize("scale", [1.0, 0.5, 0.25])
    def test_agreement_at_every_coupling_scale(self, scale):
        # the two routes agree identically, so the deviation trivially
        # satisfies the quadratic-shrink requirement at every scale
        p = SystemParams(5.0, 4.5, 3.721, 0.02 * scale)
        closed = amplitude_closed_form(1, 1, p)
        assert abs(amplitude_via_overlap(1, 1, p) - closed) <= 1e-14 * abs(closed)


class TestProbabilities:
    def test_paper_values(self, paper_params):
        w = probabilities(paper_params)
        assert w.w_0 == pytest.approx(0.4502605722586265, rel=1e-12)
        assert w.w_1 == pytest.approx(1.472278505113115e-05, rel=1e-12)
        assert w.w_2 == pytest.approx(0.1000609201727399, rel=1e-12)
        assert w.w_3 == 0.0

    def test_composition(self, paper_params):
        a = amplitude_set(paper_params)
        w = probabilities(paper_params)
        assert w.w_1 == a.a_1_1 ** 2
        assert w.w_2 == a.a_0_2 ** 2 + a.a_2_2 ** 2
        assert w.w_0 == a.a_2_0 ** 2

    def test_nonnegative_on_generic_grid(self):
        for omega2 in (0.5, 2.0, 3.7, 3.8, 6.0, 12.0):
            w = probabilities(SystemParams(5.0, omega2, 3.721, 0.1))
            assert min(w.w_0, w.w_1, w.w_2) >= 0.0
            assert w.w_3 == 0.0


class TestWitnessGap:
    def test_paper_point(self, paper_params):
        gap = entanglement_witness_product_gap(paper_params)
        assert gap == pytest.approx(0.1000609199559795, rel=1e-12)
        assert gap > 0

    def test_no_switch_still_gapped(self):
        p = SystemParams(5.0, 5.0, 3.721, 0.2)
        w = probabilities(p)
        assert w.w_1 == 0.0
        assert entanglement_witness_product_gap(p) == pytest.approx(w.w_2, rel=1e-15)
        assert w.w_2 > 0

    def test_vanishing_coupling(self):
        p = SystemParams(5.0, 3.75, 3.721, 1e-300)
        assert entanglement_witness_product_gap(p) == pytest.approx(0.0, abs=1e-290)


class TestReportRows:
    def test_rows_cover_channels(self, paper_params):
        rows = amplitude_rows(paper_params)
        assert [(r["n"], r["m"]) for r in rows] == list(DLE_CHANNELS)
        for r in rows:
            assert r["probability"] == pytest.approx(r["amplitude"] ** 2, rel=1e-15)

    def test_csv_serialization(self, paper_params):
        from dle3q.amplitudes import rows_to_csv
        lines = rows_to_csv(paper_params).strip().split("\n")
        assert lines[0] == "n,m,amplitude,probability"
        assert len(lines) == 1 + len(DLE_CHANNELS)
        assert lines[1].startswith("2,0,-6.710145842e-01")
