"""Rule tree: reference-row oracle, band edges, trace contract."""
import pytest

from erythro.classifier import (ClassificationThresholds, ErythrocyteClass,
                                classify)
from erythro.colorimetry import ColorimetricFeatures
from erythro.morphometry import MorphometricFeatures
from erythro.reference import REFERENCE_ROWS


def morpho(compactness=1.0, spacing=3.0, ncc=None, varconvex=0,
           area=4500, perimeter=220, major=40.0):
    return MorphometricFeatures(
        area=area, perimeter=perimeter, compactness=compactness,
        major_axis=major, minor_axis=major - spacing, axis_spacing=spacing,
        varconvex=varconvex, ncc=ncc)


def color(pct_white=12.0, area=4500):
    white = round(area * pct_white / 100)
    red = area - white
    return ColorimetricFeatures(
        red_count=red, white_count=white, pct_red=100.0 - pct_white,
        pct_white=pct_white, mean_color=(255, 222, 219), mean_red_color=None,
        mean_white_color=None, uniform=(white == 0))


class TestReferenceOracle:
    @pytest.mark.parametrize("row", REFERENCE_ROWS,
                             ids=[r.name for r in REFERENCE_ROWS])
    def test_row_reproduces_expected_class(self, row):
        label, trace = classify(row.morpho, row.color)
        assert label is row.expected
        assert trace[-1] == f"label: {row.expected.value}"

    def test_suite_covers_all_classes(self):
        seen = {row.expected for row in REFERENCE_ROWS}
        assert seen == {ErythrocyteClass.HEALTHY, ErythrocyteClass.ANNULOCYTE,
                        ErythrocyteClass.SICKLE, ErythrocyteClass.ACANTHOCYTE,
                        ErythrocyteClass.ELLIPTOCYTE}


class TestRuleTree:
    def test_compact_round_healthy_band(self):
        label, _ = classify(morpho(1.22, 3.86), color(13.03))
        assert label is ErythrocyteClass.HEALTHY

    def test_compact_round_annulocyte(self):
        label, _ = classify(morpho(0.93, 4.64), color(33.26))
        assert label is ErythrocyteClass.ANNULOCYTE

    def test_concave_two_extremities_sickle(self):
        label, _ = classify(morpho(0.67, 32.0, ncc=2, varconvex=1),
                            color(0.73))
        assert label is ErythrocyteClass.SICKLE

    def test_concave_many_extremities_acanthocyte(self):
        label, _ = classify(morpho(0.57, 42.02, ncc=4, varconvex=1),
                            color(0.0))
        assert label is ErythrocyteClass.ACANTHOCYTE

    def test_compact_elongated_elliptocyte(self):
        label, _ = classify(morpho(0.90, 29.36), color(41.45))
        assert label is ErythrocyteClass.ELLIPTOCYTE

    def test_unspecified_white_band_indeterminate(self):
        label, trace = classify(morpho(0.85, 2.0), color(20.0))
        assert label is ErythrocyteClass.INDETERMINATE
        assert any("hypochromic" in t for t in trace)

    def test_low_white_band_indeterminate(self):
        label, _ = classify(morpho(1.1, 2.0), color(5.0))
        assert label is ErythrocyteClass.INDETERMINATE

    def test_concave_single_extremity_indeterminate(self):
        label, _ = classify(morpho(0.5, 10.0, ncc=1, varconvex=1), color(0.0))
        assert label is ErythrocyteClass.INDETERMINATE

    def test_concave_without_count_indeterminate(self):
        label, _ = classify(morpho(0.5, 10.0, ncc=None), color(0.0))
        assert label is ErythrocyteClass.INDETERMINATE

    def test_healthy_band_edges_inclusive(self):
        assert classify(morpho(1.0, 2.0), color(10.0))[0] is \
            ErythrocyteClass.HEALTHY
        assert classify(morpho(1.0, 2.0), color(14.0))[0] is \
            ErythrocyteClass.HEALTHY

    def test_spacing_gate_boundary(self):
        # exactly 7 px stays circular; above goes elliptical
        assert classify(morpho(1.0, 7.0), color(12.0))[0] is \
            ErythrocyteClass.HEALTHY
        assert classify(morpho(1.0, 7.01), color(12.0))[0] is \
            ErythrocyteClass.ELLIPTOCYTE

    def test_compactness_gate_boundary(self):
        # exactly 0.8 takes the compact branch
        assert classify(morpho(0.8, 2.0), color(12.0))[0] is \
            ErythrocyteClass.HEALTHY

    def test_sickle_corroboration_noted(self):
        _, trace = classify(morpho(0.6, 30.0, ncc=2), color(1.0))
        assert any("corroborates" in t for t in trace)
        _, trace = classify(morpho(0.6, 30.0, ncc=2), color(30.0))
        assert any("rests on the extremity count" in t for t in trace)


class TestDeterminismAndGates:
    def test_identical_inputs_identical_outputs(self):
        m, c = morpho(0.67, 32.0, ncc=2, varconvex=1), color(0.73)
        assert classify(m, c) == classify(m, c)

    def test_gate_crossing_never_jumps_sickle_to_elliptocyte(self):
        # with spacing <= 7 fixed, compactness decides only the branch
        for pct_white in (0.0, 12.0, 40.0):
            for ncc in (1, 2, 5):
                below, _ = classify(morpho(0.79, 5.0, ncc=ncc), color(pct_white))
                above, _ = classify(morpho(0.81, 5.0, ncc=ncc), color(pct_white))
                assert below in (ErythrocyteClass.SICKLE,
                                 ErythrocyteClass.ACANTHOCYTE,
                                 ErythrocyteClass.INDETERMINATE)
                assert above is not ErythrocyteClass.ELLIPTOCYTE

    def test_trace_nonempty_and_names_label(self):
        for row in REFERENCE_ROWS:
            label, trace = classify(row.morpho, row.color)
            assert len(trace) >= 2
            assert trace[-1] == f"label: {label.value}"


class TestThresholds:
    def test_defaults(self):
        th = ClassificationThresholds()
        assert th.compactness_gate == 0.8
        assert th.spacing_gate == 7.0
        assert (th.healthy_white_min, th.healthy_white_max) == (10.0, 14.0)
        assert th.annulocyte_white_min == 33.0
        assert th.sickle_red_min == 91.0
        assert th.ncc_sickle == 2

    def test_override(self):
        th = ClassificationThresholds().replaced({"spacing_gate": 9.0})
        assert th.spacing_gate == 9.0
        assert th.compactness_gate == 0.8

    def test_unknown_override_rejected(self):
        with pytest.raises(ValueError):
            ClassificationThresholds().replaced({"bogus": 1.0})

    def test_bad_band_order_rejected(self):
        with pytest.raises(ValueError):
            ClassificationThresholds(healthy_white_max=40.0)

    def test_override_changes_decision(self):
        th = ClassificationThresholds().replaced({"spacing_gate": 30.0})
        label, _ = classify(morpho(0.90, 29.36), color(41.45), th)
        assert label is ErythrocyteClass.ANNULOCYTE
