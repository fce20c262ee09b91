"""Pipeline report assembly and its JSON encoding."""
import json

import numpy as np
import pytest

from erythro.analysis import (AnalysisConfig, analyze_roi, mask_runs,
                              report_to_dict, serialize_report)
from erythro.classifier import ClassificationThresholds
from erythro.errors import NoCellFound
from erythro.raster import Roi
from erythro.segmentation import BinaryMask
from erythro.synth import annulus, crescent, healthy_disk, render_shape


@pytest.fixture(scope="module")
def annulus_report():
    img = render_shape(annulus(), 120, 120)
    return analyze_roi(img, Roi(0, 0, 120, 120))


class TestMaskRuns:
    def test_runs_reconstruct_the_mask(self, rng):
        bits = rng.random((18, 25)) < 0.4
        back = np.zeros_like(bits)
        for y, x, length in mask_runs(BinaryMask(bits)):
            assert not back[y, x:x + length].any()  # runs never overlap
            back[y, x:x + length] = True
        assert (back == bits).all()

    def test_run_lengths_sum_to_area(self, annulus_report):
        total = sum(length for _, _, length in annulus_report.cell_runs)
        assert total == annulus_report.morpho.area


class TestReportJson:
    def test_roundtrip(self, annulus_report):
        text = serialize_report(annulus_report)
        assert json.loads(text) == report_to_dict(annulus_report)

    def test_field_layout(self, annulus_report):
        d = report_to_dict(annulus_report)
        assert list(d) == ["schema", "roi", "label", "morphometry",
                           "colorimetry", "isolation", "trace"]
        assert d["schema"] == "erythro/1"
        assert d["label"] == "Annulocyte"
        assert d["isolation"]["runs"], "isolation overlay runs present"

    def test_percentages_rounded_to_two_decimals(self, annulus_report):
        d = report_to_dict(annulus_report)
        for key in ("pct_red", "pct_white"):
            value = d["colorimetry"][key]
            assert value == round(value, 2)

    def test_trace_ends_with_label(self, annulus_report):
        d = report_to_dict(annulus_report)
        assert d["trace"][-1] == f"label: {d['label']}"


class TestPipelineConfig:
    def test_custom_threshold_changes_label(self):
        img = render_shape(healthy_disk(), 120, 120)
        config = AnalysisConfig(
            thresholds=ClassificationThresholds().replaced(
                {"healthy_white_max": 11.0}))
        report = analyze_roi(img, Roi(0, 0, 120, 120), config)
        assert report.label.value == "Indeterminate"

    def test_min_area_filters_cell(self):
        img = render_shape(crescent(), 120, 120)
        with pytest.raises(NoCellFound):
            analyze_roi(img, Roi(0, 0, 120, 120),
                        AnalysisConfig(min_area=5000))

    def test_uniform_roi_maps_to_no_cell(self):
        import numpy as np
        from erythro.raster import RasterImage
        img = RasterImage(np.full((50, 50, 3), 200, dtype=np.uint8))
        with pytest.raises(NoCellFound):
            analyze_roi(img, Roi(0, 0, 50, 50))

    def test_subregion_roi_reports_roi_coordinates(self):
        img = render_shape(healthy_disk(), 200, 200)
        report = analyze_roi(img, Roi(30, 25, 150, 160))
        assert (report.roi.x0, report.roi.y0) == (30, 25)
        assert report.label.value == "Healthy"
