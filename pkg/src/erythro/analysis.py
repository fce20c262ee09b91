"""End-to-end analysis of one ROI and the canonical JSON report encoding.

The pipeline follows the semi-automatic workflow: the operator frames one
cell with an ROI, the ROI is thresholded automatically, the target cell is
isolated among the connected components, shape and color features are
extracted, and the rule-based classifier assigns the class. The CLI and the
HTTP service both serialize reports through serialize_report, so identical
inputs produce byte-identical JSON everywhere.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field

import numpy as np

from . import colorimetry, morphometry, segmentation
from .classifier import ClassificationThresholds, ErythrocyteReport, classify
from .errors import NoCellFound, NoSeparation
from .raster import RasterImage, Roi, crop_roi, to_grayscale

REPORT_SCHEMA = "erythro/1"


@dataclass(frozen=True)
class AnalysisConfig:
    """Tunables of one analysis run; defaults match the calibrated gates."""

    min_area: int = segmentation.DEFAULT_MIN_AREA
    thresholds: ClassificationThresholds = field(
        default_factory=ClassificationThresholds)
    output_format: str = "json"  # json | text

    def __post_init__(self) -> None:
        if self.output_format not in ("json", "text"):
            raise ValueError(f"unknown output format {self.output_format!r}")


def analyze_roi(img: RasterImage, roi: Roi,
                config: AnalysisConfig | None = None) -> ErythrocyteReport:
    """Run the full pipeline on one region of interest."""
    config = config or AnalysisConfig()
    sub = crop_roi(img, roi)
    gray = to_grayscale(sub)

    try:
        stats = segmentation.otsu_threshold(segmentation.gray_histogram(gray))
    except NoSeparation as exc:
        raise NoCellFound(f"ROI has a single gray level: {exc}") from exc
    mask = segmentation.binarize(gray, stats.threshold,
                                 segmentation.Polarity.DARK_IS_FOREGROUND)
    labels = segmentation.label_components_8(mask)
    cell = segmentation.isolate_target_cell(
        labels, (roi.width // 2, roi.height // 2), min_area=config.min_area)

    morpho = morphometry.compute_features(
        cell, compactness_gate=config.thresholds.compactness_gate)
    partition = segmentation.partition_cell_colors(gray, cell)
    color = colorimetry.compute_features(sub, partition)
    label, trace = classify(morpho, color, config.thresholds)
    return ErythrocyteReport(roi=roi, morpho=morpho, color=color,
                             label=label, trace=trace,
                             cell_runs=mask_runs(cell))


def mask_runs(mask: segmentation.BinaryMask) -> tuple[tuple[int, int, int], ...]:
    """Row-wise run-length encoding of a mask: (row, start, length) triples
    in mask-local pixel coordinates. Lets display clients overlay the
    isolated cell without shipping a full bitmap."""
    runs: list[tuple[int, int, int]] = []
    bits = mask.bits
    padded = np.zeros(bits.shape[1] + 2, dtype=bool)
    for y in range(bits.shape[0]):
        padded[1:-1] = bits[y]
        edges = np.nonzero(padded[1:] != padded[:-1])[0]
        for i in range(0, len(edges), 2):
            runs.append((y, int(edges[i]), int(edges[i + 1] - edges[i])))
    return tuple(runs)


def _round2(x: float) -> float:
    return round(float(x), 2)


def report_to_dict(report: ErythrocyteReport) -> dict:
    """Plain-dict form of a report; floats carry two decimals."""
    m = report.morpho
    c = report.color
    return {
        "schema": REPORT_SCHEMA,
        "roi": {"x": report.roi.x0, "y": report.roi.y0,
                "w": report.roi.width, "h": report.roi.height},
        "label": report.label.value,
        "morphometry": {
            "area": m.area,
            "perimeter": m.perimeter,
            "compactness": _round2(m.compactness),
            "major_axis": _round2(m.major_axis),
            "minor_axis": _round2(m.minor_axis),
            "axis_spacing": _round2(m.axis_spacing),
            "varconvex": m.varconvex,
            "ncc": m.ncc,
        },
        "colorimetry": {
            "red_count": c.red_count,
            "white_count": c.white_count,
            "pct_red": _round2(c.pct_red),
            "pct_white": _round2(c.pct_white),
            "mean_color": list(c.mean_color),
            "mean_red_color": list(c.mean_red_color) if c.mean_red_color else None,
            "mean_white_color": (list(c.mean_white_color)
                                 if c.mean_white_color else None),
            "uniform": c.uniform,
        },
        "isolation": ({"runs": [list(r) for r in report.cell_runs]}
                      if report.cell_runs is not None else None),
        "trace": list(report.trace),
    }


def serialize_report(report: ErythrocyteReport) -> str:
    """Canonical single-line JSON; the only serialization path."""
    return json.dumps(report_to_dict(report), separators=(",", ":"),
                      ensure_ascii=False)


def format_report_text(report: ErythrocyteReport) -> str:
    """Human-readable multi-line rendering for --format text."""
    d = report_to_dict(report)
    m, c = d["morphometry"], d["colorimetry"]
    lines = [
        f"ROI x={d['roi']['x']} y={d['roi']['y']} "
        f"w={d['roi']['w']} h={d['roi']['h']}",
        f"  class        : {d['label']}",
        f"  area         : {m['area']} px",
        f"  perimeter    : {m['perimeter']} px",
        f"  compactness  : {m['compactness']}",
        f"  axes         : major {m['major_axis']} / minor {m['minor_axis']} "
        f"/ spacing {m['axis_spacing']} px",
        f"  varconvex    : {m['varconvex']}"
        + (f"  ncc: {m['ncc']}" if m['ncc'] is not None else ""),
        f"  red / white  : {c['red_count']} px ({c['pct_red']}%) / "
        f"{c['white_count']} px ({c['pct_white']}%)",
        f"  mean color   : {tuple(c['mean_color'])}",
        "  trace:",
    ]
    lines += [f"    - {t}" for t in d["trace"]]
    return "\n".join(lines)
