"""Rule-based assignment of an erythrocyte class from its shape and color
features, with a human-readable trace of every rule that fired.

The decision tree runs shape rules first: compact cells are split into
circular and elliptical by the axis spacing, circular ones into healthy and
annulocyte by the white-pixel fraction; non-compact cells are split into
sickle and acanthocyte by the count of protruding extremities. Gaps the
rules leave open return Indeterminate rather than a guess.
"""
from __future__ import annotations

from dataclasses import dataclass, field, fields
from enum import Enum
from typing import Mapping

from .colorimetry import ColorimetricFeatures
from .morphometry import MorphometricFeatures
from .raster import Roi


class ErythrocyteClass(Enum):
    HEALTHY = "Healthy"
    ANNULOCYTE = "Annulocyte"
    SICKLE = "Sickle"
    ACANTHOCYTE = "Acanthocyte"
    ELLIPTOCYTE = "Elliptocyte"
    INDETERMINATE = "Indeterminate"


@dataclass(frozen=True)
class ClassificationThresholds:
    """Decision gates, defaulting to values calibrated at 100x objective,
    G = 1000 magnification. The spacing gate is in absolute pixels and must
    be recalibrated for other optics.
    """

    compactness_gate: float = 0.8
    spacing_gate: float = 7.0
    healthy_white_min: float = 10.0
    healthy_white_max: float = 14.0
    annulocyte_white_min: float = 33.0
    sickle_red_min: float = 91.0
    ncc_sickle: int = 2

    def __post_init__(self) -> None:
        if min(self.compactness_gate, self.spacing_gate, self.healthy_white_min,
               self.healthy_white_max, self.annulocyte_white_min,
               self.sickle_red_min, self.ncc_sickle) <= 0:
            raise ValueError("all thresholds must be strictly positive")
        if not (self.healthy_white_min <= self.healthy_white_max
                < self.annulocyte_white_min):
            raise ValueError("white-percentage bands are not well ordered")

    def replaced(self, overrides: Mapping[str, float]) -> "ClassificationThresholds":
        """New thresholds with the given fields overridden."""
        known = {f.name for f in fields(self)}
        unknown = set(overrides) - known
        if unknown:
            raise ValueError(f"unknown threshold names: {sorted(unknown)}")
        current = {f.name: getattr(self, f.name) for f in fields(self)}
        current.update({
            k: int(v) if k == "ncc_sickle" else float(v)
            for k, v in overrides.items()
        })
        return ClassificationThresholds(**current)


@dataclass(frozen=True)
class ErythrocyteReport:
    """One analyzed cell: where it was, what was measured, what it is.

    cell_runs is an extension for display clients: the isolated cell mask as
    (row, start, length) runs in ROI-relative pixel coordinates.
    """

    roi: Roi
    morpho: MorphometricFeatures
    color: ColorimetricFeatures
    label: ErythrocyteClass
    trace: tuple[str, ...] = field(default_factory=tuple)
    cell_runs: tuple[tuple[int, int, int], ...] | None = None


def classify(morpho: MorphometricFeatures, color: ColorimetricFeatures,
             th: ClassificationThresholds | None = None,
             ) -> tuple[ErythrocyteClass, tuple[str, ...]]:
    """Assign a class and return it with the ordered list of fired rules."""
    th = th or ClassificationThresholds()
    trace: list[str] = []

    if morpho.compactness >= th.compactness_gate:
        trace.append(f"compactness {morpho.compactness:.2f} >= "
                     f"{th.compactness_gate:.2f}: circular or elliptical")
        if morpho.axis_spacing > th.spacing_gate:
            trace.append(f"axis spacing {morpho.axis_spacing:.2f} px > "
                         f"{th.spacing_gate:g} px: elliptical shape")
            label = ErythrocyteClass.ELLIPTOCYTE
        else:
            trace.append(f"axis spacing {morpho.axis_spacing:.2f} px <= "
                         f"{th.spacing_gate:g} px: circular shape")
            label = _classify_circular(color, th, trace)
    else:
        trace.append(f"compactness {morpho.compactness:.2f} < "
                     f"{th.compactness_gate:.2f}: non-convex, testing "
                     "protruding extremities")
        label = _classify_concave(morpho, color, th, trace)

    trace.append(f"label: {label.value}")
    return label, tuple(trace)


def _classify_circular(color: ColorimetricFeatures,
                       th: ClassificationThresholds,
                       trace: list[str]) -> ErythrocyteClass:
    white = color.pct_white
    if th.healthy_white_min <= white <= th.healthy_white_max:
        trace.append(f"white fraction {white:.2f}% within healthy band "
                     f"[{th.healthy_white_min:g}, {th.healthy_white_max:g}]%")
        return ErythrocyteClass.HEALTHY
    if white >= th.annulocyte_white_min:
        trace.append(f"white fraction {white:.2f}% >= "
                     f"{th.annulocyte_white_min:g}%: enlarged central pallor")
        return ErythrocyteClass.ANNULOCYTE
    if white > th.healthy_white_max:
        trace.append(f"white fraction {white:.2f}% between the healthy band "
                     f"and {th.annulocyte_white_min:g}%: hypochromic "
                     "tendency, no class rule covers this range")
        return ErythrocyteClass.INDETERMINATE
    trace.append(f"white fraction {white:.2f}% below the healthy band: "
                 "no class rule covers this range")
    return ErythrocyteClass.INDETERMINATE


def _classify_concave(morpho: MorphometricFeatures,
                      color: ColorimetricFeatures,
                      th: ClassificationThresholds,
                      trace: list[str]) -> ErythrocyteClass:
    ncc = morpho.ncc
    if ncc is None:
        trace.append("concavity component count unavailable")
        return ErythrocyteClass.INDETERMINATE
    if ncc == th.ncc_sickle:
        trace.append(f"{ncc} protruding extremities == {th.ncc_sickle}: "
                     "falciform shape")
        if color.pct_red >= th.sickle_red_min:
            trace.append(f"red fraction {color.pct_red:.2f}% >= "
                         f"{th.sickle_red_min:g}% corroborates the sickle form")
        else:
            trace.append(f"red fraction {color.pct_red:.2f}% below "
                         f"{th.sickle_red_min:g}%; sickle label rests on the "
                         "extremity count alone")
        return ErythrocyteClass.SICKLE
    if ncc > th.ncc_sickle:
        trace.append(f"{ncc} protruding extremities > {th.ncc_sickle}: "
                     "spiculated shape")
        return ErythrocyteClass.ACANTHOCYTE
    trace.append(f"{ncc} protruding extremities < {th.ncc_sickle}: "
                 "no concave class rule fires")
    return ErythrocyteClass.INDETERMINATE
