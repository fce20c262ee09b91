"""Reference feature rows: morphometric and colorimetric measurements taken
on stained-smear cells with expert-assigned classes. They pin the classifier
gates and serve as a regression oracle for the rule tree (see selftest).

Percentages are carried as reported alongside the raw counts; one white
fraction was illegibly reported at the source and is derived from the
counts instead (291/3838, well under the 9% ceiling seen on such cells).
"""
from __future__ import annotations

from dataclasses import dataclass

from .classifier import ErythrocyteClass
from .colorimetry import ColorimetricFeatures
from .morphometry import MorphometricFeatures


@dataclass(frozen=True)
class ReferenceRow:
    name: str
    morpho: MorphometricFeatures
    color: ColorimetricFeatures
    expected: ErythrocyteClass


def _row(name: str, expected: ErythrocyteClass, *,
         area: int, perimeter: int, compactness: float,
         minor: float, major: float, spacing: float,
         varconvex: int, ncc: int | None,
         red: int, white: int, pct_white: float, pct_red: float,
         mean: tuple[int, int, int]) -> ReferenceRow:
    return ReferenceRow(
        name=name,
        morpho=MorphometricFeatures(
            area=area, perimeter=perimeter, compactness=compactness,
            major_axis=major, minor_axis=minor, axis_spacing=spacing,
            varconvex=varconvex, ncc=ncc),
        color=ColorimetricFeatures(
            red_count=red, white_count=white, pct_red=pct_red,
            pct_white=pct_white, mean_color=mean, mean_red_color=None,
            mean_white_color=None, uniform=(white == 0)),
        expected=expected,
    )


_HEALTHY_MEAN = (255, 222, 219)
_ANNULO_MEAN = (255, 232, 221)
_ACANTHO_MEAN = (254, 222, 229)
_ELLIPTO_MEAN = (255, 233, 228)

REFERENCE_ROWS: tuple[ReferenceRow, ...] = (
    _row("healthy-1", ErythrocyteClass.HEALTHY, area=4472, perimeter=215,
         compactness=1.22, minor=35.36, major=39.22, spacing=3.86,
         varconvex=0, ncc=None, red=3889, white=583,
         pct_white=13.03, pct_red=86.94, mean=_HEALTHY_MEAN),
    _row("healthy-2", ErythrocyteClass.HEALTHY, area=4939, perimeter=231,
         compactness=1.20, minor=37.40, major=41.04, spacing=3.63,
         varconvex=0, ncc=None, red=4321, white=618,
         pct_white=12.51, pct_red=87.49, mean=_HEALTHY_MEAN),
    _row("healthy-3", ErythrocyteClass.HEALTHY, area=4697, perimeter=228,
         compactness=1.13, minor=35.33, major=41.74, spacing=6.41,
         varconvex=0, ncc=None, red=4054, white=643,
         pct_white=13.69, pct_red=86.31, mean=_HEALTHY_MEAN),
    _row("healthy-4", ErythrocyteClass.HEALTHY, area=4722, perimeter=224,
         compactness=1.20, minor=37.02, major=39.73, spacing=2.71,
         varconvex=0, ncc=None, red=4253, white=469,
         pct_white=10.00, pct_red=90.00, mean=_HEALTHY_MEAN),
    _row("annulocyte-1", ErythrocyteClass.ANNULOCYTE, area=3571, perimeter=219,
         compactness=0.93, minor=30.63, major=35.27, spacing=4.64,
         varconvex=0, ncc=None, red=2385, white=1186,
         pct_white=33.26, pct_red=66.79, mean=_ANNULO_MEAN),
    _row("annulocyte-2", ErythrocyteClass.ANNULOCYTE, area=3510, perimeter=205,
         compactness=1.05, minor=30.87, major=34.82, spacing=3.95,
         varconvex=0, ncc=None, red=1913, white=1597,
         pct_white=45.50, pct_red=54.50, mean=_ANNULO_MEAN),
    _row("annulocyte-3", ErythrocyteClass.ANNULOCYTE, area=3589, perimeter=222,
         compactness=0.91, minor=29.92, major=36.44, spacing=6.52,
         varconvex=0, ncc=None, red=2341, white=1248,
         pct_white=34.77, pct_red=65.23, mean=_ANNULO_MEAN),
    _row("annulocyte-4", ErythrocyteClass.ANNULOCYTE, area=3546, perimeter=207,
         compactness=1.04, minor=29.51, major=36.14, spacing=6.63,
         varconvex=0, ncc=None, red=2021, white=1525,
         pct_white=43.00, pct_red=57.00, mean=_ANNULO_MEAN),
    _row("sickle-1", ErythrocyteClass.SICKLE, area=2037, perimeter=195,
         compactness=0.67, minor=8.49, major=40.49, spacing=32.00,
         varconvex=1, ncc=2, red=2022, white=15,
         pct_white=0.73, pct_red=99.27, mean=(253, 214, 204)),
    _row("sickle-2", ErythrocyteClass.SICKLE, area=3838, perimeter=252,
         compactness=0.76, minor=12.21, major=47.40, spacing=35.19,
         varconvex=1, ncc=2, red=3547, white=291,
         pct_white=7.58, pct_red=92.42, mean=(255, 213, 206)),
    _row("sickle-3", ErythrocyteClass.SICKLE, area=3791, perimeter=300,
         compactness=0.53, minor=10.24, major=45.93, spacing=35.69,
         varconvex=1, ncc=2, red=3789, white=2,
         pct_white=0.05, pct_red=99.95, mean=(255, 218, 215)),
    _row("acanthocyte-1", ErythrocyteClass.ACANTHOCYTE, area=6954,
         perimeter=378, compactness=0.57, minor=24.41, major=66.43,
         spacing=42.02, varconvex=1, ncc=4, red=6489, white=0,
         pct_white=0.0, pct_red=100.0, mean=_ACANTHO_MEAN),
    _row("acanthocyte-2", ErythrocyteClass.ACANTHOCYTE, area=5785,
         perimeter=306, compactness=0.78, minor=30.30, major=51.58,
         spacing=21.28, varconvex=1, ncc=6, red=5785, white=0,
         pct_white=0.0, pct_red=100.0, mean=_ACANTHO_MEAN),
    _row("elliptocyte-1", ErythrocyteClass.ELLIPTOCYTE, area=3925,
         perimeter=236, compactness=0.90, minor=23.29, major=52.64,
         spacing=29.36, varconvex=0, ncc=None, red=2297, white=1628,
         pct_white=41.45, pct_red=58.55, mean=_ELLIPTO_MEAN),
    _row("elliptocyte-2", ErythrocyteClass.ELLIPTOCYTE, area=4408,
         perimeter=225, compactness=1.09, minor=28.51, major=53.51,
         spacing=25.00, varconvex=0, ncc=None, red=3637, white=771,
         pct_white=17.50, pct_red=82.50, mean=_ELLIPTO_MEAN),
    _row("elliptocyte-3", ErythrocyteClass.ELLIPTOCYTE, area=4233,
         perimeter=228, compactness=1.02, minor=25.00, major=51.60,
         spacing=26.60, varconvex=0, ncc=None, red=3449, white=784,
         pct_white=18.52, pct_red=81.48, mean=_ELLIPTO_MEAN),
)
