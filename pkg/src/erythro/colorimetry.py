"""Color quantities of the partitioned cell: red/white pixel populations,
their percentages, and mean colors over the cell and per region."""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DimensionMismatch, EmptyCell, EmptyMask
from .raster import RasterImage
from .segmentation import BinaryMask, CellPartition


@dataclass(frozen=True)
class ColorimetricFeatures:
    red_count: int
    white_count: int
    pct_red: float
    pct_white: float
    mean_color: tuple[int, int, int]
    # per-region means are an extension beyond the single cell-wide triple
    mean_red_color: tuple[int, int, int] | None
    mean_white_color: tuple[int, int, int] | None
    uniform: bool


def color_counts(part: CellPartition) -> tuple[int, int]:
    """Pixel populations of the red and white regions."""
    return part.red_mask.area, part.white_mask.area


def color_proportions(red_count: int, white_count: int) -> tuple[float, float]:
    """Percentages of the cell area held by each region."""
    total = red_count + white_count
    if total <= 0:
        raise EmptyCell("cannot compute proportions of an empty cell")
    return 100.0 * red_count / total, 100.0 * white_count / total


def mean_cell_color(img: RasterImage, cell: BinaryMask) -> tuple[int, int, int]:
    """Per-channel mean over the cell pixels, rounded half-up."""
    if (img.height, img.width) != (cell.height, cell.width):
        raise DimensionMismatch(
            f"image {img.width}x{img.height} vs mask {cell.width}x{cell.height}")
    if cell.area == 0:
        raise EmptyMask("cell mask is empty")
    means = img.pixels[cell.bits].mean(axis=0)
    r, g, b = (int(np.floor(m + 0.5)) for m in means)
    return r, g, b


def compute_features(img: RasterImage, part: CellPartition) -> ColorimetricFeatures:
    red_count, white_count = color_counts(part)
    pct_red, pct_white = color_proportions(red_count, white_count)
    mean_red = mean_cell_color(img, part.red_mask) if red_count else None
    mean_white = mean_cell_color(img, part.white_mask) if white_count else None
    return ColorimetricFeatures(
        red_count=red_count,
        white_count=white_count,
        pct_red=pct_red,
        pct_white=pct_white,
        mean_color=mean_cell_color(img, part.cell_mask),
        mean_red_color=mean_red,
        mean_white_color=mean_white,
        uniform=part.uniform,
    )
