"""Shape descriptors of an isolated cell mask: area, boundary pixel count,
compactness, barycenter-anchored axes, convexity, and the count of parts of
the cell protruding beyond a barycenter-centered square (the concavity
component count that separates sickle forms from acanthocytes).

Conventions, fixed for the whole package:
  - perimeter is the count of foreground pixels with a 4-neighbor background
    (inner boundary), which puts the compactness of digital disks near 1.25;
  - axes are chords through the barycenter, swept at 1 degree steps and
    sampled every 0.5 px;
  - distances are Euclidean in pixel units.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy import ndimage
from scipy.spatial import ConvexHull, QhullError

from .errors import EmptyMask, ZeroPerimeter
from .segmentation import BinaryMask, label_components_8

#: Hull-area deficiency above which a mask counts as non-convex. Digital
#: disks and ellipses stay under 3% from quantization alone; crescents and
#: spiked cells exceed 25%.
CONVEXITY_DEFICIENCY = 0.08

#: Protruding parts smaller than this are boundary staircasing, not anatomy.
MIN_CONCAVITY_COMPONENT = 20

_ANGLE_STEP_DEG = 1.0
_RADIAL_STEP = 0.5


@dataclass(frozen=True)
class Barycenter:
    """Mean coordinate of the foreground pixels (may fall outside them)."""

    cx: float
    cy: float


@dataclass(frozen=True)
class MorphometricFeatures:
    area: int
    perimeter: int
    compactness: float
    major_axis: float
    minor_axis: float
    axis_spacing: float
    varconvex: int  # 1 when the mask is non-convex
    ncc: int | None  # concavity components; None when the test did not run


def _foreground_coords(cell: BinaryMask) -> tuple[np.ndarray, np.ndarray]:
    ys, xs = np.nonzero(cell.bits)
    if len(xs) == 0:
        raise EmptyMask("mask has no foreground pixels")
    return xs, ys


def compute_area(cell: BinaryMask) -> int:
    """Number of foreground pixels."""
    return cell.area


def compute_perimeter(cell: BinaryMask) -> int:
    """Foreground pixels with at least one 4-neighbor outside the region."""
    bits = cell.bits
    if not bits.any():
        raise EmptyMask("perimeter of an empty mask is undefined")
    interior = np.zeros_like(bits)
    interior[1:-1, 1:-1] = (bits[1:-1, 1:-1]
                            & bits[:-2, 1:-1] & bits[2:, 1:-1]
                            & bits[1:-1, :-2] & bits[1:-1, 2:])
    return int((bits & ~interior).sum())


def compute_compactness(area: int, perimeter: int) -> float:
    """4 pi area / perimeter^2; near 1 for disks under the pixel-count
    boundary convention."""
    if perimeter <= 0:
        raise ZeroPerimeter("compactness needs a positive perimeter")
    return 4.0 * math.pi * area / float(perimeter) ** 2


def compute_barycenter(cell: BinaryMask) -> Barycenter:
    """Mean of the foreground pixel coordinates."""
    xs, ys = _foreground_coords(cell)
    return Barycenter(float(xs.mean()), float(ys.mean()))


def compute_axes(cell: BinaryMask, bc: Barycenter) -> tuple[float, float, float]:
    """(major, minor, spacing) chord lengths through the barycenter.

    For each direction in [0, 180) degrees the chord is the measure of the
    line's intersection with the foreground: sample points every 0.5 px both
    ways from the barycenter and count hits. Major and minor are the max and
    min over directions; spacing is their difference.
    """
    xs, ys = _foreground_coords(cell)
    reach = math.sqrt(((xs - bc.cx) ** 2 + (ys - bc.cy) ** 2).max())
    n_steps = int(math.ceil((reach + 1.0) / _RADIAL_STEP))
    s = np.arange(-n_steps, n_steps + 1, dtype=np.float64) * _RADIAL_STEP

    theta = np.deg2rad(np.arange(0.0, 180.0, _ANGLE_STEP_DEG))
    px = bc.cx + np.outer(np.cos(theta), s)
    py = bc.cy + np.outer(np.sin(theta), s)
    # bilinear membership keeps the measured chord free of the half-pixel
    # staircase bias a nearest-pixel lookup would add at oblique angles
    occupancy = ndimage.map_coordinates(
        cell.bits.astype(np.float32), [py.ravel(), px.ravel()],
        order=1, mode="constant", cval=0.0).reshape(px.shape)
    hits = occupancy >= 0.5

    lengths = hits.sum(axis=1) * _RADIAL_STEP
    major = float(lengths.max())
    minor = float(lengths.min())
    return major, minor, major - minor


def _filled_hull_area(xs: np.ndarray, ys: np.ndarray,
                      shape: tuple[int, int]) -> int:
    """Pixel count of the filled convex hull of the given foreground."""
    pts = np.column_stack([xs, ys]).astype(np.float64)
    try:
        hull = ConvexHull(pts)
    except QhullError:
        # degenerate (collinear) foreground is convex; hull equals the set
        return len(xs)
    h, w = shape
    x0, x1 = int(xs.min()), int(xs.max())
    y0, y1 = int(ys.min()), int(ys.max())
    gy, gx = np.mgrid[y0:y1 + 1, x0:x1 + 1]
    inside = np.ones(gx.shape, dtype=bool)
    # qhull equations: A @ p + b <= 0 inside; tolerance admits edge pixels
    for a, b, c in hull.equations:
        inside &= (a * gx + b * gy + c) <= 1e-9
    return int(inside.sum())


def compute_convexity(cell: BinaryMask) -> int:
    """1 when the convex-hull area deficiency exceeds the tolerance, else 0."""
    xs, ys = _foreground_coords(cell)
    hull_area = _filled_hull_area(xs, ys, cell.bits.shape)
    area = len(xs)
    if hull_area <= 0:
        return 0
    deficiency = (hull_area - area) / hull_area
    return 1 if deficiency > CONVEXITY_DEFICIENCY else 0


def concavity_window(cell: BinaryMask, bc: Barycenter) -> float:
    """Half-side of the concavity-test square: half the distance from the
    barycenter to the farthest foreground pixel."""
    xs, ys = _foreground_coords(cell)
    d = math.sqrt(((xs - bc.cx) ** 2 + (ys - bc.cy) ** 2).max())
    return d / 2.0


def concavity_components(cell: BinaryMask, bc: Barycenter,
                         min_component: int = MIN_CONCAVITY_COMPONENT) -> int:
    """Count the parts of the cell protruding beyond a square of side equal
    to the barycenter-to-farthest-point distance, centered on the barycenter.

    The square retains the cell's central body; what remains outside it are
    the extremities, labeled in 8-connectivity. A crescent leaves its two
    horns (count 2), a spiked cell leaves its spicules and lobes (count > 2).
    Components below min_component pixels are rasterization slivers and are
    ignored.
    """
    half = concavity_window(cell, bc)
    h, w = cell.bits.shape
    gy, gx = np.mgrid[0:h, 0:w]
    window = (np.abs(gx - bc.cx) <= half) & (np.abs(gy - bc.cy) <= half)
    protruding = cell.bits & ~window
    if not protruding.any():
        return 0
    labeled = label_components_8(BinaryMask(protruding))
    sizes = labeled.component_sizes[1:]
    return int((sizes >= min_component).sum())


def compute_features(cell: BinaryMask,
                     run_concavity: bool | None = None,
                     compactness_gate: float = 0.8) -> MorphometricFeatures:
    """All shape descriptors of one cell mask.

    The concavity count is only meaningful for non-compact shapes; by
    default it runs when compactness falls below compactness_gate, matching
    the classifier's branch structure. Pass run_concavity to force either way.
    """
    area = compute_area(cell)
    perimeter = compute_perimeter(cell)
    compactness = compute_compactness(area, perimeter)
    bc = compute_barycenter(cell)
    major, minor, spacing = compute_axes(cell, bc)
    varconvex = compute_convexity(cell)
    if run_concavity is None:
        run_concavity = compactness < compactness_gate
    ncc = concavity_components(cell, bc) if run_concavity else None
    return MorphometricFeatures(
        area=area,
        perimeter=perimeter,
        compactness=compactness,
        major_axis=major,
        minor_axis=minor,
        axis_spacing=spacing,
        varconvex=varconvex,
        ncc=ncc,
    )
