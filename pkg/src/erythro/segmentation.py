"""Cell isolation: histogram, Otsu threshold, binarization, 8-connectivity
component labeling, constrained target-cell selection and the red/white
two-class partition of the isolated cell.

All functions are pure; masks and label maps are immutable after construction.
"""
from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

import numpy as np
from scipy import ndimage

from .errors import EmptyImage, EmptyMask, NoCellFound, NoSeparation
from .raster import GrayImage

#: Components smaller than this are never considered erythrocyte candidates.
#: Healthy cells at the working magnification run 4000-5000 px and the
#: smallest diseased cells about 2000 px; 800 px rejects platelets and debris.
DEFAULT_MIN_AREA = 800


def _readonly(arr: np.ndarray) -> np.ndarray:
    arr.setflags(write=False)
    return arr


@dataclass(frozen=True)
class GrayHistogram:
    """256-bin gray-level histogram."""

    counts: np.ndarray  # (256,) int64
    total: int

    def __post_init__(self) -> None:
        c = np.asarray(self.counts, dtype=np.int64)
        if c.shape != (256,):
            raise ValueError(f"expected 256 bins, got {c.shape}")
        if int(c.sum()) != self.total:
            raise ValueError("histogram counts do not sum to total")
        object.__setattr__(self, "counts", _readonly(c))


@dataclass(frozen=True)
class OtsuStats:
    """Chosen threshold plus the class statistics behind it.

    Classes are C1 = gray <= threshold, C2 = gray > threshold; the threshold
    maximizes the inter-class variance p1*p2*(mu1-mu2)^2 and ties break
    toward the smallest gray level.
    """

    threshold: int
    p1: float
    p2: float
    mu1: float
    mu2: float
    var_within: float
    var_between: float


@dataclass(frozen=True)
class BinaryMask:
    """Foreground flags on a pixel grid."""

    bits: np.ndarray  # (height, width) bool

    def __post_init__(self) -> None:
        b = np.asarray(self.bits, dtype=bool)
        if b.ndim != 2 or b.shape[0] < 1 or b.shape[1] < 1:
            raise ValueError(f"expected (h, w) boolean array, got {b.shape}")
        object.__setattr__(self, "bits", _readonly(b))

    @property
    def width(self) -> int:
        return self.bits.shape[1]

    @property
    def height(self) -> int:
        return self.bits.shape[0]

    @property
    def area(self) -> int:
        return int(self.bits.sum())


@dataclass(frozen=True)
class LabelMap:
    """Connected-component ids: 0 background, 1..n in first-encounter
    raster order. component_sizes[k] is the pixel count of component k."""

    labels: np.ndarray  # (height, width) int32
    component_sizes: np.ndarray  # (n+1,) int64; index 0 unused

    def __post_init__(self) -> None:
        lab = np.asarray(self.labels, dtype=np.int32)
        sizes = np.asarray(self.component_sizes, dtype=np.int64)
        object.__setattr__(self, "labels", _readonly(lab))
        object.__setattr__(self, "component_sizes", _readonly(sizes))

    @property
    def n_components(self) -> int:
        return len(self.component_sizes) - 1

    def component_mask(self, label: int) -> BinaryMask:
        if not 1 <= label <= self.n_components:
            raise ValueError(f"no component {label}")
        return BinaryMask(self.labels == label)


class Polarity(Enum):
    DARK_IS_FOREGROUND = "dark"
    LIGHT_IS_FOREGROUND = "light"


@dataclass(frozen=True)
class CellPartition:
    """Red (hemoglobin, darker) and white (central pallor, lighter) regions
    of one isolated cell. red | white == cell, red & white == empty.

    uniform is set when the cell had a single gray level; the whole cell is
    then red and the white mask is empty.
    """

    cell_mask: BinaryMask
    red_mask: BinaryMask
    white_mask: BinaryMask
    uniform: bool
    threshold: int | None


def gray_histogram(img: GrayImage) -> GrayHistogram:
    """Tally pixels per gray level."""
    if img.values.size == 0:
        raise EmptyImage("cannot build a histogram of an empty image")
    counts = np.bincount(img.values.ravel(), minlength=256).astype(np.int64)
    return GrayHistogram(counts, int(counts.sum()))


def _histogram_of(values: np.ndarray) -> GrayHistogram:
    counts = np.bincount(values.ravel(), minlength=256).astype(np.int64)
    return GrayHistogram(counts, int(counts.sum()))


def otsu_threshold(hist: GrayHistogram) -> OtsuStats:
    """Threshold maximizing the inter-class variance of the histogram.

    The argmax over t in 0..254 is evaluated in exact integer arithmetic so
    tie-breaking (smallest maximizing t) is deterministic and immune to
    floating-point noise; the returned statistics are computed in floats at
    the chosen threshold.
    """
    counts = hist.counts
    occupied = np.nonzero(counts)[0]
    if len(occupied) < 2:
        raise NoSeparation("histogram has a single occupied gray level")

    n_total = int(hist.total)
    m_total = int((counts * np.arange(256)).sum())

    # sigma_between(t) is proportional to (m1*N - M*w1)^2 / (w1*(N - w1));
    # compare the exact rationals by cross-multiplication.
    best_t = -1
    best_num = 0
    best_den = 1
    w1 = 0
    m1 = 0
    for t in range(255):
        w1 += int(counts[t])
        m1 += t * int(counts[t])
        w2 = n_total - w1
        if w1 == 0 or w2 == 0:
            continue
        num = (m1 * n_total - m_total * w1) ** 2
        den = w1 * w2
        if best_t < 0 or num * best_den > best_num * den:
            best_t, best_num, best_den = t, num, den

    t = best_t
    levels = np.arange(256, dtype=np.float64)
    c = counts.astype(np.float64)
    w1 = float(c[:t + 1].sum())
    w2 = float(c[t + 1:].sum())
    p1 = w1 / n_total
    p2 = w2 / n_total
    mu1 = float((levels[:t + 1] * c[:t + 1]).sum()) / w1
    mu2 = float((levels[t + 1:] * c[t + 1:]).sum()) / w2
    var1 = float((c[:t + 1] * (levels[:t + 1] - mu1) ** 2).sum()) / w1
    var2 = float((c[t + 1:] * (levels[t + 1:] - mu2) ** 2).sum()) / w2
    return OtsuStats(
        threshold=t,
        p1=p1,
        p2=p2,
        mu1=mu1,
        mu2=mu2,
        var_within=p1 * var1 + p2 * var2,
        var_between=p1 * p2 * (mu1 - mu2) ** 2,
    )


def binarize(img: GrayImage, t: int,
             polarity: Polarity = Polarity.DARK_IS_FOREGROUND) -> BinaryMask:
    """Threshold the image; dark-is-foreground marks gray <= t (cells stain
    darker than the smear background)."""
    if not 0 <= t <= 254:
        raise ValueError(f"threshold must be in 0..254, got {t}")
    if polarity is Polarity.DARK_IS_FOREGROUND:
        return BinaryMask(img.values <= t)
    return BinaryMask(img.values > t)


def label_components_8(mask: BinaryMask) -> LabelMap:
    """Label maximal 8-connected foreground regions.

    Run-based two-pass labeling: horizontal runs get provisional labels,
    runs overlapping (within one column, for diagonal adjacency) on the
    previous row are merged by union-find, and final ids are renumbered in
    first-encounter raster order starting at 1.
    """
    bits = mask.bits
    h, w = bits.shape
    labels = np.zeros((h, w), dtype=np.int32)

    parent: list[int] = [0]  # union-find over provisional run labels

    def find(a: int) -> int:
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    def union(a: int, b: int) -> None:
        ra, rb = find(a), find(b)
        if ra != rb:
            if ra < rb:
                parent[rb] = ra
            else:
                parent[ra] = rb

    padded = np.zeros(w + 2, dtype=bool)
    prev_runs: list[tuple[int, int, int]] = []  # (start, end, provisional)
    for y in range(h):
        padded[1:-1] = bits[y]
        edges = np.nonzero(padded[1:] != padded[:-1])[0]
        row_runs: list[tuple[int, int, int]] = []
        p = 0
        for i in range(0, len(edges), 2):
            start, end = int(edges[i]), int(edges[i + 1])  # [start, end)
            # 8-connectivity: a previous-row run touches if the intervals
            # overlap once widened by one column (covers diagonals)
            while p < len(prev_runs) and prev_runs[p][1] < start:
                p += 1
            lab = 0
            q = p
            while q < len(prev_runs) and prev_runs[q][0] <= end:
                plab = prev_runs[q][2]
                if lab == 0:
                    lab = find(plab)
                else:
                    union(lab, plab)
                q += 1
            if lab == 0:
                parent.append(len(parent))
                lab = len(parent) - 1
            labels[y, start:end] = lab
            row_runs.append((start, end, lab))
        prev_runs = row_runs

    if len(parent) == 1:
        return LabelMap(labels, np.zeros(1, dtype=np.int64))

    # resolve provisional labels to roots, then renumber by first encounter
    roots = np.array([find(i) for i in range(len(parent))], dtype=np.int32)
    resolved = roots[labels]
    flat = resolved.ravel()
    nonzero = flat[flat != 0]
    first_seen = {}
    order = []
    for root in nonzero[np.sort(np.unique(nonzero, return_index=True)[1])]:
        root = int(root)
        if root not in first_seen:
            first_seen[root] = len(order) + 1
            order.append(root)
    remap = np.zeros(len(parent), dtype=np.int32)
    for root, new in first_seen.items():
        remap[root] = new
    final = remap[resolved]
    sizes = np.bincount(final.ravel(), minlength=len(order) + 1).astype(np.int64)
    sizes[0] = 0
    return LabelMap(final, sizes)


def fill_holes(mask: BinaryMask) -> BinaryMask:
    """Add enclosed background regions to the foreground."""
    return BinaryMask(ndimage.binary_fill_holes(mask.bits))


def isolate_target_cell(labels: LabelMap, roi_center: tuple[int, int],
                        min_area: int = DEFAULT_MIN_AREA,
                        include_holes: bool = True) -> BinaryMask:
    """Select the component that is the target erythrocyte.

    Candidates must have at least min_area pixels. Components touching the
    ROI border are deprioritized (a tight ROI may still force one). Within
    the preferred pool the component under roi_center wins, else the largest.
    The returned mask has enclosed holes (the central pallor reads as
    background after thresholding) merged back into the cell, so the cell
    region is the full red-plus-white extent.
    """
    sizes = labels.component_sizes
    candidates = [k for k in range(1, labels.n_components + 1)
                  if sizes[k] >= min_area]
    if not candidates:
        raise NoCellFound(f"no component with area >= {min_area} px")

    lab = labels.labels
    border = np.concatenate([lab[0, :], lab[-1, :], lab[:, 0], lab[:, -1]])
    border_ids = set(np.unique(border).tolist())
    interior = [k for k in candidates if k not in border_ids]
    pool = interior if interior else candidates

    cx, cy = roi_center
    chosen = None
    if 0 <= cy < lab.shape[0] and 0 <= cx < lab.shape[1]:
        center_label = int(lab[cy, cx])
        if center_label in pool:
            chosen = center_label
    if chosen is None:
        chosen = max(pool, key=lambda k: (sizes[k], -k))

    cell = labels.component_mask(chosen)
    return fill_holes(cell) if include_holes else cell


def partition_cell_colors(gray: GrayImage, cell: BinaryMask) -> CellPartition:
    """Split the isolated cell into red (darker) and white (lighter) regions
    by running Otsu on the cell's own gray levels only.

    A single-valued cell is a legitimate outcome (no central pallor): the
    partition is flagged uniform with the whole cell in the red mask.
    """
    if gray.values.shape != cell.bits.shape:
        raise ValueError("gray image and cell mask dimensions differ")
    values = gray.values[cell.bits]
    if values.size == 0:
        raise EmptyMask("cell mask is empty")
    try:
        stats = otsu_threshold(_histogram_of(values))
    except NoSeparation:
        empty = BinaryMask(np.zeros_like(cell.bits))
        return CellPartition(cell, cell, empty, uniform=True, threshold=None)
    red = BinaryMask(cell.bits & (gray.values <= stats.threshold))
    white = BinaryMask(cell.bits & (gray.values > stats.threshold))
    return CellPartition(cell, red, white, uniform=False,
                         threshold=stats.threshold)
