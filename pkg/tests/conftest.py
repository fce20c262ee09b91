"""Shared helpers: tiny mask builders and the independent flood-fill
labeling oracle used to validate the production component labeler."""
from __future__ import annotations

import numpy as np
import pytest

from erythro.segmentation import BinaryMask


def mask_from_strings(rows: list[str]) -> BinaryMask:
    """Build a mask from '#' (foreground) / '.' (background) art."""
    bits = np.array([[ch == "#" for ch in row] for row in rows], dtype=bool)
    return BinaryMask(bits)


def disk_mask(radius: float, size: int | None = None,
              center: tuple[float, float] | None = None) -> BinaryMask:
    """Digital disk: pixel centers within radius of the center."""
    if size is None:
        size = int(2 * radius + 11)
    if center is None:
        center = ((size - 1) / 2.0, (size - 1) / 2.0)
    cx, cy = center
    yy, xx = np.mgrid[0:size, 0:size]
    return BinaryMask((xx - cx) ** 2 + (yy - cy) ** 2 <= radius ** 2)


def ellipse_mask(semi_x: float, semi_y: float, size: int) -> BinaryMask:
    c = (size - 1) / 2.0
    yy, xx = np.mgrid[0:size, 0:size]
    return BinaryMask(((xx - c) / semi_x) ** 2 + ((yy - c) / semi_y) ** 2 <= 1.0)


def crescent_mask(radius: float = 30, bite_radius: float = 26,
                  bite_offset: float = 12, size: int = 120) -> BinaryMask:
    c = (size - 1) / 2.0
    yy, xx = np.mgrid[0:size, 0:size]
    big = (xx - c) ** 2 + (yy - c) ** 2 <= radius ** 2
    bite = (xx - c - bite_offset) ** 2 + (yy - c) ** 2 <= bite_radius ** 2
    return BinaryMask(big & ~bite)


def flood_fill_labels(bits: np.ndarray) -> np.ndarray:
    """Oracle: label 8-connected components by stack-based flood fill,
    numbering them in first-encounter raster order."""
    h, w = bits.shape
    labels = np.zeros((h, w), dtype=np.int32)
    next_label = 1
    for y0 in range(h):
        for x0 in range(w):
            if not bits[y0, x0] or labels[y0, x0]:
                continue
            stack = [(y0, x0)]
            labels[y0, x0] = next_label
            while stack:
                y, x = stack.pop()
                for dy in (-1, 0, 1):
                    for dx in (-1, 0, 1):
                        ny, nx = y + dy, x + dx
                        if (0 <= ny < h and 0 <= nx < w
                                and bits[ny, nx] and not labels[ny, nx]):
                            labels[ny, nx] = next_label
                            stack.append((ny, nx))
            next_label += 1
    return labels


@pytest.fixture
def rng() -> np.random.Generator:
    return np.random.default_rng(20240811)
