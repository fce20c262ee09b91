"""Procedural ground-truth shapes rendered as color images.

The real smear photographs behind the reference feature tables are not
distributable, so tests and the acceptance run exercise the pipeline on
analytically rasterized disks, annuli, ellipses, crescents and spiked
stars. A pixel belongs to a shape iff its center satisfies the shape's
inequality, making every rendered area predictable from geometry.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import ShapeOutOfCanvas
from .raster import RasterImage

#: Mean color of healthy cells as measured on stained smears.
CELL_COLOR = (255, 222, 219)
#: Central pallor renders near white; background is the lighter unstained
#: field. Both must stay brighter than the cell color in gray for the
#: dark-is-foreground binarization to pick up the cell.
PALLOR_COLOR = (252, 252, 252)
BACKGROUND_COLOR = (242, 242, 242)

_MARGIN = 5.0


@dataclass(frozen=True)
class ShapeSpec:
    """One renderable shape.

    kind selects the geometry; the size fields that apply per kind are:
      disk     radius, pallor_radius (0 for none)
      annulus  radius (outer), pallor_radius
      ellipse  semi_major, semi_minor (axis-aligned)
      crescent radius, bite_radius, bite_offset (bite removed toward +x)
      star     radius (body), tip_radius, spikes, spike_halfwidth, rotation_deg
    """

    kind: str
    radius: float = 0.0
    pallor_radius: float = 0.0
    semi_major: float = 0.0
    semi_minor: float = 0.0
    bite_radius: float = 0.0
    bite_offset: float = 0.0
    tip_radius: float = 0.0
    spikes: int = 5
    spike_halfwidth: float = 4.0
    rotation_deg: float = 18.0
    fill_color: tuple[int, int, int] = CELL_COLOR
    pallor_color: tuple[int, int, int] = PALLOR_COLOR
    background: tuple[int, int, int] = BACKGROUND_COLOR

    def extent(self) -> float:
        """Farthest reach of the shape from the canvas center, in px."""
        if self.kind in ("disk", "annulus", "crescent"):
            return self.radius
        if self.kind == "ellipse":
            return max(self.semi_major, self.semi_minor)
        if self.kind == "star":
            return max(self.radius, self.tip_radius)
        raise ValueError(f"unknown shape kind {self.kind!r}")


def _shape_masks(spec: ShapeSpec, xx: np.ndarray, yy: np.ndarray,
                 cx: float, cy: float) -> tuple[np.ndarray, np.ndarray]:
    """(cell, pallor) boolean masks for the spec, centered at (cx, cy)."""
    dx = xx - cx
    dy = yy - cy
    rr = dx * dx + dy * dy
    none = np.zeros_like(xx, dtype=bool)

    if spec.kind in ("disk", "annulus"):
        cell = rr <= spec.radius ** 2
        pallor = rr <= spec.pallor_radius ** 2 if spec.pallor_radius > 0 else none
        return cell, pallor
    if spec.kind == "ellipse":
        cell = (dx / spec.semi_major) ** 2 + (dy / spec.semi_minor) ** 2 <= 1.0
        return cell, none
    if spec.kind == "crescent":
        bite = ((dx - spec.bite_offset) ** 2 + dy * dy
                <= spec.bite_radius ** 2)
        return (rr <= spec.radius ** 2) & ~bite, none
    if spec.kind == "star":
        cell = rr <= spec.radius ** 2
        length = spec.tip_radius
        for k in range(spec.spikes):
            a = math.radians(spec.rotation_deg + 360.0 * k / spec.spikes)
            ux, uy = math.cos(a), math.sin(a)
            s = dx * ux + dy * uy
            t = -dx * uy + dy * ux
            taper = spec.spike_halfwidth * (1.0 - s / length)
            cell |= (s >= 0) & (s <= length) & (np.abs(t) <= taper)
        return cell, none
    raise ValueError(f"unknown shape kind {spec.kind!r}")


def render_shape(spec: ShapeSpec, canvas_width: int,
                 canvas_height: int) -> RasterImage:
    """Rasterize the shape centered on a canvas of the given size."""
    cx = (canvas_width - 1) / 2.0
    cy = (canvas_height - 1) / 2.0
    if spec.extent() <= 0:
        raise ShapeOutOfCanvas("shape has no positive extent")
    if spec.extent() + _MARGIN > min(cx, cy):
        raise ShapeOutOfCanvas(
            f"{spec.kind} of extent {spec.extent():g} px needs more than the "
            f"{canvas_width}x{canvas_height} canvas with a {_MARGIN:g} px margin")

    yy, xx = np.mgrid[0:canvas_height, 0:canvas_width].astype(np.float64)
    cell, pallor = _shape_masks(spec, xx, yy, cx, cy)

    img = np.empty((canvas_height, canvas_width, 3), dtype=np.uint8)
    img[:, :] = spec.background
    img[cell] = spec.fill_color
    img[pallor & cell] = spec.pallor_color
    return RasterImage(img)


# canonical fixtures used by tests and the acceptance run

def healthy_disk() -> ShapeSpec:
    return ShapeSpec(kind="disk", radius=38, pallor_radius=13)


def annulus() -> ShapeSpec:
    return ShapeSpec(kind="annulus", radius=34, pallor_radius=20)


def ellipse() -> ShapeSpec:
    return ShapeSpec(kind="ellipse", semi_major=26, semi_minor=13)


def crescent() -> ShapeSpec:
    return ShapeSpec(kind="crescent", radius=30, bite_radius=26, bite_offset=12)


def star() -> ShapeSpec:
    # spikes much longer than the body keep every spicule protruding well
    # past the concavity-test square even after the sub-pixel tips rasterize
    # away, so the extremity count equals the spike count
    return ShapeSpec(kind="star", radius=24, tip_radius=55,
                     spike_halfwidth=5.0)
