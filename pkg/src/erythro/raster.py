"""Image substrate: RGB raster images, grayscale conversion, ROI cropping.

Images are immutable value objects backed by read-only numpy arrays; every
operation returns a new buffer. Supported file formats are PNG (8-bit, alpha
ignored) and binary PPM (P6, maxval 255).
"""
from __future__ import annotations

import io
from dataclasses import dataclass

import numpy as np
from PIL import Image, UnidentifiedImageError

from .errors import CorruptFile, IoFailure, RoiOutOfBounds, UnsupportedFormat

# Rec.601 luminance weights, rounded half-up in to_grayscale.
_LUMA_R = 0.299
_LUMA_G = 0.587
_LUMA_B = 0.114


def _readonly(arr: np.ndarray) -> np.ndarray:
    arr.setflags(write=False)
    return arr


@dataclass(frozen=True)
class RasterImage:
    """Width x height grid of 8-bit RGB pixels, row-major."""

    pixels: np.ndarray  # (height, width, 3) uint8

    def __post_init__(self) -> None:
        px = np.asarray(self.pixels, dtype=np.uint8)
        if px.ndim != 3 or px.shape[2] != 3 or px.shape[0] < 1 or px.shape[1] < 1:
            raise ValueError(f"expected (h, w, 3) pixel array, got {px.shape}")
        object.__setattr__(self, "pixels", _readonly(px))

    @property
    def width(self) -> int:
        return self.pixels.shape[1]

    @property
    def height(self) -> int:
        return self.pixels.shape[0]


@dataclass(frozen=True)
class GrayImage:
    """Gray levels 0..255 on the same grid as the source image."""

    values: np.ndarray  # (height, width) uint8

    def __post_init__(self) -> None:
        v = np.asarray(self.values, dtype=np.uint8)
        if v.ndim != 2 or v.shape[0] < 1 or v.shape[1] < 1:
            raise ValueError(f"expected (h, w) value array, got {v.shape}")
        object.__setattr__(self, "values", _readonly(v))

    @property
    def width(self) -> int:
        return self.values.shape[1]

    @property
    def height(self) -> int:
        return self.values.shape[0]


@dataclass(frozen=True)
class Roi:
    """Operator-selected rectangle, in image pixel coordinates."""

    x0: int
    y0: int
    width: int
    height: int

    def __post_init__(self) -> None:
        if self.width <= 0 or self.height <= 0:
            raise ValueError("ROI width and height must be positive")

    def validate_within(self, img: RasterImage) -> None:
        if (self.x0 < 0 or self.y0 < 0
                or self.x0 + self.width > img.width
                or self.y0 + self.height > img.height):
            raise RoiOutOfBounds(
                f"ROI {self.x0},{self.y0},{self.width},{self.height} exceeds "
                f"{img.width}x{img.height} image")

    @property
    def center(self) -> tuple[int, int]:
        return (self.x0 + self.width // 2, self.y0 + self.height // 2)


def load_image(path: str) -> RasterImage:
    """Load a PNG or binary PPM file from disk."""
    try:
        with open(path, "rb") as fh:
            data = fh.read()
    except OSError as exc:
        raise IoFailure(f"cannot read {path}: {exc}") from exc
    return decode_image(data)


def decode_image(data: bytes) -> RasterImage:
    """Decode PNG or PPM bytes; dispatches on the magic number."""
    if data[:2] == b"P6":
        return RasterImage(_parse_ppm(data))
    if data[:8] == b"\x89PNG\r\n\x1a\n":
        try:
            with Image.open(io.BytesIO(data)) as im:
                im.load()
                rgb = im.convert("RGB")
                return RasterImage(np.asarray(rgb, dtype=np.uint8))
        except UnidentifiedImageError as exc:
            raise UnsupportedFormat(f"unreadable PNG: {exc}") from exc
        except OSError as exc:
            raise CorruptFile(f"truncated or damaged PNG: {exc}") from exc
    raise UnsupportedFormat("expected PNG or binary PPM (P6) data")


def _parse_ppm(data: bytes) -> np.ndarray:
    """Parse a P6 PPM buffer. Header tokens may be separated by comments."""
    pos = 2
    tokens: list[int] = []
    while len(tokens) < 3:
        while pos < len(data) and data[pos:pos + 1].isspace():
            pos += 1
        if pos < len(data) and data[pos:pos + 1] == b"#":
            while pos < len(data) and data[pos:pos + 1] not in (b"\n", b""):
                pos += 1
            continue
        start = pos
        while pos < len(data) and not data[pos:pos + 1].isspace():
            pos += 1
        if start == pos:
            raise CorruptFile("PPM header ended prematurely")
        try:
            tokens.append(int(data[start:pos]))
        except ValueError as exc:
            raise CorruptFile(f"bad PPM header token {data[start:pos]!r}") from exc
    width, height, maxval = tokens
    if maxval != 255:
        raise UnsupportedFormat(f"PPM maxval must be 255, got {maxval}")
    if width <= 0 or height <= 0:
        raise CorruptFile(f"bad PPM dimensions {width}x{height}")
    pos += 1  # single whitespace byte after maxval
    need = width * height * 3
    raw = data[pos:pos + need]
    if len(raw) < need:
        raise CorruptFile(f"PPM pixel data truncated: {len(raw)} of {need} bytes")
    return np.frombuffer(raw, dtype=np.uint8).reshape(height, width, 3).copy()


def encode_ppm(img: RasterImage) -> bytes:
    header = f"P6\n{img.width} {img.height}\n255\n".encode("ascii")
    return header + img.pixels.tobytes()


def save_image(img: RasterImage, path: str) -> None:
    """Write PNG or PPM according to the file extension."""
    lower = path.lower()
    try:
        if lower.endswith((".ppm", ".pnm")):
            with open(path, "wb") as fh:
                fh.write(encode_ppm(img))
        elif lower.endswith(".png"):
            Image.fromarray(np.asarray(img.pixels)).save(path, format="PNG")
        else:
            raise UnsupportedFormat(f"cannot infer output format from {path!r}")
    except OSError as exc:
        raise IoFailure(f"cannot write {path}: {exc}") from exc


def to_grayscale(img: RasterImage) -> GrayImage:
    """Rec.601 luminance, rounded half-up: gray = 0.299 r + 0.587 g + 0.114 b."""
    px = img.pixels.astype(np.float64)
    gray = _LUMA_R * px[:, :, 0] + _LUMA_G * px[:, :, 1] + _LUMA_B * px[:, :, 2]
    gray = np.clip(np.floor(gray + 0.5), 0, 255)
    return GrayImage(gray.astype(np.uint8))


def crop_roi(img: RasterImage, roi: Roi) -> RasterImage:
    """Extract the ROI sub-image; output pixel (i, j) is input (x0+i, y0+j)."""
    roi.validate_within(img)
    sub = img.pixels[roi.y0:roi.y0 + roi.height, roi.x0:roi.x0 + roi.width]
    return RasterImage(sub.copy())
