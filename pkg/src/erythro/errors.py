"""Exception hierarchy shared by all erythro modules."""


class ErythroError(Exception):
    """Base class for all errors raised by this package."""


# --- image loading / ROI ---

class UnsupportedFormat(ErythroError):
    """File is not one of the supported image formats."""


class CorruptFile(ErythroError):
    """File looks like a supported format but cannot be fully decoded."""


class IoFailure(ErythroError):
    """Underlying I/O failed (missing file, permission, short write)."""


class RoiOutOfBounds(ErythroError):
    """Requested region of interest does not lie within the image."""


# --- segmentation ---

class EmptyImage(ErythroError):
    """Operation requires at least one pixel."""


class NoSeparation(ErythroError):
    """Histogram has a single occupied gray level; no threshold exists."""


class NoCellFound(ErythroError):
    """No connected component satisfies the cell-candidate constraints."""


# --- feature extraction ---

class EmptyMask(ErythroError):
    """Operation requires a nonempty foreground."""


class ZeroPerimeter(ErythroError):
    """Compactness is undefined for a zero-length boundary."""


class EmptyCell(ErythroError):
    """Color proportions are undefined for a cell with zero pixels."""


class DimensionMismatch(ErythroError):
    """Image and mask dimensions disagree."""


# --- synthetic fixtures ---

class ShapeOutOfCanvas(ErythroError):
    """Requested shape does not fit the canvas with the required margin."""
