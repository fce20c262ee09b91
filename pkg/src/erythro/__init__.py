"""Semi-automatic identification of erythrocyte morphologies from
microscopic color images of blood smears.

The package isolates one operator-framed red blood cell by automatic
thresholding and 8-connectivity component search, measures its shape
(area, boundary, compactness, barycenter axes, convexity, protruding
extremities) and color (red/white pixel populations and means), and
assigns an anemia-relevant class by transparent rules.
"""

from .analysis import (AnalysisConfig, analyze_roi, format_report_text,
                       report_to_dict, serialize_report)
from .classifier import (ClassificationThresholds, ErythrocyteClass,
                         ErythrocyteReport, classify)
from .colorimetry import ColorimetricFeatures
from .errors import (CorruptFile, DimensionMismatch, EmptyCell, EmptyImage,
                     EmptyMask, ErythroError, IoFailure, NoCellFound,
                     NoSeparation, RoiOutOfBounds, ShapeOutOfCanvas,
                     UnsupportedFormat, ZeroPerimeter)
from .morphometry import Barycenter, MorphometricFeatures
from .raster import (GrayImage, RasterImage, Roi, crop_roi, decode_image,
                     load_image, save_image, to_grayscale)
from .segmentation import (BinaryMask, CellPartition, GrayHistogram, LabelMap,
                           OtsuStats, Polarity, binarize, gray_histogram,
                           isolate_target_cell, label_components_8,
                           otsu_threshold, partition_cell_colors)
from .synth import ShapeSpec, render_shape

__version__ = "0.1.0"

__all__ = [
    "AnalysisConfig", "analyze_roi", "format_report_text", "report_to_dict",
    "serialize_report", "ClassificationThresholds", "ErythrocyteClass",
    "ErythrocyteReport", "classify", "ColorimetricFeatures", "ErythroError",
    "CorruptFile", "DimensionMismatch", "EmptyCell", "EmptyImage",
    "EmptyMask", "IoFailure", "NoCellFound", "NoSeparation", "RoiOutOfBounds",
    "ShapeOutOfCanvas", "UnsupportedFormat", "ZeroPerimeter", "Barycenter",
    "MorphometricFeatures", "GrayImage", "RasterImage", "Roi", "crop_roi",
    "decode_image", "load_image", "save_image", "to_grayscale", "BinaryMask",
    "CellPartition", "GrayHistogram", "LabelMap", "OtsuStats", "Polarity",
    "binarize", "gray_histogram", "isolate_target_cell", "label_components_8",
    "otsu_threshold", "partition_cell_colors", "ShapeSpec", "render_shape",
]
