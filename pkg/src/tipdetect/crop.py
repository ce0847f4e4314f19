"""Wrist cut detection and hand cropping.

Walking the hand-axis projection histogram from the wrist edge, the counts
stay roughly flat along the forearm and climb steeply where the palm starts.
The first steep window marks the wrist cut; everything on the wrist side of
it is dropped before fingertip detection.
"""

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from src.tipdetect.exceptions import (
    ConfigError,
    DegenerateIntervalError,
    NoForegroundError,
    NoInclinationError,
)
from src.tipdetect.imaging import BinarySilhouette
from src.tipdetect.orientation import (
    Axis,
    HandAxis,
    Orientation,
    ProjectionHistogram,
    Side,
    occupied_span,
    projection_histogram,
)

DEFAULT_SLOPE_THRESHOLD = 4.0
DEFAULT_SLOPE_WINDOW = 2

# Frame side (pixels) at which DEFAULT_SLOPE_THRESHOLD applies unscaled.
REFERENCE_FRAME_SIDE = 480


@dataclass(frozen=True)
class CropBox:
    """Inclusive hand region in frame coordinates.

    Attributes
    ----------
    x_min, x_max : int
        First and last row.
    y_min, y_max : int
        First and last column.
    """

    x_min: int
    x_max: int
    y_min: int
    y_max: int

    @property
    def height(self) -> int:
        return self.x_max - self.x_min + 1

    @property
    def width(self) -> int:
        return self.y_max - self.y_min + 1

    @property
    def area(self) -> int:
        return self.height * self.width

    def contains(self, x: int, y: int) -> bool:
        return self.x_min <= x <= self.x_max and self.y_min <= y <= self.y_max

    def extent(self, axis: HandAxis) -> int:
        """Number of scanlines the box spans along the hand axis."""
        return self.height if axis is HandAxis.VERTICAL else self.width

    def to_dict(self) -> dict[str, int]:
        return {
            "x_min": self.x_min,
            "x_max": self.x_max,
            "y_min": self.y_min,
            "y_max": self.y_max,
        }


def hand_axis_histogram(
    sil: BinarySilhouette, orient: Orientation
) -> ProjectionHistogram:
    """Histogram whose bins step along the hand axis (rows for a vertical hand)."""
    axis = Axis.ROW if orient.hand_axis is HandAxis.VERTICAL else Axis.COLUMN
    return projection_histogram(sil, axis)


def scaled_slope_threshold(
    threshold: float, frame_height: int, frame_width: int
) -> float:
    """Scale a threshold given at 640x480 to another frame size.

    The shorter frame side is used so the result does not change when the
    frame is rotated by a quarter turn.
    """
    return threshold * min(frame_height, frame_width) / REFERENCE_FRAME_SIDE


def slope(h: ProjectionHistogram, i1: int, i2: int) -> Fraction:
    """Exact slope (counts[i2] - counts[i1]) / (i2 - i1).

    Raises
    ------
    DegenerateIntervalError
        If i1 == i2.
    """
    if i1 == i2:
        raise DegenerateIntervalError(f"Slope needs two distinct scanlines, got {i1}")
    return Fraction(int(h.counts[i2]) - int(h.counts[i1]), i2 - i1)


def find_wrist_cut(
    h: ProjectionHistogram,
    scan_from: Side,
    slope_threshold: float = DEFAULT_SLOPE_THRESHOLD,
    window: int = DEFAULT_SLOPE_WINDOW,
) -> int:
    """Locate the scanline where the steep rise from forearm to palm ends.

    Scanning starts at the first occupied scanline from the wrist edge and
    moves inward. For each scanline i the inclination toward j = i + window
    (in scan direction) is compared with the threshold; the first j that
    reaches it is the wrist/palm boundary.

    Parameters
    ----------
    h : ProjectionHistogram
        Histogram along the hand axis.
    scan_from : Side
        The wrist side; UP and LEFT scan toward higher indices.
    slope_threshold : float
        Minimum inclination in on-pixels per scanline.
    window : int
        Scanline distance the slope is measured over, >= 1.

    Returns
    -------
    int
        Index of the first scanline past the inclination.

    Raises
    ------
    NoInclinationError
        If no window reaches the threshold.
    NoForegroundError
        If the histogram is empty.
    """
    if window < 1:
        raise ConfigError(f"Slope window must be >= 1, got {window}")

    first, last = occupied_span(h.counts)
    step = 1 if scan_from in (Side.UP, Side.LEFT) else -1
    i = first if step == 1 else last
    n = len(h)

    while 0 <= i + step * window < n:
        j = i + step * window
        if slope(h, i, j) * step >= slope_threshold:
            return j
        i += step

    raise NoInclinationError(
        f"No inclination >= {slope_threshold} scanning from {scan_from.value}"
    )


def _bounding_box(bits: np.ndarray) -> CropBox:
    rows = bits.sum(axis=1)
    cols = bits.sum(axis=0)
    x_min, x_max = occupied_span(rows)
    y_min, y_max = occupied_span(cols)
    return CropBox(x_min, x_max, y_min, y_max)


def crop_hand(
    sil: BinarySilhouette,
    orient: Orientation,
    cut: int | None,
) -> tuple[CropBox, BinarySilhouette]:
    """Crop the silhouette to the hand region.

    Along the hand axis the wrist-side bound is the cut (or the first
    occupied scanline when no cut was found). The other three bounds are the
    first occupied scanlines from the remaining edges, taken over the part of
    the silhouette on the finger side of the cut.

    Parameters
    ----------
    sil : BinarySilhouette
        Hand silhouette in frame coordinates.
    orient : Orientation
        Result of the 4-way scan.
    cut : int | None
        Wrist cut index from find_wrist_cut, or None for NoInclination.

    Returns
    -------
    tuple[CropBox, BinarySilhouette]
        The inclusive box in frame coordinates and the silhouette restricted
        to it, re-indexed to box-local coordinates.

    Raises
    ------
    NoForegroundError
        If nothing is left on the finger side of the cut.
    """
    if sil.on_pixels == 0:
        raise NoForegroundError("Cannot crop an empty silhouette")

    kept = sil.bits.copy()
    if cut is not None:
        wrist = orient.wrist_side
        if wrist is Side.DOWN:
            kept[cut + 1 :, :] = 0
        elif wrist is Side.UP:
            kept[:cut, :] = 0
        elif wrist is Side.RIGHT:
            kept[:, cut + 1 :] = 0
        else:
            kept[:, :cut] = 0

    box = _bounding_box(kept)
    region = kept[box.x_min : box.x_max + 1, box.y_min : box.y_max + 1]
    return box, BinarySilhouette(region)
