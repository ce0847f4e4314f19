"""Fingertip localisation on the cropped hand.

Each scanline running along the hand axis gets an intensity ramp over its
on-pixels, 1 at the wrist side rising to 255 at the finger end. The 255
pixels trace the outline the hand presents toward the finger side. Walking
that outline across scanlines and differentiating it, runs of small steps are
finger ends and the large jumps between them are the gaps between fingers.
"""

from dataclasses import dataclass

import numpy as np
from numpy.typing import NDArray

from src.tipdetect.crop import CropBox
from src.tipdetect.exceptions import ConfigError, NoForegroundError
from src.tipdetect.imaging import BinarySilhouette, GrayImage
from src.tipdetect.orientation import (
    Axis,
    HandAxis,
    Orientation,
    ProjectionHistogram,
    canonical_bits,
    projection_histogram,
    quarter_turns_to_up,
    rotate_point,
)

DEFAULT_TIP_DIFF = 2
DEFAULT_TIP_MIN_RUN = 3

# Hand extent (scanlines along the hand axis) at which the tip defaults apply.
REFERENCE_HAND_EXTENT = 240


@dataclass(frozen=True)
class TipParams:
    """Thresholds for grouping finger-edge pixels into fingertips.

    Attributes
    ----------
    diff_threshold : int
        Largest step between consecutive edge positions inside one finger.
    min_run : int
        Fewest consecutive scanlines a finger must span.
    max_tips : int | None
        Cap on reported fingertips; None keeps every candidate.
    """

    diff_threshold: int = DEFAULT_TIP_DIFF
    min_run: int = DEFAULT_TIP_MIN_RUN
    max_tips: int | None = None

    def validate(self) -> None:
        if self.diff_threshold < 1:
            raise ConfigError(f"diff_threshold must be >= 1, got {self.diff_threshold}")
        if self.min_run < 1:
            raise ConfigError(f"min_run must be >= 1, got {self.min_run}")
        if self.max_tips is not None and self.max_tips < 0:
            raise ConfigError(f"max_tips must be >= 0, got {self.max_tips}")

    def scaled(self, extent: int) -> "TipParams":
        """Scale both thresholds with the hand's extent along its axis."""
        factor = extent / REFERENCE_HAND_EXTENT
        return TipParams(
            diff_threshold=max(1, round(self.diff_threshold * factor)),
            min_run=max(1, round(self.min_run * factor)),
            max_tips=self.max_tips,
        )


@dataclass(frozen=True, eq=False)
class FingerEdgeMap:
    """Bits marking the finger-end pixel of every occupied scanline."""

    bits: NDArray[np.uint8]

    @property
    def height(self) -> int:
        return int(self.bits.shape[0])

    @property
    def width(self) -> int:
        return int(self.bits.shape[1])


@dataclass(frozen=True)
class Fingertip:
    """A fingertip in frame coordinates (x = row, y = column)."""

    x: int
    y: int

    def to_dict(self) -> dict[str, int]:
        return {"x": self.x, "y": self.y}


def _require_foreground(sil: BinarySilhouette) -> None:
    if sil.on_pixels == 0:
        raise NoForegroundError("Cropped silhouette has no on-pixels")


def scanline_counts(sil: BinarySilhouette, orient: Orientation) -> ProjectionHistogram:
    """On-pixel count of every scanline running along the hand axis.

    A vertical hand is scanned column by column, a horizontal one row by row.

    Raises
    ------
    NoForegroundError
        On an empty silhouette.
    """
    _require_foreground(sil)
    axis = Axis.COLUMN if orient.hand_axis is HandAxis.VERTICAL else Axis.ROW
    return projection_histogram(sil, axis)


def intensity_ramp(sil: BinarySilhouette, orient: Orientation) -> GrayImage:
    """Rank-normalised 1..255 ramp from wrist side to finger end.

    Within each scanline the on-pixels are ranked 1..c starting at the wrist
    side and given round(rank * 255 / c), rounding halves up. The last
    on-pixel toward the finger side is exactly 255; every other on-pixel is
    held inside [1, 254]. Off-pixels are 0.

    Raises
    ------
    NoForegroundError
        On an empty silhouette.
    """
    _require_foreground(sil)
    k = quarter_turns_to_up(orient.finger_side)
    bits = canonical_bits(sil.bits, orient.finger_side).astype(np.int64)

    # finger-up frame: wrist at the bottom, rank counts upward per column
    rank = np.cumsum(bits[::-1, :], axis=0)[::-1, :]
    total = bits.sum(axis=0, keepdims=True)
    safe_total = np.maximum(total, 1)
    ramp = (rank * 510 + safe_total) // (2 * safe_total)
    ramp = np.where(rank == total, 255, np.clip(ramp, 1, 254))
    ramp = np.where(bits == 1, ramp, 0)

    return GrayImage(np.rot90(ramp, -k).astype(np.uint8))


def finger_edges(ramp: GrayImage) -> FingerEdgeMap:
    """Mark exactly the pixels of intensity 255."""
    return FingerEdgeMap((ramp.data == 255).astype(np.uint8))


def _runs(positions: NDArray[np.int64], diff_threshold: int) -> list[tuple[int, int]]:
    """Split scanlines into maximal runs of small steps.

    ``positions`` holds the finger-up edge row per column, -1 where the column
    has no edge. Returns inclusive (start, end) column pairs.
    """
    runs: list[tuple[int, int]] = []
    start = None
    for col, row in enumerate(positions):
        if row < 0:
            if start is not None:
                runs.append((start, col - 1))
                start = None
            continue
        if start is None:
            start = col
        elif abs(int(row) - int(positions[col - 1])) > diff_threshold:
            runs.append((start, col - 1))
            start = col
    if start is not None:
        runs.append((start, len(positions) - 1))
    return runs


def _protrudes(positions: NDArray[np.int64], start: int, end: int) -> bool:
    # A finger end sits above both neighbouring edge positions (finger-up frame).
    if start > 0 and 0 <= positions[start - 1] < positions[start]:
        return False
    if end < len(positions) - 1 and 0 <= positions[end + 1] < positions[end]:
        return False
    return True


def detect_fingertips(
    edges: FingerEdgeMap,
    orient: Orientation,
    p: TipParams | None = None,
    box: CropBox | None = None,
) -> list[Fingertip]:
    """Locate fingertips along the finger-edge outline.

    Edge positions are read in scanline order and differentiated. Maximal
    runs whose steps stay within ``p.diff_threshold`` and that span at least
    ``p.min_run`` scanlines are finger candidates, provided the run stands
    out toward the finger side of both neighbouring scanlines. Each finger
    yields the run's most extreme edge pixel toward the finger side, ties
    going to the median of the tied scanlines.

    Parameters
    ----------
    edges : FingerEdgeMap
        Output of finger_edges on the cropped hand.
    orient : Orientation
        Hand orientation from the 4-way scan.
    p : TipParams | None
        Grouping thresholds; defaults when omitted.
    box : CropBox | None
        Crop placement; tips are translated by its offset into frame
        coordinates. None means the edge map is already in frame coordinates.

    Returns
    -------
    list[Fingertip]
        Fingertips ordered by scanline index; empty for an empty edge map.
    """
    if p is None:
        p = TipParams()
    k = quarter_turns_to_up(orient.finger_side)
    canon = canonical_bits(edges.bits, orient.finger_side)
    if not canon.any():
        return []

    has_edge = canon.any(axis=0)
    positions = np.where(has_edge, np.argmax(canon, axis=0), -1).astype(np.int64)

    candidates: list[tuple[int, int]] = []
    for start, end in _runs(positions, p.diff_threshold):
        if end - start + 1 < p.min_run or not _protrudes(positions, start, end):
            continue
        segment = positions[start : end + 1]
        top = int(segment.min())
        tied = np.flatnonzero(segment == top)
        col = start + int(tied[(len(tied) - 1) // 2])
        candidates.append((top, col))

    if p.max_tips is not None and len(candidates) > p.max_tips:
        candidates = sorted(candidates)[: p.max_tips]

    x_off, y_off = (box.x_min, box.y_min) if box is not None else (0, 0)
    tips = []
    for row, col in candidates:
        (x, y), _ = rotate_point(row, col, canon.shape, -k)
        tips.append(Fingertip(x + x_off, y + y_off))

    if orient.hand_axis is HandAxis.VERTICAL:
        return sorted(tips, key=lambda tip: (tip.y, tip.x))
    return sorted(tips, key=lambda tip: (tip.x, tip.y))


__all__ = [
    "TipParams",
    "FingerEdgeMap",
    "Fingertip",
    "scanline_counts",
    "intensity_ramp",
    "finger_edges",
    "detect_fingertips",
]
