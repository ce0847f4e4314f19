"""Projection histograms and the 4-way scan that finds the wrist end.

The wrist is the frame edge whose first occupied scanline carries the most
on-pixels: the forearm enters the frame there, so its boundary run is the
longest. Fingers point to the opposite edge.
"""

from dataclasses import dataclass
from enum import StrEnum

import numpy as np
from numpy.typing import NDArray

from src.tipdetect.exceptions import NoForegroundError
from src.tipdetect.imaging import BinarySilhouette


class Axis(StrEnum):
    """Scanline family of a projection histogram."""

    ROW = "row"
    COLUMN = "column"


class HandAxis(StrEnum):
    """Direction the wrist-to-fingers line runs in the frame."""

    VERTICAL = "vertical"
    HORIZONTAL = "horizontal"


class Side(StrEnum):
    """A frame edge."""

    UP = "up"
    DOWN = "down"
    LEFT = "left"
    RIGHT = "right"

    @property
    def opposite(self) -> "Side":
        return _OPPOSITE[self]

    @property
    def hand_axis(self) -> HandAxis:
        if self in (Side.UP, Side.DOWN):
            return HandAxis.VERTICAL
        return HandAxis.HORIZONTAL

    def rotated(self, k: int) -> "Side":
        """Edge this side lands on after ``numpy.rot90(image, k)``."""
        side = self
        for _ in range(k % 4):
            side = _CCW[side]
        return side


_OPPOSITE = {
    Side.UP: Side.DOWN,
    Side.DOWN: Side.UP,
    Side.LEFT: Side.RIGHT,
    Side.RIGHT: Side.LEFT,
}

# one counter-clockwise quarter turn
_CCW = {
    Side.UP: Side.LEFT,
    Side.LEFT: Side.DOWN,
    Side.DOWN: Side.RIGHT,
    Side.RIGHT: Side.UP,
}

# Tie-break when several edges share the longest boundary run.
SCAN_PRIORITY = (Side.DOWN, Side.UP, Side.LEFT, Side.RIGHT)


@dataclass(frozen=True)
class Orientation:
    """Which frame edge the wrist touches.

    Attributes
    ----------
    wrist_side : Side
        Edge the forearm enters from.
    """

    wrist_side: Side

    @property
    def finger_side(self) -> Side:
        return self.wrist_side.opposite

    @property
    def hand_axis(self) -> HandAxis:
        return self.wrist_side.hand_axis


@dataclass(frozen=True, eq=False)
class ProjectionHistogram:
    """Per-row (H_x) or per-column (H_y) on-pixel counts.

    Attributes
    ----------
    axis : Axis
        ROW gives one count per row, COLUMN one per column.
    counts : NDArray[np.int64]
        Non-negative counts in scanline order.
    """

    axis: Axis
    counts: NDArray[np.int64]

    def __len__(self) -> int:
        return int(self.counts.shape[0])

    @property
    def total(self) -> int:
        return int(self.counts.sum())


@dataclass(frozen=True)
class ScanLine:
    """First occupied scanline seen from one edge."""

    first_index: int
    magnitude: int


@dataclass(frozen=True)
class ScanProfile:
    """Boundary runs seen from all four edges."""

    lines: dict[Side, ScanLine]

    def __getitem__(self, side: Side) -> ScanLine:
        return self.lines[side]


def projection_histogram(sil: BinarySilhouette, axis: Axis) -> ProjectionHistogram:
    """Count on-pixels per row (Axis.ROW) or per column (Axis.COLUMN)."""
    sum_over = 1 if axis is Axis.ROW else 0
    counts = sil.bits.sum(axis=sum_over, dtype=np.int64)
    return ProjectionHistogram(axis, counts)


def occupied_span(counts: NDArray[np.int64]) -> tuple[int, int]:
    """Indices of the first and last non-zero bins.

    Raises
    ------
    NoForegroundError
        If every bin is zero.
    """
    occupied = np.flatnonzero(counts)
    if occupied.size == 0:
        raise NoForegroundError("Histogram has no occupied scanline")
    return int(occupied[0]), int(occupied[-1])


def four_way_scan(sil: BinarySilhouette) -> tuple[ScanProfile, Orientation]:
    """Scan inward from all four edges and pick the wrist side.

    For every edge, the first scanline containing an on-pixel is located and
    its on-pixel count taken as that edge's magnitude. The wrist is the edge
    with the largest magnitude; ties resolve in SCAN_PRIORITY order.

    Parameters
    ----------
    sil : BinarySilhouette
        Hand silhouette, normally the largest blob.

    Returns
    -------
    tuple[ScanProfile, Orientation]
        Per-edge boundary runs and the resulting orientation.

    Raises
    ------
    NoForegroundError
        On an empty silhouette.
    """
    rows = projection_histogram(sil, Axis.ROW).counts
    cols = projection_histogram(sil, Axis.COLUMN).counts
    top, bottom = occupied_span(rows)
    left, right = occupied_span(cols)

    lines = {
        Side.UP: ScanLine(top, int(rows[top])),
        Side.DOWN: ScanLine(bottom, int(rows[bottom])),
        Side.LEFT: ScanLine(left, int(cols[left])),
        Side.RIGHT: ScanLine(right, int(cols[right])),
    }
    longest = max(line.magnitude for line in lines.values())
    wrist = next(side for side in SCAN_PRIORITY if lines[side].magnitude == longest)
    return ScanProfile(lines), Orientation(wrist)


def rotate_point(
    x: int, y: int, shape: tuple[int, int], k: int
) -> tuple[tuple[int, int], tuple[int, int]]:
    """Follow a pixel through ``numpy.rot90(array, k)``.

    Parameters
    ----------
    x, y : int
        Row and column in the unrotated array.
    shape : tuple[int, int]
        (height, width) of the unrotated array.
    k : int
        Number of counter-clockwise quarter turns (negative for clockwise).

    Returns
    -------
    tuple[tuple[int, int], tuple[int, int]]
        The rotated (row, column) and the rotated array's shape.
    """
    height, width = shape
    for _ in range(k % 4):
        x, y = width - 1 - y, x
        height, width = width, height
    return (x, y), (height, width)


def rotate_silhouette(sil: BinarySilhouette, k: int) -> BinarySilhouette:
    return BinarySilhouette(np.rot90(sil.bits, k))


def quarter_turns_to_up(finger_side: Side) -> int:
    """rot90 count that makes fingers pointing toward ``finger_side`` point up."""
    return {Side.UP: 0, Side.RIGHT: 1, Side.DOWN: 2, Side.LEFT: 3}[finger_side]


def canonical_bits(bits: NDArray[np.uint8], finger_side: Side) -> NDArray[np.uint8]:
    return np.rot90(bits, quarter_turns_to_up(finger_side))
