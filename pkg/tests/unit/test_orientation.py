"""Unit tests for projection histograms, the 4-way scan and rotations."""

import numpy as np
import pytest

from src.tipdetect.exceptions import NoForegroundError
from src.tipdetect.imaging import BinarySilhouette
from src.tipdetect.orientation import (
    Axis,
    HandAxis,
    Side,
    four_way_scan,
    occupied_span,
    projection_histogram,
    quarter_turns_to_up,
    rotate_point,
    rotate_silhouette,
)

# forearm rows 5-7 x cols 2-5 touching the bottom, finger column 3 above it
ARM_AND_FINGER = [
    "...#....",
    "...#....",
    "...#....",
    "...#....",
    "...#....",
    "..####..",
    "..####..",
    "..####..",
]


class TestProjectionHistogram:
    """Test per-row and per-column counts."""

    def test_identity_diagonal(self):
        """One pixel per scanline in both directions."""
        sil = BinarySilhouette(np.eye(3, dtype=np.uint8))
        rows = projection_histogram(sil, Axis.ROW)
        cols = projection_histogram(sil, Axis.COLUMN)
        np.testing.assert_array_equal(rows.counts, [1, 1, 1])
        np.testing.assert_array_equal(cols.counts, [1, 1, 1])

    def test_all_ones_2x3(self):
        """Rows hold 3, columns hold 2."""
        sil = BinarySilhouette(np.ones((2, 3), dtype=np.uint8))
        rows = projection_histogram(sil, Axis.ROW)
        cols = projection_histogram(sil, Axis.COLUMN)
        np.testing.assert_array_equal(rows.counts, [3, 3])
        np.testing.assert_array_equal(cols.counts, [2, 2, 2])

    def test_empty_row_counts_zero(self, make_silhouette):
        """An empty row has count 0 and totals match the on-pixels."""
        sil = make_silhouette(["##", "..", "#."])
        h = projection_histogram(sil, Axis.ROW)
        np.testing.assert_array_equal(h.counts, [2, 0, 1])
        assert h.total == sil.on_pixels == 3
        assert len(h) == 3

    def test_occupied_span_empty_raises(self):
        """No occupied bin means no foreground."""
        with pytest.raises(NoForegroundError):
            occupied_span(np.zeros(4, dtype=np.int64))


class TestFourWayScan:
    """Test wrist-side selection."""

    def test_forearm_at_bottom(self, make_silhouette):
        """Bottom run of 4 beats the single-pixel top run."""
        profile, orient = four_way_scan(make_silhouette(ARM_AND_FINGER))

        assert profile[Side.DOWN].magnitude == 4
        assert profile[Side.DOWN].first_index == 7
        assert profile[Side.UP].magnitude == 1
        assert profile[Side.LEFT].magnitude == 3
        assert orient.wrist_side is Side.DOWN
        assert orient.finger_side is Side.UP
        assert orient.hand_axis is HandAxis.VERTICAL

    def test_full_square_tie_prefers_down(self):
        """All four magnitudes equal, so priority Down wins."""
        _, orient = four_way_scan(BinarySilhouette(np.ones((8, 8), dtype=np.uint8)))
        assert orient.wrist_side is Side.DOWN

    def test_clockwise_rotation_moves_wrist_left(self, make_silhouette):
        """A quarter turn clockwise carries the bottom edge to the left."""
        sil = rotate_silhouette(make_silhouette(ARM_AND_FINGER), -1)
        _, orient = four_way_scan(sil)
        assert orient.wrist_side is Side.LEFT
        assert orient.finger_side is Side.RIGHT

    @pytest.mark.parametrize("k", [0, 1, 2, 3])
    def test_rotation_equivariance(self, make_silhouette, k):
        """Rotating the silhouette rotates the detected wrist side."""
        _, orient = four_way_scan(rotate_silhouette(make_silhouette(ARM_AND_FINGER), k))
        assert orient.wrist_side is Side.DOWN.rotated(k)

    def test_empty_raises(self):
        """An empty silhouette has no wrist."""
        with pytest.raises(NoForegroundError):
            four_way_scan(BinarySilhouette(np.zeros((4, 4), dtype=np.uint8)))


class TestRotations:
    """Test side and point bookkeeping under numpy.rot90."""

    def test_side_rotation_is_counter_clockwise(self):
        """One quarter turn maps up to left, left to down."""
        assert Side.UP.rotated(1) is Side.LEFT
        assert Side.LEFT.rotated(1) is Side.DOWN
        assert Side.DOWN.rotated(1) is Side.RIGHT
        assert Side.RIGHT.rotated(-1) is Side.DOWN

    @pytest.mark.parametrize("side", list(Side))
    def test_quarter_turns_to_up(self, side):
        """The returned turn count brings the side to the top."""
        assert side.rotated(quarter_turns_to_up(side)) is Side.UP

    @pytest.mark.parametrize("k", [-1, 1, 2, 3, 5])
    def test_rotate_point_tracks_rot90(self, k):
        """A marked pixel lands where rotate_point says it does."""
        bits = np.zeros((4, 7), dtype=np.uint8)
        bits[1, 5] = 1
        rotated = np.rot90(bits, k)

        (x, y), shape = rotate_point(1, 5, bits.shape, k)
        assert shape == rotated.shape
        assert rotated[x, y] == 1

    def test_opposite(self):
        """Opposite sides pair up."""
        assert Side.UP.opposite is Side.DOWN
        assert Side.LEFT.opposite is Side.RIGHT
