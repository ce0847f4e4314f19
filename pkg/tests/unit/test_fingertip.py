"""Unit tests for the intensity ramp, finger edges and fingertip grouping."""

import numpy as np
import pytest

from src.tipdetect.crop import CropBox
from src.tipdetect.exceptions import ConfigError, NoForegroundError
from src.tipdetect.fingertip import (
    FingerEdgeMap,
    Fingertip,
    TipParams,
    detect_fingertips,
    finger_edges,
    intensity_ramp,
    scanline_counts,
)
from src.tipdetect.imaging import BinarySilhouette, GrayImage
from src.tipdetect.orientation import Orientation, Side, rotate_point, rotate_silhouette

UP = Orientation(Side.DOWN)
EXACT = TipParams(diff_threshold=1, min_run=1)

# two fingers in columns 1 and 5 over a palm occupying rows 3-4
COMB = [
    ".#...#..",
    ".#...#..",
    ".#...#..",
    "########",
    "########",
    "........",
]


def tips_of(
    sil: BinarySilhouette, orient: Orientation, p: TipParams = EXACT
) -> list[Fingertip]:
    return detect_fingertips(finger_edges(intensity_ramp(sil, orient)), orient, p)


class TestScanlineCounts:
    """Test per-scanline counts along the hand axis."""

    def test_vertical_bar_finger_up(self):
        """A 10x1 bar pointing up is one scanline of ten pixels."""
        bar = BinarySilhouette(np.ones((10, 1), dtype=np.uint8))
        np.testing.assert_array_equal(scanline_counts(bar, UP).counts, [10])

    def test_vertical_bar_scanned_across(self):
        """Scanned as a horizontal hand, the bar is ten scanlines of one."""
        bar = BinarySilhouette(np.ones((10, 1), dtype=np.uint8))
        counts = scanline_counts(bar, Orientation(Side.LEFT)).counts
        np.testing.assert_array_equal(counts, [1] * 10)

    def test_all_ones_vertical(self):
        """A 4x3 block has three columns of four."""
        block = BinarySilhouette(np.ones((4, 3), dtype=np.uint8))
        np.testing.assert_array_equal(scanline_counts(block, UP).counts, [4, 4, 4])

    def test_comb_counts(self, make_silhouette):
        """Finger columns hold 5, palm-only columns 2."""
        counts = scanline_counts(make_silhouette(COMB), UP).counts
        np.testing.assert_array_equal(counts, [2, 5, 2, 2, 2, 5, 2, 2])

    def test_empty_raises(self):
        """No on-pixels means no hand."""
        with pytest.raises(NoForegroundError):
            scanline_counts(BinarySilhouette(np.zeros((2, 2), dtype=np.uint8)), UP)


class TestIntensityRamp:
    """Test the rank-normalised ramp."""

    def test_ten_pixel_scanline(self):
        """Ranks 5 and 10 of 10 map to 128 and 255."""
        ramp = intensity_ramp(BinarySilhouette(np.ones((10, 1), dtype=np.uint8)), UP)
        column = ramp.data[:, 0]
        # rank counts up from the wrist (bottom row is rank 1)
        assert column[10 - 5] == 128
        assert column[0] == 255
        assert column[9] == round(255 / 10)

    def test_single_pixel(self):
        """A lone pixel is rank 1 of 1."""
        ramp = intensity_ramp(BinarySilhouette(np.ones((1, 1), dtype=np.uint8)), UP)
        assert ramp.data[0, 0] == 255

    def test_gap_in_scanline(self):
        """On, off, on ranks the two pixels 1 and 2 of 2."""
        sil = BinarySilhouette(np.array([[1], [0], [1]], dtype=np.uint8))
        np.testing.assert_array_equal(intensity_ramp(sil, UP).data[:, 0], [255, 0, 128])

    def test_value_range(self, make_silhouette):
        """Off-pixels are 0, on-pixels 1..255 with one 255 per scanline."""
        sil = make_silhouette(COMB)
        ramp = intensity_ramp(sil, UP).data
        assert np.all((ramp == 0) == (sil.bits == 0))
        assert np.all((ramp == 255).sum(axis=0) == 1)

    def test_long_scanline_keeps_single_peak(self):
        """Ranks just below the top never round up to 255."""
        sil = BinarySilhouette(np.ones((600, 1), dtype=np.uint8))
        ramp = intensity_ramp(sil, UP).data[:, 0]
        assert (ramp == 255).sum() == 1
        assert ramp[1] == 254

    @pytest.mark.parametrize("side", [Side.DOWN, Side.LEFT, Side.RIGHT])
    def test_ramp_points_to_fingers(self, side):
        """255 sits at the end of each scanline opposite the wrist."""
        sil = BinarySilhouette(np.ones((3, 4), dtype=np.uint8))
        ramp = intensity_ramp(sil, Orientation(side)).data
        if side is Side.DOWN:
            assert (ramp[0] == 255).all()
        elif side is Side.LEFT:
            assert (ramp[:, -1] == 255).all()
        else:
            assert (ramp[:, 0] == 255).all()


class TestFingerEdges:
    """Test the 255-pixel edge map."""

    def test_vertical_bar(self):
        """A 10x1 bar has a single mark at its finger end."""
        ramp = intensity_ramp(BinarySilhouette(np.ones((10, 1), dtype=np.uint8)), UP)
        edges = finger_edges(ramp)
        assert edges.bits.sum() == 1
        assert edges.bits[0, 0] == 1

    def test_block_marks_top_row(self):
        """A 4x3 block is marked once per column, all in the top row."""
        ramp = intensity_ramp(BinarySilhouette(np.ones((4, 3), dtype=np.uint8)), UP)
        edges = finger_edges(ramp).bits
        np.testing.assert_array_equal(edges[0], [1, 1, 1])
        assert edges[1:].sum() == 0

    def test_empty_ramp(self):
        """An all-zero ramp gives an all-zero map."""
        edges = finger_edges(GrayImage(np.zeros((3, 3), dtype=np.uint8)))
        assert edges.bits.sum() == 0


class TestDetectFingertips:
    """Test grouping of edge positions into fingertips."""

    def test_two_finger_comb(self, make_silhouette):
        """Jumps of 3 isolate the fingers in columns 1 and 5."""
        tips = tips_of(make_silhouette(COMB), UP)
        assert tips == [Fingertip(0, 1), Fingertip(0, 5)]

    def test_single_bar(self):
        """One bar, one tip at its end."""
        bits = np.zeros((10, 5), dtype=np.uint8)
        bits[:, 2] = 1
        assert tips_of(BinarySilhouette(bits), UP) == [Fingertip(0, 2)]

    def test_flat_top_takes_median(self):
        """A flat rectangle is one run; the tip is its median scanline."""
        block = BinarySilhouette(np.ones((4, 5), dtype=np.uint8))
        assert tips_of(block, UP) == [Fingertip(0, 2)]

    def test_short_runs_rejected(self, make_silhouette):
        """Fingers narrower than min_run are dropped."""
        params = TipParams(diff_threshold=1, min_run=2)
        tips = tips_of(make_silhouette(COMB), UP, params)
        assert tips == []

    def test_max_tips_keeps_most_extreme(self, make_silhouette):
        """With a cap, the candidates furthest toward the fingers win."""
        sil = make_silhouette(
            [
                ".#......",
                ".#...#..",
                ".#...#..",
                "########",
            ]
        )
        tips = tips_of(sil, UP, TipParams(diff_threshold=1, min_run=1, max_tips=1))
        assert tips == [Fingertip(0, 1)]

    def test_offset_by_crop_box(self, make_silhouette):
        """Tips are translated into frame coordinates."""
        sil = make_silhouette(COMB)
        edges = finger_edges(intensity_ramp(sil, UP))
        tips = detect_fingertips(edges, UP, EXACT, CropBox(10, 15, 20, 27))
        assert tips == [Fingertip(10, 21), Fingertip(10, 25)]

    def test_empty_map(self):
        """No edges, no tips."""
        edges = FingerEdgeMap(np.zeros((3, 3), dtype=np.uint8))
        assert detect_fingertips(edges, UP) == []

    @pytest.mark.parametrize("k", [1, 2, 3])
    def test_rotation_equivariance(self, make_silhouette, k):
        """Rotating the hand rotates the tips."""
        sil = make_silhouette(COMB)
        rotated = rotate_silhouette(sil, k)
        orient = Orientation(Side.DOWN.rotated(k))

        expected = {
            Fingertip(*rotate_point(tip.x, tip.y, sil.bits.shape, k)[0])
            for tip in tips_of(sil, UP)
        }
        assert set(tips_of(rotated, orient)) == expected


class TestTipParams:
    """Test validation and extent scaling."""

    def test_scaling(self):
        """Thresholds scale with extent and never drop below one."""
        assert TipParams(2, 3).scaled(240) == TipParams(2, 3)
        assert TipParams(2, 3).scaled(480) == TipParams(4, 6)
        assert TipParams(2, 3).scaled(10) == TipParams(1, 1)

    @pytest.mark.parametrize(
        "params",
        [TipParams(0, 3), TipParams(2, 0), TipParams(2, 3, max_tips=-1)],
    )
    def test_invalid_raises(self, params):
        """Non-positive thresholds are config errors."""
        with pytest.raises(ConfigError):
            params.validate()
