"""Unit tests for the synthetic hand generator."""

import json

import numpy as np
import pytest

from src.tipdetect.frames import list_frames, read_frame
from src.tipdetect.orientation import Side
from src.tipdetect.synthetic import (
    GROUND_TRUTH_FILE,
    generate_hand,
    iter_corpus,
    write_corpus,
)

# one step from a tip toward where its finger points
AHEAD = {Side.UP: (-1, 0), Side.DOWN: (1, 0), Side.LEFT: (0, -1), Side.RIGHT: (0, 1)}


class TestGenerateHand:
    """Test geometry and ground truth of generated hands."""

    @pytest.mark.parametrize("side", list(Side))
    @pytest.mark.parametrize("fingers", [1, 3, 5])
    def test_tips_are_finger_ends(self, side, fingers):
        """Each tip is on the hand with background just beyond it."""
        hand = generate_hand(fingers, side, np.random.default_rng(fingers))
        bits = hand.mask.bits
        dx, dy = AHEAD[side]

        assert len(hand.fingertips) == fingers
        for tip in hand.fingertips:
            assert bits[tip.x, tip.y] == 1
            assert bits[tip.x + dx, tip.y + dy] == 0

    @pytest.mark.parametrize("side", list(Side))
    def test_forearm_touches_wrist_edge(self, side):
        """The forearm reaches the edge opposite the fingers."""
        hand = generate_hand(2, side, np.random.default_rng(1))
        bits = hand.mask.bits
        edge = {
            Side.UP: bits[-1],
            Side.DOWN: bits[0],
            Side.LEFT: bits[:, -1],
            Side.RIGHT: bits[:, 0],
        }[side]
        assert edge.any()
        assert hand.wrist_side is side.opposite

    def test_frame_size(self):
        """Frames have the requested size whatever the orientation."""
        for side in Side:
            rng = np.random.default_rng(0)
            hand = generate_hand(2, side, rng, width=320, height=240)
            assert (hand.image.height, hand.image.width) == (240, 320)

    def test_without_forearm(self):
        """Without a forearm the palm still reaches the wrist edge."""
        hand = generate_hand(3, Side.UP, np.random.default_rng(0), forearm=False)
        assert not hand.has_forearm
        assert hand.mask.bits[-1].any()

    def test_tips_sorted_by_scanline(self):
        """Ground truth is ordered like detector output."""
        up = generate_hand(5, Side.UP, np.random.default_rng(3)).fingertips
        left = generate_hand(5, Side.LEFT, np.random.default_rng(3)).fingertips
        assert [t.y for t in up] == sorted(t.y for t in up)
        assert [t.x for t in left] == sorted(t.x for t in left)

    def test_seeded_generation_is_reproducible(self):
        """Same seed, same frame."""
        a = generate_hand(3, Side.UP, np.random.default_rng(9), noise=0.02)
        b = generate_hand(3, Side.UP, np.random.default_rng(9), noise=0.02)
        np.testing.assert_array_equal(a.image.data, b.image.data)

    def test_noise_rate(self):
        """Roughly the requested share of pixels is replaced."""
        clean = generate_hand(3, Side.UP, np.random.default_rng(4))
        noisy = generate_hand(3, Side.UP, np.random.default_rng(4), noise=0.05)
        share = np.any(clean.image.data != noisy.image.data, axis=-1).mean()
        assert 0.03 < share < 0.06

    @pytest.mark.parametrize(
        "kwargs", [{"fingers": 0}, {"fingers": 6}, {"fingers": 2, "noise": 1.5}]
    )
    def test_invalid_arguments(self, kwargs):
        """Finger counts and noise are range-checked."""
        with pytest.raises(ValueError):
            generate_hand(**kwargs)


class TestCorpus:
    """Test corpus iteration and writing."""

    def test_iter_corpus_size(self):
        """Every finger count, side and variant is produced."""
        hands = list(
            iter_corpus(finger_counts=(1, 2), variants=2, width=160, height=120)
        )
        assert len(hands) == 2 * 4 * 2
        assert {h.finger_side for h in hands} == set(Side)

    def test_write_corpus(self, tmp_path):
        """Frames and one ground-truth line per frame are written."""
        truth_path = write_corpus(
            tmp_path, 2, Side.LEFT, frames=3, width=160, height=120
        )

        assert truth_path == tmp_path / GROUND_TRUTH_FILE
        frames = list_frames(tmp_path)
        assert [p.name for p in frames] == [f"frame_{i:05d}.ppm" for i in range(3)]
        assert read_frame(frames[0]).width == 160

        text = truth_path.read_text(encoding="utf-8")
        lines = [json.loads(line) for line in text.splitlines()]
        assert len(lines) == 3
        assert lines[0]["frame"] == "frame_00000.ppm"
        assert lines[0]["finger_side"] == "left"
        assert lines[0]["wrist_side"] == "right"
        assert len(lines[0]["fingertips"]) == 2
