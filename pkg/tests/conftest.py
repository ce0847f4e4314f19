import matplotlib

matplotlib.use("Agg")

import numpy as np  # noqa: E402
import pytest  # noqa: E402
from numpy.typing import NDArray  # noqa: E402

from src.tipdetect.config import PipelineConfig  # noqa: E402
from src.tipdetect.imaging import BinarySilhouette, RgbImage  # noqa: E402
from src.tipdetect.orientation import Side  # noqa: E402
from src.tipdetect.pipeline import FrameTrace, trace_frame  # noqa: E402
from src.tipdetect.synthetic import SyntheticHand, generate_hand  # noqa: E402

SKIN_RGB = (224, 160, 128)
BLUE_RGB = (0, 0, 255)


def silhouette(rows: list[str]) -> BinarySilhouette:
    """Build a silhouette from strings of '#' (on) and '.' (off)."""
    bits = np.array([[c == "#" for c in row] for row in rows], dtype=np.uint8)
    return BinarySilhouette(bits)


@pytest.fixture
def default_config() -> PipelineConfig:
    """Fixture: pipeline defaults."""
    return PipelineConfig()


@pytest.fixture
def blue_frame() -> RgbImage:
    """Fixture: 48x64 frame with no skin."""
    data = np.zeros((48, 64, 3), dtype=np.uint8)
    data[...] = BLUE_RGB
    return RgbImage(data)


@pytest.fixture
def skin_rectangle_frame() -> RgbImage:
    """Fixture: skin rectangle rows 10-29, cols 20-49 on blue, 40x64."""
    data = np.zeros((40, 64, 3), dtype=np.uint8)
    data[...] = BLUE_RGB
    data[10:30, 20:50] = SKIN_RGB
    return RgbImage(data)


@pytest.fixture
def three_finger_hand() -> SyntheticHand:
    """Fixture: noise-free 3-finger hand, fingers up, 640x480."""
    return generate_hand(3, Side.UP, np.random.default_rng(7))


@pytest.fixture
def stepped_hand() -> BinarySilhouette:
    """Fixture: forearm rows 8-11, palm rows 3-7, finger rows 0-2."""
    return silhouette(
        [
            "....#....",
            "....#....",
            "....#....",
            ".#######.",
            ".#######.",
            ".#######.",
            ".#######.",
            ".#######.",
            "...###...",
            "...###...",
            "...###...",
            "...###...",
        ]
    )


@pytest.fixture
def random_silhouettes() -> list[NDArray[np.uint8]]:
    """Fixture: 1000 seeded random 32x32 bit rasters of varying density."""
    rng = np.random.default_rng(2024)
    return [
        (rng.random((32, 32)) < rng.uniform(0.05, 0.6)).astype(np.uint8)
        for _ in range(1000)
    ]


@pytest.fixture
def make_silhouette():
    """Fixture: silhouette builder from '#'/'.' row strings."""
    return silhouette


@pytest.fixture
def hand_trace(three_finger_hand, default_config) -> FrameTrace:
    """Fixture: full trace of the 3-finger hand."""
    return trace_frame(three_finger_hand.image, default_config, "hand.ppm")


@pytest.fixture
def no_hand_trace(blue_frame, default_config) -> FrameTrace:
    """Fixture: trace of a frame without skin."""
    return trace_frame(blue_frame, default_config, "blue.ppm")
