"""Synthetic hand frames with exact fingertip ground truth.

A hand is drawn fingers-up on a canvas: a forearm entering from the bottom
edge, a palm with rounded top corners that overhangs the forearm on both
sides, and N rectangular fingers standing on the palm. The canvas is then
rotated so the fingers point toward the requested side, coloured skin on a
non-skin background, and optionally sprinkled with random-colour pixels.

Dimensions scale with the shorter frame side; the constants below are in
pixels at 640x480.
"""

import json
from collections.abc import Iterator
from dataclasses import dataclass
from pathlib import Path

import numpy as np
from numpy.typing import NDArray

from src.tipdetect.fingertip import Fingertip
from src.tipdetect.frames import write_frame
from src.tipdetect.imaging import BinarySilhouette, RgbImage
from src.tipdetect.logger import get_logger
from src.tipdetect.orientation import (
    HandAxis,
    Side,
    quarter_turns_to_up,
    rotate_point,
)

SKIN_TONES = ((224, 160, 128), (200, 140, 110), (235, 180, 150))
BACKGROUNDS = ((0, 0, 255), (20, 60, 120), (10, 10, 40))

FOREARM_WIDTH = (100, 120)
FOREARM_LENGTH = (120, 160)
PALM_WIDTH = (145, 165)
PALM_HEIGHT = (100, 120)
PALM_TOP_RADIUS = 35
PALM_BOTTOM_RADIUS = 8
FINGER_HALF_WIDTH = (7.5, 10.5)
FINGER_LENGTH = (60, 100)
PALM_SHIFT = 80

GROUND_TRUTH_FILE = "ground_truth.jsonl"

logger = get_logger(__name__)


@dataclass(frozen=True)
class SyntheticHand:
    """One generated frame and its ground truth.

    Attributes
    ----------
    image : RgbImage
        Rendered frame.
    mask : BinarySilhouette
        Noise-free hand silhouette.
    fingertips : tuple[Fingertip, ...]
        Centre of every finger's far edge, ordered by scanline like the
        detector's output.
    finger_side : Side
        Direction the fingers point.
    has_forearm : bool
        Whether a forearm was drawn.
    """

    image: RgbImage
    mask: BinarySilhouette
    fingertips: tuple[Fingertip, ...]
    finger_side: Side
    has_forearm: bool

    @property
    def wrist_side(self) -> Side:
        return self.finger_side.opposite


def _rounded_rect(
    rows: NDArray[np.int64],
    cols: NDArray[np.int64],
    top: int,
    left: int,
    height: int,
    width: int,
    top_radius: int,
    bottom_radius: int,
) -> NDArray[np.bool_]:
    bottom, right = top + height - 1, left + width - 1
    mask = (rows >= top) & (rows <= bottom) & (cols >= left) & (cols <= right)
    tr, br = top_radius, bottom_radius
    corners = (
        (top + tr, left + tr, tr, rows < top + tr, cols < left + tr),
        (top + tr, right - tr, tr, rows < top + tr, cols > right - tr),
        (bottom - br, left + br, br, rows > bottom - br, cols < left + br),
        (bottom - br, right - br, br, rows > bottom - br, cols > right - br),
    )
    for cy, cx, radius, row_sel, col_sel in corners:
        outside = (rows - cy) ** 2 + (cols - cx) ** 2 > radius**2
        mask &= ~(row_sel & col_sel & outside)
    return mask


def _draw_upright(
    shape: tuple[int, int],
    fingers: int,
    rng: np.random.Generator,
    forearm: bool,
    forearm_length: int | None,
) -> tuple[NDArray[np.bool_], list[tuple[int, int]]]:
    """Draw a fingers-up hand; returns the mask and (row, col) tips."""
    height, width = shape
    s = min(shape) / 480.0

    def span(bounds: tuple[float, float]) -> int:
        return round(rng.uniform(*bounds) * s)

    rows = np.arange(height)[:, None]
    cols = np.arange(width)[None, :]

    palm_w, palm_h = span(PALM_WIDTH), span(PALM_HEIGHT)
    length = 0
    if forearm:
        length = forearm_length if forearm_length is not None else span(FOREARM_LENGTH)
    palm_bottom = height - 1 - length
    palm_top = palm_bottom - palm_h + 1
    centre = width / 2 + rng.uniform(-PALM_SHIFT, PALM_SHIFT) * s
    palm_left = round(centre - palm_w / 2)

    mask = _rounded_rect(
        rows,
        cols,
        palm_top,
        palm_left,
        palm_h,
        palm_w,
        round(PALM_TOP_RADIUS * s),
        round(PALM_BOTTOM_RADIUS * s),
    )

    if forearm:
        arm_w = span(FOREARM_WIDTH)
        arm_left = round(palm_left + (palm_w - arm_w) / 2)
        mask |= (
            (rows >= palm_top + palm_h // 2)
            & (cols >= arm_left)
            & (cols < arm_left + arm_w)
        )

    tips = []
    slot = palm_w / fingers
    for i in range(fingers):
        half = round(rng.uniform(*FINGER_HALF_WIDTH) * s)
        middle = round(palm_left + slot * (i + 0.5))
        top = palm_top - span(FINGER_LENGTH)
        mask |= (
            (rows >= top)
            & (rows <= palm_top + palm_h // 2)
            & (cols >= middle - half)
            & (cols <= middle + half)
        )
        tips.append((top, middle))
    return mask, tips


def generate_hand(
    fingers: int,
    finger_side: Side = Side.UP,
    rng: np.random.Generator | None = None,
    width: int = 640,
    height: int = 480,
    noise: float = 0.0,
    forearm: bool = True,
    forearm_length: int | None = None,
) -> SyntheticHand:
    """Render one synthetic hand frame.

    Parameters
    ----------
    fingers : int
        Number of fingers, 1 to 5.
    finger_side : Side, default Side.UP
        Direction the fingers point; the forearm enters from the opposite edge.
    rng : np.random.Generator | None
        Source of geometric jitter, colours and noise.
    width, height : int
        Frame size in pixels.
    noise : float
        Probability that a pixel is replaced by a random colour.
    forearm : bool
        Draw a forearm reaching the frame edge.
    forearm_length : int | None
        Forearm length in pixels; random around 140 (at 640x480) if None.

    Returns
    -------
    SyntheticHand
        Frame, clean mask and ground-truth fingertips.
    """
    if not 1 <= fingers <= 5:
        raise ValueError(f"fingers must be in 1..5, got {fingers}")
    if not 0.0 <= noise <= 1.0:
        raise ValueError(f"noise must be in [0, 1], got {noise}")
    if rng is None:
        rng = np.random.default_rng()

    k = -quarter_turns_to_up(finger_side) % 4
    vertical = finger_side.hand_axis is HandAxis.VERTICAL
    upright_shape = (height, width) if vertical else (width, height)

    upright, upright_tips = _draw_upright(
        upright_shape, fingers, rng, forearm, forearm_length
    )
    mask = np.rot90(upright, k)
    tips = [
        Fingertip(*rotate_point(x, y, upright_shape, k)[0]) for x, y in upright_tips
    ]
    tips.sort(key=(lambda t: (t.y, t.x)) if vertical else (lambda t: (t.x, t.y)))

    skin = np.array(SKIN_TONES[rng.integers(len(SKIN_TONES))], dtype=np.uint8)
    background = np.array(BACKGROUNDS[rng.integers(len(BACKGROUNDS))], dtype=np.uint8)
    pixels = np.where(mask[..., None], skin, background).astype(np.uint8)
    if noise > 0:
        speckle = rng.random(mask.shape) < noise
        colours = rng.integers(0, 256, size=(*mask.shape, 3), dtype=np.uint8)
        pixels[speckle] = colours[speckle]

    return SyntheticHand(
        image=RgbImage(pixels),
        mask=BinarySilhouette.from_mask(mask),
        fingertips=tuple(tips),
        finger_side=finger_side,
        has_forearm=forearm,
    )


def iter_corpus(
    finger_counts: tuple[int, ...] = (1, 2, 3, 4, 5),
    sides: tuple[Side, ...] = (Side.UP, Side.DOWN, Side.LEFT, Side.RIGHT),
    variants: int = 20,
    seed: int = 0,
    width: int = 640,
    height: int = 480,
    noise_levels: tuple[float, ...] = (0.0, 0.01, 0.02),
) -> Iterator[SyntheticHand]:
    """Yield a reproducible corpus: every finger count x side x variant.

    Each variant draws its own geometry and colours; noise cycles through
    ``noise_levels``.
    """
    for n in finger_counts:
        for side_index, side in enumerate(sides):
            for variant in range(variants):
                rng = np.random.default_rng([seed, n, side_index, variant])
                yield generate_hand(
                    n,
                    side,
                    rng,
                    width=width,
                    height=height,
                    noise=noise_levels[variant % len(noise_levels)],
                )


def ground_truth_entry(frame: str, hand: SyntheticHand) -> dict[str, object]:
    return {
        "frame": frame,
        "fingers": len(hand.fingertips),
        "wrist_side": hand.wrist_side.value,
        "finger_side": hand.finger_side.value,
        "forearm": hand.has_forearm,
        "fingertips": [tip.to_dict() for tip in hand.fingertips],
    }


def write_corpus(
    out_dir: str | Path,
    fingers: int,
    finger_side: Side,
    frames: int,
    noise: float = 0.0,
    seed: int = 0,
    width: int = 640,
    height: int = 480,
) -> Path:
    """Write ``frames`` PPM frames plus a ground-truth JSONL file.

    Returns
    -------
    Path
        Path of the ground-truth file.
    """
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    truth_path = out / GROUND_TRUTH_FILE
    with truth_path.open("w", encoding="utf-8") as truth:
        for index in range(frames):
            rng = np.random.default_rng([seed, index])
            hand = generate_hand(fingers, finger_side, rng, width, height, noise)
            name = f"frame_{index:05d}.ppm"
            write_frame(hand.image, out / name)
            truth.write(json.dumps(ground_truth_entry(name, hand)) + "\n")
    logger.info("Wrote %d synthetic frames to %s", frames, out)
    return truth_path
