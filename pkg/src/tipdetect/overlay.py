"""Overlay rendering for visual checks of detection records."""

import numpy as np

from src.tipdetect.crop import CropBox
from src.tipdetect.imaging import RgbImage
from src.tipdetect.pipeline import DetectionRecord, FrameStatus

BOX_COLOR = (0, 255, 0)
TIP_COLOR = (255, 0, 0)
CROSS_ARM = 2


def _draw_box(canvas: np.ndarray, box: CropBox) -> None:
    canvas[box.x_min, box.y_min : box.y_max + 1] = BOX_COLOR
    canvas[box.x_max, box.y_min : box.y_max + 1] = BOX_COLOR
    canvas[box.x_min : box.x_max + 1, box.y_min] = BOX_COLOR
    canvas[box.x_min : box.x_max + 1, box.y_max] = BOX_COLOR


def _draw_cross(canvas: np.ndarray, x: int, y: int) -> None:
    height, width = canvas.shape[:2]
    for offset in range(-CROSS_ARM, CROSS_ARM + 1):
        if 0 <= x + offset < height and 0 <= y < width:
            canvas[x + offset, y] = TIP_COLOR
        if 0 <= x < height and 0 <= y + offset < width:
            canvas[x, y + offset] = TIP_COLOR


def render_overlay(img: RgbImage, rec: DetectionRecord) -> RgbImage:
    """Draw the crop box outline and a cross on every fingertip.

    The cross has arms of CROSS_ARM pixels in each direction (8 pixels plus
    the centre), clipped at the frame border. The input is left untouched.
    """
    if rec.status is FrameStatus.NO_HAND:
        return img

    canvas = np.array(img.data, copy=True)
    if rec.crop is not None:
        _draw_box(canvas, rec.crop)
    for tip in rec.fingertips:
        _draw_cross(canvas, tip.x, tip.y)
    return RgbImage(canvas)
