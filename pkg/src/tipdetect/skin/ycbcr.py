"""Skin classification on the Cb and Cr chroma channels."""

import numpy as np
from numpy.typing import NDArray

from src.tipdetect.imaging import YCbCrPixel, rgb_array_to_ycbcr
from src.tipdetect.skin.thresholds import SkinThresholds


def classify_skin_ycbcr(p: YCbCrPixel, t: SkinThresholds) -> int:
    """Return 1 iff Cb and Cr both lie in their closed intervals."""
    inside = t.cb_min <= p.cb <= t.cb_max and t.cr_min <= p.cr <= t.cr_max
    return int(inside)


class YCbCrSkinClassifier:
    """Vectorised YCbCr skin classifier; luma is ignored."""

    def __init__(self, thresholds: SkinThresholds) -> None:
        self.thresholds = thresholds

    def mask(self, data: NDArray[np.uint8]) -> NDArray[np.bool_]:
        t = self.thresholds
        ycc = rgb_array_to_ycbcr(data)
        cb, cr = ycc[..., 1], ycc[..., 2]
        return (cb >= t.cb_min) & (cb <= t.cb_max) & (cr >= t.cr_min) & (cr <= t.cr_max)
